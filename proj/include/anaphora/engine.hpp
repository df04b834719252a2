#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "anaphora/centering.hpp"
#include "anaphora/phrase_reading.hpp"
#include "anaphora/protocol.hpp"
#include "anaphora/token.hpp"
#include "anaphora/trace.hpp"

namespace anaphora {

enum class TraceLevel { Off, Summary, Full };

std::string_view to_string(TraceLevel level);
std::optional<TraceLevel> parse_trace_level(std::string_view text);

struct EngineConfig {
  std::size_t max_readings = 32;
  TraceLevel trace = TraceLevel::Full;
  // Unset: parallel episodes are interleaved round-robin. Set: a random
  // interleaving drawn from this seed (each episode stays in order).
  std::optional<std::uint64_t> schedule_seed;
};

// A phrase reading together with the centering state its anaphors see.
struct LiveReading {
  PhraseReading phrase;
  std::string state_id;
};

// Where a committed center reading came from.
struct ReadingOrigin {
  std::string phrase_id;
  std::string state_id;
  std::string predecessor;  // center reading id in the previous utterance
  std::map<Position, Binding> bindings;
};

struct UtteranceRecord {
  int sentence = 0;
  std::vector<std::string> surfaces;
  CenteringState state;              // the committed master
  std::vector<ReadingOrigin> origins;  // parallel to state.readings
  std::vector<std::string> trees;      // surviving phrase readings, printed
};

enum class PronounAmbiguity { Unambiguous, Local, Global };

std::string_view to_string(PronounAmbiguity a);

struct PronounOccurrence {
  int sentence = 0;
  Position position = 0;
  std::string expression;
  // Phrase readings in which a search episode for it ran.
  std::size_t readings_at_trigger = 0;
  // Antecedent per committed center reading ("" when unresolved).
  std::vector<std::string> bindings;
  PronounAmbiguity ambiguity = PronounAmbiguity::Unambiguous;
};

struct AmbiguityReport {
  std::size_t total = 0;
  std::size_t local = 0;
  std::size_t global = 0;
  std::size_t unambiguous = 0;

  std::size_t ambiguous() const { return local + global; }
  // Table layout with counts and integer percentages.
  std::string to_string() const;
};

// Local first, then global, else unambiguous.
PronounAmbiguity classify(std::size_t readings_at_trigger, std::span<const std::string> bindings);
AmbiguityReport classify_pronoun_ambiguity(std::span<const PronounOccurrence> pronouns);

// Reads a discourse token by token, keeping every syntactic reading and every
// centering reading alive until they are ruled out.
class Engine {
 public:
  using EpisodeObserver = std::function<void(const ResolutionEpisode&, const TraceEvent&, const AmbiguitySpace&)>;

  explicit Engine(const KnowledgeBase& kb, EngineConfig config = {});

  void begin_sentence(int sentence);
  void process_token(const AnnotatedToken& token);
  const UtteranceRecord& end_sentence();
  const UtteranceRecord& process_sentence(int sentence, std::span<const AnnotatedToken> tokens);

  const Trace& trace() const { return trace_; }
  const AmbiguitySpace& space() const { return space_; }
  const std::vector<LiveReading>& readings() const { return readings_; }
  const std::vector<UtteranceRecord>& history() const { return history_; }
  const std::vector<PronounOccurrence>& pronouns() const { return pronouns_; }
  AmbiguityReport ambiguity_report() const { return classify_pronoun_ambiguity(pronouns_); }

  // Called after every message of every episode.
  void set_episode_observer(EpisodeObserver observer) { observer_ = std::move(observer); }

 private:
  struct Step {
    LiveReading reading;
    std::optional<Arc> arc;  // arc added by this step
  };

  Lexeme lexeme_for(const AnnotatedToken& token, const FeatureStructure& features) const;
  std::optional<DiscourseEntity> entity_for(const AnnotatedToken& token);
  std::vector<Step> attach_leftward(const LiveReading& r, Position pos, const AnnotatedToken& token,
                                    std::string& failure) const;
  std::vector<Step> attach_pending(const LiveReading& r, Position pending, Position pos, std::string& failure) const;
  void install(std::vector<std::vector<Step>> successors, const std::vector<std::string>& failures,
               const std::string& what);
  void run_triggers(const std::vector<std::optional<Arc>>& arcs);
  void run_batch(std::vector<ResolutionEpisode>& episodes);
  std::string fresh_reading_id();
  void note(std::string text);
  void record(const TraceEvent& e);

  const KnowledgeBase* kb_;
  EngineConfig config_;
  std::mt19937_64 rng_;
  Trace trace_;
  AmbiguitySpace space_;
  std::vector<LiveReading> readings_;
  std::vector<UtteranceRecord> history_;
  std::vector<PronounOccurrence> pronouns_;
  EpisodeObserver observer_;

  bool in_sentence_ = false;
  int sentence_ = 0;
  std::size_t reading_counter_ = 0;
  std::vector<AnnotatedToken> tokens_;
  // phrase readings per anaphor position in which an episode ran
  std::map<Position, std::vector<std::string>> triggered_;
  std::map<std::string, std::size_t> fresh_ids_;
};

}  // namespace anaphora
