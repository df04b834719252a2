#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anaphora/anaphora_constraints.hpp"
#include "anaphora/dependency_tree.hpp"

namespace anaphora {

enum class Transition { Continue, Retain, SmoothShift, RoughShift };

std::string_view to_string(Transition t);

// A forward-looking center together with what the anaphor tests need to know
// about the expression that realized it.
struct CfEntry {
  DiscourseEntity entity;  // last_expression is the realizing expression
  std::string category;
  FeatureStructure features;

  const std::string& id() const { return entity.instance_id; }
  NodeView view() const { return NodeView{category, features, entity.concept_type}; }
  // "INSTANCE: expression"
  std::string label() const { return entity.instance_id + ": " + entity.last_expression; }

  friend bool operator==(const CfEntry&, const CfEntry&) = default;
};

enum class ResolutionRoute { Intersentential, Intrasentential, Unresolved };

std::string_view to_string(ResolutionRoute r);

// Outcome of one anaphor under one center reading.
struct Binding {
  AnaphorKind kind = AnaphorKind::Pronominal;
  std::string expression;
  std::optional<DiscourseEntity> antecedent;
  ResolutionRoute route = ResolutionRoute::Unresolved;

  friend bool operator==(const Binding&, const Binding&) = default;
};

// One Cb / ordered Cf pair: a unit of global ambiguity.
struct CenterReading {
  std::string id;
  std::optional<CfEntry> cb;
  std::vector<CfEntry> cf;
  std::vector<std::string> consumed;
  std::optional<Transition> transition;  // nullopt while pending
  // Placeholder standing before the first utterance of a discourse.
  bool discourse_start = false;
  // Anaphors of the utterance currently being read, resolved against this reading.
  std::map<Position, Binding> bindings;

  friend bool operator==(const CenterReading&, const CenterReading&) = default;
};

struct CenteringState {
  std::string id;
  std::vector<CenterReading> readings;
  std::string origin_phrase;  // empty for a master state

  friend bool operator==(const CenteringState&, const CenteringState&) = default;
};

// Centering data of the previous utterance: an untouched master state plus
// one copy per search episode.
class AmbiguitySpace {
 public:
  // Space before the first utterance: a single empty placeholder reading.
  static AmbiguitySpace initial();
  AmbiguitySpace(int utterance, CenteringState master);

  int utterance() const { return utterance_; }
  const CenteringState& master() const { return master_; }
  const std::map<std::string, CenteringState, std::less<>>& copies() const { return copies_; }
  std::size_t state_count() const { return 1 + copies_.size(); }

  // The master for its own id, otherwise a registered copy. Throws LookupError.
  const CenteringState& state(std::string_view id) const;
  CenteringState& copy(std::string_view id);

 private:
  friend CenteringState& copy_state(AmbiguitySpace&, std::string_view, std::string_view);

  int utterance_ = 0;
  CenteringState master_;
  std::map<std::string, CenteringState, std::less<>> copies_;
};

// Deep copy of `source` (the master when empty) registered in the space and
// tagged with the phrase reading that owns it. The master is never touched.
CenteringState& copy_state(AmbiguitySpace& space, std::string_view for_phrase, std::string_view source = {});

// Removes an entity from the Cf and records it as consumed. Throws
// ConsumptionError if it is not in the Cf.
void consume_antecedent(CenterReading& reading, std::string_view instance_id);

struct Realization {
  Position position;
  CfEntry entry;
};

// Orders realized entities: clause by clause from the matrix clause down
// (by finite-verb dominance), SUBJECT > OBJECT > OTHERS within a clause,
// OTHERS in surface order. Repeated entities keep their best-ranked entry.
std::vector<CfEntry> rank_cf(const DependencyTree& tree, const CategoryHierarchy& categories,
                             std::span<const Realization> realizations);

Transition compute_transition(const CenterReading& prev, const std::optional<CfEntry>& cb,
                              std::span<const CfEntry> cf);

// Cb of a new utterance: the best-ranked element of the predecessor's Cf that
// is realized in `cf`. At discourse start the new Cf's head.
std::optional<CfEntry> backward_center(const CenterReading& predecessor, std::span<const CfEntry> cf);

struct Survivor {
  std::string phrase_id;
  std::string state_id;  // master id or a copy id in the space
  const DependencyTree* tree = nullptr;
  // Entities realized in the utterance, one list per reading of the state.
  std::vector<std::vector<Realization>> realizations;
};

// Builds the next utterance's space: one reading per (survivor, reading of
// its state), in survivor order. Throws ProcessingError on zero survivors.
AmbiguitySpace commit_utterance(const AmbiguitySpace& space, const CategoryHierarchy& categories,
                                std::span<const Survivor> survivors);

std::string serialize(const CenterReading& reading);
std::string serialize(const CenteringState& state);

// "[A: a, B: b]"
std::string format_cf(std::span<const CfEntry> cf);

}  // namespace anaphora
