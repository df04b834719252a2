#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anaphora/centering.hpp"
#include "anaphora/phrase_reading.hpp"
#include "anaphora/trace.hpp"

namespace anaphora {

struct EpisodeRequest {
  AnaphorKind kind = AnaphorKind::Pronominal;
  int sentence = 0;
  Position anaphor = 0;
  Attachment attachment{Relation::Subject, 0, 0};
  // Index among the parallel episodes launched by the same trigger.
  std::size_t sibling = 0;
};

// Referent of a node under one center reading: its binding there, else the
// entity the node evokes itself.
std::optional<DiscourseEntity> referent_of(const WordNode& node, const CenterReading& reading);

// One search episode for one anaphor in one phrase reading, executed one
// message at a time so that parallel episodes can be interleaved.
//
//   1-4   Anaphor -> PhraseActor -> ContainerActor -> ParserActor -> CenteringActor
//   5     copy of the centering state (master untouched)
//   6     distribution to every CenterActor
//   7-13  Cf scan per center reading: test, AntecedentFound, permit,
//         AnaphorSucceed + consumption, or AnaphorReject / CfExhausted
//   14-19 intrasentential walk up the head chain when the Cf is exhausted
class ResolutionEpisode {
 public:
  ResolutionEpisode(const KnowledgeBase& kb, EpisodeRequest request, const PhraseReading& reading,
                    std::string source_state);

  // Skips steps 1-13 and searches the sentence directly for every reading of
  // `state`, recording bindings there.
  static ResolutionEpisode intrasentential_only(const KnowledgeBase& kb, EpisodeRequest request,
                                                const PhraseReading& reading, CenteringState& state);

  bool done() const { return phase_ == Phase::Done; }

  // Delivers the next message and returns its trace event. `space` is only
  // consulted by full episodes (step 5).
  TraceEvent step(AmbiguitySpace* space);

  const EpisodeRequest& request() const { return request_; }
  const std::string& phrase_id() const { return reading_->id; }
  // Copy created at step 5 (empty before that or for intrasentential-only runs).
  const std::string& state_id() const { return state_id_; }
  const CenteringState* state() const { return state_; }

 private:
  enum class Phase {
    Route1, Route2, Route3, Route4, Copy, Distribute,
    Scan, Found, Permit, Succeed, Consume, Reject, Exhausted,
    Intra, FirstHead, NextHead, Reach, Test, Bind, Unresolved,
    Done
  };

  TraceEvent event(int step, bool per_reading, MessageKind kind, ActorRole from, ActorRole to,
                   std::string outcome, std::optional<std::string> candidate = std::nullopt) const;
  MessageKind search_kind() const;
  CenterReading& current();
  NodeView anaphor_view() const;
  bool anaphor_test(const NodeView& ante) const;
  bool permit_for(const std::string& concept_name) const;
  void finish_reading();

  const KnowledgeBase* kb_;
  EpisodeRequest request_;
  const PhraseReading* reading_;
  std::string source_state_;
  std::string state_id_;
  CenteringState* state_ = nullptr;
  Phase phase_ = Phase::Route1;
  bool intra_only_ = false;

  std::size_t cr_ = 0;       // current center reading
  std::size_t cf_index_ = 0; // next Cf element to test
  std::optional<CfEntry> found_;
  std::vector<Position> heads_;
  std::size_t head_index_ = 0;
  std::vector<IntraCandidate> candidates_;
  std::size_t candidate_index_ = 0;
  std::optional<DiscourseEntity> intra_found_;
};

}  // namespace anaphora
