#include "anaphora/protocol.hpp"

#include "anaphora/errors.hpp"

namespace anaphora {

std::optional<DiscourseEntity> referent_of(const WordNode& node, const CenterReading& reading) {
  if (auto it = reading.bindings.find(node.position); it != reading.bindings.end() && it->second.antecedent)
    return it->second.antecedent;
  return node.entity;
}

ResolutionEpisode::ResolutionEpisode(const KnowledgeBase& kb, EpisodeRequest request, const PhraseReading& reading,
                                     std::string source_state)
    : kb_(&kb), request_(std::move(request)), reading_(&reading), source_state_(std::move(source_state)) {
  if (!reading.alive) throw PreconditionError("search episode on dead reading " + reading.id);
}

ResolutionEpisode ResolutionEpisode::intrasentential_only(const KnowledgeBase& kb, EpisodeRequest request,
                                                          const PhraseReading& reading, CenteringState& state) {
  ResolutionEpisode e(kb, std::move(request), reading, {});
  e.state_ = &state;
  e.intra_only_ = true;
  e.phase_ = state.readings.empty() ? Phase::Done : Phase::Intra;
  return e;
}

MessageKind ResolutionEpisode::search_kind() const {
  return request_.kind == AnaphorKind::Nominal ? MessageKind::SearchNomAntecedent
                                               : MessageKind::SearchPronAntecedent;
}

CenterReading& ResolutionEpisode::current() { return state_->readings.at(cr_); }

TraceEvent ResolutionEpisode::event(int step, bool per_reading, MessageKind kind, ActorRole from, ActorRole to,
                                    std::string outcome, std::optional<std::string> candidate) const {
  TraceEvent e;
  std::size_t sibling = request_.sibling;
  e.reading = reading_->id;
  if (per_reading && state_ != nullptr) {
    sibling = request_.sibling * state_->readings.size() + cr_;
    e.reading += "/" + state_->readings.at(cr_).id;
  }
  e.step = step_label(step, sibling);
  e.message.kind = kind;
  e.message.sender = from;
  e.message.receiver = to;
  e.message.payload.sentence = request_.sentence;
  e.message.payload.anaphor = request_.anaphor;
  e.message.payload.expression = reading_->tree.node(request_.anaphor).lexeme.form;
  e.message.payload.attachment = request_.attachment;
  e.message.payload.candidate = std::move(candidate);
  e.outcome = std::move(outcome);
  return e;
}

NodeView ResolutionEpisode::anaphor_view() const { return view_of(reading_->tree.node(request_.anaphor)); }

bool ResolutionEpisode::anaphor_test(const NodeView& ante) const {
  if (request_.kind == AnaphorKind::Nominal) return nom_anaphor_test(*kb_, anaphor_view(), ante);
  return pron_anaphor_test(kb_->categories, anaphor_view(), ante);
}

bool ResolutionEpisode::permit_for(const std::string& concept_name) const {
  const auto& tree = reading_->tree;
  auto head_concept = tree.node(request_.attachment.head).concept_type();
  if (!head_concept) return true;
  return kb_->taxonomy.permit(*head_concept, request_.attachment.relation, concept_name,
                              tree.filler_counts(request_.attachment.head, request_.anaphor));
}

void ResolutionEpisode::finish_reading() {
  ++cr_;
  cf_index_ = 0;
  found_.reset();
  intra_found_.reset();
  heads_.clear();
  candidates_.clear();
  head_index_ = candidate_index_ = 0;
  if (cr_ >= state_->readings.size())
    phase_ = Phase::Done;
  else
    phase_ = intra_only_ ? Phase::Intra : Phase::Scan;
}

namespace {

std::string attachment_text(const Attachment& a) {
  return std::string(to_string(a.relation)) + "(" + std::to_string(a.head) + "->" + std::to_string(a.modifier) + ")";
}

const char* verdict(bool ok) { return ok ? "succeeds" : "fails"; }

}  // namespace

TraceEvent ResolutionEpisode::step(AmbiguitySpace* space) {
  const auto& tree = reading_->tree;
  const std::string test_name = request_.kind == AnaphorKind::Nominal ? "NomAnaphorTest" : "PronAnaphorTest";
  switch (phase_) {
    case Phase::Route1:
      phase_ = Phase::Route2;
      return event(1, false, search_kind(), ActorRole::Anaphor, ActorRole::PhraseActor,
                   "search with theAttachment " + attachment_text(request_.attachment));
    case Phase::Route2:
      phase_ = Phase::Route3;
      return event(2, false, search_kind(), ActorRole::PhraseActor, ActorRole::ContainerActor, "forwarded");
    case Phase::Route3:
      phase_ = Phase::Route4;
      return event(3, false, search_kind(), ActorRole::ContainerActor, ActorRole::ParserActor, "forwarded");
    case Phase::Route4:
      phase_ = Phase::Copy;
      return event(4, false, search_kind(), ActorRole::ParserActor, ActorRole::CenteringActor,
                   "forwarded to centering data of the preceding utterance");
    case Phase::Copy: {
      if (space == nullptr) throw PreconditionError("full search episode needs an ambiguity space");
      const std::string source = space->state(source_state_).id;
      auto& copy = copy_state(*space, reading_->id, source_state_);
      state_ = &copy;
      state_id_ = copy.id;
      phase_ = Phase::Distribute;
      cr_ = 0;
      return event(5, false, search_kind(), ActorRole::CenteringActor, ActorRole::CenteringActor,
                   "copied " + source + " to " + copy.id + "; master " + space->master().id + " unchanged");
    }
    case Phase::Distribute: {
      auto e = event(6, true, search_kind(), ActorRole::CenteringActor, ActorRole::CenterActor,
                     "theAttachment copied; Cf " + format_cf(current().cf));
      if (++cr_ >= state_->readings.size()) {
        cr_ = 0;
        phase_ = Phase::Scan;
      }
      return e;
    }
    case Phase::Scan: {
      auto& cr = current();
      if (cf_index_ >= cr.cf.size()) {
        phase_ = Phase::Intra;
        return event(13, true, MessageKind::CfExhausted, ActorRole::CenterActor, ActorRole::Anaphor,
                     "the Cf list is exhausted");
      }
      const CfEntry& candidate = cr.cf[cf_index_];
      bool ok = anaphor_test(candidate.view());
      auto e = event(7, true, search_kind(), ActorRole::CenterActor, ActorRole::CenterActor,
                     test_name + " " + verdict(ok), candidate.id());
      if (ok) {
        found_ = candidate;
        phase_ = Phase::Found;
      } else {
        ++cf_index_;
      }
      return e;
    }
    case Phase::Found:
      phase_ = Phase::Permit;
      return event(8, true, MessageKind::AntecedentFound, ActorRole::CenterActor, ActorRole::Anaphor,
                   "antecedent " + found_->label(), found_->id());
    case Phase::Permit: {
      bool ok = permit_for(found_->entity.concept_type);
      auto head_concept = tree.node(request_.attachment.head).concept_type();
      phase_ = ok ? Phase::Succeed : Phase::Reject;
      return event(9, true, MessageKind::AntecedentFound, ActorRole::Anaphor, ActorRole::Head,
                   "permit(" + head_concept.value_or("-") + ", " + std::string(to_string(request_.attachment.relation)) +
                       ", " + found_->entity.concept_type + ") " + verdict(ok) +
                       (ok ? "; theAttachment " + attachment_text(request_.attachment) + " confirmed" : ""),
                   found_->id());
    }
    case Phase::Succeed:
      phase_ = Phase::Consume;
      return event(10, true, MessageKind::AnaphorSucceed, ActorRole::Anaphor, ActorRole::CenterActor,
                   "resolved to " + found_->id(), found_->id());
    case Phase::Consume: {
      auto& cr = current();
      consume_antecedent(cr, found_->id());
      cr.bindings[request_.anaphor] = Binding{request_.kind, tree.node(request_.anaphor).lexeme.form, found_->entity,
                                              ResolutionRoute::Intersentential};
      auto e = event(11, true, MessageKind::AnaphorSucceed, ActorRole::CenterActor, ActorRole::CenterActor,
                     "consumed " + found_->id() + "; Cf now " + format_cf(cr.cf), found_->id());
      finish_reading();
      return e;
    }
    case Phase::Reject: {
      auto e = event(12, true, MessageKind::AnaphorReject, ActorRole::Anaphor, ActorRole::CenterActor,
                     "rejected " + found_->id(), found_->id());
      found_.reset();
      ++cf_index_;
      phase_ = Phase::Scan;
      return e;
    }
    case Phase::Intra: {
      heads_ = tree.ancestors(request_.anaphor);
      candidates_ = intrasentential_candidates(tree, kb_->categories, request_.anaphor);
      phase_ = heads_.empty() ? Phase::Unresolved : Phase::FirstHead;
      return event(14, true, search_kind(), ActorRole::Anaphor, ActorRole::PhraseActor,
                   "intrasentential search triggered; " + std::to_string(candidates_.size()) + " candidate(s)");
    }
    case Phase::FirstHead: {
      Position h = heads_.front();
      bool binds = d_binds(tree, kb_->categories, h, request_.anaphor);
      phase_ = Phase::Reach;
      return event(15, true, search_kind(), ActorRole::Anaphor, ActorRole::Head,
                   "Head1 '" + tree.node(h).lexeme.form + "' (" + std::to_string(h) + ")" +
                       (binds ? " d-binds the anaphor" : ""));
    }
    case Phase::Reach: {
      if (candidate_index_ < candidates_.size() && candidates_[candidate_index_].via_head == heads_[head_index_]) {
        Position x = candidates_[candidate_index_].position;
        phase_ = Phase::Test;
        return event(17, true, search_kind(), ActorRole::Head, ActorRole::Antecedent,
                     "reached '" + tree.node(x).lexeme.form + "' (" + std::to_string(x) + ")",
                     tree.node(x).lexeme.form);
      }
      if (candidate_index_ < candidates_.size() && head_index_ + 1 < heads_.size()) {
        Position h = heads_[++head_index_];
        return event(16, true, search_kind(), ActorRole::Head, ActorRole::Head,
                     "Head" + std::to_string(head_index_ + 1) + " '" + tree.node(h).lexeme.form + "' (" +
                         std::to_string(h) + ")");
      }
      phase_ = Phase::Unresolved;
      return step(space);
    }
    case Phase::Test: {
      Position x = candidates_[candidate_index_].position;
      const WordNode& node = tree.node(x);
      auto referent = referent_of(node, current());
      std::string outcome;
      bool ok = false;
      if (!referent) {
        outcome = "no referent";
      } else {
        NodeView view{node.category(), node.features, referent->concept_type};
        bool test = anaphor_test(view);
        bool permitted = test && permit_for(referent->concept_type);
        ok = test && permitted;
        outcome = test_name + " " + verdict(test) + (test ? std::string(", permit ") + verdict(permitted) : "");
      }
      if (ok) {
        intra_found_ = referent;
        phase_ = Phase::Bind;
      } else {
        ++candidate_index_;
        phase_ = Phase::Reach;
      }
      return event(18, true, search_kind(), ActorRole::Antecedent, ActorRole::Head, outcome,
                   referent ? referent->instance_id : node.lexeme.form);
    }
    case Phase::Bind: {
      auto& cr = current();
      cr.bindings[request_.anaphor] = Binding{request_.kind, tree.node(request_.anaphor).lexeme.form, intra_found_,
                                              ResolutionRoute::Intrasentential};
      auto e = event(19, true, MessageKind::AntecedentFound, ActorRole::Antecedent, ActorRole::Anaphor,
                     "resolved to " + intra_found_->instance_id + "; theAttachment " +
                         attachment_text(request_.attachment) + " confirmed",
                     intra_found_->instance_id);
      finish_reading();
      return e;
    }
    case Phase::Unresolved: {
      auto& cr = current();
      cr.bindings[request_.anaphor] =
          Binding{request_.kind, tree.node(request_.anaphor).lexeme.form, std::nullopt, ResolutionRoute::Unresolved};
      auto e = event(19, true, MessageKind::AnaphorReject, ActorRole::PhraseActor, ActorRole::Anaphor,
                     "no antecedent found; unresolved");
      finish_reading();
      return e;
    }
    case Phase::Done:
      break;
  }
  throw PreconditionError("step on finished episode");
}

}  // namespace anaphora
