#include "anaphora/centering.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "anaphora/errors.hpp"

namespace anaphora {

std::string_view to_string(Transition t) {
  switch (t) {
    case Transition::Continue: return "CONTINUE";
    case Transition::Retain: return "RETAIN";
    case Transition::SmoothShift: return "SMOOTH-SHIFT";
    case Transition::RoughShift: return "ROUGH-SHIFT";
  }
  return "?";
}

std::string_view to_string(ResolutionRoute r) {
  switch (r) {
    case ResolutionRoute::Intersentential: return "intersentential";
    case ResolutionRoute::Intrasentential: return "intrasentential";
    case ResolutionRoute::Unresolved: return "unresolved";
  }
  return "?";
}

namespace {

std::string master_id(int utterance) { return "u" + std::to_string(utterance); }

}  // namespace

AmbiguitySpace AmbiguitySpace::initial() {
  CenterReading start;
  start.id = "0";
  start.discourse_start = true;
  return AmbiguitySpace(0, CenteringState{master_id(0), {start}, {}});
}

AmbiguitySpace::AmbiguitySpace(int utterance, CenteringState master)
    : utterance_(utterance), master_(std::move(master)) {
  if (master_.readings.empty()) throw PreconditionError("centering state without readings");
  if (master_.id.empty()) master_.id = master_id(utterance);
}

const CenteringState& AmbiguitySpace::state(std::string_view id) const {
  if (id.empty() || id == master_.id) return master_;
  auto it = copies_.find(id);
  if (it == copies_.end()) throw LookupError("no centering state '" + std::string(id) + "'");
  return it->second;
}

CenteringState& AmbiguitySpace::copy(std::string_view id) {
  auto it = copies_.find(id);
  if (it == copies_.end()) throw LookupError("no centering copy '" + std::string(id) + "'");
  return it->second;
}

CenteringState& copy_state(AmbiguitySpace& space, std::string_view for_phrase, std::string_view source) {
  CenteringState copy = space.state(source);
  std::size_t n = 1;
  for (const auto& [id, state] : space.copies_)
    if (state.origin_phrase == for_phrase) ++n;
  copy.id = space.master_.id + "/" + std::string(for_phrase) + "#" + std::to_string(n);
  copy.origin_phrase = std::string(for_phrase);
  auto [it, inserted] = space.copies_.emplace(copy.id, std::move(copy));
  if (!inserted) throw PreconditionError("duplicate centering copy " + it->first);
  return it->second;
}

void consume_antecedent(CenterReading& reading, std::string_view instance_id) {
  auto it = std::find_if(reading.cf.begin(), reading.cf.end(),
                         [&](const CfEntry& e) { return e.id() == instance_id; });
  if (it == reading.cf.end()) {
    bool again = std::find(reading.consumed.begin(), reading.consumed.end(), instance_id) != reading.consumed.end();
    throw ConsumptionError(std::string(again ? "entity already consumed: " : "entity not in Cf: ") +
                           std::string(instance_id));
  }
  reading.consumed.push_back(it->id());
  reading.cf.erase(it);
}

std::vector<CfEntry> rank_cf(const DependencyTree& tree, const CategoryHierarchy& categories,
                             std::span<const Realization> realizations) {
  // (clause depth, clause verb, role, position)
  using Key = std::tuple<std::size_t, Position, int, Position>;
  std::vector<std::pair<Key, const CfEntry*>> keyed;
  for (const auto& r : realizations) {
    tree.node(r.position);
    std::size_t depth = 0;
    std::optional<Position> clause_verb;
    for (Position a : tree.ancestors(r.position)) {
      if (!categories.isa_star(tree.node(a).category(), category::kFiniteVerb)) continue;
      ++depth;
      if (!clause_verb) clause_verb = a;
    }
    int role = 2;
    if (clause_verb && tree.head_of(r.position) == clause_verb) role = role_rank(tree.relation_of(r.position));
    keyed.push_back({Key{depth, clause_verb.value_or(0), role, r.position}, &r.entry});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<CfEntry> cf;
  for (const auto& [key, entry] : keyed) {
    bool seen = std::any_of(cf.begin(), cf.end(), [&](const CfEntry& e) { return e.id() == entry->id(); });
    if (!seen) cf.push_back(*entry);
  }
  return cf;
}

Transition compute_transition(const CenterReading& prev, const std::optional<CfEntry>& cb,
                              std::span<const CfEntry> cf) {
  if (!cb) return Transition::RoughShift;
  const bool tops_cf = !cf.empty() && cf.front().id() == cb->id();
  const bool same_cb = prev.cb && prev.cb->id() == cb->id();
  if ((same_cb || !prev.cb) && tops_cf) return Transition::Continue;
  if (same_cb) return Transition::Retain;
  if (tops_cf) return Transition::SmoothShift;
  return Transition::RoughShift;
}

std::optional<CfEntry> backward_center(const CenterReading& predecessor, std::span<const CfEntry> cf) {
  if (predecessor.discourse_start) {
    if (cf.empty()) return std::nullopt;
    return cf.front();
  }
  for (const auto& prev : predecessor.cf)
    for (const auto& cur : cf)
      if (cur.id() == prev.id()) return cur;
  return std::nullopt;
}

AmbiguitySpace commit_utterance(const AmbiguitySpace& space, const CategoryHierarchy& categories,
                                std::span<const Survivor> survivors) {
  if (survivors.empty()) throw ProcessingError("no surviving reading at end of utterance");
  const int utterance = space.utterance() + 1;
  CenteringState next{"u" + std::to_string(utterance), {}, {}};
  for (const auto& s : survivors) {
    if (s.tree == nullptr) throw PreconditionError("survivor " + s.phrase_id + " without tree");
    const auto& state = space.state(s.state_id);
    if (s.realizations.size() != state.readings.size())
      throw PreconditionError("survivor " + s.phrase_id + ": realizations do not match center readings");
    for (std::size_t k = 0; k < state.readings.size(); ++k) {
      const auto& copy_reading = state.readings[k];
      // Cb is computed against the original, unconsumed Cf kept in the master.
      const CenterReading* predecessor = &copy_reading;
      for (const auto& m : space.master().readings)
        if (m.id == copy_reading.id) predecessor = &m;

      CenterReading reading;
      reading.id = std::to_string(next.readings.size() + 1);
      reading.cf = rank_cf(*s.tree, categories, s.realizations[k]);
      reading.cb = backward_center(*predecessor, reading.cf);
      reading.transition = compute_transition(*predecessor, reading.cb, reading.cf);
      next.readings.push_back(std::move(reading));
    }
  }
  return AmbiguitySpace(utterance, std::move(next));
}

namespace {

void write_entry(std::ostream& out, const CfEntry& e) {
  out << e.id() << '|' << e.entity.concept_type << '|' << e.entity.last_expression << '|' << e.category << '|'
      << e.features.to_string();
}

}  // namespace

std::string serialize(const CenterReading& r) {
  std::ostringstream out;
  out << "reading " << r.id << (r.discourse_start ? " start" : "") << "\n  cb ";
  if (r.cb)
    write_entry(out, *r.cb);
  else
    out << "-";
  out << "\n  transition " << (r.transition ? to_string(*r.transition) : "pending") << '\n';
  for (const auto& e : r.cf) {
    out << "  cf ";
    write_entry(out, e);
    out << '\n';
  }
  for (const auto& c : r.consumed) out << "  consumed " << c << '\n';
  for (const auto& [pos, b] : r.bindings) {
    out << "  binding " << pos << ' ' << to_string(b.kind) << ' ' << b.expression << " -> "
        << (b.antecedent ? b.antecedent->instance_id : "-") << ' ' << to_string(b.route) << '\n';
  }
  return out.str();
}

std::string serialize(const CenteringState& state) {
  std::string out = "state " + state.id + " origin " + (state.origin_phrase.empty() ? "-" : state.origin_phrase) + "\n";
  for (const auto& r : state.readings) out += serialize(r);
  return out;
}

std::string format_cf(std::span<const CfEntry> cf) {
  std::string out = "[";
  for (std::size_t i = 0; i < cf.size(); ++i) {
    if (i) out += ", ";
    out += cf[i].label();
  }
  return out + "]";
}

}  // namespace anaphora
