#include "anaphora/phrase_reading.hpp"

#include <algorithm>

#include "anaphora/errors.hpp"

namespace anaphora {

std::size_t Container::live_count() const {
  return static_cast<std::size_t>(
      std::count_if(readings.begin(), readings.end(), [](const PhraseReading& r) { return r.alive; }));
}

bool Container::spans_agree() const {
  const std::size_t width = last + 1 - first;
  return std::all_of(readings.begin(), readings.end(),
                     [&](const PhraseReading& r) { return r.tree.size() == width; });
}

namespace {

FeatureStructure case_only(std::uint8_t mask) {
  FeatureStructure fs;
  fs.set(Feature::Case, mask);
  return fs;
}

std::uint8_t case_bit(std::string_view name) {
  FeatureStructure fs;
  fs.set(Feature::Case, {name});
  return fs.mask(Feature::Case);
}

}  // namespace

AttachmentFeatures constrain(Relation relation, const WordNode& head, const WordNode& modifier) {
  AttachmentFeatures out{head.features, modifier.features};
  switch (relation) {
    case Relation::Subject:
      out.modifier = unify(modifier.features, case_only(case_bit("nom")));
      break;
    case Relation::Object:
      out.modifier = unify(modifier.features, case_only(case_bit("acc")));
      break;
    case Relation::GenAtt:
    case Relation::SaxGen:
      out.modifier = unify(modifier.features, case_only(case_bit("gen")));
      break;
    case Relation::PpObject:
      // the preposition's own case set is the case it governs
      if (head.features.defines(Feature::Case))
        out.modifier = unify(modifier.features, case_only(head.features.mask(Feature::Case)));
      break;
    case Relation::Spec:
      out.head = out.modifier = unify(head.features, modifier.features);
      break;
    case Relation::PpAtt:
    case Relation::Adjunct:
      break;
  }
  return out;
}

AttachResult attach(const PhraseReading& reading, const KnowledgeBase& kb, Position head, Position modifier,
                    std::span<const Relation> relations) {
  if (!reading.alive) throw PreconditionError("attach on dead reading " + reading.id);
  const auto& tree = reading.tree;
  const WordNode& h = tree.node(head);
  const WordNode& m = tree.node(modifier);
  if (tree.head_of(modifier)) throw PreconditionError("modifier " + std::to_string(modifier) + " already attached");

  std::vector<Relation> tried;
  if (relations.empty()) {
    for (const auto& slot : h.lexeme.valence) tried.push_back(slot.relation);
  } else {
    tried.assign(relations.begin(), relations.end());
  }

  AttachResult result;
  auto reject = [&](Relation r, const std::string& why) {
    if (!result.failure.empty()) result.failure += "; ";
    result.failure += std::string(to_string(r)) + ": " + why;
  };

  std::vector<Relation> seen;
  for (Relation r : tried) {
    if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
    seen.push_back(r);
    if (!h.lexeme.has_slot(r)) {
      reject(r, "not in valence of '" + h.lexeme.form + "'");
      continue;
    }
    if (!is_repeatable(r) && tree.slot_filled(head, r)) {
      reject(r, "slot of '" + h.lexeme.form + "' already filled");
      continue;
    }
    if (head == modifier || head_plus(tree, modifier, head)) {
      reject(r, "would close a cycle");
      continue;
    }
    auto features = constrain(r, h, m);
    if (!features.consistent()) {
      reject(r, "features of '" + m.lexeme.form + "' (" + m.features.to_string() + ") do not unify");
      continue;
    }
    auto head_concept = h.concept_type();
    auto mod_concept = m.concept_type();
    if (head_concept && mod_concept &&
        !kb.taxonomy.permit(*head_concept, r, *mod_concept, tree.filler_counts(head))) {
      reject(r, "permit(" + *head_concept + ", " + *mod_concept + ") fails");
      continue;
    }
    PhraseReading next = reading;
    next.tree.node(head).features = features.head;
    next.tree.node(modifier).features = features.modifier;
    next.tree.add_arc(head, modifier, r);
    result.readings.push_back(std::move(next));
    result.relations.push_back(r);
  }
  return result;
}

}  // namespace anaphora
