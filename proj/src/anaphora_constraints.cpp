#include "anaphora/anaphora_constraints.hpp"

#include <algorithm>

#include "anaphora/errors.hpp"

namespace anaphora {

std::string_view to_string(AnaphorKind kind) {
  return kind == AnaphorKind::Pronominal ? "pronominal" : "nominal";
}

NodeView view_of(const WordNode& node) { return NodeView{node.category(), node.features, node.concept_type()}; }

std::optional<AnaphorKind> anaphor_kind(const DependencyTree& tree, const CategoryHierarchy& categories,
                                        Position p) {
  const auto& node = tree.node(p);
  if (categories.isa_star(node.category(), category::kPersonalPronoun)) return AnaphorKind::Pronominal;
  if (!categories.isa_star(node.category(), category::kNoun)) return std::nullopt;
  for (Position u : tree.modifiers_of(p))
    if (tree.relation_of(u) == Relation::Spec &&
        categories.isa_star(tree.node(u).category(), category::kDefiniteDeterminer))
      return AnaphorKind::Nominal;
  return std::nullopt;
}

namespace {

bool unifies(const FeatureStructure& a, const FeatureStructure& b, Feature path) {
  return !unify(extract(a, path), extract(b, path)).is_bottom();
}

}  // namespace

bool agrees_for_pronoun(const FeatureStructure& pro, const FeatureStructure& ante) {
  return unifies(pro, ante, Feature::Gender) && unifies(pro, ante, Feature::Number) &&
         unifies(pro, ante, Feature::Person);
}

bool pron_anaphor_test(const CategoryHierarchy& categories, const NodeView& pro, const NodeView& ante) {
  return categories.isa_star(ante.category, category::kNominal) && agrees_for_pronoun(pro.features, ante.features);
}

bool nom_anaphor_test(const KnowledgeBase& kb, const NodeView& def_np, const NodeView& ante) {
  if (!def_np.concept_type || !ante.concept_type) return false;
  return kb.categories.isa_star(ante.category, category::kNominal) &&
         unifies(def_np.features, ante.features, Feature::Number) &&
         kb.taxonomy.isa_star(*ante.concept_type, *def_np.concept_type);
}

int role_rank(std::optional<Relation> relation) {
  if (relation == Relation::Subject) return 0;
  if (relation == Relation::Object) return 1;
  return 2;
}

std::vector<IntraCandidate> intrasentential_candidates(const DependencyTree& tree,
                                                       const CategoryHierarchy& categories, Position anaphor) {
  if (!tree.head_of(anaphor))
    throw PreconditionError("anaphor at " + std::to_string(anaphor) + " is not attached");
  std::vector<IntraCandidate> out;
  Position branch = anaphor;
  std::size_t depth = 0;
  for (Position head : tree.ancestors(anaphor)) {
    ++depth;
    std::vector<Position> found;
    for (Position x : tree.modifiers_of(head)) {
      if (x == branch) continue;
      if (!categories.isa_star(tree.node(x).category(), category::kNominal)) continue;
      if (!is_potential_anaphoric_antecedent(tree, categories, x, anaphor)) continue;
      found.push_back(x);
    }
    std::stable_sort(found.begin(), found.end(), [&](Position a, Position b) {
      int ra = role_rank(tree.relation_of(a)), rb = role_rank(tree.relation_of(b));
      return ra != rb ? ra < rb : a < b;
    });
    for (Position x : found) out.push_back({x, head, depth});
    branch = head;
  }
  return out;
}

}  // namespace anaphora
