#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anaphora/dependency_tree.hpp"

namespace anaphora {

enum class AnaphorKind { Pronominal, Nominal };

std::string_view to_string(AnaphorKind kind);

// What the admissibility tests look at: lexical class, agreement features
// and the concept of the referent.
struct NodeView {
  std::string category;
  FeatureStructure features;
  std::optional<std::string> concept_type;
};

NodeView view_of(const WordNode& node);

// Pronominal when the node is a personal pronoun; nominal when it is a noun
// carrying a definite determiner as specifier.
std::optional<AnaphorKind> anaphor_kind(const DependencyTree& tree, const CategoryHierarchy& categories,
                                        Position p);

// Nominal antecedent agreeing in gender, number and person.
bool pron_anaphor_test(const CategoryHierarchy& categories, const NodeView& pro, const NodeView& ante);

// Only the agreement conjuncts of pron_anaphor_test.
bool agrees_for_pronoun(const FeatureStructure& pro, const FeatureStructure& ante);

// Nominal antecedent agreeing in number whose concept is subsumed by the
// definite NP's concept. False when either concept is missing.
bool nom_anaphor_test(const KnowledgeBase& kb, const NodeView& def_np, const NodeView& ante);

struct IntraCandidate {
  Position position;
  Position via_head;
  // 1 for the anaphor's own head, 2 for the next head up, ...
  std::size_t head_depth;

  friend bool operator==(const IntraCandidate&, const IntraCandidate&) = default;
};

// Rank of a dependent among its head's dependents: subject, object, rest.
int role_rank(std::optional<Relation> relation);

// Walks the anaphor's head chain upwards and collects, at each head, the
// nominal dependents outside the anaphor's own branch that are potential
// antecedents. Nearer heads first; at one head subject, then object, then the
// rest in surface order. Throws PreconditionError if the anaphor is
// unattached.
std::vector<IntraCandidate> intrasentential_candidates(const DependencyTree& tree,
                                                       const CategoryHierarchy& categories, Position anaphor);

}  // namespace anaphora
