#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anaphora/category_hierarchy.hpp"
#include "anaphora/feature_structure.hpp"
#include "anaphora/relation.hpp"
#include "anaphora/taxonomy.hpp"

namespace anaphora {

struct ValenceSlot {
  Relation relation;
  bool obligatory = false;

  friend bool operator==(const ValenceSlot&, const ValenceSlot&) = default;
};

// One lexical reading of a token. features is never bottom.
struct Lexeme {
  std::string form;
  std::string lemma;
  std::string category;
  FeatureStructure features;
  std::optional<std::string> concept_type;
  std::vector<ValenceSlot> valence;

  bool has_slot(Relation r) const {
    for (const auto& s : valence)
      if (s.relation == r) return true;
    return false;
  }

  friend bool operator==(const Lexeme&, const Lexeme&) = default;
};

struct KnowledgeBase {
  CategoryHierarchy categories;
  Taxonomy taxonomy;
};

}  // namespace anaphora
