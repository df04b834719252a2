#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "anaphora/lexeme.hpp"

namespace anaphora {

// 1-based token index within one sentence.
using Position = std::size_t;

struct WordNode {
  Position position = 0;
  Lexeme lexeme;
  // Lexeme features narrowed by every attachment made so far.
  FeatureStructure features;
  // The entity this token evokes on its own (before any anaphoric binding).
  std::optional<DiscourseEntity> entity;

  const std::string& category() const { return lexeme.category; }
  // Concept of the evoked entity, falling back to the lexeme's concept.
  std::optional<std::string> concept_type() const {
    if (entity) return entity->concept_type;
    return lexeme.concept_type;
  }
};

struct Arc {
  Position head;
  Position modifier;
  Relation relation;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Labeled head-modifier forest over the tokens of one sentence.
class DependencyTree {
 public:
  Position add_node(Lexeme lexeme, std::optional<DiscourseEntity> entity = std::nullopt);

  std::size_t size() const { return nodes_.size(); }
  bool contains(Position p) const { return p >= 1 && p <= nodes_.size(); }

  // All accessors throw LookupError on unknown positions.
  const WordNode& node(Position p) const;
  WordNode& node(Position p);
  std::optional<Position> head_of(Position p) const;
  std::optional<Relation> relation_of(Position p) const;
  std::vector<Position> modifiers_of(Position head) const;
  bool slot_filled(Position head, Relation r) const;
  // Filler count per relation at head, optionally ignoring one modifier.
  FillerCounts filler_counts(Position head, std::optional<Position> excluding = std::nullopt) const;
  // Strict ancestors of p, nearest first.
  std::vector<Position> ancestors(Position p) const;

  // Throws PreconditionError if the modifier already has a head or the arc
  // would close a cycle.
  void add_arc(Position head, Position modifier, Relation relation);

  std::vector<Arc> arcs() const;
  std::string to_string() const;

 private:
  void check(Position p) const;

  std::vector<WordNode> nodes_;
  std::vector<std::optional<Arc>> head_arc_;
};

// x head+ y: x transitively heads y (one or more head links).
bool head_plus(const DependencyTree& tree, Position x, Position y);
// x left+ y: x occurs left of y.
bool left_plus(const DependencyTree& tree, Position x, Position y);

// Does z block d-binding across it: a finite verb, or a node carrying a
// possessive specifier or a nominal Saxon-genitive / PP / genitive attribute.
bool is_binding_barrier(const DependencyTree& tree, const CategoryHierarchy& categories, Position z);

// x d-binds y: x head+ y with no barrier z strictly between them.
bool d_binds(const DependencyTree& tree, const CategoryHierarchy& categories, Position x, Position y);

// No z d-binds both x and y, and if some u d-binds y and transitively heads
// x then x precedes y.
bool is_potential_anaphoric_antecedent(const DependencyTree& tree, const CategoryHierarchy& categories,
                                       Position x, Position y);

}  // namespace anaphora
