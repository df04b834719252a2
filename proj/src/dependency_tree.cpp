#include "anaphora/dependency_tree.hpp"

#include <sstream>

#include "anaphora/errors.hpp"

namespace anaphora {

Position DependencyTree::add_node(Lexeme lexeme, std::optional<DiscourseEntity> entity) {
  WordNode n;
  n.position = nodes_.size() + 1;
  n.features = lexeme.features;
  n.lexeme = std::move(lexeme);
  n.entity = std::move(entity);
  nodes_.push_back(std::move(n));
  head_arc_.emplace_back();
  return nodes_.size();
}

void DependencyTree::check(Position p) const {
  if (!contains(p)) throw LookupError("no node at position " + std::to_string(p));
}

const WordNode& DependencyTree::node(Position p) const {
  check(p);
  return nodes_[p - 1];
}

WordNode& DependencyTree::node(Position p) {
  check(p);
  return nodes_[p - 1];
}

std::optional<Position> DependencyTree::head_of(Position p) const {
  check(p);
  if (const auto& a = head_arc_[p - 1]) return a->head;
  return std::nullopt;
}

std::optional<Relation> DependencyTree::relation_of(Position p) const {
  check(p);
  if (const auto& a = head_arc_[p - 1]) return a->relation;
  return std::nullopt;
}

std::vector<Position> DependencyTree::modifiers_of(Position head) const {
  check(head);
  std::vector<Position> out;
  for (const auto& a : head_arc_)
    if (a && a->head == head) out.push_back(a->modifier);
  return out;
}

bool DependencyTree::slot_filled(Position head, Relation r) const {
  check(head);
  for (const auto& a : head_arc_)
    if (a && a->head == head && a->relation == r) return true;
  return false;
}

FillerCounts DependencyTree::filler_counts(Position head, std::optional<Position> excluding) const {
  check(head);
  FillerCounts counts;
  for (const auto& a : head_arc_)
    if (a && a->head == head && a->modifier != excluding) ++counts[a->relation];
  return counts;
}

std::vector<Position> DependencyTree::ancestors(Position p) const {
  check(p);
  std::vector<Position> out;
  for (auto h = head_of(p); h; h = head_of(*h)) out.push_back(*h);
  return out;
}

void DependencyTree::add_arc(Position head, Position modifier, Relation relation) {
  check(head);
  check(modifier);
  if (head_arc_[modifier - 1])
    throw PreconditionError("node " + std::to_string(modifier) + " already has a head");
  if (head == modifier || head_plus(*this, modifier, head))
    throw PreconditionError("arc " + std::to_string(head) + "->" + std::to_string(modifier) + " would close a cycle");
  head_arc_[modifier - 1] = Arc{head, modifier, relation};
}

std::vector<Arc> DependencyTree::arcs() const {
  std::vector<Arc> out;
  for (const auto& a : head_arc_)
    if (a) out.push_back(*a);
  return out;
}

std::string DependencyTree::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& a : arcs()) {
    if (!first) out << ' ';
    first = false;
    out << ::anaphora::to_string(a.relation) << '(' << a.head << ',' << a.modifier << ')';
  }
  return out.str();
}

bool head_plus(const DependencyTree& tree, Position x, Position y) {
  tree.node(x);
  for (auto h = tree.head_of(y); h; h = tree.head_of(*h))
    if (*h == x) return true;
  return false;
}

bool left_plus(const DependencyTree& tree, Position x, Position y) {
  tree.node(x);
  tree.node(y);
  return x < y;
}

bool is_binding_barrier(const DependencyTree& tree, const CategoryHierarchy& categories, Position z) {
  if (categories.isa_star(tree.node(z).category(), category::kFiniteVerb)) return true;
  for (Position u : tree.modifiers_of(z)) {
    const auto& cat = tree.node(u).category();
    switch (*tree.relation_of(u)) {
      case Relation::Spec:
        if (categories.isa_star(cat, category::kDetPossessive)) return true;
        break;
      case Relation::SaxGen:
      case Relation::PpAtt:
      case Relation::GenAtt:
        if (categories.isa_star(cat, category::kNoun)) return true;
        break;
      default:
        break;
    }
  }
  return false;
}

bool d_binds(const DependencyTree& tree, const CategoryHierarchy& categories, Position x, Position y) {
  if (!head_plus(tree, x, y)) return false;
  for (auto z = tree.head_of(y); *z != x; z = tree.head_of(*z))
    if (is_binding_barrier(tree, categories, *z)) return false;
  return true;
}

bool is_potential_anaphoric_antecedent(const DependencyTree& tree, const CategoryHierarchy& categories,
                                       Position x, Position y) {
  tree.node(x);
  // every d-binder of y is an ancestor of y
  bool some_binder_heads_x = false;
  for (Position z : tree.ancestors(y)) {
    if (!d_binds(tree, categories, z, y)) continue;
    if (d_binds(tree, categories, z, x)) return false;
    if (head_plus(tree, z, x)) some_binder_heads_x = true;
  }
  return !some_binder_heads_x || left_plus(tree, x, y);
}

}  // namespace anaphora
