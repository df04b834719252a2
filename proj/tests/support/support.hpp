// Helpers shared by the unit and acceptance tests.
#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "anaphora/dependency_tree.hpp"
#include "anaphora/document.hpp"
#include "anaphora/lexeme.hpp"

namespace testing {

inline std::filesystem::path data_dir() { return ANAPHORA_DATA_DIR; }
inline std::filesystem::path test_dir() { return ANAPHORA_TEST_DIR; }

inline const anaphora::KnowledgeBase& fixture_kb() {
  static const anaphora::KnowledgeBase kb{anaphora::CategoryHierarchy::load(data_dir() / "categories.cat"),
                                          anaphora::Taxonomy::load(data_dir() / "lps105.tax")};
  return kb;
}

inline anaphora::Document fixture_document() { return anaphora::load_document(data_dir() / "lps105.doc"); }

inline anaphora::Lexeme lexeme(std::string form, std::string category, std::string features = "_",
                               std::optional<std::string> concept_type = std::nullopt,
                               std::vector<anaphora::ValenceSlot> valence = {}) {
  return anaphora::Lexeme{form, form, std::move(category), anaphora::FeatureStructure::parse(features),
                          std::move(concept_type), std::move(valence)};
}

// Forest of up to max_nodes nodes with random categories and relations.
inline anaphora::DependencyTree random_forest(std::mt19937_64& rng, std::size_t max_nodes,
                                              const std::vector<std::string>& categories) {
  using namespace anaphora;
  std::uniform_int_distribution<std::size_t> size(1, max_nodes);
  std::uniform_int_distribution<std::size_t> cat(0, categories.size() - 1);
  std::uniform_int_distribution<std::size_t> rel(0, kAllRelations.size() - 1);
  std::bernoulli_distribution has_head(0.8);
  DependencyTree tree;
  std::size_t n = size(rng);
  for (std::size_t i = 0; i < n; ++i) tree.add_node(lexeme("w" + std::to_string(i + 1), categories[cat(rng)]));
  std::vector<Position> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t k = 1; k < n; ++k) {
    if (!has_head(rng)) continue;
    std::uniform_int_distribution<std::size_t> parent(0, k - 1);
    tree.add_arc(order[parent(rng)], order[k], kAllRelations[rel(rng)]);
  }
  return tree;
}

// Direct evaluation of the quantified binding formulas over all nodes,
// using a closure matrix built independently of the library's walks.
class FormulaOracle {
 public:
  FormulaOracle(const anaphora::DependencyTree& tree, const anaphora::CategoryHierarchy& cats)
      : tree_(tree), cats_(cats), n_(tree.size()) {
    head_.assign(n_ + 1, std::vector<bool>(n_ + 1, false));
    for (const auto& arc : tree.arcs()) head_[arc.head][arc.modifier] = true;
    plus_ = head_;
    for (std::size_t k = 1; k <= n_; ++k)
      for (std::size_t i = 1; i <= n_; ++i)
        for (std::size_t j = 1; j <= n_; ++j)
          if (plus_[i][k] && plus_[k][j]) plus_[i][j] = true;
  }

  bool head_plus(std::size_t x, std::size_t y) const { return plus_[x][y]; }

  bool barrier(std::size_t z) const {
    using namespace anaphora;
    if (cats_.isa_star(tree_.node(z).category(), category::kFiniteVerb)) return true;
    for (std::size_t u = 1; u <= n_; ++u) {
      if (!head_[z][u]) continue;
      Relation r = *tree_.relation_of(u);
      const auto& c = tree_.node(u).category();
      if (r == Relation::Spec && cats_.isa_star(c, category::kDetPossessive)) return true;
      if ((r == Relation::SaxGen || r == Relation::PpAtt || r == Relation::GenAtt) &&
          cats_.isa_star(c, category::kNoun))
        return true;
    }
    return false;
  }

  bool d_binds(std::size_t x, std::size_t y) const {
    if (!plus_[x][y]) return false;
    for (std::size_t z = 1; z <= n_; ++z)
      if (plus_[x][z] && plus_[z][y] && barrier(z)) return false;
    return true;
  }

  bool potential_antecedent(std::size_t x, std::size_t y) const {
    for (std::size_t z = 1; z <= n_; ++z)
      if (d_binds(z, x) && d_binds(z, y)) return false;
    bool premise = false;
    for (std::size_t u = 1; u <= n_; ++u)
      if (d_binds(u, y) && plus_[u][x]) premise = true;
    return !premise || x < y;
  }

 private:
  const anaphora::DependencyTree& tree_;
  const anaphora::CategoryHierarchy& cats_;
  std::size_t n_;
  std::vector<std::vector<bool>> head_;
  std::vector<std::vector<bool>> plus_;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace testing

#include "anaphora/engine.hpp"

namespace testing {

// Engine positioned inside `sentence` of the shipped fixture after all of its
// tokens, with every earlier sentence committed.
inline anaphora::Engine engine_inside(int sentence, anaphora::EngineConfig config = {}) {
  anaphora::Engine engine(fixture_kb(), config);
  for (const auto& s : anaphora::sentences(fixture_document())) {
    if (s.id < sentence) {
      engine.process_sentence(s.id, s.tokens);
    } else if (s.id == sentence) {
      engine.begin_sentence(s.id);
      for (const auto& t : s.tokens) engine.process_token(t);
    }
  }
  return engine;
}

}  // namespace testing
