#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "anaphora/isa_graph.hpp"

namespace anaphora {

// Category names the grammar predicates refer to directly.
namespace category {
inline constexpr std::string_view kNominal = "Nominal";
inline constexpr std::string_view kNoun = "Noun";
inline constexpr std::string_view kDetPossessive = "DetPossessive";
inline constexpr std::string_view kFiniteVerb = "FiniteVerb";
inline constexpr std::string_view kPersonalPronoun = "PersonalPronoun";
inline constexpr std::string_view kDefiniteDeterminer = "DefiniteDeterminer";
}  // namespace category

struct LexicalCategory {
  std::string name;
  std::vector<std::string> parents;
};

// Lexical classes ordered by isa_C.
class CategoryHierarchy {
 public:
  // Line format: `category NAME [isa PARENT[, PARENT...]]`, `#` comments.
  static CategoryHierarchy parse(std::istream& in, const std::string& source = "<categories>");
  static CategoryHierarchy load(const std::filesystem::path& path);
  static CategoryHierarchy from(const std::vector<LexicalCategory>& categories);

  bool contains(std::string_view name) const { return graph_.contains(name); }
  // isa_C*: reflexive-transitive. Throws LookupError on unknown names.
  bool isa_star(std::string_view sub, std::string_view super) const { return graph_.reaches(sub, super); }

  const std::vector<std::string>& names() const { return graph_.names(); }
  const std::vector<std::string>& parents_of(std::string_view name) const { return graph_.parents_of(name); }

 private:
  void finalize();

  IsaGraph graph_;
};

}  // namespace anaphora
