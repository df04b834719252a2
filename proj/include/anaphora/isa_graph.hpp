#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace anaphora {

// Named nodes with parent links and a precomputed reflexive-transitive
// closure. Shared by the lexical category hierarchy and the concept taxonomy.
class IsaGraph {
 public:
  // Declaring a name twice merges parent lists.
  void declare(std::string name, std::vector<std::string> parents);

  // Resolves parent names and builds the closure. Throws LoadError on unknown
  // parents or cycles; `kind` names the node type in messages.
  void finalize(std::string_view kind);

  bool contains(std::string_view name) const;
  // Throws LookupError on unknown names.
  bool reaches(std::string_view sub, std::string_view super) const;

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::string>& parents_of(std::string_view name) const;
  // Ancestors including name itself, nearest first (breadth-first).
  std::vector<std::string> ancestors(std::string_view name) const;

 private:
  std::size_t index_of(std::string_view name) const;

  std::vector<std::string> names_;
  std::vector<std::vector<std::string>> parents_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<bool>> closure_;
};

}  // namespace anaphora
