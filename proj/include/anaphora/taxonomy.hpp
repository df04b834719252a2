#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anaphora/isa_graph.hpp"
#include "anaphora/relation.hpp"

namespace anaphora {

struct RoleConstraint {
  Relation relation;
  std::string filler_type;
  unsigned min_count = 0;
  std::optional<unsigned> max_count;  // nullopt = unbounded

  friend bool operator==(const RoleConstraint&, const RoleConstraint&) = default;
};

struct Concept {
  std::string name;
  std::vector<std::string> parents;
  std::vector<RoleConstraint> roles;
};

// A referent in the discourse. instance_id is unique per discourse.
struct DiscourseEntity {
  std::string instance_id;
  std::string concept_type;
  std::string last_expression;

  friend bool operator==(const DiscourseEntity&, const DiscourseEntity&) = default;
};

using FillerCounts = std::map<Relation, unsigned>;

// Concept taxonomy (isa_F), role restrictions and named instances.
class Taxonomy {
 public:
  // Line format:
  //   concept NAME [isa PARENT[, PARENT...]]
  //   role NAME.RELATION : FILLER [min..max]     (max may be '*')
  //   instance ID : CONCEPT
  static Taxonomy parse(std::istream& in, const std::string& source = "<taxonomy>");
  static Taxonomy load(const std::filesystem::path& path);

  void add_concept(std::string name, std::vector<std::string> parents = {});
  void add_role(const std::string& concept_name, RoleConstraint role);
  void add_instance(std::string id, std::string concept_name);
  // Validates references and builds the closure. Throws LoadError.
  void finalize();

  bool has_concept(std::string_view name) const { return graph_.contains(name); }
  const Concept& concept_of(std::string_view name) const;
  const std::vector<std::string>& concept_names() const { return graph_.names(); }

  // isa_F*. Throws LookupError on unknown concepts.
  bool isa_star(std::string_view sub, std::string_view super) const { return graph_.reaches(sub, super); }

  // Admissibility of `modifier` as filler of `relation` at `head`: some role
  // declared at head or an ancestor accepts the modifier type and is not yet
  // saturated by current_fillers. Unknown concepts throw LookupError.
  bool permit(std::string_view head, Relation relation, std::string_view modifier,
              const FillerCounts& current_fillers = {}) const;

  std::optional<std::string> instance_concept(std::string_view id) const;
  const std::map<std::string, std::string, std::less<>>& instances() const { return instances_; }

 private:
  IsaGraph graph_;
  std::map<std::string, Concept, std::less<>> concepts_;
  std::map<std::string, std::string, std::less<>> instances_;
  bool finalized_ = false;
};

}  // namespace anaphora
