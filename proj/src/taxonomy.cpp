#include "anaphora/taxonomy.hpp"

#include <charconv>
#include <fstream>

#include "anaphora/errors.hpp"
#include "anaphora/text_util.hpp"

namespace anaphora {

namespace {

unsigned parse_count(std::string_view s, const std::string& source, std::size_t line_no) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw LoadError("bad cardinality '" + std::string(s) + "'", source, line_no);
  return v;
}

// "NAME.RELATION : FILLER [min..max]"
std::pair<std::string, RoleConstraint> parse_role(std::string_view rest, const std::string& source,
                                                  std::size_t line_no) {
  auto colon = rest.find(':');
  if (colon == std::string_view::npos) throw LoadError("role without ':'", source, line_no);
  auto lhs = text::trim(rest.substr(0, colon));
  auto rhs = text::trim(rest.substr(colon + 1));
  auto dot = lhs.rfind('.');
  if (dot == std::string_view::npos) throw LoadError("role must be CONCEPT.RELATION", source, line_no);
  auto relation = parse_relation(lhs.substr(dot + 1));
  if (!relation) throw LoadError("unknown relation '" + std::string(lhs.substr(dot + 1)) + "'", source, line_no);

  RoleConstraint role{*relation, {}, 0, std::nullopt};
  auto bracket = rhs.find('[');
  role.filler_type = std::string(text::trim(rhs.substr(0, bracket)));
  if (role.filler_type.empty()) throw LoadError("role without filler type", source, line_no);
  if (bracket != std::string_view::npos) {
    auto close = rhs.find(']', bracket);
    if (close == std::string_view::npos) throw LoadError("unterminated cardinality", source, line_no);
    auto range = rhs.substr(bracket + 1, close - bracket - 1);
    auto dots = range.find("..");
    if (dots == std::string_view::npos) throw LoadError("cardinality must be [min..max]", source, line_no);
    role.min_count = parse_count(text::trim(range.substr(0, dots)), source, line_no);
    auto max = text::trim(range.substr(dots + 2));
    if (max != "*") role.max_count = parse_count(max, source, line_no);
    if (role.max_count && role.min_count > *role.max_count)
      throw LoadError("role min exceeds max", source, line_no);
  }
  return {std::string(lhs.substr(0, dot)), role};
}

}  // namespace

Taxonomy Taxonomy::parse(std::istream& in, const std::string& source) {
  Taxonomy t;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (text::starts_with_word(line, "concept")) {
      auto words = text::split_names(line.substr(7));
      if (words.empty()) throw LoadError("missing concept name", source, line_no);
      std::vector<std::string> parents;
      if (words.size() > 1) {
        if (words[1] != "isa" || words.size() < 3) throw LoadError("expected 'isa PARENT...'", source, line_no);
        parents.assign(words.begin() + 2, words.end());
      }
      t.add_concept(words[0], parents);
    } else if (text::starts_with_word(line, "role")) {
      auto [owner, role] = parse_role(line.substr(4), source, line_no);
      t.add_role(owner, role);
    } else if (text::starts_with_word(line, "instance")) {
      auto rest = line.substr(8);
      auto colon = rest.find(':');
      if (colon == std::string_view::npos) throw LoadError("instance without ':'", source, line_no);
      std::string id(text::trim(rest.substr(0, colon)));
      std::string type(text::trim(rest.substr(colon + 1)));
      if (id.empty() || type.empty()) throw LoadError("malformed instance", source, line_no);
      if (t.instances_.count(id)) throw LoadError("duplicate instance '" + id + "'", source, line_no);
      t.add_instance(id, type);
    } else {
      throw LoadError("expected concept, role or instance declaration", source, line_no);
    }
  }
  try {
    t.finalize();
  } catch (const LoadError& e) {
    throw LoadError(e.what(), source);
  }
  return t;
}

Taxonomy Taxonomy::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open taxonomy file", path.string());
  return parse(in, path.string());
}

void Taxonomy::add_concept(std::string name, std::vector<std::string> parents) {
  auto& c = concepts_[name];
  c.name = name;
  for (const auto& p : parents) c.parents.push_back(p);
  graph_.declare(std::move(name), std::move(parents));
  finalized_ = false;
}

void Taxonomy::add_role(const std::string& owner, RoleConstraint role) {
  if (role.max_count && role.min_count > *role.max_count) throw LoadError("role min exceeds max");
  auto it = concepts_.find(owner);
  if (it == concepts_.end()) {
    // roles may precede their concept declaration; finalize() checks existence
    concepts_[owner].name = owner;
    it = concepts_.find(owner);
  }
  it->second.roles.push_back(std::move(role));
  finalized_ = false;
}

void Taxonomy::add_instance(std::string id, std::string type) {
  instances_[std::move(id)] = std::move(type);
}

void Taxonomy::finalize() {
  for (const auto& [name, c] : concepts_)
    if (!graph_.contains(name)) throw LoadError("role declared for unknown concept '" + name + "'");
  graph_.finalize("concept");
  for (const auto& [name, c] : concepts_)
    for (const auto& r : c.roles)
      if (!graph_.contains(r.filler_type))
        throw LoadError("role " + name + "." + std::string(to_string(r.relation)) + " names unknown filler '" +
                        r.filler_type + "'");
  for (const auto& [id, type] : instances_)
    if (!graph_.contains(type))
      throw LoadError("instance '" + id + "' has unknown concept '" + type + "'");
  finalized_ = true;
}

const Concept& Taxonomy::concept_of(std::string_view name) const {
  auto it = concepts_.find(name);
  if (it == concepts_.end()) throw LookupError("unknown concept '" + std::string(name) + "'");
  return it->second;
}

bool Taxonomy::permit(std::string_view head, Relation relation, std::string_view modifier,
                      const FillerCounts& current_fillers) const {
  if (!finalized_) throw PreconditionError("taxonomy used before finalize()");
  if (!has_concept(modifier)) throw LookupError("unknown concept '" + std::string(modifier) + "'");
  unsigned filled = 0;
  if (auto it = current_fillers.find(relation); it != current_fillers.end()) filled = it->second;
  for (const auto& ancestor : graph_.ancestors(head)) {
    for (const auto& role : concept_of(ancestor).roles) {
      if (role.relation != relation) continue;
      if (role.max_count && filled >= *role.max_count) continue;
      if (isa_star(modifier, role.filler_type)) return true;
    }
  }
  return false;
}

std::optional<std::string> Taxonomy::instance_concept(std::string_view id) const {
  auto it = instances_.find(id);
  if (it == instances_.end()) return std::nullopt;
  return it->second;
}

}  // namespace anaphora
