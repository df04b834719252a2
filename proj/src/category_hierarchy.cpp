#include "anaphora/category_hierarchy.hpp"

#include <array>
#include <fstream>

#include "anaphora/errors.hpp"
#include "anaphora/text_util.hpp"

namespace anaphora {

namespace {

constexpr std::array<std::string_view, 6> kReserved = {
    category::kNominal,    category::kNoun,            category::kDetPossessive,
    category::kFiniteVerb, category::kPersonalPronoun, category::kDefiniteDeterminer};

// "NAME [isa P1, P2]" -> (NAME, parents)
std::pair<std::string, std::vector<std::string>> parse_isa(std::string_view rest, const std::string& source,
                                                           std::size_t line_no) {
  auto words = text::split_names(rest);
  if (words.empty()) throw LoadError("missing name", source, line_no);
  std::vector<std::string> parents;
  if (words.size() > 1) {
    if (words[1] != "isa" || words.size() < 3) throw LoadError("expected 'isa PARENT...'", source, line_no);
    parents.assign(words.begin() + 2, words.end());
  }
  return {words[0], parents};
}

}  // namespace

CategoryHierarchy CategoryHierarchy::parse(std::istream& in, const std::string& source) {
  CategoryHierarchy h;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!text::starts_with_word(line, "category"))
      throw LoadError("expected 'category' declaration", source, line_no);
    auto [name, parents] = parse_isa(line.substr(8), source, line_no);
    h.graph_.declare(std::move(name), std::move(parents));
  }
  try {
    h.finalize();
  } catch (const LoadError& e) {
    throw LoadError(e.what(), source);
  }
  return h;
}

CategoryHierarchy CategoryHierarchy::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open category file", path.string());
  return parse(in, path.string());
}

CategoryHierarchy CategoryHierarchy::from(const std::vector<LexicalCategory>& categories) {
  CategoryHierarchy h;
  for (const auto& c : categories) h.graph_.declare(c.name, c.parents);
  h.finalize();
  return h;
}

void CategoryHierarchy::finalize() {
  graph_.finalize("category");
  for (auto name : kReserved)
    if (!graph_.contains(name)) throw LoadError("reserved category '" + std::string(name) + "' is missing");
}

}  // namespace anaphora
