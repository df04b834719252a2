#include "anaphora/document.hpp"

#include <fstream>
#include <sstream>

#include "anaphora/errors.hpp"
#include "anaphora/text_util.hpp"

namespace anaphora {

namespace {

constexpr std::size_t kFields = 8;

std::optional<std::string> optional_field(std::string_view f) {
  if (f == "_") return std::nullopt;
  return std::string(f);
}

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == ' ' || c == '\t' || c == '#' || c == ',' || c == '|' || c == ';') return false;
  return true;
}

std::vector<ValenceSlot> parse_valence(std::string_view f, const std::string& source, std::size_t line) {
  std::vector<ValenceSlot> out;
  if (f == "_") return out;
  for (const auto& part : text::split_names(f)) {
    std::string_view name = part;
    bool obligatory = !name.empty() && name.back() == '!';
    if (obligatory) name.remove_suffix(1);
    auto rel = parse_relation(name);
    if (!rel) throw LoadError("unknown relation '" + std::string(name) + "' in valence", source, line);
    out.push_back(ValenceSlot{*rel, obligatory});
  }
  return out;
}

std::optional<std::vector<AttachHint>> parse_hints(std::string_view f, const std::string& source, std::size_t line) {
  if (f == "_") return std::nullopt;
  std::vector<AttachHint> out;
  for (const auto& part : text::split_names(f)) {
    if (part == "root") {
      out.push_back(AttachHint{0, std::nullopt});
      continue;
    }
    std::string_view offset = part;
    std::optional<Relation> relation;
    if (auto colon = part.find(':'); colon != std::string::npos) {
      offset = std::string_view(part).substr(0, colon);
      relation = parse_relation(std::string_view(part).substr(colon + 1));
      if (!relation) throw LoadError("unknown relation in hint '" + part + "'", source, line);
    }
    int value = 0;
    std::size_t used = 0;
    try {
      value = std::stoi(std::string(offset), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != offset.size() || value == 0)
      throw LoadError("malformed hint '" + part + "'", source, line);
    out.push_back(AttachHint{value, relation});
  }
  if (out.empty()) throw LoadError("empty hint list", source, line);
  return out;
}

std::vector<FeatureStructure> parse_morphs(std::string_view f, const std::string& source, std::size_t line) {
  std::vector<FeatureStructure> out;
  for (auto alt : text::split(f, '|')) {
    try {
      out.push_back(FeatureStructure::parse(text::trim(alt)));
    } catch (const std::invalid_argument& e) {
      throw LoadError(e.what(), source, line);
    }
  }
  return out;
}

std::string hints_text(const std::optional<std::vector<AttachHint>>& hints) {
  if (!hints) return "_";
  std::string out;
  for (const auto& h : *hints) {
    if (!out.empty()) out += ',';
    if (h.offset == 0) {
      out += "root";
      continue;
    }
    out += (h.offset > 0 ? "+" : "") + std::to_string(h.offset);
    if (h.relation) out += ":" + std::string(to_string(*h.relation));
  }
  return out;
}

}  // namespace

Document parse_document(std::istream& in, const std::string& source) {
  Document doc;
  doc.source = source;
  std::string raw;
  std::size_t line_no = 0;
  int sentence = 1;
  bool seen_marker = false;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view line = raw;
    if (text::trim(line).empty()) continue;
    if (line.front() == '#') {
      std::string_view body = text::trim(line.substr(1));
      auto value = [&](std::string_view key) {
        std::string_view rest = text::trim(body.substr(key.size()));
        if (rest.empty()) throw LoadError("#" + std::string(key) + " without a value", source, line_no);
        return std::string(rest);
      };
      if (text::starts_with_word(body, "doc")) {
        doc.doc_id = value("doc");
      } else if (text::starts_with_word(body, "taxonomy")) {
        doc.taxonomy_ref = value("taxonomy");
      } else if (text::starts_with_word(body, "categories")) {
        doc.category_ref = value("categories");
      } else if (text::starts_with_word(body, "sent")) {
        std::string v = value("sent");
        int n = 0;
        std::size_t used = 0;
        try {
          n = std::stoi(v, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || used != v.size()) throw LoadError("malformed sentence number '" + v + "'", source, line_no);
        if (seen_marker && n < sentence)
          throw LoadError("sentence numbers must not decrease", source, line_no);
        sentence = n;
        seen_marker = true;
      }
      continue;
    }
    auto fields = text::split(line, '\t');
    if (fields.size() != kFields)
      throw LoadError("expected " + std::to_string(kFields) + " tab-separated fields, found " +
                          std::to_string(fields.size()),
                      source, line_no);
    AnnotatedToken t;
    t.surface = std::string(text::trim(fields[0]));
    t.lemma = std::string(text::trim(fields[1]));
    t.category = std::string(text::trim(fields[2]));
    if (t.surface.empty() || t.lemma.empty()) throw LoadError("empty surface or lemma", source, line_no);
    if (!valid_identifier(t.category)) throw LoadError("malformed category '" + t.category + "'", source, line_no);
    t.morph_readings = parse_morphs(text::trim(fields[3]), source, line_no);
    t.concept_type = optional_field(text::trim(fields[4]));
    t.instance = optional_field(text::trim(fields[5]));
    if (t.concept_type && !valid_identifier(*t.concept_type))
      throw LoadError("malformed concept '" + *t.concept_type + "'", source, line_no);
    if (t.instance && !valid_identifier(*t.instance))
      throw LoadError("malformed instance '" + *t.instance + "'", source, line_no);
    t.valence = parse_valence(text::trim(fields[6]), source, line_no);
    t.hints = parse_hints(text::trim(fields[7]), source, line_no);
    t.sentence_id = sentence;
    doc.tokens.push_back(std::move(t));
    doc.token_lines.push_back(line_no);
  }
  return doc;
}

std::string serialize_document(const Document& doc) {
  std::ostringstream out;
  if (!doc.doc_id.empty()) out << "#doc " << doc.doc_id << '\n';
  if (!doc.taxonomy_ref.empty()) out << "#taxonomy " << doc.taxonomy_ref << '\n';
  if (!doc.category_ref.empty()) out << "#categories " << doc.category_ref << '\n';
  std::optional<int> sentence;
  for (const auto& t : doc.tokens) {
    if (sentence != t.sentence_id) {
      sentence = t.sentence_id;
      out << "#sent " << *sentence << '\n';
    }
    std::string features;
    for (const auto& fs : t.morph_readings) {
      if (!features.empty()) features += '|';
      features += fs.to_string();
    }
    std::string valence;
    for (const auto& slot : t.valence) {
      if (!valence.empty()) valence += ',';
      valence += std::string(to_string(slot.relation)) + (slot.obligatory ? "!" : "");
    }
    out << t.surface << '\t' << t.lemma << '\t' << t.category << '\t' << features << '\t'
        << t.concept_type.value_or("_") << '\t' << t.instance.value_or("_") << '\t'
        << (valence.empty() ? "_" : valence) << '\t' << hints_text(t.hints) << '\n';
  }
  return out.str();
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open document", path.string(), 0);
  Document doc = parse_document(in, path.string());
  auto resolve = [&](std::string& ref) {
    if (!ref.empty() && std::filesystem::path(ref).is_relative()) ref = (path.parent_path() / ref).lexically_normal().string();
  };
  resolve(doc.taxonomy_ref);
  resolve(doc.category_ref);
  return doc;
}

KnowledgeBase load_knowledge(const Document& doc, const std::optional<std::filesystem::path>& taxonomy,
                             const std::optional<std::filesystem::path>& categories) {
  auto pick = [&](const std::optional<std::filesystem::path>& given, const std::string& ref, const char* what) {
    if (given) return *given;
    if (ref.empty()) throw LoadError(std::string("no ") + what + " file given", doc.source, 0);
    return std::filesystem::path(ref);
  };
  return KnowledgeBase{CategoryHierarchy::load(pick(categories, doc.category_ref, "categories")),
                       Taxonomy::load(pick(taxonomy, doc.taxonomy_ref, "taxonomy"))};
}

void validate(const Document& doc, const KnowledgeBase& kb) {
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    const auto& t = doc.tokens[i];
    std::size_t line = i < doc.token_lines.size() ? doc.token_lines[i] : 0;
    if (!kb.categories.contains(t.category))
      throw LoadError("unknown category '" + t.category + "'", doc.source, line);
    if (t.concept_type && !kb.taxonomy.has_concept(*t.concept_type))
      throw LoadError("unknown concept '" + *t.concept_type + "'", doc.source, line);
    if (t.instance && !kb.taxonomy.instance_concept(*t.instance))
      throw LoadError("unknown instance '" + *t.instance + "'", doc.source, line);
  }
}

std::vector<Sentence> sentences(const Document& doc) {
  std::vector<Sentence> out;
  for (const auto& t : doc.tokens) {
    if (out.empty() || out.back().id != t.sentence_id) out.push_back(Sentence{t.sentence_id, {}});
    out.back().tokens.push_back(t);
  }
  return out;
}

}  // namespace anaphora
