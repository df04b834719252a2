#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anaphora/lexeme.hpp"
#include "anaphora/token.hpp"

namespace anaphora {

// A pre-analyzed discourse. Line format (tab separated, one token per line):
//
//   surface  lemma  category  features  concept  instance  valence  hints
//
// features: alternatives separated by '|', each like `gen=fem;num=sg;case=nom,acc`
// valence:  `subject!,adjunct` ('!' marks an obligatory slot)
// hints:    `-2:subject,+3`, `root` for a token that may stay unattached
// `_` marks an empty field. Directives: `#doc ID`, `#taxonomy FILE`,
// `#categories FILE`, `#sent N`; any other line starting with '#' is a comment.
struct Document {
  std::string doc_id;
  std::vector<AnnotatedToken> tokens;
  std::string taxonomy_ref;
  std::string category_ref;
  // Where each token came from, for diagnostics.
  std::string source;
  std::vector<std::size_t> token_lines;

  friend bool operator==(const Document& a, const Document& b) {
    return a.doc_id == b.doc_id && a.tokens == b.tokens && a.taxonomy_ref == b.taxonomy_ref &&
           a.category_ref == b.category_ref;
  }
};

struct Sentence {
  int id = 0;
  std::vector<AnnotatedToken> tokens;
};

// Syntax only. Throws LoadError with the offending line.
Document parse_document(std::istream& in, const std::string& source = "<document>");
std::string serialize_document(const Document& doc);

// Loads and parses; relative references are resolved against the document's
// directory.
Document load_document(const std::filesystem::path& path);

// Categories and taxonomy named by the document unless overridden.
KnowledgeBase load_knowledge(const Document& doc, const std::optional<std::filesystem::path>& taxonomy = {},
                             const std::optional<std::filesystem::path>& categories = {});

// Checks every category, concept and instance against the knowledge base.
void validate(const Document& doc, const KnowledgeBase& kb);

std::vector<Sentence> sentences(const Document& doc);

}  // namespace anaphora
