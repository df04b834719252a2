#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anaphora/feature_structure.hpp"
#include "anaphora/lexeme.hpp"

namespace anaphora {

// Where a token attaches: its head is at (own position + offset) within the
// sentence, under `relation` (any valence relation when unset). Offset 0
// allows the token to remain a root.
struct AttachHint {
  int offset = 0;
  std::optional<Relation> relation;

  friend bool operator==(const AttachHint&, const AttachHint&) = default;
};

// A pre-analyzed input token.
struct AnnotatedToken {
  std::string surface;
  std::string lemma;
  std::string category;
  // Alternative morphological readings; each spawns its own phrase reading.
  std::vector<FeatureStructure> morph_readings;
  std::optional<std::string> concept_type;
  // Named instance the token denotes, if any.
  std::optional<std::string> instance;
  std::vector<ValenceSlot> valence;
  int sentence_id = 1;
  // Unset: attachment is searched greedily.
  std::optional<std::vector<AttachHint>> hints;

  friend bool operator==(const AnnotatedToken&, const AnnotatedToken&) = default;
};

}  // namespace anaphora
