#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anaphora/dependency_tree.hpp"

namespace anaphora {

// One syntactic interpretation of the tokens read so far.
struct PhraseReading {
  std::string id;
  DependencyTree tree;
  bool alive = true;
  std::optional<std::string> death_cause;
};

// Local ambiguity: readings covering the same tokens.
struct Container {
  Position first = 1;
  Position last = 0;
  std::vector<PhraseReading> readings;

  std::size_t live_count() const;
  // Every reading covers exactly [first, last].
  bool spans_agree() const;
};

struct AttachResult {
  // One successor per consistent relation, in the order requested.
  std::vector<PhraseReading> readings;
  std::vector<Relation> relations;
  // Why each rejected relation failed; used as the death cause when
  // `readings` is empty.
  std::string failure;
};

// Features the modifier (and, for spec, the head) must carry under `relation`.
// Returns bottom structures when the relation is inconsistent with them.
struct AttachmentFeatures {
  FeatureStructure head;
  FeatureStructure modifier;
  bool consistent() const { return !head.is_bottom() && !modifier.is_bottom(); }
};
AttachmentFeatures constrain(Relation relation, const WordNode& head, const WordNode& modifier);

// Tries to make `modifier` a dependent of `head` under each of `relations`
// (all of the head's valence relations when empty). Successors are full
// copies carrying the caller's reading id. A relation succeeds when it is in
// the head's valence, its slot is free (unless repeatable), the case or
// agreement constraint unifies, and the taxonomy permits the concept pair.
AttachResult attach(const PhraseReading& reading, const KnowledgeBase& kb, Position head, Position modifier,
                    std::span<const Relation> relations = {});

}  // namespace anaphora
