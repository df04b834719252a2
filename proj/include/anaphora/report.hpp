#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "anaphora/document.hpp"
#include "anaphora/engine.hpp"

namespace anaphora {

struct RunOptions {
  EngineConfig engine;
  // Process only the first N sentences.
  std::optional<std::size_t> sentences;
};

// The four artifacts of one run, as text and as structured data.
struct RunResult {
  std::string centering;   // TSV: utterance, reading, cb, cf, transition
  std::string resolution;  // bindings per committed reading
  std::string trace;
  std::string ambiguity;   // pronoun ambiguity table plus one line per pronoun
  nlohmann::json json;
  // Empty on success; otherwise the engine error with sentence and token.
  std::string error;

  bool ok() const { return error.empty(); }
};

// Drives the engine over the document. Engine errors are caught and reported
// in `error`; artifacts then cover the sentences committed before it.
RunResult run(const Document& doc, const KnowledgeBase& kb, const RunOptions& options = {});

std::string centering_table(const std::vector<UtteranceRecord>& history);

// centering.tsv, resolution.txt, trace.txt, ambiguity.txt (or .json files).
void write_artifacts(const RunResult& result, const std::filesystem::path& dir, bool as_json);

}  // namespace anaphora
