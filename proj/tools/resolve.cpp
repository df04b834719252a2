// Command-line driver: resolves the anaphors of one pre-analyzed document.
#include <iostream>

#include <CLI11.hpp>

#include "anaphora/document.hpp"
#include "anaphora/errors.hpp"
#include "anaphora/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Incremental centering-based anaphora resolution"};
  std::string doc_path;
  std::optional<std::string> taxonomy, categories, out_dir;
  std::string trace = "summary";
  bool as_json = false;
  std::optional<std::size_t> sentences;
  std::size_t max_readings = 32;

  app.add_option("doc", doc_path, "Annotated document")->required();
  app.add_option("--taxonomy", taxonomy, "Taxonomy file (overrides the document's #taxonomy)");
  app.add_option("--categories", categories, "Category file (overrides the document's #categories)");
  app.add_option("--trace", trace, "Trace detail")->check(CLI::IsMember({"off", "summary", "full"}));
  app.add_flag("--json", as_json, "Emit JSON instead of text");
  app.add_option("--out", out_dir, "Write the artifacts into this directory");
  app.add_option("--sentences", sentences, "Process only the first N sentences");
  app.add_option("--max-readings", max_readings, "Limit on live readings")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  using namespace anaphora;
  Document doc;
  KnowledgeBase kb;
  try {
    doc = load_document(doc_path);
    std::optional<std::filesystem::path> tax, cats;
    if (taxonomy) tax = *taxonomy;
    if (categories) cats = *categories;
    kb = load_knowledge(doc, tax, cats);
    validate(doc, kb);
  } catch (const std::exception& e) {
    std::cerr << "resolve: " << e.what() << '\n';
    return 1;
  }

  RunOptions options;
  options.engine.max_readings = max_readings;
  options.engine.trace = *parse_trace_level(trace);
  options.sentences = sentences;
  RunResult result = run(doc, kb, options);

  try {
    if (out_dir) {
      write_artifacts(result, *out_dir, as_json);
    } else if (as_json) {
      std::cout << result.json.dump(2) << '\n';
    } else {
      std::cout << "== centering ==\n"
                << result.centering << "\n== resolution ==\n"
                << result.resolution << "\n== ambiguity ==\n"
                << result.ambiguity;
      if (trace != "off") std::cout << "\n== trace ==\n" << result.trace;
    }
  } catch (const std::exception& e) {
    std::cerr << "resolve: " << e.what() << '\n';
    return 2;
  }
  if (!result.ok()) {
    std::cerr << "resolve: " << result.error << '\n';
    return 2;
  }
  return 0;
}
