#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "anaphora/document.hpp"
#include "anaphora/errors.hpp"
#include "anaphora/report.hpp"
#include "support.hpp"

using namespace anaphora;
namespace fs = std::filesystem;

namespace {

Document parse(const std::string& text) {
  std::istringstream in(text);
  return parse_document(in, "inline");
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const LoadError& e) {
    return e.line();
  }
  return 0;
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("anaphora-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int resolve(const std::string& args) {
  std::string cmd = std::string("\"") + ANAPHORA_RESOLVE_BIN + "\" " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("the shipped fixture loads and validates") {
  auto doc = testing::fixture_document();
  CHECK(doc.doc_id == "lps105");
  auto ss = sentences(doc);
  REQUIRE(ss.size() == 3);
  CHECK(ss[0].tokens.size() == 9);
  CHECK(ss[1].tokens.size() == 18);
  CHECK(ss[2].tokens.size() == 9);
  CHECK_NOTHROW(validate(doc, testing::fixture_kb()));
  CHECK(doc.token_lines.size() == doc.tokens.size());
}

TEST_CASE("token fields parse") {
  auto doc = parse(
      "#doc t\n#sent 1\n"
      "sie\tsie\tPersonalPronoun\tgen=fem;num=sg|num=pl\t_\t_\t_\t+1:subject,root\n"
      "schläft\tschlafen\tFiniteVerb\t_\tSLEEP\t_\tsubject!,adjunct\troot\n"
      "dort\tdort\tAdverb\t_\t_\t_\t_\t_\n");
  REQUIRE(doc.tokens.size() == 3);
  const auto& sie = doc.tokens[0];
  CHECK(sie.morph_readings.size() == 2);
  REQUIRE(sie.hints.has_value());
  REQUIRE(sie.hints->size() == 2);
  CHECK((*sie.hints)[0].offset == 1);
  CHECK((*sie.hints)[0].relation == Relation::Subject);
  CHECK((*sie.hints)[1].offset == 0);
  CHECK_FALSE((*sie.hints)[1].relation.has_value());
  const auto& verb = doc.tokens[1];
  CHECK(verb.concept_type == "SLEEP");
  REQUIRE(verb.valence.size() == 2);
  CHECK(verb.valence[0].obligatory);
  CHECK_FALSE(verb.valence[1].obligatory);
  CHECK(verb.morph_readings.size() == 1);
  CHECK_FALSE(doc.tokens[2].hints.has_value());
}

TEST_CASE("an empty document is valid") {
  auto doc = parse("");
  CHECK(doc.tokens.empty());
  CHECK(sentences(doc).empty());
  auto result = run(doc, testing::fixture_kb());
  CHECK(result.ok());
  CHECK(result.centering == "utterance\treading\tcb\tcf\ttransition\n");
  CHECK(result.json["ambiguity"]["total"] == 0);
}

TEST_CASE("malformed input names the offending line") {
  CHECK(error_line("#sent 1\nonly\tthree\tfields\n") == 2);
  CHECK(error_line("#sent 1\na\ta\tNoun\tgen=blue\t_\t_\t_\t_\n") == 2);
  CHECK(error_line("#sent 1\na\ta\tNoun\t_\t_\t_\tsubjekt\t_\n") == 2);
  CHECK(error_line("#sent 1\na\ta\tNoun\t_\t_\t_\t_\t+x:subject\n") == 2);
  CHECK(error_line("#sent 2\na\ta\tNoun\t_\t_\t_\t_\t_\n#sent 1\n") == 3);
  CHECK(error_line("# comment\n\n#sent 1\na\ta\tNoun\t_\t_\t_\t_\t_\t9\n") == 4);
}

TEST_CASE("unknown names are rejected against the knowledge base") {
  auto check = [](const std::string& line) {
    auto doc = parse("#sent 1\n" + line + "\n");
    try {
      validate(doc, testing::fixture_kb());
    } catch (const LoadError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(check("a\ta\tNoun\t_\tNO-SUCH-CONCEPT\t_\t_\t_") == 2);
  CHECK(check("a\ta\tNoSuchCategory\t_\t_\t_\t_\t_") == 2);
  CHECK(check("a\ta\tNoun\t_\t_\tNOBODY\t_\t_") == 2);
  CHECK(check("a\ta\tNoun\t_\tRANK\t_\t_\t_") == 0);
}

TEST_CASE("serialization round-trips") {
  auto doc = testing::fixture_document();
  auto text = serialize_document(doc);
  auto again = parse(text);
  CHECK(again == doc);
  CHECK(serialize_document(again) == text);
  for (const auto& entry : fs::directory_iterator(testing::test_dir() / "data" / "synthetic")) {
    if (entry.path().extension() != ".doc") continue;
    auto d = load_document(entry.path());
    CHECK(parse(serialize_document(d)) == d);
  }
}

TEST_CASE("missing files are load errors") {
  CHECK_THROWS_AS(load_document(testing::data_dir() / "absent.doc"), LoadError);
  auto doc = parse("#taxonomy nowhere.tax\n#categories nowhere.cat\n");
  CHECK_THROWS_AS(load_knowledge(doc), LoadError);
}

TEST_CASE("a sentence prefix gives the prefix of the centering table") {
  auto doc = testing::fixture_document();
  RunOptions one;
  one.sentences = 1;
  auto first = run(doc, testing::fixture_kb(), one);
  auto all = run(doc, testing::fixture_kb());
  REQUIRE(first.ok());
  REQUIRE(all.ok());
  CHECK(all.centering.rfind(first.centering, 0) == 0);
  CHECK(first.json["centering"].size() == 1);
  CHECK(all.json["centering"].size() == 5);
}

TEST_CASE("run output is deterministic") {
  auto doc = testing::fixture_document();
  auto a = run(doc, testing::fixture_kb());
  auto b = run(doc, testing::fixture_kb());
  CHECK(a.centering == b.centering);
  CHECK(a.resolution == b.resolution);
  CHECK(a.trace == b.trace);
  CHECK(a.ambiguity == b.ambiguity);
  CHECK(a.json.dump() == b.json.dump());
}

TEST_CASE("json artifacts carry the bindings") {
  auto result = run(testing::fixture_document(), testing::fixture_kb());
  const auto& j = result.json;
  CHECK(j["document"] == "lps105");
  CHECK(j["ambiguity"]["local"] == 1);
  CHECK(j["ambiguity"]["global"] == 1);
  const auto& last = j["resolution"].back();
  CHECK(last["utterance"] == 3);
  bool found = false;
  for (const auto& b : last["bindings"])
    if (b["position"] == 5) {
      CHECK(b["antecedent"] == "ST-3144");
      CHECK(b["route"] == "intersentential");
      found = true;
    }
  CHECK(found);
  CHECK(j["centering"][4]["transition"] == "SMOOTH-SHIFT");
}

TEST_CASE("engine errors are reported with their sentence") {
  auto doc = testing::fixture_document();
  RunOptions options;
  options.engine.max_readings = 1;
  auto result = run(doc, testing::fixture_kb(), options);
  CHECK_FALSE(result.ok());
  CHECK(result.error.find("sentence 2") == 0);
  CHECK(result.json.contains("error"));
  // The first sentence was committed before the failure.
  CHECK(result.json["centering"].size() == 1);
}

TEST_CASE("artifacts are written as text or json") {
  auto result = run(testing::fixture_document(), testing::fixture_kb());
  auto dir = scratch("artifacts");
  write_artifacts(result, dir, false);
  for (auto name : {"centering.tsv", "resolution.txt", "trace.txt", "ambiguity.txt"})
    CHECK(fs::exists(dir / name));
  CHECK(testing::read_file(dir / "centering.tsv") == result.centering);
  write_artifacts(result, dir, true);
  for (auto name : {"centering.json", "resolution.json", "trace.json", "ambiguity.json"})
    CHECK(fs::exists(dir / name));
  fs::remove_all(dir);
}

TEST_CASE("command-line exit codes") {
  const auto doc = (testing::data_dir() / "lps105.doc").string();
  auto dir = scratch("cli");
  CHECK(resolve("\"" + doc + "\"") == 0);
  CHECK(resolve("\"" + doc + "\" --json --trace full --out \"" + dir.string() + "\"") == 0);
  CHECK(fs::exists(dir / "trace.json"));
  CHECK(resolve("\"" + (dir / "missing.doc").string() + "\"") == 1);
  CHECK(resolve("\"" + doc + "\" --max-readings 1") == 2);
  CHECK(resolve("\"" + doc + "\" --trace loud") != 0);
  fs::remove_all(dir);
}
