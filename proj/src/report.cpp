#include "anaphora/report.hpp"

#include <fstream>
#include <sstream>

#include "anaphora/errors.hpp"

namespace anaphora {

using nlohmann::json;

namespace {

json entity_json(const CfEntry& e) { return json{{"id", e.id()}, {"expression", e.entity.last_expression}}; }

std::string route_text(const Binding& b) {
  return std::string(to_string(b.route));
}

}  // namespace

std::string centering_table(const std::vector<UtteranceRecord>& history) {
  std::ostringstream out;
  out << "utterance\treading\tcb\tcf\ttransition\n";
  for (const auto& rec : history)
    for (const auto& r : rec.state.readings)
      out << rec.sentence << '\t' << r.id << '\t' << (r.cb ? r.cb->label() : "-") << '\t' << format_cf(r.cf) << '\t'
          << (r.transition ? to_string(*r.transition) : "-") << '\n';
  return out.str();
}

RunResult run(const Document& doc, const KnowledgeBase& kb, const RunOptions& options) {
  RunResult result;
  Engine engine(kb, options.engine);
  auto all = sentences(doc);
  if (options.sentences && *options.sentences < all.size()) all.resize(*options.sentences);

  for (const auto& s : all) {
    std::size_t index = 0;
    try {
      engine.begin_sentence(s.id);
      for (; index < s.tokens.size(); ++index) engine.process_token(s.tokens[index]);
      engine.end_sentence();
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "sentence " << s.id;
      if (index < s.tokens.size()) msg << ", token '" << s.tokens[index].surface << "' (" << index + 1 << ")";
      msg << ": " << e.what();
      result.error = msg.str();
      break;
    }
  }

  const auto& history = engine.history();
  result.centering = centering_table(history);
  json centering = json::array();
  for (const auto& rec : history)
    for (const auto& r : rec.state.readings) {
      json cf = json::array();
      for (const auto& e : r.cf) cf.push_back(entity_json(e));
      centering.push_back(json{{"utterance", rec.sentence},
                               {"reading", r.id},
                               {"cb", r.cb ? entity_json(*r.cb) : json(nullptr)},
                               {"cf", cf},
                               {"transition", r.transition ? std::string(to_string(*r.transition)) : "-"}});
    }

  std::ostringstream res;
  json resolution = json::array();
  for (const auto& rec : history) {
    res << "sentence " << rec.sentence << ":";
    for (const auto& w : rec.surfaces) res << ' ' << w;
    res << '\n';
    for (std::size_t k = 0; k < rec.state.readings.size(); ++k) {
      const auto& origin = rec.origins[k];
      const auto& reading = rec.state.readings[k];
      res << "  reading " << reading.id << " (phrase " << origin.phrase_id << ", after reading " << origin.predecessor
          << ")\n";
      json bindings = json::array();
      for (const auto& [pos, b] : origin.bindings) {
        std::string target = b.antecedent ? b.antecedent->instance_id : "-";
        res << "    " << b.expression << " (" << pos << ") -> " << target << " [" << route_text(b) << "]\n";
        bindings.push_back(json{{"position", pos},
                                {"expression", b.expression},
                                {"kind", std::string(to_string(b.kind))},
                                {"antecedent", b.antecedent ? json(b.antecedent->instance_id) : json(nullptr)},
                                {"route", route_text(b)}});
      }
      if (origin.bindings.empty()) res << "    (no anaphors)\n";
      resolution.push_back(json{{"utterance", rec.sentence},
                                {"reading", reading.id},
                                {"phrase", origin.phrase_id},
                                {"predecessor", origin.predecessor},
                                {"bindings", bindings}});
    }
  }
  result.resolution = res.str();

  result.trace = engine.trace().to_string();
  json trace = json::array();
  for (const auto& e : engine.trace().events()) trace.push_back(format(e));

  auto report = engine.ambiguity_report();
  std::ostringstream amb;
  amb << report.to_string();
  json pronouns = json::array();
  for (const auto& p : engine.pronouns()) {
    amb << "s" << p.sentence << ' ' << p.expression << " (" << p.position << ") " << to_string(p.ambiguity) << " [";
    for (std::size_t i = 0; i < p.bindings.size(); ++i)
      amb << (i ? ", " : "") << (p.bindings[i].empty() ? "-" : p.bindings[i]);
    amb << "]\n";
    pronouns.push_back(json{{"sentence", p.sentence},
                            {"position", p.position},
                            {"expression", p.expression},
                            {"class", std::string(to_string(p.ambiguity))},
                            {"readings_at_trigger", p.readings_at_trigger},
                            {"bindings", p.bindings}});
  }
  result.ambiguity = amb.str();

  result.json = json{{"document", doc.doc_id},
                     {"centering", centering},
                     {"resolution", resolution},
                     {"trace", trace},
                     {"ambiguity",
                      {{"total", report.total},
                       {"local", report.local},
                       {"global", report.global},
                       {"unambiguous", report.unambiguous},
                       {"pronouns", pronouns}}}};
  if (!result.ok()) result.json["error"] = result.error;
  return result;
}

void write_artifacts(const RunResult& result, const std::filesystem::path& dir, bool as_json) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    out << content;
  };
  if (as_json) {
    write("centering.json", result.json["centering"].dump(2) + "\n");
    write("resolution.json", result.json["resolution"].dump(2) + "\n");
    write("trace.json", result.json["trace"].dump(2) + "\n");
    write("ambiguity.json", result.json["ambiguity"].dump(2) + "\n");
  } else {
    write("centering.tsv", result.centering);
    write("resolution.txt", result.resolution);
    write("trace.txt", result.trace);
    write("ambiguity.txt", result.ambiguity);
  }
}

}  // namespace anaphora
