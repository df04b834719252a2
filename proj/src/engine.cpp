#include "anaphora/engine.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "anaphora/errors.hpp"

namespace anaphora {

std::string_view to_string(TraceLevel level) {
  switch (level) {
    case TraceLevel::Off: return "off";
    case TraceLevel::Summary: return "summary";
    case TraceLevel::Full: return "full";
  }
  return "?";
}

std::optional<TraceLevel> parse_trace_level(std::string_view text) {
  for (auto level : {TraceLevel::Off, TraceLevel::Summary, TraceLevel::Full})
    if (to_string(level) == text) return level;
  return std::nullopt;
}

std::string_view to_string(PronounAmbiguity a) {
  switch (a) {
    case PronounAmbiguity::Unambiguous: return "unambiguous";
    case PronounAmbiguity::Local: return "local";
    case PronounAmbiguity::Global: return "global";
  }
  return "?";
}

namespace {

unsigned percent(std::size_t part, std::size_t total) {
  if (total == 0) return 0;
  return static_cast<unsigned>((200 * part + total) / (2 * total));
}

}  // namespace

std::string AmbiguityReport::to_string() const {
  std::ostringstream out;
  auto row = [&](const std::string& label, std::size_t n) {
    out << std::left << std::setw(16) << label << std::right << std::setw(6) << n << std::setw(6)
        << percent(n, total) << "%\n";
  };
  out << std::left << std::setw(16) << "pronouns" << std::right << std::setw(6) << total << '\n';
  row("ambiguous", ambiguous());
  row("  locally", local);
  row("  globally", global);
  row("unambiguous", unambiguous);
  return out.str();
}

PronounAmbiguity classify(std::size_t readings_at_trigger, std::span<const std::string> bindings) {
  if (readings_at_trigger > 1) return PronounAmbiguity::Local;
  std::set<std::string> distinct(bindings.begin(), bindings.end());
  if (bindings.size() > 1 && distinct.size() > 1) return PronounAmbiguity::Global;
  return PronounAmbiguity::Unambiguous;
}

AmbiguityReport classify_pronoun_ambiguity(std::span<const PronounOccurrence> pronouns) {
  AmbiguityReport report;
  for (const auto& p : pronouns) {
    ++report.total;
    switch (p.ambiguity) {
      case PronounAmbiguity::Local: ++report.local; break;
      case PronounAmbiguity::Global: ++report.global; break;
      case PronounAmbiguity::Unambiguous: ++report.unambiguous; break;
    }
  }
  return report;
}

Engine::Engine(const KnowledgeBase& kb, EngineConfig config)
    : kb_(&kb), config_(config), rng_(config.schedule_seed.value_or(0)), space_(AmbiguitySpace::initial()) {
  if (config_.max_readings < 1) throw std::invalid_argument("max_readings must be at least 1");
}

void Engine::note(std::string text) {
  if (config_.trace != TraceLevel::Off) trace_.note(std::move(text));
}

void Engine::record(const TraceEvent& e) {
  if (config_.trace == TraceLevel::Full) {
    trace_.add(e);
  } else if (config_.trace == TraceLevel::Summary) {
    auto base = e.step.substr(0, e.step.find_first_not_of("0123456789"));
    if (base == "11" || base == "19") trace_.add(e);
  }
}

std::string Engine::fresh_reading_id() {
  return "s" + std::to_string(sentence_) + "r" + std::to_string(++reading_counter_);
}

void Engine::begin_sentence(int sentence) {
  if (in_sentence_) throw PreconditionError("sentence " + std::to_string(sentence_) + " still open");
  in_sentence_ = true;
  sentence_ = sentence;
  reading_counter_ = 1;
  tokens_.clear();
  triggered_.clear();
  readings_.clear();
  readings_.push_back(LiveReading{PhraseReading{"s" + std::to_string(sentence) + "r1", {}, true, {}},
                                  space_.master().id});
  note("sentence " + std::to_string(sentence));
}

Lexeme Engine::lexeme_for(const AnnotatedToken& token, const FeatureStructure& features) const {
  return Lexeme{token.surface, token.lemma, token.category, features, token.concept_type, token.valence};
}

std::optional<DiscourseEntity> Engine::entity_for(const AnnotatedToken& token) {
  if (token.instance) {
    auto type = kb_->taxonomy.instance_concept(*token.instance);
    if (!type) throw LookupError("unknown instance '" + *token.instance + "'");
    return DiscourseEntity{*token.instance, *type, token.surface};
  }
  if (!token.concept_type || !kb_->categories.isa_star(token.category, category::kNominal)) return std::nullopt;
  if (!kb_->taxonomy.has_concept(*token.concept_type))
    throw LookupError("unknown concept '" + *token.concept_type + "'");
  std::size_t n = fresh_ids_[*token.concept_type]++;
  std::string id = *token.concept_type + (n == 0 ? "" : "-" + std::to_string(n + 1));
  return DiscourseEntity{id, *token.concept_type, token.surface};
}

namespace {

std::vector<Relation> non_repeatable(const Lexeme& head) {
  std::vector<Relation> out;
  for (const auto& slot : head.valence)
    if (!is_repeatable(slot.relation)) out.push_back(slot.relation);
  return out;
}

void add_failure(std::string& failure, const std::string& text) {
  if (text.empty()) return;
  if (!failure.empty()) failure += "; ";
  failure += text;
}

}  // namespace

std::vector<Engine::Step> Engine::attach_leftward(const LiveReading& r, Position pos, const AnnotatedToken& token,
                                                  std::string& failure) const {
  std::vector<Step> out;
  auto collect = [&](Position head, std::span<const Relation> relations) {
    auto res = attach(r.phrase, *kb_, head, pos, relations);
    for (std::size_t i = 0; i < res.readings.size(); ++i)
      out.push_back(Step{LiveReading{std::move(res.readings[i]), r.state_id}, Arc{head, pos, res.relations[i]}});
    add_failure(failure, res.failure);
    return !res.readings.empty();
  };

  if (!token.hints) {
    for (Position head = pos - 1; head >= 1; --head) {
      auto relations = non_repeatable(r.phrase.tree.node(head).lexeme);
      if (!relations.empty() && collect(head, relations)) return out;
    }
    out.push_back(Step{r, std::nullopt});
    return out;
  }

  bool may_wait = false;
  for (const auto& hint : *token.hints) {
    if (hint.offset >= 0) {
      may_wait = true;
      continue;
    }
    auto back = static_cast<Position>(-hint.offset);
    if (back >= pos) throw ProcessingError("'" + token.surface + "': head offset points before the sentence");
    std::vector<Relation> relations;
    if (hint.relation) relations.push_back(*hint.relation);
    collect(pos - back, relations);
  }
  if (may_wait) out.push_back(Step{r, std::nullopt});
  return out;
}

std::vector<Engine::Step> Engine::attach_pending(const LiveReading& r, Position pending, Position pos,
                                                 std::string& failure) const {
  const auto& tree = r.phrase.tree;
  if (tree.head_of(pending)) return {Step{r, std::nullopt}};
  const auto& token = tokens_.at(pending - 1);
  std::vector<Step> out;

  if (!token.hints) {
    auto relations = non_repeatable(tree.node(pos).lexeme);
    if (!relations.empty() && !head_plus(tree, pending, pos)) {
      auto res = attach(r.phrase, *kb_, pos, pending, relations);
      for (std::size_t i = 0; i < res.readings.size(); ++i)
        out.push_back(
            Step{LiveReading{std::move(res.readings[i]), r.state_id}, Arc{pos, pending, res.relations[i]}});
    }
    if (out.empty()) out.push_back(Step{r, std::nullopt});
    return out;
  }

  bool targeted = false;
  bool may_wait = false;
  for (const auto& hint : *token.hints) {
    if (hint.offset == 0 || (hint.offset > 0 && pending + static_cast<Position>(hint.offset) > pos)) may_wait = true;
    if (hint.offset <= 0 || pending + static_cast<Position>(hint.offset) != pos) continue;
    targeted = true;
    std::vector<Relation> relations;
    if (hint.relation) relations.push_back(*hint.relation);
    auto res = attach(r.phrase, *kb_, pos, pending, relations);
    for (std::size_t i = 0; i < res.readings.size(); ++i)
      out.push_back(Step{LiveReading{std::move(res.readings[i]), r.state_id}, Arc{pos, pending, res.relations[i]}});
    add_failure(failure, res.failure);
  }
  if (!targeted || may_wait) out.push_back(Step{r, std::nullopt});
  return out;
}

void Engine::install(std::vector<std::vector<Step>> successors, const std::vector<std::string>& failures,
                     const std::string& what) {
  std::vector<LiveReading> next;
  std::vector<std::optional<Arc>> arcs;
  std::string all_failures;
  for (std::size_t i = 0; i < successors.size(); ++i) {
    auto& succ = successors[i];
    const std::string& parent = readings_[i].phrase.id;
    if (succ.empty()) {
      note("reading " + parent + " dies at " + what + ": " + failures[i]);
      add_failure(all_failures, parent + ": " + failures[i]);
      continue;
    }
    std::string forks;
    for (auto& step : succ) {
      if (succ.size() > 1) {
        step.reading.phrase.id = fresh_reading_id();
        forks += (forks.empty() ? "" : ", ") + step.reading.phrase.id;
      }
      if (step.arc && config_.trace == TraceLevel::Full)
        note(step.reading.phrase.id + " attaches " + std::string(to_string(step.arc->relation)) + "(" +
             std::to_string(step.arc->head) + "->" + std::to_string(step.arc->modifier) + ")");
      arcs.push_back(step.arc);
      next.push_back(std::move(step.reading));
    }
    if (succ.size() > 1) note("reading " + parent + " forks into " + forks);
  }
  if (next.empty()) throw ProcessingError("no reading survives " + what + ": " + all_failures);
  if (next.size() > config_.max_readings)
    throw ProcessingError("reading fan-out " + std::to_string(next.size()) + " exceeds the limit of " +
                          std::to_string(config_.max_readings) + " at " + what);
  readings_ = std::move(next);
  run_triggers(arcs);
}

void Engine::process_token(const AnnotatedToken& token) {
  if (!in_sentence_) throw PreconditionError("token '" + token.surface + "' outside a sentence");
  tokens_.push_back(token);
  const Position pos = tokens_.size();
  const std::string what = "'" + token.surface + "' (" + std::to_string(pos) + ")";
  auto entity = entity_for(token);

  std::vector<FeatureStructure> morphs = token.morph_readings;
  if (morphs.empty()) morphs.emplace_back();
  std::vector<LiveReading> extended;
  for (const auto& r : readings_) {
    for (const auto& features : morphs) {
      LiveReading copy = r;
      copy.phrase.tree.add_node(lexeme_for(token, features), entity);
      if (morphs.size() > 1) copy.phrase.id = fresh_reading_id();
      extended.push_back(std::move(copy));
    }
  }
  if (extended.size() > config_.max_readings)
    throw ProcessingError("reading fan-out " + std::to_string(extended.size()) + " exceeds the limit of " +
                          std::to_string(config_.max_readings) + " at " + what);
  readings_ = std::move(extended);

  {
    std::vector<std::vector<Step>> successors;
    std::vector<std::string> failures(readings_.size());
    for (std::size_t i = 0; i < readings_.size(); ++i)
      successors.push_back(attach_leftward(readings_[i], pos, token, failures[i]));
    install(std::move(successors), failures, what);
  }

  for (Position m = 1; m < pos; ++m) {
    const auto& pending = tokens_[m - 1];
    bool relevant = !pending.hints;
    if (pending.hints)
      for (const auto& hint : *pending.hints)
        if (hint.offset > 0 && m + static_cast<Position>(hint.offset) == pos) relevant = true;
    if (!relevant) continue;
    std::vector<std::vector<Step>> successors;
    std::vector<std::string> failures(readings_.size());
    for (std::size_t i = 0; i < readings_.size(); ++i)
      successors.push_back(attach_pending(readings_[i], m, pos, failures[i]));
    install(std::move(successors), failures, what + " taking '" + pending.surface + "' (" + std::to_string(m) + ")");
  }
}

void Engine::run_triggers(const std::vector<std::optional<Arc>>& arcs) {
  const auto& cats = kb_->categories;
  struct Pending {
    EpisodeRequest request;
    std::size_t reading;
  };
  std::vector<Pending> pending;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (!arcs[i]) continue;
    const Arc& arc = *arcs[i];
    const auto& tree = readings_[i].phrase.tree;
    EpisodeRequest req;
    req.sentence = sentence_;
    if (cats.isa_star(tree.node(arc.modifier).category(), category::kPersonalPronoun)) {
      req.kind = AnaphorKind::Pronominal;
      req.anaphor = arc.modifier;
      req.attachment = Attachment{arc.relation, arc.head, arc.modifier};
    } else if (arc.relation == Relation::Spec &&
               cats.isa_star(tree.node(arc.modifier).category(), category::kDefiniteDeterminer) &&
               cats.isa_star(tree.node(arc.head).category(), category::kNoun) && tree.head_of(arc.head)) {
      req.kind = AnaphorKind::Nominal;
      req.anaphor = arc.head;
      req.attachment = Attachment{*tree.relation_of(arc.head), *tree.head_of(arc.head), arc.head};
    } else if (anaphor_kind(tree, cats, arc.modifier) == AnaphorKind::Nominal) {
      req.kind = AnaphorKind::Nominal;
      req.anaphor = arc.modifier;
      req.attachment = Attachment{arc.relation, arc.head, arc.modifier};
    } else {
      continue;
    }
    pending.push_back(Pending{req, i});
  }
  if (pending.empty()) return;

  std::stable_sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    if (a.request.anaphor != b.request.anaphor) return a.request.anaphor < b.request.anaphor;
    if (a.request.attachment.relation != b.request.attachment.relation)
      return a.request.attachment.relation < b.request.attachment.relation;
    return a.reading < b.reading;
  });
  std::vector<ResolutionEpisode> episodes;
  std::vector<std::size_t> owner;
  std::size_t sibling = 0;
  for (std::size_t k = 0; k < pending.size(); ++k) {
    if (k > 0 && pending[k].request.anaphor != pending[k - 1].request.anaphor) sibling = 0;
    pending[k].request.sibling = sibling++;
    const auto& r = readings_[pending[k].reading];
    episodes.emplace_back(*kb_, pending[k].request, r.phrase, r.state_id);
    owner.push_back(pending[k].reading);
    triggered_[pending[k].request.anaphor].push_back(r.phrase.id);
    const auto& node = r.phrase.tree.node(pending[k].request.anaphor);
    note(r.phrase.id + " triggers " + std::string(to_string(pending[k].request.kind)) + " search for '" +
         node.lexeme.form + "' (" + std::to_string(node.position) + ")");
  }
  run_batch(episodes);
  for (std::size_t k = 0; k < episodes.size(); ++k) readings_[owner[k]].state_id = episodes[k].state_id();
}

void Engine::run_batch(std::vector<ResolutionEpisode>& episodes) {
  auto deliver = [&](ResolutionEpisode& ep) {
    TraceEvent e = ep.step(&space_);
    record(e);
    if (observer_) observer_(ep, e, space_);
  };
  if (!config_.schedule_seed) {
    bool busy = true;
    while (busy) {
      busy = false;
      for (auto& ep : episodes) {
        if (ep.done()) continue;
        deliver(ep);
        busy = true;
      }
    }
    return;
  }
  std::vector<std::size_t> open;
  for (std::size_t k = 0; k < episodes.size(); ++k)
    if (!episodes[k].done()) open.push_back(k);
  while (!open.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    std::size_t slot = pick(rng_);
    auto& ep = episodes[open[slot]];
    deliver(ep);
    if (ep.done()) open.erase(open.begin() + static_cast<std::ptrdiff_t>(slot));
  }
}

const UtteranceRecord& Engine::end_sentence() {
  if (!in_sentence_) throw PreconditionError("no open sentence");
  const auto& cats = kb_->categories;

  std::vector<LiveReading> alive;
  for (auto& r : readings_) {
    const auto& tree = r.phrase.tree;
    std::string cause;
    for (Position p = 1; p <= tree.size() && cause.empty(); ++p) {
      const auto& node = tree.node(p);
      for (const auto& slot : node.lexeme.valence)
        if (slot.obligatory && !tree.slot_filled(p, slot.relation))
          cause = "'" + node.lexeme.form + "' lacks its " + std::string(to_string(slot.relation));
      const auto& hints = tokens_[p - 1].hints;
      if (cause.empty() && hints && !tree.head_of(p) &&
          std::none_of(hints->begin(), hints->end(), [](const AttachHint& h) { return h.offset == 0; }))
        cause = "'" + node.lexeme.form + "' (" + std::to_string(p) + ") left without a head";
    }
    if (cause.empty())
      alive.push_back(std::move(r));
    else
      note("reading " + r.phrase.id + " dies at sentence end: " + cause);
  }
  readings_ = std::move(alive);
  if (readings_.empty())
    throw ProcessingError("no reading of sentence " + std::to_string(sentence_) + " survives");

  std::vector<Survivor> survivors;
  for (const auto& r : readings_) {
    const auto& state = space_.state(r.state_id);
    Survivor s{r.phrase.id, r.state_id, &r.phrase.tree, {}};
    for (const auto& cr : state.readings) {
      std::vector<Realization> realized;
      for (Position p = 1; p <= r.phrase.tree.size(); ++p) {
        const auto& node = r.phrase.tree.node(p);
        if (!cats.isa_star(node.category(), category::kNominal)) continue;
        auto ref = referent_of(node, cr);
        if (!ref) continue;
        ref->last_expression = node.lexeme.form;
        realized.push_back(Realization{p, CfEntry{*ref, node.category(), node.features}});
      }
      s.realizations.push_back(std::move(realized));
    }
    survivors.push_back(std::move(s));
  }
  AmbiguitySpace next = commit_utterance(space_, cats, survivors);

  UtteranceRecord rec;
  rec.sentence = sentence_;
  for (const auto& t : tokens_) rec.surfaces.push_back(t.surface);
  rec.state = next.master();
  for (const auto& r : readings_) {
    rec.trees.push_back(r.phrase.id + " " + r.phrase.tree.to_string());
    for (const auto& cr : space_.state(r.state_id).readings)
      rec.origins.push_back(ReadingOrigin{r.phrase.id, r.state_id, cr.id, cr.bindings});
  }

  for (Position p = 1; p <= tokens_.size(); ++p) {
    if (!cats.isa_star(tokens_[p - 1].category, category::kPersonalPronoun)) continue;
    PronounOccurrence occ;
    occ.sentence = sentence_;
    occ.position = p;
    occ.expression = tokens_[p - 1].surface;
    if (auto it = triggered_.find(p); it != triggered_.end())
      occ.readings_at_trigger = std::set<std::string>(it->second.begin(), it->second.end()).size();
    for (const auto& origin : rec.origins) {
      auto b = origin.bindings.find(p);
      occ.bindings.push_back(b != origin.bindings.end() && b->second.antecedent ? b->second.antecedent->instance_id
                                                                                 : "");
    }
    occ.ambiguity = classify(occ.readings_at_trigger, occ.bindings);
    pronouns_.push_back(std::move(occ));
  }

  for (const auto& cr : rec.state.readings)
    note("commit " + rec.state.id + " reading " + cr.id + ": cb " + (cr.cb ? cr.cb->label() : "-") + " cf " +
         format_cf(cr.cf) + " " + std::string(cr.transition ? to_string(*cr.transition) : "-"));

  space_ = std::move(next);
  readings_.clear();
  tokens_.clear();
  triggered_.clear();
  in_sentence_ = false;
  history_.push_back(std::move(rec));
  return history_.back();
}

const UtteranceRecord& Engine::process_sentence(int sentence, std::span<const AnnotatedToken> tokens) {
  begin_sentence(sentence);
  for (const auto& t : tokens) process_token(t);
  return end_sentence();
}

}  // namespace anaphora
