#include "anaphora/trace.hpp"

#include <algorithm>

namespace anaphora {

std::string_view to_string(MessageKind k) {
  switch (k) {
    case MessageKind::SearchNomAntecedent: return "SearchNomAntecedent";
    case MessageKind::SearchPronAntecedent: return "SearchPronAntecedent";
    case MessageKind::AntecedentFound: return "AntecedentFound";
    case MessageKind::AnaphorSucceed: return "AnaphorSucceed";
    case MessageKind::AnaphorReject: return "AnaphorReject";
    case MessageKind::CfExhausted: return "CfExhausted";
  }
  return "?";
}

std::string_view to_string(ActorRole r) {
  switch (r) {
    case ActorRole::Anaphor: return "Anaphor";
    case ActorRole::PhraseActor: return "PhraseActor";
    case ActorRole::ContainerActor: return "ContainerActor";
    case ActorRole::ParserActor: return "ParserActor";
    case ActorRole::CenteringActor: return "CenteringActor";
    case ActorRole::CenterActor: return "CenterActor";
    case ActorRole::Head: return "Head";
    case ActorRole::Antecedent: return "Antecedent";
  }
  return "?";
}

namespace {

std::string no_spaces(std::string s) {
  std::replace(s.begin(), s.end(), ' ', '_');
  return s;
}

}  // namespace

std::string format(const TraceEvent& e) {
  const auto& p = e.message.payload;
  std::string payload = "anaphor=s" + std::to_string(p.sentence) + ":" + std::to_string(p.anaphor) + ":" +
                        no_spaces(p.expression) + ";att=" + std::string(to_string(p.attachment.relation)) + ":" +
                        std::to_string(p.attachment.head) + "->" + std::to_string(p.attachment.modifier);
  if (p.candidate) payload += ";cand=" + no_spaces(*p.candidate);
  return "step=" + e.step + " msg=" + std::string(to_string(e.message.kind)) +
         " from=" + std::string(to_string(e.message.sender)) + " to=" + std::string(to_string(e.message.receiver)) +
         " reading=" + e.reading + " payload=" + payload + " outcome=" + e.outcome;
}

std::string step_label(int step, std::size_t sibling) {
  std::string label = std::to_string(step);
  if (sibling == 0) return label;
  // a..z, then aa, ab, ...
  std::string suffix;
  std::size_t n = sibling;
  while (n > 0) {
    --n;
    suffix.insert(suffix.begin(), static_cast<char>('a' + n % 26));
    n /= 26;
  }
  return label + suffix;
}

std::vector<TraceEvent> Trace::events() const {
  std::vector<TraceEvent> out;
  for (const auto& entry : entries_)
    if (const auto* e = std::get_if<TraceEvent>(&entry)) out.push_back(*e);
  return out;
}

std::string Trace::to_string(bool with_notes) const {
  std::string out;
  for (const auto& entry : entries_) {
    if (const auto* e = std::get_if<TraceEvent>(&entry)) {
      out += format(*e);
      out += '\n';
    } else if (with_notes) {
      out += "# " + std::get<TraceNote>(entry).text + '\n';
    }
  }
  return out;
}

}  // namespace anaphora
