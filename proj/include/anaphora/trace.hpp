#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "anaphora/dependency_tree.hpp"

namespace anaphora {

enum class MessageKind {
  SearchNomAntecedent,
  SearchPronAntecedent,
  AntecedentFound,
  AnaphorSucceed,
  AnaphorReject,
  CfExhausted
};

enum class ActorRole {
  Anaphor,
  PhraseActor,
  ContainerActor,
  ParserActor,
  CenteringActor,
  CenterActor,
  Head,
  Antecedent
};

std::string_view to_string(MessageKind k);
std::string_view to_string(ActorRole r);

// The dependency relation an anaphor was tentatively attached under.
struct Attachment {
  Relation relation;
  Position head;
  Position modifier;

  friend bool operator==(const Attachment&, const Attachment&) = default;
};

struct Payload {
  int sentence = 0;
  Position anaphor = 0;
  std::string expression;
  Attachment attachment;
  std::optional<std::string> candidate;
};

struct Message {
  MessageKind kind;
  ActorRole sender;
  ActorRole receiver;
  Payload payload;
};

struct TraceEvent {
  std::string step;  // "7", "7a", ...
  Message message;
  std::string reading;
  std::string outcome;
};

// `step=<label> msg=<kind> from=<role> to=<role> reading=<id> payload=<...> outcome=<...>`
std::string format(const TraceEvent& e);

// Step label with its parallel-sibling suffix: 0 -> "7", 1 -> "7a", 2 -> "7b".
std::string step_label(int step, std::size_t sibling);

// Parser-side remark (attachments, reading deaths, commits); printed as `# ...`.
struct TraceNote {
  std::string text;
};

class Trace {
 public:
  void add(TraceEvent e) { entries_.emplace_back(std::move(e)); }
  void note(std::string text) { entries_.emplace_back(TraceNote{std::move(text)}); }

  std::vector<TraceEvent> events() const;
  const std::vector<std::variant<TraceEvent, TraceNote>>& entries() const { return entries_; }
  std::string to_string(bool with_notes = true) const;

 private:
  std::vector<std::variant<TraceEvent, TraceNote>> entries_;
};

}  // namespace anaphora
