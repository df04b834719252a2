#include "anaphora/relation.hpp"

namespace anaphora {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Subject: return "subject";
    case Relation::Object: return "object";
    case Relation::Spec: return "spec";
    case Relation::SaxGen: return "saxGen";
    case Relation::PpAtt: return "ppAtt";
    case Relation::GenAtt: return "genAtt";
    case Relation::PpObject: return "ppObject";
    case Relation::Adjunct: return "adjunct";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view label) {
  for (Relation r : kAllRelations)
    if (to_string(r) == label) return r;
  return std::nullopt;
}

}  // namespace anaphora
