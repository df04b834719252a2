#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace anaphora {

// Dependency relation labels. Enumerator order is the dispatch order used when
// one attachment step produces readings under several relations.
enum class Relation { Subject, Object, Spec, SaxGen, PpAtt, GenAtt, PpObject, Adjunct };

inline constexpr std::array<Relation, 8> kAllRelations = {
    Relation::Subject, Relation::Object, Relation::Spec,     Relation::SaxGen,
    Relation::PpAtt,   Relation::GenAtt, Relation::PpObject, Relation::Adjunct};

std::string_view to_string(Relation r);
std::optional<Relation> parse_relation(std::string_view label);

// Relations a head may carry more than once.
constexpr bool is_repeatable(Relation r) { return r == Relation::Adjunct || r == Relation::PpAtt; }

}  // namespace anaphora
