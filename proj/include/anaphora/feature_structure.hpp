#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace anaphora {

// Agreement features. Each feature ranges over a small finite domain; a value
// is a non-empty subset of the domain encoded as a bit mask.
enum class Feature : std::uint8_t { Gender = 0, Number = 1, Person = 2, Case = 3 };

inline constexpr std::array<Feature, 4> kAllFeatures = {Feature::Gender, Feature::Number,
                                                        Feature::Person, Feature::Case};

std::string_view to_string(Feature f);
std::optional<Feature> parse_feature(std::string_view name);

// Number of atomic values in a feature's domain (gen 3, num 2, pers 3, case 4).
unsigned domain_size(Feature f);
std::uint8_t full_mask(Feature f);
std::string_view value_name(Feature f, unsigned bit);

// Result of an extraction u\l: either a non-empty value set or bottom.
class ValueSet {
 public:
  static ValueSet bottom(Feature f) { return ValueSet(f, 0); }
  ValueSet(Feature f, std::uint8_t mask);

  Feature feature() const { return feature_; }
  std::uint8_t mask() const { return mask_; }
  bool is_bottom() const { return mask_ == 0; }
  bool subset_of(const ValueSet& other) const;
  std::string to_string() const;

  friend bool operator==(const ValueSet&, const ValueSet&) = default;

 private:
  Feature feature_;
  std::uint8_t mask_;
};

ValueSet unify(const ValueSet& a, const ValueSet& b);

// Flat agreement bundle. A feature is either undefined (unconstrained) or a
// non-empty value set; the distinguished bottom element absorbs everything.
class FeatureStructure {
 public:
  FeatureStructure() = default;
  static FeatureStructure bottom();

  // Text form: "gen=fem,masc;num=sg;pers=3;case=nom,acc", "_" for the empty
  // structure. Throws std::invalid_argument on malformed input.
  static FeatureStructure parse(std::string_view text);

  bool is_bottom() const { return bottom_; }
  bool defines(Feature f) const { return !bottom_ && masks_[index(f)] != 0; }
  std::uint8_t mask(Feature f) const { return bottom_ ? 0 : masks_[index(f)]; }

  // mask == 0 undefines the feature. Throws on bits outside the domain.
  FeatureStructure& set(Feature f, std::uint8_t mask);
  FeatureStructure& set(Feature f, std::initializer_list<std::string_view> values);

  std::string to_string() const;

  friend bool operator==(const FeatureStructure&, const FeatureStructure&) = default;

 private:
  static constexpr std::size_t index(Feature f) { return static_cast<std::size_t>(f); }

  std::array<std::uint8_t, 4> masks_{};
  bool bottom_ = false;
};

FeatureStructure unify(const FeatureStructure& a, const FeatureStructure& b);

// u\l: the value of l in u, bottom when u is bottom or l is undefined.
ValueSet extract(const FeatureStructure& f, Feature path);

}  // namespace anaphora
