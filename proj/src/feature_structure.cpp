#include "anaphora/feature_structure.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace anaphora {

namespace {

constexpr std::array<std::array<std::string_view, 4>, 4> kValueNames = {{
    {"masc", "fem", "neut", ""},
    {"sg", "pl", "", ""},
    {"1", "2", "3", ""},
    {"nom", "gen", "dat", "acc"},
}};

constexpr std::array<unsigned, 4> kDomainSizes = {3, 2, 3, 4};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint8_t parse_value(Feature f, std::string_view name) {
  for (unsigned bit = 0; bit < domain_size(f); ++bit)
    if (value_name(f, bit) == name) return static_cast<std::uint8_t>(1u << bit);
  throw std::invalid_argument("unknown value '" + std::string(name) + "' for feature " +
                              std::string(to_string(f)));
}

std::string mask_to_string(Feature f, std::uint8_t mask) {
  std::string out;
  for (unsigned bit = 0; bit < domain_size(f); ++bit) {
    if (!(mask & (1u << bit))) continue;
    if (!out.empty()) out += ',';
    out += value_name(f, bit);
  }
  return out;
}

}  // namespace

std::string_view to_string(Feature f) {
  switch (f) {
    case Feature::Gender: return "gen";
    case Feature::Number: return "num";
    case Feature::Person: return "pers";
    case Feature::Case: return "case";
  }
  return "?";
}

std::optional<Feature> parse_feature(std::string_view name) {
  for (Feature f : kAllFeatures)
    if (to_string(f) == name) return f;
  return std::nullopt;
}

unsigned domain_size(Feature f) { return kDomainSizes[static_cast<std::size_t>(f)]; }

std::uint8_t full_mask(Feature f) { return static_cast<std::uint8_t>((1u << domain_size(f)) - 1); }

std::string_view value_name(Feature f, unsigned bit) {
  return kValueNames[static_cast<std::size_t>(f)][bit];
}

ValueSet::ValueSet(Feature f, std::uint8_t mask) : feature_(f), mask_(mask) {
  if (mask & ~full_mask(f)) throw std::invalid_argument("value mask outside feature domain");
}

bool ValueSet::subset_of(const ValueSet& other) const {
  return feature_ == other.feature_ && (mask_ & ~other.mask_) == 0;
}

std::string ValueSet::to_string() const {
  if (is_bottom()) return "bottom";
  return "{" + mask_to_string(feature_, mask_) + "}";
}

ValueSet unify(const ValueSet& a, const ValueSet& b) {
  if (a.feature() != b.feature()) return ValueSet::bottom(a.feature());
  return ValueSet(a.feature(), static_cast<std::uint8_t>(a.mask() & b.mask()));
}

FeatureStructure FeatureStructure::bottom() {
  FeatureStructure fs;
  fs.bottom_ = true;
  return fs;
}

FeatureStructure FeatureStructure::parse(std::string_view text) {
  FeatureStructure fs;
  if (text == "_" || text.empty()) return fs;
  for (std::string_view part : split(text, ';')) {
    auto eq = part.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("feature entry without '=': " + std::string(part));
    auto feature = parse_feature(part.substr(0, eq));
    if (!feature) throw std::invalid_argument("unknown feature: " + std::string(part.substr(0, eq)));
    if (fs.defines(*feature))
      throw std::invalid_argument("feature given twice: " + std::string(anaphora::to_string(*feature)));
    std::uint8_t mask = 0;
    for (std::string_view value : split(part.substr(eq + 1), ',')) mask |= parse_value(*feature, value);
    fs.set(*feature, mask);
  }
  return fs;
}

FeatureStructure& FeatureStructure::set(Feature f, std::uint8_t mask) {
  if (mask & ~full_mask(f)) throw std::invalid_argument("value mask outside feature domain");
  masks_[index(f)] = mask;
  return *this;
}

FeatureStructure& FeatureStructure::set(Feature f, std::initializer_list<std::string_view> values) {
  std::uint8_t mask = 0;
  for (auto v : values) mask |= parse_value(f, v);
  return set(f, mask);
}

std::string FeatureStructure::to_string() const {
  if (bottom_) return "bottom";
  std::string out;
  for (Feature f : kAllFeatures) {
    if (!defines(f)) continue;
    if (!out.empty()) out += ';';
    out += std::string(anaphora::to_string(f)) + "=" + mask_to_string(f, mask(f));
  }
  return out.empty() ? "_" : out;
}

FeatureStructure unify(const FeatureStructure& a, const FeatureStructure& b) {
  if (a.is_bottom() || b.is_bottom()) return FeatureStructure::bottom();
  FeatureStructure out;
  for (Feature f : kAllFeatures) {
    std::uint8_t ma = a.mask(f), mb = b.mask(f);
    if (ma == 0 || mb == 0) {
      out.set(f, static_cast<std::uint8_t>(ma | mb));
      continue;
    }
    std::uint8_t m = ma & mb;
    if (m == 0) return FeatureStructure::bottom();
    out.set(f, m);
  }
  return out;
}

ValueSet extract(const FeatureStructure& f, Feature path) { return ValueSet(path, f.mask(path)); }

}  // namespace anaphora
