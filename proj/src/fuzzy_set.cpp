#include "latcut/fuzzy_set.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace latcut {

namespace {

void require_same_shape(const FuzzySet& a, const FuzzySet& b) {
  if (a.base() != b.base()) raise(Errc::BaseMismatch, "fuzzy sets have different base sets");
  if (a.lattice_ptr() != b.lattice_ptr() && !a.lattice().structurally_equal(b.lattice())) {
    raise(Errc::LatticeMismatch, "fuzzy sets have different value lattices");
  }
}

}  // namespace

std::vector<std::string> CrispSet::member_labels() const {
  std::vector<std::string> out;
  for (size_t i = 0; i < base.size(); ++i) {
    if (members[i]) out.push_back(base[i]);
  }
  return out;
}

int CrispSet::member_count() const {
  return static_cast<int>(std::count(members.begin(), members.end(), true));
}

FuzzySet::FuzzySet(std::shared_ptr<const Lattice> lattice, std::vector<std::string> base,
                   std::vector<int> membership)
    : lattice_(std::move(lattice)), base_(std::move(base)), membership_(std::move(membership)) {
  if (!lattice_) raise(Errc::SchemaError, "fuzzy set requires a lattice");
  if (base_.size() != membership_.size()) {
    raise(Errc::SchemaError, "membership must be total over the base");
  }
  for (size_t i = 0; i < base_.size(); ++i) {
    for (size_t j = i + 1; j < base_.size(); ++j) {
      if (base_[i] == base_[j]) raise(Errc::SchemaError, "duplicate base point '" + base_[i] + "'");
    }
  }
  for (int v : membership_) {
    if (v < 0 || v >= lattice_->size()) raise(Errc::UnknownElement, "membership value out of range");
  }
}

FuzzySet FuzzySet::from_labels(std::shared_ptr<const Lattice> lattice,
                               std::vector<std::string> base,
                               const std::map<std::string, std::string>& membership) {
  std::vector<int> values;
  values.reserve(base.size());
  for (const auto& point : base) {
    auto it = membership.find(point);
    if (it == membership.end()) {
      raise(Errc::SchemaError, "membership missing for point '" + point + "'");
    }
    values.push_back(lattice->index_of(it->second));
  }
  return FuzzySet(std::move(lattice), std::move(base), std::move(values));
}

FuzzySet FuzzySet::constant(std::shared_ptr<const Lattice> lattice, std::vector<std::string> base,
                            int value) {
  std::vector<int> values(base.size(), value);
  return FuzzySet(std::move(lattice), std::move(base), std::move(values));
}

int FuzzySet::point_index(std::string_view label) const {
  for (size_t i = 0; i < base_.size(); ++i) {
    if (base_[i] == label) return static_cast<int>(i);
  }
  raise(Errc::UnknownPoint, "no base point named '" + std::string(label) + "'");
}

std::vector<int> FuzzySet::support() const {
  std::vector<int> out;
  for (size_t i = 0; i < membership_.size(); ++i) {
    if (membership_[i] != lattice_->bottom()) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool FuzzySet::is_empty() const {
  return std::all_of(membership_.begin(), membership_.end(),
                     [&](int v) { return v == lattice_->bottom(); });
}

bool FuzzySet::operator==(const FuzzySet& other) const {
  if (base_ != other.base_) return false;
  if (lattice_ != other.lattice_ && !lattice_->structurally_equal(*other.lattice_)) return false;
  return membership_ == other.membership_;
}

PointMap::PointMap(std::vector<std::string> source, std::vector<std::string> target,
                   std::vector<int> mapping)
    : source_(std::move(source)), target_(std::move(target)), mapping_(std::move(mapping)) {
  if (mapping_.size() != source_.size()) raise(Errc::SchemaError, "point map must be total");
  for (int t : mapping_) {
    if (t < 0 || t >= static_cast<int>(target_.size())) {
      raise(Errc::UnknownPoint, "point map target out of range");
    }
  }
}

PointMap PointMap::from_labels(std::vector<std::string> source, std::vector<std::string> target,
                               const std::map<std::string, std::string>& mapping) {
  std::vector<int> m;
  m.reserve(source.size());
  for (const auto& s : source) {
    auto it = mapping.find(s);
    if (it == mapping.end()) raise(Errc::SchemaError, "point map missing source '" + s + "'");
    auto pos = std::find(target.begin(), target.end(), it->second);
    if (pos == target.end()) raise(Errc::UnknownPoint, "point map target '" + it->second + "' not in codomain");
    m.push_back(static_cast<int>(pos - target.begin()));
  }
  return PointMap(std::move(source), std::move(target), std::move(m));
}

PointMap PointMap::identity(std::vector<std::string> base) {
  std::vector<int> m(base.size());
  for (size_t i = 0; i < base.size(); ++i) m[i] = static_cast<int>(i);
  auto copy = base;
  return PointMap(std::move(base), std::move(copy), std::move(m));
}

PointMap compose(const PointMap& g, const PointMap& f) {
  if (f.target() != g.source()) raise(Errc::BaseMismatch, "compose: codomain of f differs from domain of g");
  std::vector<int> m;
  m.reserve(f.source().size());
  for (size_t i = 0; i < f.source().size(); ++i) m.push_back(g.apply(f.apply(static_cast<int>(i))));
  return PointMap(f.source(), g.target(), std::move(m));
}

CrispSet alpha_cut(const FuzzySet& a, int alpha) {
  if (alpha < 0 || alpha >= a.lattice().size()) raise(Errc::UnknownElement, "alpha out of range");
  CrispSet out{a.base(), std::vector<bool>(a.base().size(), false)};
  for (int x = 0; x < a.size(); ++x) out.members[static_cast<size_t>(x)] = a.lattice().leq(alpha, a.value(x));
  return out;
}

FuzzySet fuzzy_alpha_cut(const FuzzySet& a, int alpha) {
  if (alpha < 0 || alpha >= a.lattice().size()) raise(Errc::UnknownElement, "alpha out of range");
  std::vector<int> values(a.base().size());
  for (int x = 0; x < a.size(); ++x) {
    values[static_cast<size_t>(x)] = a.lattice().leq(alpha, a.value(x)) ? a.value(x) : a.lattice().bottom();
  }
  return FuzzySet(a.lattice_ptr(), a.base(), std::move(values));
}

FuzzySet intersect(const FuzzySet& a, const FuzzySet& b) {
  require_same_shape(a, b);
  std::vector<int> values(a.base().size());
  for (int x = 0; x < a.size(); ++x) values[static_cast<size_t>(x)] = a.lattice().meet(a.value(x), b.value(x));
  return FuzzySet(a.lattice_ptr(), a.base(), std::move(values));
}

FuzzySet unite(const FuzzySet& a, const FuzzySet& b) {
  require_same_shape(a, b);
  std::vector<int> values(a.base().size());
  for (int x = 0; x < a.size(); ++x) values[static_cast<size_t>(x)] = a.lattice().join(a.value(x), b.value(x));
  return FuzzySet(a.lattice_ptr(), a.base(), std::move(values));
}

bool subset_of(const FuzzySet& a, const FuzzySet& b) {
  require_same_shape(a, b);
  for (int x = 0; x < a.size(); ++x) {
    if (!a.lattice().leq(a.value(x), b.value(x))) return false;
  }
  return true;
}

FuzzySet image(const PointMap& f, const FuzzySet& a) {
  if (f.source() != a.base()) raise(Errc::BaseMismatch, "image: map domain differs from base");
  std::vector<int> values(f.target().size(), a.lattice().bottom());
  for (int x = 0; x < a.size(); ++x) {
    const int y = f.apply(x);
    values[static_cast<size_t>(y)] = a.lattice().join(values[static_cast<size_t>(y)], a.value(x));
  }
  return FuzzySet(a.lattice_ptr(), f.target(), std::move(values));
}

FuzzySet characteristic(const CrispSet& s, std::shared_ptr<const Lattice> lattice) {
  std::vector<int> values(s.base.size());
  for (size_t i = 0; i < s.base.size(); ++i) {
    values[i] = s.members[i] ? lattice->top() : lattice->bottom();
  }
  return FuzzySet(std::move(lattice), s.base, std::move(values));
}

FuzzySet empty_like(const FuzzySet& a) {
  return FuzzySet::constant(a.lattice_ptr(), a.base(), a.lattice().bottom());
}

std::vector<FuzzySet> cut_family(const FuzzySet& a) {
  std::vector<FuzzySet> family;
  for (int alpha = 0; alpha < a.lattice().size(); ++alpha) {
    FuzzySet cut = fuzzy_alpha_cut(a, alpha);
    if (std::find(family.begin(), family.end(), cut) == family.end()) {
      family.push_back(std::move(cut));
    }
  }
  return family;
}

std::string unit_label(double level) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), level);
  (void)ec;
  return std::string(buf, ptr);
}

UnitChain unit_chain(std::vector<double> levels) {
  levels.push_back(0.0);
  levels.push_back(1.0);
  for (double v : levels) {
    if (std::isnan(v) || v < 0.0 || v > 1.0) {
      raise(Errc::BadParameters, "chain levels must lie in [0, 1]");
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<std::string> labels;
  labels.reserve(levels.size());
  for (double v : levels) labels.push_back(unit_label(v));
  UnitChain chain{std::make_shared<Lattice>(Lattice::chain(std::move(labels))), std::move(levels)};
  return chain;
}

int UnitChain::id_of(double level) const {
  auto it = std::lower_bound(levels.begin(), levels.end(), level);
  if (it == levels.end() || *it != level) {
    raise(Errc::UnknownElement, "level " + unit_label(level) + " is not in the chain");
  }
  return static_cast<int>(it - levels.begin());
}

FuzzySet sampled_fuzzy_set(const UnitChain& chain, std::vector<std::string> base,
                           const std::vector<double>& values) {
  std::vector<int> ids;
  ids.reserve(values.size());
  for (double v : values) ids.push_back(chain.id_of(v));
  return FuzzySet(chain.lattice, std::move(base), std::move(ids));
}

}  // namespace latcut
