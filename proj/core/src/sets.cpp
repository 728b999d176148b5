#include "tagset/sets.hpp"

#include <algorithm>

namespace tagset {

Value::Value(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error("a value needs at least one coordinate");
}

Value::Value(std::initializer_list<Rational> coords)
    : Value(std::vector<Rational>(coords)) {}

std::string Value::to_string() const {
  if (coords_.size() == 1) return format_rational(coords_[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(coords_[i]);
  }
  out += ')';
  return out;
}

int compare(const Value& a, const Value& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}

bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }
bool operator<(const Value& a, const Value& b) { return compare(a, b) < 0; }

int compare(const SeriesTag& a, const SeriesTag& b) {
  if (a.ordinal < b.ordinal) return -1;
  if (b.ordinal < a.ordinal) return 1;
  return a.label.compare(b.label) < 0 ? -1 : (a.label == b.label ? 0 : 1);
}

bool operator==(const SeriesTag& a, const SeriesTag& b) { return compare(a, b) == 0; }
bool operator<(const SeriesTag& a, const SeriesTag& b) { return compare(a, b) < 0; }

std::string TaggedPoint::to_string() const {
  return value_.to_string() + " @ " + series_.to_string();
}

int compare(const TaggedPoint& a, const TaggedPoint& b) {
  if (int c = compare(a.value(), b.value()); c != 0) return c;
  return compare(a.series(), b.series());
}

bool operator==(const TaggedPoint& a, const TaggedPoint& b) { return compare(a, b) == 0; }
bool operator<(const TaggedPoint& a, const TaggedPoint& b) { return compare(a, b) < 0; }

RelationReport relate(const TaggedPoint& u, const TaggedPoint& v) {
  if (u.value().dimension() != v.value().dimension())
    throw DimensionMismatch(u.value().dimension(), v.value().dimension());
  RelationReport r;
  r.equal_value = u.value() == v.value();
  r.equal_series = u.series() == v.series();
  r.equal = r.equal_value && r.equal_series;
  return r;
}

FiniteTaggedSet::FiniteTaggedSet(std::size_t dimension) : dimension_(dimension) {
  if (dimension_ == 0) throw Error("set dimension must be positive");
}

FiniteTaggedSet::FiniteTaggedSet(std::size_t dimension, std::vector<TaggedPoint> points)
    : dimension_(dimension), points_(std::move(points)) {
  if (dimension_ == 0) throw Error("set dimension must be positive");
  for (const auto& p : points_) {
    if (p.value().dimension() != dimension_)
      throw DimensionMismatch(dimension_, p.value().dimension());
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool FiniteTaggedSet::contains(const TaggedPoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool operator==(const FiniteTaggedSet& a, const FiniteTaggedSet& b) {
  return a.dimension_ == b.dimension_ && a.points_ == b.points_;
}

FiniteTaggedSet superpose(const FiniteTaggedSet& a, const FiniteTaggedSet& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
  std::vector<TaggedPoint> merged = a.points();
  merged.insert(merged.end(), b.points().begin(), b.points().end());
  return FiniteTaggedSet(a.dimension(), std::move(merged));
}

std::optional<DisorderWitness> find_equal_value_pair(const FiniteTaggedSet& s) {
  // Points are value-sorted, so equal-value points are adjacent.
  const auto& pts = s.points();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i - 1].value() == pts[i].value())
      return DisorderWitness{pts[i - 1], pts[i]};
  }
  return std::nullopt;
}

bool is_disordered(const FiniteTaggedSet& s) {
  return find_equal_value_pair(s).has_value();
}

bool is_ordered_bijective(const FiniteTaggedSet& s) {
  if (find_equal_value_pair(s)) return false; // some value maps to two series
  std::vector<SeriesTag> tags;
  tags.reserve(s.size());
  for (const auto& p : s.points()) tags.push_back(p.series());
  std::sort(tags.begin(), tags.end());
  return std::adjacent_find(tags.begin(), tags.end(),
                            [](const SeriesTag& a, const SeriesTag& b) { return a == b; }) ==
         tags.end();
}

namespace {

template <typename SameClass>
std::vector<FiniteTaggedSet> group_sorted(const FiniteTaggedSet& s,
                                          std::vector<TaggedPoint> pts,
                                          SameClass same) {
  std::vector<FiniteTaggedSet> classes;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= pts.size(); ++i) {
    if (i == pts.size() || !same(pts[start], pts[i])) {
      classes.emplace_back(s.dimension(),
                           std::vector<TaggedPoint>(pts.begin() + start, pts.begin() + i));
      start = i;
    }
  }
  return classes;
}

} // namespace

std::vector<FiniteTaggedSet> value_classes(const FiniteTaggedSet& s) {
  return group_sorted(s, s.points(), [](const TaggedPoint& a, const TaggedPoint& b) {
    return a.value() == b.value();
  });
}

std::vector<FiniteTaggedSet> series_classes(const FiniteTaggedSet& s) {
  auto pts = s.points();
  std::sort(pts.begin(), pts.end(), [](const TaggedPoint& a, const TaggedPoint& b) {
    if (int c = compare(a.series(), b.series()); c != 0) return c < 0;
    return compare(a.value(), b.value()) < 0;
  });
  return group_sorted(s, std::move(pts), [](const TaggedPoint& a, const TaggedPoint& b) {
    return a.series() == b.series();
  });
}

} // namespace tagset
