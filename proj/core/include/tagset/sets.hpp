#pragma once

#include "tagset/error.hpp"
#include "tagset/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tagset {

// Position content of a point: a fixed-dimension vector of exact rationals.
// Two points with equal value occupy the same position.
class Value {
public:
  explicit Value(std::vector<Rational> coords);
  Value(std::initializer_list<Rational> coords);

  std::size_t dimension() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  std::string to_string() const;

private:
  std::vector<Rational> coords_;
};

// -1 / 0 / +1 lexicographic comparison; requires equal dimension.
int compare(const Value& a, const Value& b);
bool operator==(const Value& a, const Value& b);
bool operator<(const Value& a, const Value& b);

// Ordered belonging-tag of a point. Carries no position information.
// Total order: by ordinal, ties broken by the label.
struct SeriesTag {
  Rational ordinal;
  std::string label;

  std::string to_string() const { return label; }
};

int compare(const SeriesTag& a, const SeriesTag& b);
bool operator==(const SeriesTag& a, const SeriesTag& b);
bool operator<(const SeriesTag& a, const SeriesTag& b);

// A (value, series) pair. Immutable once constructed.
class TaggedPoint {
public:
  TaggedPoint(Value value, SeriesTag series)
      : value_(std::move(value)), series_(std::move(series)) {}

  const Value& value() const { return value_; }
  const SeriesTag& series() const { return series_; }

  std::string to_string() const;

private:
  Value value_;
  SeriesTag series_;
};

// Order by (value lexicographic, series); requires equal dimension.
int compare(const TaggedPoint& a, const TaggedPoint& b);
bool operator==(const TaggedPoint& a, const TaggedPoint& b);
bool operator<(const TaggedPoint& a, const TaggedPoint& b);

struct RelationReport {
  bool equal_value = false;
  bool equal_series = false;
  bool equal = false; // both of the above
};

// Value/series/point equality of two points. Throws DimensionMismatch when
// their values have different lengths.
RelationReport relate(const TaggedPoint& u, const TaggedPoint& v);

// Finite collection of tagged points of one dimension, stored canonically
// sorted by (value, series) with exact duplicates merged. Equal-value points
// with unequal series are distinct members and are never merged.
class FiniteTaggedSet {
public:
  explicit FiniteTaggedSet(std::size_t dimension);
  FiniteTaggedSet(std::size_t dimension, std::vector<TaggedPoint> points);

  std::size_t dimension() const { return dimension_; }
  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }
  const std::vector<TaggedPoint>& points() const { return points_; }

  bool contains(const TaggedPoint& p) const;

  friend bool operator==(const FiniteTaggedSet& a, const FiniteTaggedSet& b);

private:
  std::size_t dimension_;
  std::vector<TaggedPoint> points_;
};

// Union that preserves belonging: points identical in value and series merge,
// equal-value points from different series both survive.
FiniteTaggedSet superpose(const FiniteTaggedSet& a, const FiniteTaggedSet& b);

struct DisorderWitness {
  TaggedPoint first;
  TaggedPoint second;
};

// A pair of distinct equal-value points, if the set has one. Such a pair is
// exactly what the Trichotomy law forbids.
std::optional<DisorderWitness> find_equal_value_pair(const FiniteTaggedSet& s);

// True iff the set contains two distinct equal-value points. Empty sets are
// ordered under the vacuous reading.
bool is_disordered(const FiniteTaggedSet& s);

// True iff the (value, series) relation drawn from the set is a bijection
// between its value set and its series set.
bool is_ordered_bijective(const FiniteTaggedSet& s);

// Partition into equal-value classes, ordered by class value.
std::vector<FiniteTaggedSet> value_classes(const FiniteTaggedSet& s);

// Partition into equal-series classes, ordered by class series.
std::vector<FiniteTaggedSet> series_classes(const FiniteTaggedSet& s);

} // namespace tagset
