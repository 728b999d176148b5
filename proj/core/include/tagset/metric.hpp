#pragma once

#include "tagset/line.hpp"
#include "tagset/sets.hpp"

#include <optional>
#include <string>
#include <utility>

namespace tagset {

// Exact squared Euclidean distance. Kept squared so that zero tests and
// comparisons stay in the rationals; the square root exists only in the
// display string.
struct SquaredDistance {
  Rational value;
  std::string approx; // decimal sqrt(value); never used in predicates
};

SquaredDistance make_squared_distance(Rational value, unsigned digits = 9);

// Sum of squared coordinate differences. Zero iff the values are equal;
// series tags never influence distance.
SquaredDistance point_distance_sq(const TaggedPoint& u, const TaggedPoint& v);

// Non-owning view over either representation of a tagged object (finite set
// or 1-D segment union). The distance and contact operations accept any mix.
class TaggedObjectView {
public:
  TaggedObjectView(const FiniteTaggedSet& s) : finite_(&s) {}
  TaggedObjectView(const TaggedLineSet& z) : line_(&z) {}

  bool is_finite() const { return finite_ != nullptr; }
  const FiniteTaggedSet& finite() const { return *finite_; }
  const TaggedLineSet& line() const { return *line_; }

  std::size_t dimension() const { return finite_ ? finite_->dimension() : 1; }
  bool empty() const { return finite_ ? finite_->empty() : line_->empty(); }

private:
  const FiniteTaggedSet* finite_ = nullptr;
  const TaggedLineSet* line_ = nullptr;
};

// Exact minimum of the squared pairwise distance. Both operands must be
// nonempty, of equal dimension, and closed (every segment attains its value
// endpoints), so the infimum is attained.
SquaredDistance set_distance_sq(TaggedObjectView a, TaggedObjectView b, unsigned digits = 9);

struct ContactReport {
  bool in_contact = false;
  std::optional<std::pair<TaggedPoint, TaggedPoint>> witness; // equal-value pair
};

// Contact between two disjoint objects: some a in A and b in B share a
// value. Operands sharing a (value, series) point are not two disjoint
// objects — that raises OverlapError.
ContactReport in_contact(TaggedObjectView a, TaggedObjectView b);

// The three faces of contact, each computed by its own route: the
// definitional pair scan, value-source intersection, and zero distance.
// `consistent` asserts they agree.
struct ContactEquivalenceReport {
  bool contact = false;
  bool value_intersect = false;
  bool zero_distance = false;
  bool consistent = false;
};

ContactEquivalenceReport verify_contact_equivalence(TaggedObjectView a, TaggedObjectView b);

// For operands with disjoint value sources (both bounded by construction
// here), the distance must be positive; returns that verdict.
bool check_positive_distance(TaggedObjectView a, TaggedObjectView b);

} // namespace tagset
