#pragma once

#include "tagset/sets.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tagset {

// single: one point per position. doubled: the split-interval model, two
// ordered copies per position — (x, series.lo) below (x, series.up) — which
// makes a disordered cut constructible at every interior position.
enum class SegmentMode { single, doubled };

// Which of a segment's copies at an endpoint position belong to the set.
// Interior positions always carry the full complement; partial endpoints
// arise only as cut residue, never in documents.
enum class EndpointOwnership : unsigned char { none, lower, upper, all };

// Closed 1-D segment of tagged points, lo <= hi (lo == hi is a degenerate
// point-segment).
struct TaggedSegment {
  Rational lo;
  Rational hi;
  SeriesTag series;
  SegmentMode mode = SegmentMode::single;
  EndpointOwnership lo_owned = EndpointOwnership::all;
  EndpointOwnership hi_owned = EndpointOwnership::all;
};

bool operator==(const TaggedSegment& a, const TaggedSegment& b);

TaggedSegment make_segment(Rational lo, Rational hi, SeriesTag series,
                           SegmentMode mode = SegmentMode::single);

// Derived per-copy tags of a segment: a single segment hosts points under
// its own tag; a doubled one hosts them under label+".lo" / label+".up"
// (the suffixes sort in copy order under the tag total order).
SeriesTag lower_copy_tag(const SeriesTag& base);
SeriesTag upper_copy_tag(const SeriesTag& base);

// Finite union of tagged segments on the line. Segments are kept sorted by
// (lo, hi, series); segments sharing a series tag may touch only at
// endpoints (overlap across different tags is superposition and is fine).
class TaggedLineSet {
public:
  TaggedLineSet() = default;
  explicit TaggedLineSet(std::vector<TaggedSegment> segments);

  static constexpr std::size_t dimension() { return 1; }
  bool empty() const { return segments_.empty(); }
  const std::vector<TaggedSegment>& segments() const { return segments_; }

  // True when no endpoint ownership is partial, i.e. the set is a closed
  // document-shaped union rather than cut residue.
  bool fully_closed() const;

  friend bool operator==(const TaggedLineSet& a, const TaggedLineSet& b) {
    return a.segments_ == b.segments_;
  }

private:
  std::vector<TaggedSegment> segments_;
};

struct ValueInterval {
  Rational lo;
  Rational hi;

  std::string to_string() const;
};

bool operator==(const ValueInterval& a, const ValueInterval& b);

// Union of the segments' value ranges, merged where they meet or overlap,
// sorted ascending. Multiplicity and endpoint ownership do not matter here.
std::vector<ValueInterval> value_projection(const TaggedLineSet& z);

// Derived tags of the copies one segment owns at position x; empty when x
// is outside its range.
std::vector<SeriesTag> segment_copies_at(const TaggedSegment& s, const Rational& x);

// All tagged points of the set at position x (deduplicated, sorted by
// series). Doubled segments contribute both copies on their whole range.
std::vector<TaggedPoint> points_at(const TaggedLineSet& z, const Rational& x);

// Number of distinct tagged points at position x; 0 outside the projection.
std::size_t multiplicity_at(const TaggedLineSet& z, const Rational& x);

// Per-series boundary: each derived series' projection is merged on its own
// and contributes its interval endpoints as tagged points. A degenerate
// point-segment is its own boundary; doubled segments report both copies.
FiniteTaggedSet boundary(const TaggedLineSet& z);

// How points at the cut position are assigned: left_closed sends them all
// left (type 1), right_closed all right (type 2), disordered splits them so
// both sides own one — the lowest-series point goes left (type 3).
enum class CutMode { left_closed, right_closed, disordered };

enum class CutType { type1, type2, type3 };

std::string to_string(CutType t);

// An order-respecting two-part partition of a line set at a position.
struct CutResult {
  Rational position;
  TaggedLineSet left;
  TaggedLineSet right;
  CutType cut_type;
};

// Largest/smallest attained value point of a set, if one exists. A side
// whose extreme value is approached but not owned (half-open cut residue)
// has no extreme point.
std::optional<TaggedPoint> max_value_point(const TaggedLineSet& z);
std::optional<TaggedPoint> min_value_point(const TaggedLineSet& z);

// Dedekind-type cut at `position`. Points below go left, points above go
// right, points at the position follow `mode`. Throws PreconditionError when
// the position is outside or on the boundary of the projection, or when
// disordered mode is requested at multiplicity < 2; positions strictly
// inside a projection gap surface as FourthTypeError from classification.
CutResult cut(const TaggedLineSet& z, const Rational& position, CutMode mode);

// Recomputes the cut type from the sides' extreme points; never trusts the
// stored field. Both-extremes-with-unequal-values (an uncovered gap between
// the sides) and neither-extreme raise FourthTypeError.
CutType classify_cut(const CutResult& r);

// Completeness surrogate at desk scale: the projection is one closed
// interval. Reports the leftmost gap otherwise.
struct CantorReport {
  bool continuous = false;
  std::optional<ValueInterval> first_gap; // open interval between projections
};

CantorReport cantor_continuous(const TaggedLineSet& z);

// Contact at every admissible canonical cut: every position strictly inside
// the projection's hull must carry at least two tagged points, so the
// canonical disordered cut there puts equal-value points on both sides.
struct PoincareReport {
  bool continuous = false;
  std::optional<Rational> counterexample; // a position whose cut fails contact
};

PoincareReport poincare_continuous(const TaggedLineSet& z);

// Independent evaluation of both continuity notions on an all-doubled set,
// where they are provably equivalent. Mixed-mode input is outside scope.
struct ContinuityEquivalenceReport {
  bool cantor = false;
  bool poincare = false;
  bool equivalent = false;
};

ContinuityEquivalenceReport verify_continuity_equivalence(const TaggedLineSet& z);

} // namespace tagset
