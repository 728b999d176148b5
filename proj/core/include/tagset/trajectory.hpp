#pragma once

#include "tagset/sets.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tagset {

struct Breakpoint {
  Rational param;    // series parameter, time-like
  Rational position; // 1-D position

  friend bool operator==(const Breakpoint& a, const Breakpoint& b) {
    return a.param == b.param && a.position == b.position;
  }
};

// One motion phase: a tagged piecewise-linear map from an ordered series
// parameter to position. Breakpoint parameters are strictly increasing.
class Phase {
public:
  Phase(SeriesTag tag, std::vector<Breakpoint> breakpoints);

  const SeriesTag& tag() const { return tag_; }
  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }

  const Rational& param_lo() const { return breakpoints_.front().param; }
  const Rational& param_hi() const { return breakpoints_.back().param; }
  const Rational& start_position() const { return breakpoints_.front().position; }
  const Rational& end_position() const { return breakpoints_.back().position; }
  std::size_t piece_count() const { return breakpoints_.size() - 1; }

  // Exact linear interpolation; throws PreconditionError outside the range.
  Rational position_at(const Rational& param) const;

  friend bool operator==(const Phase& a, const Phase& b) {
    return a.tag_ == b.tag_ && a.breakpoints_ == b.breakpoints_;
  }

private:
  SeriesTag tag_;
  std::vector<Breakpoint> breakpoints_;
};

// Contact verdict at the junction between phase `index` and `index + 1`:
// the shared parameter, the two positions, and whether they agree exactly.
// A mismatch is a reportable verdict, not an error — jump motions are
// representable on purpose.
struct JunctionReport {
  std::size_t index;
  Rational param;
  Rational end_position;   // phase[index] at the junction
  Rational start_position; // phase[index + 1] at the junction
  bool in_contact;
};

// Ordered, nonempty list of phases whose parameter intervals abut exactly.
// Phase tags must be distinct so that fiber points stay distinguishable.
class Trajectory {
public:
  explicit Trajectory(std::vector<Phase> phases);

  const std::vector<Phase>& phases() const { return phases_; }
  const std::vector<JunctionReport>& junctions() const { return junctions_; }
  bool in_contact_everywhere() const;

  const Rational& param_lo() const { return phases_.front().param_lo(); }
  const Rational& param_hi() const { return phases_.back().param_hi(); }

  friend bool operator==(const Trajectory& a, const Trajectory& b) {
    return a.phases_ == b.phases_;
  }

private:
  std::vector<Phase> phases_;
  std::vector<JunctionReport> junctions_;
};

// Series tag of the trajectory point a phase owns at one parameter:
// ordered by the parameter, labelled by the phase.
SeriesTag fiber_tag(const Phase& phase, const Rational& param);

// All tagged points of the trajectory at position x: one per parameter
// solving path(t) = x, solved exactly piece by piece. A constant piece
// sitting at x contributes its two endpoint parameters.
FiniteTaggedSet value_fiber(const Trajectory& t, const Rational& x);

// The apex question: which phases own the highest position?
struct ApexReport {
  Rational apex;
  FiniteTaggedSet fiber;                // all points at the apex
  std::vector<SeriesTag> owning_phases; // in trajectory order
};

ApexReport apex_query(const Trajectory& t);

// Split at a series parameter strictly inside the range: the before part
// keeps parameters <= y, the after part >= y; both own a point at y.
struct SeriesCutResult {
  Trajectory before;
  Trajectory after;
  TaggedPoint last_of_before;  // s
  TaggedPoint first_of_after;  // t
  Rational parameter;          // y; both points carry it as series ordinal
  bool values_equal;           // s and t share the position iff the motion
                               // is position-continuous at y
};

SeriesCutResult series_cut(const Trajectory& t, const Rational& y);

// The motion unrolled as alternating entries: a value change per linear
// piece, a series change per junction (position fixed when in contact).
struct MotionEntry {
  enum class Kind { value_change, series_change };
  Kind kind;
  SeriesTag from_series;
  SeriesTag to_series; // == from_series for value changes
  Rational param_from;
  Rational param_to;
  Rational position_from;
  Rational position_to;

  std::string to_string() const;
};

std::vector<MotionEntry> describe_motion(const Trajectory& t);

} // namespace tagset
