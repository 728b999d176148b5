#pragma once

#include "tagset/line.hpp"
#include "tagset/sets.hpp"
#include "tagset/trajectory.hpp"

#include <random>
#include <string>
#include <vector>

namespace tagset::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, int max_abs_num = 20, int max_den = 16) {
  return Rational(uniform_int(rng, -max_abs_num, max_abs_num), uniform_int(rng, 1, max_den));
}

inline Rational random_nonneg_rational(Rng& rng, int max_num = 20, int max_den = 16) {
  return Rational(uniform_int(rng, 0, max_num), uniform_int(rng, 1, max_den));
}

// Small coordinate grid so equal values actually happen.
inline Rational grid_rational(Rng& rng, int grid = 5) {
  return Rational(uniform_int(rng, 0, grid - 1), uniform_int(rng, 1, 2));
}

inline SeriesTag tag_of(int index, const std::string& prefix = "t") {
  return SeriesTag{Rational(index), prefix + std::to_string(index)};
}

inline Value random_value(Rng& rng, std::size_t dimension, int grid = 5) {
  std::vector<Rational> coords;
  coords.reserve(dimension);
  for (std::size_t i = 0; i < dimension; ++i) coords.push_back(grid_rational(rng, grid));
  return Value(std::move(coords));
}

// Random finite set; tags drawn from a per-prefix pool so two sets built
// with different prefixes are disjoint as tagged sets by construction.
inline FiniteTaggedSet random_finite_set(Rng& rng, std::size_t dimension, std::size_t count,
                                         const std::string& tag_prefix, int tag_pool = 6,
                                         int grid = 5) {
  std::vector<TaggedPoint> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    pts.emplace_back(random_value(rng, dimension, grid),
                     tag_of(uniform_int(rng, 0, tag_pool - 1), tag_prefix));
  }
  return FiniteTaggedSet(dimension, std::move(pts));
}

enum class ModeChoice { all_single, all_doubled, mixed };

inline SegmentMode pick_mode(Rng& rng, ModeChoice choice) {
  switch (choice) {
    case ModeChoice::all_single: return SegmentMode::single;
    case ModeChoice::all_doubled: return SegmentMode::doubled;
    case ModeChoice::mixed:
      return uniform_int(rng, 0, 1) ? SegmentMode::doubled : SegmentMode::single;
  }
  return SegmentMode::single;
}

// Segment union with a unique tag per segment (the same-tag overlap rule is
// then vacuous and overlap across segments is unrestricted).
inline TaggedLineSet random_line_set(Rng& rng, std::size_t segment_count, ModeChoice choice,
                                     const std::string& tag_prefix, int span = 12) {
  std::vector<TaggedSegment> segs;
  static int unique = 0;
  for (std::size_t i = 0; i < segment_count; ++i) {
    Rational lo(uniform_int(rng, 0, span), uniform_int(rng, 1, 4));
    Rational len(uniform_int(rng, 0, 6), uniform_int(rng, 1, 4));
    segs.push_back(make_segment(lo, lo + len, tag_of(unique++, tag_prefix), pick_mode(rng, choice)));
  }
  return TaggedLineSet(std::move(segs));
}

// Connected window: a chain of touching segments starting at `start`.
inline TaggedLineSet random_connected_window(Rng& rng, std::size_t segment_count, ModeChoice choice,
                                             const std::string& tag_prefix = "w",
                                             Rational start = Rational(0)) {
  std::vector<TaggedSegment> segs;
  static int unique = 0;
  Rational cursor = std::move(start);
  for (std::size_t i = 0; i < segment_count; ++i) {
    Rational len(uniform_int(rng, 1, 8), uniform_int(rng, 1, 4));
    segs.push_back(
        make_segment(cursor, cursor + len, tag_of(unique++, tag_prefix), pick_mode(rng, choice)));
    cursor += len;
  }
  return TaggedLineSet(std::move(segs));
}

// Two or more connected components with positive gaps between them.
inline TaggedLineSet random_gapped_set(Rng& rng, std::size_t components, ModeChoice choice,
                                       const std::string& tag_prefix = "g") {
  std::vector<TaggedSegment> segs;
  Rational cursor(0);
  for (std::size_t c = 0; c < components; ++c) {
    if (c > 0) cursor += Rational(uniform_int(rng, 1, 5), uniform_int(rng, 1, 3));
    auto window = random_connected_window(rng, 1 + uniform_int(rng, 0, 2), choice, tag_prefix, cursor);
    for (const auto& s : window.segments()) segs.push_back(s);
    cursor = window.segments().back().hi;
  }
  return TaggedLineSet(std::move(segs));
}

// A rational strictly inside the (assumed connected) projection, clear of
// the boundary.
inline Rational random_interior_position(Rng& rng, const TaggedLineSet& z) {
  const auto proj = value_projection(z);
  const Rational lo = proj.front().lo;
  const Rational hi = proj.back().hi;
  const Rational t(uniform_int(rng, 1, 31), 32);
  Rational pos = lo + (hi - lo) * t;
  if (pos == lo || pos == hi) pos = (lo + hi) / 2;
  return pos;
}

} // namespace tagset::testing
