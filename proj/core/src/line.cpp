#include "tagset/line.hpp"

#include <algorithm>
#include <map>

namespace tagset {

namespace {

bool valid_ownership(SegmentMode mode, EndpointOwnership o) {
  if (mode == SegmentMode::single)
    return o == EndpointOwnership::none || o == EndpointOwnership::all;
  return true;
}

void validate_segment(const TaggedSegment& s) {
  if (s.hi < s.lo) throw Error("segment endpoints out of order");
  if (!valid_ownership(s.mode, s.lo_owned) || !valid_ownership(s.mode, s.hi_owned))
    throw Error("endpoint ownership incompatible with segment mode");
  if (s.lo == s.hi && s.lo_owned != s.hi_owned)
    throw Error("degenerate segment has one position; endpoint ownership must agree");
}

bool segment_empty(const TaggedSegment& s) {
  return s.lo == s.hi && s.lo_owned == EndpointOwnership::none;
}

// Derived tags of the copies a segment owns at position x; empty when x is
// outside the segment.
void append_copies_at(const TaggedSegment& s, const Rational& x, std::vector<SeriesTag>& out) {
  if (x < s.lo || s.hi < x) return;
  EndpointOwnership owned = EndpointOwnership::all;
  if (x == s.lo) owned = s.lo_owned;
  if (x == s.hi) owned = s.hi_owned; // degenerate segments store the same mask twice
  if (owned == EndpointOwnership::none) return;
  if (s.mode == SegmentMode::single) {
    out.push_back(s.series);
    return;
  }
  if (owned == EndpointOwnership::all || owned == EndpointOwnership::lower)
    out.push_back(lower_copy_tag(s.series));
  if (owned == EndpointOwnership::all || owned == EndpointOwnership::upper)
    out.push_back(upper_copy_tag(s.series));
}

std::vector<ValueInterval> merge_ranges(std::vector<ValueInterval> ranges) {
  std::sort(ranges.begin(), ranges.end(), [](const ValueInterval& a, const ValueInterval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  std::vector<ValueInterval> merged;
  for (auto& r : ranges) {
    if (!merged.empty() && r.lo <= merged.back().hi) {
      if (merged.back().hi < r.hi) merged.back().hi = r.hi;
    } else {
      merged.push_back(std::move(r));
    }
  }
  return merged;
}

} // namespace

bool operator==(const TaggedSegment& a, const TaggedSegment& b) {
  return a.lo == b.lo && a.hi == b.hi && a.series == b.series && a.mode == b.mode &&
         a.lo_owned == b.lo_owned && a.hi_owned == b.hi_owned;
}

TaggedSegment make_segment(Rational lo, Rational hi, SeriesTag series, SegmentMode mode) {
  TaggedSegment s{std::move(lo), std::move(hi), std::move(series), mode,
                  EndpointOwnership::all, EndpointOwnership::all};
  validate_segment(s);
  return s;
}

SeriesTag lower_copy_tag(const SeriesTag& base) {
  return SeriesTag{base.ordinal, base.label + ".lo"};
}

SeriesTag upper_copy_tag(const SeriesTag& base) {
  return SeriesTag{base.ordinal, base.label + ".up"};
}

TaggedLineSet::TaggedLineSet(std::vector<TaggedSegment> segments) : segments_(std::move(segments)) {
  for (const auto& s : segments_) validate_segment(s);
  std::erase_if(segments_, segment_empty);
  std::sort(segments_.begin(), segments_.end(), [](const TaggedSegment& a, const TaggedSegment& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.series < b.series;
  });
  // Same-tag segments may meet only at endpoints.
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    for (std::size_t j = i + 1; j < segments_.size(); ++j) {
      const auto& a = segments_[i];
      const auto& b = segments_[j];
      if (b.lo >= a.hi) break; // sorted by lo; later segments start at or past a.hi
      if (a.series == b.series)
        throw Error("segments tagged '" + a.series.label + "' overlap beyond an endpoint");
    }
  }
}

bool TaggedLineSet::fully_closed() const {
  return std::all_of(segments_.begin(), segments_.end(), [](const TaggedSegment& s) {
    return s.lo_owned == EndpointOwnership::all && s.hi_owned == EndpointOwnership::all;
  });
}

std::string ValueInterval::to_string() const {
  return "[" + format_rational(lo) + ", " + format_rational(hi) + "]";
}

bool operator==(const ValueInterval& a, const ValueInterval& b) {
  return a.lo == b.lo && a.hi == b.hi;
}

std::vector<ValueInterval> value_projection(const TaggedLineSet& z) {
  std::vector<ValueInterval> ranges;
  ranges.reserve(z.segments().size());
  for (const auto& s : z.segments()) ranges.push_back({s.lo, s.hi});
  return merge_ranges(std::move(ranges));
}

std::vector<SeriesTag> segment_copies_at(const TaggedSegment& s, const Rational& x) {
  std::vector<SeriesTag> tags;
  append_copies_at(s, x, tags);
  return tags;
}

std::vector<TaggedPoint> points_at(const TaggedLineSet& z, const Rational& x) {
  std::vector<SeriesTag> tags;
  for (const auto& s : z.segments()) append_copies_at(s, x, tags);
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end(),
                         [](const SeriesTag& a, const SeriesTag& b) { return a == b; }),
             tags.end());
  std::vector<TaggedPoint> pts;
  pts.reserve(tags.size());
  for (auto& t : tags) pts.emplace_back(Value{x}, std::move(t));
  return pts;
}

std::size_t multiplicity_at(const TaggedLineSet& z, const Rational& x) {
  return points_at(z, x).size();
}

FiniteTaggedSet boundary(const TaggedLineSet& z) {
  std::map<SeriesTag, std::vector<ValueInterval>> per_series;
  for (const auto& s : z.segments()) {
    if (s.mode == SegmentMode::single) {
      per_series[s.series].push_back({s.lo, s.hi});
    } else {
      per_series[lower_copy_tag(s.series)].push_back({s.lo, s.hi});
      per_series[upper_copy_tag(s.series)].push_back({s.lo, s.hi});
    }
  }
  std::vector<TaggedPoint> pts;
  for (auto& [tag, ranges] : per_series) {
    for (const auto& iv : merge_ranges(std::move(ranges))) {
      pts.emplace_back(Value{iv.lo}, tag);
      if (iv.hi != iv.lo) pts.emplace_back(Value{iv.hi}, tag);
    }
  }
  return FiniteTaggedSet(1, std::move(pts));
}

std::string to_string(CutType t) {
  switch (t) {
    case CutType::type1: return "Type1";
    case CutType::type2: return "Type2";
    case CutType::type3: return "Type3";
  }
  return "?";
}

namespace {

Rational sup_value(const TaggedLineSet& z) {
  Rational best = z.segments().front().hi;
  for (const auto& s : z.segments())
    if (best < s.hi) best = s.hi;
  return best;
}

Rational inf_value(const TaggedLineSet& z) {
  Rational best = z.segments().front().lo;
  for (const auto& s : z.segments())
    if (s.lo < best) best = s.lo;
  return best;
}

} // namespace

std::optional<TaggedPoint> max_value_point(const TaggedLineSet& z) {
  if (z.empty()) return std::nullopt;
  const Rational sup = sup_value(z);
  auto pts = points_at(z, sup);
  if (pts.empty()) return std::nullopt; // approached from below, never owned
  return pts.front();
}

std::optional<TaggedPoint> min_value_point(const TaggedLineSet& z) {
  if (z.empty()) return std::nullopt;
  const Rational inf = inf_value(z);
  auto pts = points_at(z, inf);
  if (pts.empty()) return std::nullopt;
  return pts.front();
}

namespace {

// One owned copy of one segment at the cut position.
struct CopyAtCut {
  std::size_t segment;
  bool upper; // doubled upper copy
  SeriesTag tag;
};

EndpointOwnership mask_from(bool has_lower, bool has_upper, SegmentMode mode) {
  if (mode == SegmentMode::single) return has_lower ? EndpointOwnership::all : EndpointOwnership::none;
  if (has_lower && has_upper) return EndpointOwnership::all;
  if (has_lower) return EndpointOwnership::lower;
  if (has_upper) return EndpointOwnership::upper;
  return EndpointOwnership::none;
}

void push_piece(std::vector<TaggedSegment>& out, TaggedSegment piece) {
  if (!segment_empty(piece)) out.push_back(std::move(piece));
}

} // namespace

CutResult cut(const TaggedLineSet& z, const Rational& position, CutMode mode) {
  const auto proj = value_projection(z);
  if (proj.empty()) throw PreconditionError("cannot cut an empty set");
  if (position <= proj.front().lo || proj.back().hi <= position)
    throw PreconditionError("cut position " + format_rational(position) +
                            " is outside or on the boundary of the value projection");
  for (const auto& iv : proj) {
    if (position == iv.lo || position == iv.hi)
      throw PreconditionError("cut position " + format_rational(position) +
                              " lies on the boundary of the value projection");
  }

  // Owned copies at the cut position. Touching same-tag segments can both
  // own the same tagged point there, so assignment is by distinct tag.
  std::vector<CopyAtCut> at_cut;
  for (std::size_t i = 0; i < z.segments().size(); ++i) {
    std::vector<SeriesTag> tags;
    append_copies_at(z.segments()[i], position, tags);
    for (auto& t : tags) {
      const bool upper =
          z.segments()[i].mode == SegmentMode::doubled && t == upper_copy_tag(z.segments()[i].series);
      at_cut.push_back(CopyAtCut{i, upper, std::move(t)});
    }
  }
  std::sort(at_cut.begin(), at_cut.end(),
            [](const CopyAtCut& a, const CopyAtCut& b) { return a.tag < b.tag; });
  const std::size_t multiplicity = multiplicity_at(z, position);

  if (mode == CutMode::disordered && multiplicity < 2)
    throw PreconditionError("disordered cut needs multiplicity >= 2 at " +
                            format_rational(position) + "; found " +
                            std::to_string(multiplicity));

  // Which tags go left: all, none, or just the lowest-series one.
  auto goes_left = [&](std::size_t tag_rank) {
    switch (mode) {
      case CutMode::left_closed: return true;
      case CutMode::right_closed: return false;
      case CutMode::disordered: return tag_rank == 0;
    }
    return false;
  };
  std::vector<bool> seg_left_lower(z.segments().size(), false);
  std::vector<bool> seg_left_upper(z.segments().size(), false);
  std::vector<bool> seg_right_lower(z.segments().size(), false);
  std::vector<bool> seg_right_upper(z.segments().size(), false);
  std::size_t tag_rank = 0;
  for (std::size_t k = 0; k < at_cut.size(); ++k) {
    if (k > 0 && !(at_cut[k - 1].tag == at_cut[k].tag)) ++tag_rank;
    const auto& c = at_cut[k];
    auto& lower_flag = goes_left(tag_rank) ? seg_left_lower : seg_right_lower;
    auto& upper_flag = goes_left(tag_rank) ? seg_left_upper : seg_right_upper;
    (c.upper ? upper_flag : lower_flag)[c.segment] = true;
  }

  std::vector<TaggedSegment> left_segs;
  std::vector<TaggedSegment> right_segs;
  for (std::size_t i = 0; i < z.segments().size(); ++i) {
    const auto& s = z.segments()[i];
    if (s.hi < position) {
      left_segs.push_back(s);
      continue;
    }
    if (position < s.lo) {
      right_segs.push_back(s);
      continue;
    }
    const auto left_mask = mask_from(seg_left_lower[i], seg_left_upper[i], s.mode);
    const auto right_mask = mask_from(seg_right_lower[i], seg_right_upper[i], s.mode);
    if (s.lo < position) {
      push_piece(left_segs, TaggedSegment{s.lo, position, s.series, s.mode, s.lo_owned, left_mask});
    } else { // s.lo == position: only the owned copies remain on the left
      push_piece(left_segs, TaggedSegment{position, position, s.series, s.mode, left_mask, left_mask});
    }
    if (position < s.hi) {
      push_piece(right_segs, TaggedSegment{position, s.hi, s.series, s.mode, right_mask, s.hi_owned});
    } else {
      push_piece(right_segs, TaggedSegment{position, position, s.series, s.mode, right_mask, right_mask});
    }
  }

  CutResult result{position, TaggedLineSet(std::move(left_segs)), TaggedLineSet(std::move(right_segs)),
                   CutType::type1};
  result.cut_type = classify_cut(result); // may raise FourthTypeError on gapped input
  return result;
}

CutType classify_cut(const CutResult& r) {
  if (r.left.empty() || r.right.empty())
    throw PreconditionError("a Dedekind-type cut needs two nonempty sides");
  const auto largest = max_value_point(r.left);
  const auto smallest = min_value_point(r.right);
  if (largest && smallest) {
    if (largest->value() == smallest->value()) return CutType::type3;
    // Positions strictly between the extremes belong to neither side.
    throw FourthTypeError(largest->value()[0], smallest->value()[0]);
  }
  if (largest) return CutType::type1;
  if (smallest) return CutType::type2;
  throw FourthTypeError(sup_value(r.left), inf_value(r.right));
}

CantorReport cantor_continuous(const TaggedLineSet& z) {
  if (z.empty()) throw EmptyOperand("cantor_continuous");
  const auto proj = value_projection(z);
  CantorReport report;
  report.continuous = proj.size() == 1;
  if (!report.continuous) report.first_gap = ValueInterval{proj[0].hi, proj[1].lo};
  return report;
}

PoincareReport poincare_continuous(const TaggedLineSet& z) {
  if (z.empty()) throw EmptyOperand("poincare_continuous");
  const auto proj = value_projection(z);
  PoincareReport report;
  if (proj.size() > 1) {
    // Cuts inside a gap separate the sides by a positive distance.
    report.counterexample = (proj[0].hi + proj[1].lo) / 2;
    return report;
  }
  const Rational lo = proj.front().lo;
  const Rational hi = proj.front().hi;
  if (lo == hi) {
    report.continuous = true; // a single position admits no interior cut
    return report;
  }
  // Multiplicity is piecewise constant between segment endpoints, so the
  // projection interior is covered by checking each interior endpoint and
  // one sample inside each cell.
  std::vector<Rational> events{lo, hi};
  for (const auto& s : z.segments()) {
    if (lo < s.lo && s.lo < hi) events.push_back(s.lo);
    if (lo < s.hi && s.hi < hi) events.push_back(s.hi);
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());
  auto fails_at = [&](const Rational& x) { return multiplicity_at(z, x) < 2; };
  for (std::size_t i = 0; i + 1 < events.size(); ++i) {
    const Rational mid = (events[i] + events[i + 1]) / 2;
    if (fails_at(mid)) {
      report.counterexample = mid;
      return report;
    }
    if (i + 2 < events.size() && fails_at(events[i + 1])) {
      report.counterexample = events[i + 1];
      return report;
    }
  }
  report.continuous = true;
  return report;
}

ContinuityEquivalenceReport verify_continuity_equivalence(const TaggedLineSet& z) {
  if (z.empty()) throw EmptyOperand("verify_continuity_equivalence");
  for (const auto& s : z.segments()) {
    if (s.mode != SegmentMode::doubled)
      throw PreconditionError(
          "continuity equivalence is scoped to doubled-mode models; segment tagged '" +
          s.series.label + "' is single");
  }
  ContinuityEquivalenceReport report;
  report.cantor = cantor_continuous(z).continuous;
  report.poincare = poincare_continuous(z).continuous;
  report.equivalent = report.cantor == report.poincare;
  return report;
}

} // namespace tagset
