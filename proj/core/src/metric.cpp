#include "tagset/metric.hpp"

#include <algorithm>

namespace tagset {

namespace {

void check_operands(TaggedObjectView a, TaggedObjectView b, const char* op) {
  if (a.empty() || b.empty()) throw EmptyOperand(op);
  if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
}

// Closed as a value set: each segment attains both of its value endpoints.
// Half-open cut residue is outside the distance/contact domain.
void check_value_closed(TaggedObjectView v, const char* op) {
  if (v.is_finite()) return;
  for (const auto& s : v.line().segments()) {
    if (s.lo_owned == EndpointOwnership::none || s.hi_owned == EndpointOwnership::none)
      throw PreconditionError(std::string(op) + ": operand is not a closed object");
  }
}

Rational segment_gap_sq(const TaggedSegment& a, const TaggedSegment& b) {
  if (a.lo <= b.hi && b.lo <= a.hi) return Rational(0);
  const Rational gap = a.hi < b.lo ? b.lo - a.hi : a.lo - b.hi;
  return gap * gap;
}

Rational point_segment_gap_sq(const Rational& x, const TaggedSegment& s) {
  if (x < s.lo) return (s.lo - x) * (s.lo - x);
  if (s.hi < x) return (x - s.hi) * (x - s.hi);
  return Rational(0);
}

Rational min_distance_sq(TaggedObjectView a, TaggedObjectView b) {
  std::optional<Rational> best;
  auto consider = [&](Rational d) {
    if (!best || d < *best) best = std::move(d);
  };
  if (a.is_finite() && b.is_finite()) {
    for (const auto& u : a.finite().points())
      for (const auto& v : b.finite().points())
        consider(point_distance_sq(u, v).value);
  } else if (!a.is_finite() && !b.is_finite()) {
    for (const auto& sa : a.line().segments())
      for (const auto& sb : b.line().segments())
        consider(segment_gap_sq(sa, sb));
  } else {
    const auto& pts = (a.is_finite() ? a : b).finite().points();
    const auto& segs = (a.is_finite() ? b : a).line().segments();
    for (const auto& p : pts)
      for (const auto& s : segs)
        consider(point_segment_gap_sq(p.value()[0], s));
  }
  return *best; // operands checked nonempty
}

std::vector<Value> sorted_values(const FiniteTaggedSet& s) {
  std::vector<Value> vals;
  vals.reserve(s.size());
  for (const auto& p : s.points()) vals.push_back(p.value());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end()); // points are value-sorted
  return vals;
}

// Route (ii): do the value sources intersect, decided at set level.
bool value_sources_intersect(TaggedObjectView a, TaggedObjectView b) {
  if (a.is_finite() && b.is_finite()) {
    const auto va = sorted_values(a.finite());
    const auto vb = sorted_values(b.finite());
    std::size_t i = 0, j = 0;
    while (i < va.size() && j < vb.size()) {
      const int c = compare(va[i], vb[j]);
      if (c == 0) return true;
      (c < 0 ? i : j)++;
    }
    return false;
  }
  if (!a.is_finite() && !b.is_finite()) {
    const auto pa = value_projection(a.line());
    const auto pb = value_projection(b.line());
    for (const auto& ia : pa)
      for (const auto& ib : pb)
        if (ia.lo <= ib.hi && ib.lo <= ia.hi) return true;
    return false;
  }
  const auto& fin = (a.is_finite() ? a : b).finite();
  const auto proj = value_projection((a.is_finite() ? b : a).line());
  for (const auto& p : fin.points()) {
    const Rational& x = p.value()[0];
    for (const auto& iv : proj)
      if (iv.lo <= x && x <= iv.hi) return true;
  }
  return false;
}

// A tagged point of a line set at value x, if the set owns one there.
std::optional<TaggedPoint> line_point_at(const TaggedLineSet& z, const Rational& x) {
  auto pts = points_at(z, x);
  if (pts.empty()) return std::nullopt;
  return pts.front();
}

// Shared (value, series) point of the two operands, if any: the operands
// then fail the disjoint-objects requirement.
std::optional<TaggedPoint> shared_tagged_point(TaggedObjectView a, TaggedObjectView b) {
  if (a.is_finite() && b.is_finite()) {
    for (const auto& p : a.finite().points())
      if (b.finite().contains(p)) return p;
    return std::nullopt;
  }
  if (a.is_finite() || b.is_finite()) {
    const auto& fin = (a.is_finite() ? a : b).finite();
    const auto& line = (a.is_finite() ? b : a).line();
    for (const auto& p : fin.points()) {
      for (const auto& q : points_at(line, p.value()[0]))
        if (q == p) return p;
    }
    return std::nullopt;
  }
  for (const auto& sa : a.line().segments()) {
    for (const auto& sb : b.line().segments()) {
      if (sb.hi < sa.lo || sa.hi < sb.lo) continue;
      const Rational lo = std::max(sa.lo, sb.lo);
      const Rational hi = std::min(sa.hi, sb.hi);
      // Sample one interior position; at a degenerate touch compare the
      // owned copies directly.
      const Rational x = lo < hi ? (lo + hi) / 2 : lo;
      const auto ta = segment_copies_at(sa, x);
      const auto tb = segment_copies_at(sb, x);
      for (const auto& u : ta)
        for (const auto& v : tb)
          if (u == v) return TaggedPoint(Value{x}, u);
    }
  }
  return std::nullopt;
}

} // namespace

SquaredDistance make_squared_distance(Rational value, unsigned digits) {
  if (value < 0) throw Error("squared distance cannot be negative");
  std::string approx = sqrt_decimal(value, digits);
  return SquaredDistance{std::move(value), std::move(approx)};
}

SquaredDistance point_distance_sq(const TaggedPoint& u, const TaggedPoint& v) {
  if (u.value().dimension() != v.value().dimension())
    throw DimensionMismatch(u.value().dimension(), v.value().dimension());
  Rational sum = 0;
  for (std::size_t i = 0; i < u.value().dimension(); ++i) {
    const Rational d = u.value()[i] - v.value()[i];
    sum += d * d;
  }
  return make_squared_distance(std::move(sum));
}

SquaredDistance set_distance_sq(TaggedObjectView a, TaggedObjectView b, unsigned digits) {
  check_operands(a, b, "set_distance_sq");
  check_value_closed(a, "set_distance_sq");
  check_value_closed(b, "set_distance_sq");
  return make_squared_distance(min_distance_sq(a, b), digits);
}

ContactReport in_contact(TaggedObjectView a, TaggedObjectView b) {
  check_operands(a, b, "in_contact");
  check_value_closed(a, "in_contact");
  check_value_closed(b, "in_contact");
  if (auto shared = shared_tagged_point(a, b))
    throw OverlapError("operands are not disjoint objects: both contain " + shared->to_string());

  ContactReport report;
  // Route (i): exhibit a, b with equal values.
  if (a.is_finite() && b.is_finite()) {
    const auto& pa = a.finite().points();
    const auto& pb = b.finite().points();
    std::size_t i = 0, j = 0;
    while (i < pa.size() && j < pb.size()) {
      const int c = compare(pa[i].value(), pb[j].value());
      if (c == 0) {
        report.in_contact = true;
        report.witness = {pa[i], pb[j]};
        return report;
      }
      (c < 0 ? i : j)++;
    }
    return report;
  }
  if (a.is_finite() || b.is_finite()) {
    const bool a_finite = a.is_finite();
    const auto& fin = (a_finite ? a : b).finite();
    const auto& line = (a_finite ? b : a).line();
    for (const auto& p : fin.points()) {
      if (auto q = line_point_at(line, p.value()[0])) {
        report.in_contact = true;
        report.witness = a_finite ? std::make_pair(p, *q) : std::make_pair(*q, p);
        return report;
      }
    }
    return report;
  }
  for (const auto& sa : a.line().segments()) {
    for (const auto& sb : b.line().segments()) {
      if (sb.hi < sa.lo || sa.hi < sb.lo) continue;
      const Rational lo = std::max(sa.lo, sb.lo);
      const Rational hi = std::min(sa.hi, sb.hi);
      const Rational x = lo < hi ? (lo + hi) / 2 : lo;
      const auto ta = segment_copies_at(sa, x);
      const auto tb = segment_copies_at(sb, x);
      if (!ta.empty() && !tb.empty()) {
        report.in_contact = true;
        report.witness = {TaggedPoint(Value{x}, ta.front()), TaggedPoint(Value{x}, tb.front())};
        return report;
      }
    }
  }
  return report;
}

ContactEquivalenceReport verify_contact_equivalence(TaggedObjectView a, TaggedObjectView b) {
  ContactEquivalenceReport report;
  report.contact = in_contact(a, b).in_contact;
  report.value_intersect = value_sources_intersect(a, b);
  report.zero_distance = set_distance_sq(a, b).value == 0;
  report.consistent =
      report.contact == report.value_intersect && report.value_intersect == report.zero_distance;
  return report;
}

bool check_positive_distance(TaggedObjectView a, TaggedObjectView b) {
  check_operands(a, b, "check_positive_distance");
  check_value_closed(a, "check_positive_distance");
  check_value_closed(b, "check_positive_distance");
  if (value_sources_intersect(a, b))
    throw PreconditionError("check_positive_distance: value sources intersect");
  return set_distance_sq(a, b).value > 0;
}

} // namespace tagset
