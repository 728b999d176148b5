#include "tagset/trajectory.hpp"

#include <algorithm>

namespace tagset {

Phase::Phase(SeriesTag tag, std::vector<Breakpoint> breakpoints)
    : tag_(std::move(tag)), breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.empty()) throw PreconditionError("a phase needs at least one breakpoint");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1].param < breakpoints_[i].param))
      throw PreconditionError("phase '" + tag_.label +
                              "': breakpoint parameters must be strictly increasing");
  }
}

Rational Phase::position_at(const Rational& param) const {
  if (param < param_lo() || param_hi() < param)
    throw PreconditionError("parameter " + format_rational(param) + " outside phase '" +
                            tag_.label + "'");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    const auto& a = breakpoints_[i - 1];
    const auto& b = breakpoints_[i];
    if (param <= b.param)
      return a.position + (b.position - a.position) * (param - a.param) / (b.param - a.param);
  }
  return breakpoints_.back().position; // param == param_hi, or single breakpoint
}

Trajectory::Trajectory(std::vector<Phase> phases) : phases_(std::move(phases)) {
  if (phases_.empty()) throw PreconditionError("a trajectory needs at least one phase");
  std::vector<SeriesTag> tags;
  tags.reserve(phases_.size());
  for (const auto& p : phases_) tags.push_back(p.tag());
  std::sort(tags.begin(), tags.end());
  if (std::adjacent_find(tags.begin(), tags.end(), [](const SeriesTag& a, const SeriesTag& b) {
        return a == b;
      }) != tags.end())
    throw PreconditionError("phase tags must be distinct");
  for (std::size_t i = 0; i + 1 < phases_.size(); ++i) {
    const auto& a = phases_[i];
    const auto& b = phases_[i + 1];
    if (a.param_hi() != b.param_lo())
      throw PreconditionError("phase '" + b.tag().label + "' does not start where phase '" +
                              a.tag().label + "' ends");
    junctions_.push_back(JunctionReport{i, a.param_hi(), a.end_position(), b.start_position(),
                                        a.end_position() == b.start_position()});
  }
}

bool Trajectory::in_contact_everywhere() const {
  return std::all_of(junctions_.begin(), junctions_.end(),
                     [](const JunctionReport& j) { return j.in_contact; });
}

SeriesTag fiber_tag(const Phase& phase, const Rational& param) {
  return SeriesTag{param, phase.tag().label};
}

FiniteTaggedSet value_fiber(const Trajectory& t, const Rational& x) {
  std::vector<TaggedPoint> pts;
  for (const auto& phase : t.phases()) {
    const auto& bp = phase.breakpoints();
    if (bp.size() == 1) {
      if (bp[0].position == x) pts.emplace_back(Value{x}, fiber_tag(phase, bp[0].param));
      continue;
    }
    for (std::size_t i = 1; i < bp.size(); ++i) {
      const auto& a = bp[i - 1];
      const auto& b = bp[i];
      if (a.position == b.position) {
        // Constant piece: the whole piece sits at one position; report its
        // endpoints rather than a continuum of parameters.
        if (a.position == x) {
          pts.emplace_back(Value{x}, fiber_tag(phase, a.param));
          pts.emplace_back(Value{x}, fiber_tag(phase, b.param));
        }
        continue;
      }
      const Rational lo = std::min(a.position, b.position);
      const Rational hi = std::max(a.position, b.position);
      if (x < lo || hi < x) continue;
      const Rational param =
          a.param + (b.param - a.param) * (x - a.position) / (b.position - a.position);
      pts.emplace_back(Value{x}, fiber_tag(phase, param));
    }
  }
  return FiniteTaggedSet(1, std::move(pts));
}

ApexReport apex_query(const Trajectory& t) {
  std::optional<Rational> apex;
  for (const auto& phase : t.phases())
    for (const auto& bp : phase.breakpoints())
      if (!apex || *apex < bp.position) apex = bp.position;
  ApexReport report{*apex, value_fiber(t, *apex), {}};
  for (const auto& phase : t.phases()) {
    const bool attains = std::any_of(phase.breakpoints().begin(), phase.breakpoints().end(),
                                     [&](const Breakpoint& b) { return b.position == *apex; });
    if (attains) report.owning_phases.push_back(phase.tag());
  }
  return report;
}

namespace {

Phase truncate_before(const Phase& phase, const Rational& y) {
  std::vector<Breakpoint> bp;
  for (const auto& b : phase.breakpoints()) {
    if (b.param < y) bp.push_back(b);
  }
  bp.push_back(Breakpoint{y, phase.position_at(y)});
  return Phase(phase.tag(), std::move(bp));
}

Phase truncate_after(const Phase& phase, const Rational& y) {
  std::vector<Breakpoint> bp;
  bp.push_back(Breakpoint{y, phase.position_at(y)});
  for (const auto& b : phase.breakpoints()) {
    if (y < b.param) bp.push_back(b);
  }
  return Phase(phase.tag(), std::move(bp));
}

} // namespace

SeriesCutResult series_cut(const Trajectory& t, const Rational& y) {
  if (y <= t.param_lo() || t.param_hi() <= y)
    throw PreconditionError("series parameter " + format_rational(y) +
                            " is not strictly inside the trajectory range");
  std::vector<Phase> before;
  std::vector<Phase> after;
  for (const auto& phase : t.phases()) {
    if (phase.param_hi() <= y) {
      before.push_back(phase);
    } else if (y <= phase.param_lo()) {
      after.push_back(phase);
    } else {
      before.push_back(truncate_before(phase, y));
      after.push_back(truncate_after(phase, y));
    }
  }
  Trajectory s(std::move(before));
  Trajectory rest(std::move(after));
  TaggedPoint last(Value{s.phases().back().end_position()}, fiber_tag(s.phases().back(), y));
  TaggedPoint first(Value{rest.phases().front().start_position()},
                    fiber_tag(rest.phases().front(), y));
  const bool equal_values = last.value() == first.value();
  return SeriesCutResult{std::move(s), std::move(rest), std::move(last), std::move(first), y,
                         equal_values};
}

std::string MotionEntry::to_string() const {
  if (kind == Kind::value_change) {
    if (position_from == position_to)
      return "value steady at " + format_rational(position_from) + " under '" +
             from_series.label + "' (param " + format_rational(param_from) + ".." +
             format_rational(param_to) + ")";
    return "value " + format_rational(position_from) + " -> " + format_rational(position_to) +
           " under '" + from_series.label + "' (param " + format_rational(param_from) + ".." +
           format_rational(param_to) + ")";
  }
  if (position_from == position_to)
    return "series '" + from_series.label + "' -> '" + to_series.label + "' at position " +
           format_rational(position_from);
  return "series '" + from_series.label + "' -> '" + to_series.label + "', position jumps " +
         format_rational(position_from) + " -> " + format_rational(position_to);
}

std::vector<MotionEntry> describe_motion(const Trajectory& t) {
  std::vector<MotionEntry> entries;
  for (std::size_t i = 0; i < t.phases().size(); ++i) {
    const auto& phase = t.phases()[i];
    const auto& bp = phase.breakpoints();
    for (std::size_t j = 1; j < bp.size(); ++j) {
      entries.push_back(MotionEntry{MotionEntry::Kind::value_change, phase.tag(), phase.tag(),
                                    bp[j - 1].param, bp[j].param, bp[j - 1].position,
                                    bp[j].position});
    }
    if (i + 1 < t.phases().size()) {
      const auto& j = t.junctions()[i];
      entries.push_back(MotionEntry{MotionEntry::Kind::series_change, phase.tag(),
                                    t.phases()[i + 1].tag(), j.param, j.param, j.end_position,
                                    j.start_position});
    }
  }
  return entries;
}

} // namespace tagset
