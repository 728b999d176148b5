#include "tagset/trajectory.hpp"

#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tagset/metric.hpp"

using namespace tagset;
using namespace tagset::testing;

namespace {

SeriesTag tag(const char* label, int ordinal = 0) {
  return SeriesTag{Rational(ordinal), label};
}

// Vertical throw: up to height 10, then back down.
Trajectory ball() {
  return Trajectory({Phase(tag("up", 0), {{Rational(0), Rational(0)}, {Rational(1), Rational(10)}}),
                     Phase(tag("down", 1), {{Rational(1), Rational(10)}, {Rational(2), Rational(0)}})});
}

Trajectory jump_trajectory() {
  return Trajectory({Phase(tag("up", 0), {{Rational(0), Rational(0)}, {Rational(1), Rational(10)}}),
                     Phase(tag("down", 1), {{Rational(1), Rational(9)}, {Rational(2), Rational(0)}})});
}

Trajectory plateau_trajectory() {
  return Trajectory(
      {Phase(tag("up", 0), {{Rational(0), Rational(0)}, {Rational(1), Rational(10)}}),
       Phase(tag("plateau", 1), {{Rational(1), Rational(10)}, {Rational(2), Rational(10)}}),
       Phase(tag("down", 2), {{Rational(2), Rational(10)}, {Rational(3), Rational(0)}})});
}

// Small random trajectory: k phases with abutting integer params and grid
// positions, continuous at every junction.
Trajectory random_trajectory(Rng& rng, int phase_count) {
  std::vector<Phase> phases;
  Rational param(0);
  Rational pos = grid_rational(rng, 8);
  for (int i = 0; i < phase_count; ++i) {
    std::vector<Breakpoint> bps{{param, pos}};
    const int pieces = uniform_int(rng, 1, 3);
    for (int j = 0; j < pieces; ++j) {
      param += Rational(uniform_int(rng, 1, 3), uniform_int(rng, 1, 2));
      pos = grid_rational(rng, 8);
      bps.push_back({param, pos});
    }
    phases.emplace_back(tag_of(i, "ph"), std::move(bps));
  }
  return Trajectory(std::move(phases));
}

} // namespace

TEST_CASE("phase validation and exact interpolation") {
  CHECK_THROWS_AS(Phase(tag("up"), {}), PreconditionError);
  CHECK_THROWS_AS(Phase(tag("up"), {{Rational(0), Rational(0)}, {Rational(0), Rational(1)}}),
                  PreconditionError);
  const Phase up(tag("up"), {{Rational(0), Rational(0)}, {Rational(1), Rational(10)}});
  CHECK(up.position_at(Rational(1, 2)) == 5);
  CHECK(up.position_at(Rational(1, 3)) == Rational(10, 3));
  CHECK(up.position_at(Rational(0)) == 0);
  CHECK(up.position_at(Rational(1)) == 10);
  CHECK_THROWS_AS(up.position_at(Rational(2)), PreconditionError);
  CHECK(up.piece_count() == 1);
}

TEST_CASE("trajectories report junction contact") {
  const auto t = ball();
  REQUIRE(t.junctions().size() == 1);
  CHECK(t.junctions()[0].param == 1);
  CHECK(t.junctions()[0].end_position == 10);
  CHECK(t.junctions()[0].start_position == 10);
  CHECK(t.junctions()[0].in_contact);
  CHECK(t.in_contact_everywhere());

  const Trajectory lone({Phase(tag("up"), {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}})});
  CHECK(lone.junctions().empty());
  CHECK(lone.in_contact_everywhere());

  // A jump is a verdict, not a construction error.
  const auto jump = jump_trajectory();
  REQUIRE(jump.junctions().size() == 1);
  CHECK_FALSE(jump.junctions()[0].in_contact);
  CHECK_FALSE(jump.in_contact_everywhere());

  // Parameter intervals must abut; tags must be distinct.
  CHECK_THROWS_AS(
      Trajectory({Phase(tag("up", 0), {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}}),
                  Phase(tag("down", 1), {{Rational(2), Rational(1)}, {Rational(3), Rational(0)}})}),
      PreconditionError);
  CHECK_THROWS_AS(
      Trajectory({Phase(tag("up"), {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}}),
                  Phase(tag("up"), {{Rational(1), Rational(1)}, {Rational(2), Rational(0)}})}),
      PreconditionError);
}

TEST_CASE("junction contact agrees with the contact predicate on endpoint sets") {
  for (unsigned seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    const auto t = seed % 5 == 0 ? jump_trajectory() : random_trajectory(rng, 2 + seed % 3);
    for (const auto& j : t.junctions()) {
      const auto& a = t.phases()[j.index];
      const auto& b = t.phases()[j.index + 1];
      const FiniteTaggedSet end_a(1, {TaggedPoint(Value{a.end_position()}, fiber_tag(a, j.param))});
      const FiniteTaggedSet start_b(
          1, {TaggedPoint(Value{b.start_position()}, fiber_tag(b, j.param))});
      CHECK(in_contact(end_a, start_b).in_contact == j.in_contact);
    }
  }
}

TEST_CASE("the apex fiber holds one point per phase reaching it") {
  const auto t = ball();
  const auto fiber = value_fiber(t, Rational(10));
  REQUIRE(fiber.size() == 2);
  const auto rel = relate(fiber.points()[0], fiber.points()[1]);
  CHECK(rel.equal_value);
  CHECK_FALSE(rel.equal_series);
  // End of the up phase and start of the down phase, both at parameter 1.
  CHECK(fiber.points()[0].series().ordinal == 1);
  CHECK(fiber.points()[1].series().ordinal == 1);

  const auto midway = value_fiber(t, Rational(5));
  REQUIRE(midway.size() == 2);
  CHECK(relate(midway.points()[0], midway.points()[1]).equal_value);
  CHECK_FALSE(relate(midway.points()[0], midway.points()[1]).equal_series);
  CHECK(midway.points()[0].series().ordinal == Rational(1, 2));
  CHECK(midway.points()[1].series().ordinal == Rational(3, 2));

  CHECK(value_fiber(t, Rational(999)).empty());
}

TEST_CASE("fibers are exact inverses of the piecewise paths") {
  for (unsigned seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const auto t = random_trajectory(rng, 1 + seed % 4);
    for (int trial = 0; trial < 12; ++trial) {
      const Rational x = grid_rational(rng, 9);
      const auto fiber = value_fiber(t, x);
      // Forward evaluation returns x exactly for every fiber point.
      for (const auto& p : fiber.points()) {
        const auto owner = std::find_if(t.phases().begin(), t.phases().end(), [&](const Phase& ph) {
          return ph.tag().label == p.series().label;
        });
        REQUIRE(owner != t.phases().end());
        CHECK(owner->position_at(p.series().ordinal) == x);
      }
      // The membership oracle agrees on attainment.
      CHECK((oracle_fiber_attaining_pieces(t, x) > 0) == !fiber.empty());
      // Any sampled parameter that lands on x is represented in the fiber.
      for (const auto& phase : t.phases()) {
        const auto& bp = phase.breakpoints();
        for (std::size_t i = 1; i < bp.size(); ++i) {
          for (int k = 0; k <= 4; ++k) {
            const Rational param =
                bp[i - 1].param + (bp[i].param - bp[i - 1].param) * Rational(k, 4);
            if (phase.position_at(param) == x && bp[i - 1].position != bp[i].position)
              CHECK(fiber.contains(TaggedPoint(Value{x}, fiber_tag(phase, param))));
          }
        }
      }
    }
  }
}

TEST_CASE("apex query answers which phases own the highest position") {
  const auto report = apex_query(ball());
  CHECK(report.apex == 10);
  CHECK(report.fiber.size() == 2);
  REQUIRE(report.owning_phases.size() == 2);
  CHECK(report.owning_phases[0].label == "up");
  CHECK(report.owning_phases[1].label == "down");

  const Trajectory ascent(
      {Phase(tag("up"), {{Rational(0), Rational(0)}, {Rational(1), Rational(7)}})});
  const auto lone = apex_query(ascent);
  CHECK(lone.apex == 7);
  CHECK(lone.fiber.size() == 1);
  REQUIRE(lone.owning_phases.size() == 1);
  CHECK(lone.owning_phases[0].label == "up");

  // A plateau at the top contributes its endpoints piece by piece.
  const auto flat = apex_query(plateau_trajectory());
  CHECK(flat.apex == 10);
  CHECK(flat.owning_phases.size() == 3);
  CHECK(flat.fiber.size() == 4);
}

TEST_CASE("an apex at an interior junction always doubles") {
  for (unsigned seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const Rational peak(uniform_int(rng, 5, 12));
    const Trajectory t(
        {Phase(tag("up", 0), {{Rational(0), Rational(0)}, {Rational(1), peak}}),
         Phase(tag("down", 1), {{Rational(1), peak}, {Rational(2), grid_rational(rng, 4)}})});
    const auto report = apex_query(t);
    CHECK(report.apex == peak);
    REQUIRE(report.fiber.size() >= 2);
    for (std::size_t i = 0; i < report.fiber.size(); ++i) {
      for (std::size_t j = i + 1; j < report.fiber.size(); ++j) {
        const auto rel = relate(report.fiber.points()[i], report.fiber.points()[j]);
        CHECK(rel.equal_value);
        CHECK_FALSE(rel.equal_series);
      }
    }
  }
}

TEST_CASE("series cuts split the parameter range and double the point at y") {
  const auto at_apex = series_cut(ball(), Rational(1));
  CHECK(at_apex.before.phases().size() == 1);
  CHECK(at_apex.after.phases().size() == 1);
  CHECK(at_apex.last_of_before.series().ordinal == 1);
  CHECK(at_apex.first_of_after.series().ordinal == 1);
  CHECK(at_apex.last_of_before.series().label == "up");
  CHECK(at_apex.first_of_after.series().label == "down");
  CHECK(at_apex.values_equal);
  CHECK(at_apex.last_of_before.value() == Value{Rational(10)});

  const auto inside = series_cut(ball(), Rational(1, 2));
  CHECK(inside.values_equal);
  CHECK(inside.last_of_before.value() == Value{Rational(5)});
  CHECK(inside.first_of_after.value() == Value{Rational(5)});
  CHECK(inside.before.param_hi() == Rational(1, 2));
  CHECK(inside.after.param_lo() == Rational(1, 2));

  const auto broken = series_cut(jump_trajectory(), Rational(1));
  CHECK_FALSE(broken.values_equal);
  CHECK(broken.last_of_before.value() == Value{Rational(10)});
  CHECK(broken.first_of_after.value() == Value{Rational(9)});

  CHECK_THROWS_AS(series_cut(ball(), Rational(0)), PreconditionError);
  CHECK_THROWS_AS(series_cut(ball(), Rational(2)), PreconditionError);
  CHECK_THROWS_AS(series_cut(ball(), Rational(5)), PreconditionError);
}

TEST_CASE("series cut duality holds at every admissible parameter") {
  for (unsigned seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    const auto t = seed % 4 == 0 ? jump_trajectory() : random_trajectory(rng, 2 + seed % 2);
    for (int trial = 0; trial < 8; ++trial) {
      const Rational span = t.param_hi() - t.param_lo();
      const Rational y = t.param_lo() + span * Rational(uniform_int(rng, 1, 15), 16);
      if (y <= t.param_lo() || t.param_hi() <= y) continue;
      const auto r = series_cut(t, y);
      CHECK(r.parameter == y);
      CHECK(r.last_of_before.series().ordinal == y);
      CHECK(r.first_of_after.series().ordinal == y);
      CHECK(r.before.param_hi() == y);
      CHECK(r.after.param_lo() == y);
      // Position continuity at y decides value equality.
      bool continuous_at_y = true;
      for (const auto& j : t.junctions())
        if (j.param == y && !j.in_contact) continuous_at_y = false;
      CHECK(r.values_equal == continuous_at_y);
    }
  }
}

TEST_CASE("describe_motion alternates value changes and series changes") {
  const auto entries = describe_motion(ball());
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].kind == MotionEntry::Kind::value_change);
  CHECK(entries[0].position_from == 0);
  CHECK(entries[0].position_to == 10);
  CHECK(entries[0].from_series.label == "up");
  CHECK(entries[1].kind == MotionEntry::Kind::series_change);
  CHECK(entries[1].from_series.label == "up");
  CHECK(entries[1].to_series.label == "down");
  CHECK(entries[1].position_from == 10);
  CHECK(entries[1].position_to == 10);
  CHECK(entries[2].kind == MotionEntry::Kind::value_change);
  CHECK(entries[2].position_from == 10);
  CHECK(entries[2].position_to == 0);

  const Trajectory steady(
      {Phase(tag("hold"), {{Rational(0), Rational(5)}, {Rational(1), Rational(5)}})});
  const auto held = describe_motion(steady);
  REQUIRE(held.size() == 1);
  CHECK(held[0].kind == MotionEntry::Kind::value_change);
  CHECK(held[0].position_from == held[0].position_to);

  const auto three = describe_motion(plateau_trajectory());
  CHECK(three.size() == 5); // 3 pieces + 2 junctions

  for (unsigned seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const auto t = random_trajectory(rng, 1 + seed % 4);
    std::size_t pieces = 0;
    for (const auto& p : t.phases()) pieces += p.piece_count();
    const auto report = describe_motion(t);
    std::size_t value_entries = 0, series_entries = 0;
    for (const auto& e : report)
      (e.kind == MotionEntry::Kind::value_change ? value_entries : series_entries)++;
    CHECK(value_entries == pieces);
    CHECK(series_entries == t.junctions().size());
    // Series changes sit exactly between phases: never first, never last,
    // never adjacent to another series change.
    for (std::size_t i = 0; i < report.size(); ++i) {
      if (report[i].kind == MotionEntry::Kind::series_change) {
        CHECK(i > 0);
        CHECK(i + 1 < report.size());
        CHECK(report[i - 1].kind == MotionEntry::Kind::value_change);
        CHECK(report[i + 1].kind == MotionEntry::Kind::value_change);
      }
    }
  }
}
