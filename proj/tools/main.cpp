// Command-line front end: check documents, cut line sets, measure distance
// and contact, query trajectory fibers. Exit codes: 0 all checks pass,
// 1 at least one check failed, 2 usage or parse error.

#include "tagset/io.hpp"
#include "tagset/metric.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "report.hpp"

namespace {

using namespace tagset;
using cli::Report;
using cli::Status;

std::string point_text(const TaggedPoint& p) {
  return "(" + p.value().to_string() + ", " + p.series().label + "@" +
         format_rational(p.series().ordinal) + ")";
}

std::string witness_text(const std::pair<TaggedPoint, TaggedPoint>& w) {
  return point_text(w.first) + " / " + point_text(w.second);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void check_finite(const FiniteTaggedSet& s, Report& report) {
  report.pass("points", std::to_string(s.size()) + " points, dimension " +
                            std::to_string(s.dimension()));
  if (const auto w = find_equal_value_pair(s)) {
    report.pass("disordered", "yes; witness " + witness_text({w->first, w->second}));
  } else {
    report.pass("disordered", "no");
  }
  report.pass("ordered-bijective", yes_no(is_ordered_bijective(s)));
}

void check_line(const TaggedLineSet& z, Report& report) {
  const auto cantor = cantor_continuous(z);
  if (cantor.continuous) {
    report.pass("cantor", "projection " + value_projection(z).front().to_string());
  } else {
    report.fail("cantor", "gap (" + format_rational(cantor.first_gap->lo) + ", " +
                              format_rational(cantor.first_gap->hi) + ")");
  }
  const auto poincare = poincare_continuous(z);
  if (poincare.continuous) {
    report.pass("poincare", "two points behind every interior position");
  } else {
    report.fail("poincare",
                "no contact cut at position " + format_rational(*poincare.counterexample));
  }
  const bool all_doubled =
      std::all_of(z.segments().begin(), z.segments().end(),
                  [](const TaggedSegment& s) { return s.mode == SegmentMode::doubled; });
  if (all_doubled) {
    const auto eq = verify_continuity_equivalence(z);
    report.add("continuity-equivalence", eq.equivalent ? Status::pass : Status::fail,
               "cantor = " + yes_no(eq.cantor) + ", poincare = " + yes_no(eq.poincare));
  }
}

void check_trajectory(const Trajectory& t, Report& report) {
  report.pass("phases", std::to_string(t.phases().size()) + " phases, " +
                            std::to_string(t.junctions().size()) + " junctions");
  for (const auto& j : t.junctions()) {
    const std::string name = "junction-" + std::to_string(j.index) + "-contact";
    if (j.in_contact) {
      report.pass(name, "position " + format_rational(j.end_position) + " shared by '" +
                            t.phases()[j.index].tag().label + "' and '" +
                            t.phases()[j.index + 1].tag().label + "'");
    } else {
      report.fail(name, "'" + t.phases()[j.index].tag().label + "' ends at " +
                            format_rational(j.end_position) + " but '" +
                            t.phases()[j.index + 1].tag().label + "' starts at " +
                            format_rational(j.start_position));
    }
  }
}

int run_check(const std::string& file, bool json) {
  Report report{"check", {file}, {}};
  const Document doc = load_document(file);
  switch (doc.kind()) {
    case DocumentKind::finite_set: check_finite(std::get<FiniteTaggedSet>(doc.body), report); break;
    case DocumentKind::line_set: check_line(std::get<TaggedLineSet>(doc.body), report); break;
    case DocumentKind::trajectory: check_trajectory(std::get<Trajectory>(doc.body), report); break;
  }
  json ? cli::render_json(report) : cli::render_text(report);
  return report.exit_code();
}

int run_cut(const std::string& file, const std::string& at, const std::string& mode_text,
            bool json) {
  const auto position = parse_rational(at);
  if (!position) throw PreconditionError("--at: bad rational '" + at + "'");
  CutMode mode;
  if (mode_text == "left")
    mode = CutMode::left_closed;
  else if (mode_text == "right")
    mode = CutMode::right_closed;
  else if (mode_text == "disordered")
    mode = CutMode::disordered;
  else
    throw PreconditionError("--mode must be left, right, or disordered");

  Report report{"cut", {file}, {}};
  const Document doc = load_document(file);
  if (doc.kind() != DocumentKind::line_set)
    throw PreconditionError("cut needs a line_set document");
  const auto& z = std::get<TaggedLineSet>(doc.body);
  try {
    const CutResult r = cut(z, *position, mode);
    report.pass("cut", to_string(r.cut_type) + " at " + format_rational(r.position));
    const auto largest = max_value_point(r.left);
    const auto smallest = min_value_point(r.right);
    report.pass("left-largest", largest ? point_text(*largest) : "none");
    report.pass("right-smallest", smallest ? point_text(*smallest) : "none");
    if (largest && smallest) {
      report.pass("contact-pair", "values equal: " + yes_no(largest->value() == smallest->value()) +
                                      ", series equal: " +
                                      yes_no(largest->series() == smallest->series()));
    }
  } catch (const FourthTypeError& e) {
    report.fail("cut", e.what());
  }
  json ? cli::render_json(report) : cli::render_text(report);
  return report.exit_code();
}

TaggedObjectView object_view(const Document& doc) {
  switch (doc.kind()) {
    case DocumentKind::finite_set: return std::get<FiniteTaggedSet>(doc.body);
    case DocumentKind::line_set: return std::get<TaggedLineSet>(doc.body);
    default: throw PreconditionError("distance needs finite_set or line_set documents");
  }
}

int run_distance(const std::string& file_a, const std::string& file_b, bool json) {
  Report report{"distance", {file_a, file_b}, {}};
  const Document doc_a = load_document(file_a);
  const Document doc_b = load_document(file_b);
  const auto a = object_view(doc_a);
  const auto b = object_view(doc_b);

  const auto d = set_distance_sq(a, b);
  report.pass("distance-squared", format_rational(d.value) + " (sqrt ~ " + d.approx + ")");
  const auto contact = in_contact(a, b);
  report.pass("contact",
              contact.in_contact ? "yes; witness " + witness_text(*contact.witness) : "no");
  const auto eq = verify_contact_equivalence(a, b);
  report.add("contact-equivalence", eq.consistent ? Status::pass : Status::fail,
             "contact = " + yes_no(eq.contact) + ", value-intersect = " + yes_no(eq.value_intersect) +
                 ", zero-distance = " + yes_no(eq.zero_distance));
  json ? cli::render_json(report) : cli::render_text(report);
  return report.exit_code();
}

int run_fiber(const std::string& file, const std::optional<std::string>& value_at,
              const std::optional<std::string>& series_at, bool apex, bool json) {
  Report report{"fiber", {file}, {}};
  const Document doc = load_document(file);
  if (doc.kind() != DocumentKind::trajectory)
    throw PreconditionError("fiber needs a trajectory document");
  const auto& t = std::get<Trajectory>(doc.body);

  if (apex) {
    const auto r = apex_query(t);
    std::string phases;
    for (std::size_t i = 0; i < r.owning_phases.size(); ++i) {
      if (i) phases += ", ";
      phases += r.owning_phases[i].label;
    }
    report.pass("apex", "apex " + format_rational(r.apex) + " belongs to phases: " + phases + " (" +
                            std::to_string(r.fiber.size()) + " points)");
  } else if (value_at) {
    const auto x = parse_rational(*value_at);
    if (!x) throw PreconditionError("--value: bad rational '" + *value_at + "'");
    const auto fiber = value_fiber(t, *x);
    if (fiber.empty()) {
      report.pass("fiber", "no points");
    } else {
      std::string detail = std::to_string(fiber.size()) + " points:";
      for (const auto& p : fiber.points()) detail += " " + point_text(p);
      report.pass("fiber", detail);
    }
  } else {
    const auto y = parse_rational(*series_at);
    if (!y) throw PreconditionError("--series: bad rational '" + *series_at + "'");
    const auto r = series_cut(t, *y);
    report.pass("series-cut", "s = " + point_text(r.last_of_before) +
                                  ", t = " + point_text(r.first_of_after));
    report.pass("series-parameter", "both carry parameter " + format_rational(r.parameter));
    report.pass("values", r.values_equal
                              ? "equal (" + r.last_of_before.value().to_string() + ")"
                              : "differ (" + r.last_of_before.value().to_string() + " vs " +
                                    r.first_of_after.value().to_string() + ")");
  }
  json ? cli::render_json(report) : cli::render_text(report);
  return report.exit_code();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"tagged point sets: contact, Dedekind-type cuts, continuity, trajectories"};
  app.require_subcommand(1);

  std::string file, file_b, at, mode;
  std::optional<std::string> fiber_value, fiber_series;
  bool apex = false;
  bool json_check = false, json_cut = false, json_distance = false, json_fiber = false;

  auto* cmd_check = app.add_subcommand("check", "run every applicable check for a document");
  cmd_check->add_option("file", file, "document to check")->required();
  cmd_check->add_flag("--json", json_check, "machine-readable report");

  auto* cmd_cut = app.add_subcommand("cut", "Dedekind-type cut of a line_set document");
  cmd_cut->add_option("file", file, "line_set document")->required();
  cmd_cut->add_option("--at", at, "cut position (rational)")->required();
  cmd_cut->add_option("--mode", mode, "left | right | disordered")->required();
  cmd_cut->add_flag("--json", json_cut, "machine-readable report");

  auto* cmd_distance = app.add_subcommand("distance", "exact distance and contact of two documents");
  cmd_distance->add_option("fileA", file, "first document")->required();
  cmd_distance->add_option("fileB", file_b, "second document")->required();
  cmd_distance->add_flag("--json", json_distance, "machine-readable report");

  auto* cmd_fiber = app.add_subcommand("fiber", "value/series fibers of a trajectory document");
  cmd_fiber->add_option("file", file, "trajectory document")->required();
  auto* opt_value = cmd_fiber->add_option("--value", fiber_value, "fiber at a position");
  auto* opt_series = cmd_fiber->add_option("--series", fiber_series, "cut at a series parameter");
  auto* opt_apex = cmd_fiber->add_flag("--apex", apex, "answer the apex question");
  opt_value->excludes(opt_series)->excludes(opt_apex);
  opt_series->excludes(opt_apex);
  cmd_fiber->add_flag("--json", json_fiber, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_check)) return run_check(file, json_check);
    if (app.got_subcommand(cmd_cut)) return run_cut(file, at, mode, json_cut);
    if (app.got_subcommand(cmd_distance)) return run_distance(file, file_b, json_distance);
    if (app.got_subcommand(cmd_fiber)) {
      if (!fiber_value && !fiber_series && !apex)
        throw PreconditionError("fiber needs one of --value, --series, --apex");
      return run_fiber(file, fiber_value, fiber_series, apex, json_fiber);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error";
    if (e.line() > 0) std::cerr << " at line " << e.line() << ", column " << e.column();
    std::cerr << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
