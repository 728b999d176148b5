#include "tagset/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace tagset {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) { throw ParseError(message, 0, 0); }

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Rational require_rational(const Json& j, const char* where) {
  if (!j.is_string()) fail(std::string(where) + ": expected a rational string");
  auto r = parse_rational(j.get<std::string>());
  if (!r) fail(std::string(where) + ": bad rational '" + j.get<std::string>() + "'");
  return *r;
}

SeriesTag require_series(const Json& j, const char* where) {
  if (!j.is_object() || !j.contains("ordinal") || !j.contains("label"))
    fail(std::string(where) + ": series needs {ordinal, label}");
  if (!j["label"].is_string()) fail(std::string(where) + ": series label must be a string");
  return SeriesTag{require_rational(j["ordinal"], where), j["label"].get<std::string>()};
}

FiniteTaggedSet parse_finite_set(const Json& j) {
  if (!j.contains("dimension") || !j["dimension"].is_number_unsigned())
    fail("finite_set: missing or bad 'dimension'");
  const std::size_t dimension = j["dimension"].get<std::size_t>();
  if (!j.contains("points") || !j["points"].is_array()) fail("finite_set: missing 'points' array");
  std::vector<TaggedPoint> pts;
  for (const auto& pj : j["points"]) {
    if (!pj.is_object() || !pj.contains("coords") || !pj["coords"].is_array())
      fail("finite_set: each point needs a 'coords' array");
    std::vector<Rational> coords;
    for (const auto& cj : pj["coords"]) coords.push_back(require_rational(cj, "point coords"));
    if (!pj.contains("series")) fail("finite_set: each point needs a 'series'");
    pts.emplace_back(Value(std::move(coords)), require_series(pj["series"], "point series"));
  }
  return FiniteTaggedSet(dimension, std::move(pts));
}

TaggedLineSet parse_line_set(const Json& j) {
  if (!j.contains("segments") || !j["segments"].is_array())
    fail("line_set: missing 'segments' array");
  std::vector<TaggedSegment> segs;
  for (const auto& sj : j["segments"]) {
    if (!sj.is_object() || !sj.contains("lo") || !sj.contains("hi") || !sj.contains("series") ||
        !sj.contains("mode"))
      fail("line_set: each segment needs {lo, hi, series, mode}");
    SegmentMode mode;
    const std::string mode_text = sj["mode"].is_string() ? sj["mode"].get<std::string>() : "";
    if (mode_text == "single")
      mode = SegmentMode::single;
    else if (mode_text == "doubled")
      mode = SegmentMode::doubled;
    else
      fail("line_set: segment mode must be 'single' or 'doubled'");
    segs.push_back(make_segment(require_rational(sj["lo"], "segment lo"),
                                require_rational(sj["hi"], "segment hi"),
                                require_series(sj["series"], "segment series"), mode));
  }
  return TaggedLineSet(std::move(segs));
}

Trajectory parse_trajectory(const Json& j) {
  if (!j.contains("phases") || !j["phases"].is_array()) fail("trajectory: missing 'phases' array");
  std::vector<Phase> phases;
  for (const auto& pj : j["phases"]) {
    if (!pj.is_object() || !pj.contains("tag") || !pj.contains("breakpoints") ||
        !pj["breakpoints"].is_array())
      fail("trajectory: each phase needs {tag, breakpoints}");
    std::vector<Breakpoint> bps;
    for (const auto& bj : pj["breakpoints"]) {
      if (!bj.is_array() || bj.size() != 2)
        fail("trajectory: each breakpoint is a [param, position] pair");
      bps.push_back(Breakpoint{require_rational(bj[0], "breakpoint param"),
                               require_rational(bj[1], "breakpoint position")});
    }
    phases.emplace_back(require_series(pj["tag"], "phase tag"), std::move(bps));
  }
  return Trajectory(std::move(phases));
}

Json series_json(const SeriesTag& tag) {
  Json j;
  j["ordinal"] = format_rational(tag.ordinal);
  j["label"] = tag.label;
  return j;
}

} // namespace

std::string to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::finite_set: return "finite_set";
    case DocumentKind::line_set: return "line_set";
    case DocumentKind::trajectory: return "trajectory";
  }
  return "?";
}

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("JSON syntax error: ") + e.what(), line, column);
  }
  try {
    if (!j.is_object()) fail("document root must be an object");
    if (!j.contains("format") || j["format"] != 1) fail("document needs \"format\": 1");
    if (!j.contains("kind") || !j["kind"].is_string()) fail("document needs a 'kind'");
    if (!j.contains("name") || !j["name"].is_string()) fail("document needs a 'name'");
    std::string name = j["name"].get<std::string>();
    std::string description;
    if (j.contains("description")) {
      if (!j["description"].is_string()) fail("description must be a string");
      description = j["description"].get<std::string>();
    }
    const std::string kind = j["kind"].get<std::string>();
    auto make = [&](auto body) {
      return Document{std::move(name), std::move(description), std::move(body)};
    };
    if (kind == "finite_set") return make(parse_finite_set(j));
    if (kind == "line_set") return make(parse_line_set(j));
    if (kind == "trajectory") return make(parse_trajectory(j));
    fail("unknown kind '" + kind + "'");
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    // Domain validation failures are document defects at this boundary.
    throw ParseError(e.what(), 0, 0);
  }
}

std::string serialize_document(const Document& doc) {
  Json j;
  j["format"] = 1;
  j["kind"] = to_string(doc.kind());
  j["name"] = doc.name;
  if (!doc.description.empty()) j["description"] = doc.description;
  switch (doc.kind()) {
    case DocumentKind::finite_set: {
      const auto& s = std::get<FiniteTaggedSet>(doc.body);
      j["dimension"] = s.dimension();
      Json pts = Json::array();
      for (const auto& p : s.points()) {
        Json pj;
        Json coords = Json::array();
        for (const auto& c : p.value().coords()) coords.push_back(format_rational(c));
        pj["coords"] = std::move(coords);
        pj["series"] = series_json(p.series());
        pts.push_back(std::move(pj));
      }
      j["points"] = std::move(pts);
      break;
    }
    case DocumentKind::line_set: {
      const auto& z = std::get<TaggedLineSet>(doc.body);
      if (!z.fully_closed()) throw Error("only closed line sets serialize as documents");
      Json segs = Json::array();
      for (const auto& s : z.segments()) {
        Json sj;
        sj["lo"] = format_rational(s.lo);
        sj["hi"] = format_rational(s.hi);
        sj["series"] = series_json(s.series);
        sj["mode"] = s.mode == SegmentMode::single ? "single" : "doubled";
        segs.push_back(std::move(sj));
      }
      j["segments"] = std::move(segs);
      break;
    }
    case DocumentKind::trajectory: {
      const auto& t = std::get<Trajectory>(doc.body);
      Json phases = Json::array();
      for (const auto& phase : t.phases()) {
        Json pj;
        pj["tag"] = series_json(phase.tag());
        Json bps = Json::array();
        for (const auto& b : phase.breakpoints())
          bps.push_back(Json::array({format_rational(b.param), format_rational(b.position)}));
        pj["breakpoints"] = std::move(bps);
        phases.push_back(std::move(pj));
      }
      j["phases"] = std::move(phases);
      break;
    }
  }
  return j.dump(2) + "\n";
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

} // namespace tagset
