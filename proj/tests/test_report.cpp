/**
 * @file test_report.cpp
 * @brief Report envelopes, exact JSON fragments, and deterministic SVG.
 */

#include "netslope/report.hpp"

#include "netslope/boundary.hpp"
#include "netslope/coverage.hpp"
#include "netslope/halfspace.hpp"
#include "netslope/numbers.hpp"
#include "netslope/presentation.hpp"
#include "netslope/slope.hpp"
#include "netslope/trace.hpp"

#include <doctest.h>

#include <string>

using namespace netslope;

namespace {

Presentation f5() { return family_fn(Int(5)); }

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

// ---- envelope ---------------------------------------------------------------------------

TEST_CASE("the envelope embeds the input with its digest in a fixed key order") {
  const Presentation pres = f5();
  Json params;
  params["slope"] = "0/1";
  const Json env = report_envelope("eval", params, pres, Json{{"ok", true}});

  CHECK(env["tool"]["name"] == "netslope");
  CHECK(env["tool"]["version"] == "1.0.0");
  CHECK(env["command"] == "eval");
  CHECK(env["parameters"]["slope"] == "0/1");
  CHECK(env["input"]["presentation"] == serialize(pres));
  CHECK(env["input"]["digest"] == "fnv1a64:85cff9c2e44ac5ae");
  CHECK(env["result"]["ok"] == true);

  // Key order is part of the format.
  const std::string dumped = env.dump();
  CHECK(dumped.find("\"tool\"") < dumped.find("\"command\""));
  CHECK(dumped.find("\"command\"") < dumped.find("\"parameters\""));
  CHECK(dumped.find("\"parameters\"") < dumped.find("\"input\""));
  CHECK(dumped.find("\"input\"") < dumped.find("\"result\""));
  CHECK(dumped.find("\"presentation\"") < dumped.find("\"digest\""));
}

TEST_CASE("the digest matches the standalone hash of the serialized text") {
  const std::string text = serialize(f5());
  const Json env = report_envelope("x", Json::object(), f5(), Json(nullptr));
  CHECK(env["input"]["digest"] == fnv1a64_digest(text));
}

// ---- exact fragments ----------------------------------------------------------------------

TEST_CASE("every number in a report is rendered as an exact string") {
  CHECK(json_slope(Slope::make(0, 1)) == "0/1");
  CHECK(json_slope(Slope::make(-1, 2)) == "-1/2");
  CHECK(json_slope(Slope::infinity()) == "inf");
  CHECK(json_rat(Rat(1, 5)) == "1/5");
  CHECK(json_rat(Rat(-7)) == "-7");
  CHECK(json_int(Int(12)) == "12");
  CHECK(json_boundary_point(BoundaryPoint::infinity()) == "inf");
  CHECK(json_boundary_point(BoundaryPoint::rational(Rat(-1, 2))) == "-1/2");

  const Json summary = json_summary(slope_invariants(f5(), Slope::make(0, 1)));
  CHECK(summary["s"].is_string());
  CHECK(summary["s"] == "0/1");
  CHECK(summary["mu"] == "0/1");
  CHECK(summary["d"] == "5");
  CHECK(summary["c"] == "1");
  CHECK(summary["rho"] == "1/5");
}

TEST_CASE("portrait reports carry classes, images, and the orbifold") {
  const Json portrait =
      json_portrait(postcritical_portrait(f5()), orbifold_type(f5()));
  REQUIRE(portrait["points"].size() == 4);
  CHECK(portrait["fixed_points"] == 4);
  CHECK(portrait["orbifold"] == "hyperbolic");
  for (const auto& row : portrait["points"]) {
    CHECK(row.contains("class"));
    CHECK(row.contains("point"));
    CHECK(row.contains("image_class"));
    CHECK(row.contains("critical"));
  }
  CHECK(portrait["points"][0]["critical"] == true);
  CHECK(portrait["points"][3]["critical"] == false);
}

TEST_CASE("arc reports record the quadratic and both endpoints exactly") {
  ArcParams params;
  params.deg = 2;
  const auto arc =
      excluded_arc(ArcKind::FixedPoint, Slope::infinity(), Slope::make(0, 1), params);
  REQUIRE(arc.has_value());
  const Json j = json_arc(*arc);
  CHECK(j["kind"] == "fixed-point");
  CHECK(j["s"] == "inf");
  CHECK(j["sp"] == "0/1");
  REQUIRE(j["quadratic"].size() == 3);
  CHECK(j["quadratic"][0].is_string());
  CHECK(j["start"] == "-1/2");
  CHECK(j["end"] == "1/2");
}

TEST_CASE("coverage reports list residual pieces, probes, and certificates") {
  const CoverageState state = coverage_run(f5(), 12, ArcKind::Obstruction);
  const Json j = json_coverage(state);
  CHECK(j["kind"] == "obstruction");
  CHECK(j["full_circle"] == false);
  REQUIRE(j["residual"].size() == 4);
  CHECK(j["residual"][0]["lo"] == "-1/1");
  CHECK(j["residual"][0]["hi"] == "-1/1");
  CHECK(j["residual"][1]["lo"] == "-1/2");
  CHECK(j["residual"][2]["lo"] == "0/1");
  CHECK(j["residual"][3]["lo"] == "inf");
  CHECK(j["probes"].size() == farey_slopes(Int(12)).size());
  for (const auto& row : j["probes"]) {
    CHECK(row["s"].is_string());
    CHECK((row["arc"].is_null() || row["arc"].is_object()));
  }
}

TEST_CASE("verdict reports use stable tags and embed the certificate") {
  const Json j = json_verdict(rationality_verdict(f5(), 12));
  CHECK(j["verdict"] == "certified-unobstructed");
  CHECK(j["obstruction_slope"].is_null());
  CHECK(j["obstruction_rho"].is_null());
  CHECK(j["coverage"]["kind"] == "net-obstruction");
  CHECK(j["coverage"]["residual"].empty());

  const Json obstructed = json_verdict(rationality_verdict(random_presentation(27, 8), 6));
  CHECK(obstructed["verdict"] == "obstructed");
  CHECK(obstructed["obstruction_slope"] == "-1/1");
  CHECK(obstructed["obstruction_rho"] == "1");
}

TEST_CASE("omission and family reports serialize their flags") {
  const Json omit = json_omit(omit_check(f5(), Slope::make(0, 1)));
  CHECK(omit["s"] == "0/1");
  REQUIRE(omit["witness"].is_object());
  CHECK(omit["witness"]["edge_start"] == "(1,0)");
  CHECK(omit["witness"]["slope"] == "0/1");
  CHECK(omit["fixed_all_c1"] == true);
  CHECK(omit["cusp_omitted"] == true);
  CHECK(omit["closure_check_applicable"] == false);

  const Json family = json_family(verify_family_matings(5));
  CHECK(family["n"] == 5);
  CHECK(family["expected_count"] == 3);
  CHECK(family["count_matches"] == true);
  REQUIRE(family["slopes"].size() == 3);
  CHECK(family["slopes"][0] == "0/1");
  CHECK(family["slopes"][2] == "inf");
  CHECK(family["all_verified"] == true);
  CHECK(family["portrait_matches_parity"] == true);

  const Json fixed = json_fixed_points(fixed_point_search(f5(), 4));
  REQUIRE(fixed.size() == 4);
  CHECK(fixed[0]["s"] == "inf");
  CHECK(fixed[0]["rho"] == "1/5");
}

// ---- SVG ---------------------------------------------------------------------------------

TEST_CASE("an untouched coverage state draws only the base circle") {
  const CoverageState state;
  const std::string svg = emit_svg(state);
  CHECK(svg.find("<svg xmlns=") == 0);
  CHECK(svg.find("width=\"640\" height=\"640\"") != std::string::npos);
  CHECK(svg.find("<circle cx=\"320.0000\" cy=\"320.0000\" r=\"260.0000\"") !=
        std::string::npos);
  CHECK(svg.find("<path") == std::string::npos);
  CHECK(svg.find("#d04040") == std::string::npos);
  CHECK(svg.find("residual=full") != std::string::npos);
  CHECK(count_occurrences(svg, "<circle") == 1);
}

TEST_CASE("residual cusps are drawn as red dots at their circle angles") {
  const CoverageState state = coverage_run(f5(), 12, ArcKind::Obstruction);
  const std::string svg = emit_svg(state);
  CHECK(count_occurrences(svg, "fill=\"#d04040\"") == 4);
  // The cusp at infinity sits at the left seam of the plotted circle.
  CHECK(svg.find("<circle cx=\"60.0000\" cy=\"320.0000\" r=\"5.0000\" "
                 "fill=\"#d04040\"") != std::string::npos);
  // Probe arcs are drawn as thick grey strokes.
  CHECK(svg.find("stroke=\"#9aa7b8\" stroke-width=\"10\"") != std::string::npos);
  CHECK(svg.find("residual=4") != std::string::npos);
}

TEST_CASE("svg output is byte-identical across repeated renders") {
  const CoverageState state = coverage_run(f5(), 8, ArcKind::NetObstruction);
  const std::string first = emit_svg(state);
  const std::string second = emit_svg(state);
  CHECK(first == second);

  const CoverageState replay = coverage_run(f5(), 8, ArcKind::NetObstruction);
  CHECK(emit_svg(replay) == first);
}

TEST_CASE("marker points render as blue rings") {
  const CoverageState state;
  const std::string svg =
      emit_svg(state, {BoundaryPoint::rational(Rat(1)), BoundaryPoint::infinity()});
  CHECK(count_occurrences(svg, "stroke=\"#3050c0\"") == 2);
  CHECK(svg.find("r=\"10.0000\" fill=\"none\" stroke=\"#3050c0\"") !=
        std::string::npos);
}
