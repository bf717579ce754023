#include "netslope/report.hpp"

#include "netslope/numbers.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

namespace netslope {

// ---- envelope -------------------------------------------------------------------------

Json report_envelope(const std::string& command, Json parameters,
                     const Presentation& pres, Json result) {
  const std::string text = serialize(pres);
  Json out;
  out["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  out["command"] = command;
  out["parameters"] = std::move(parameters);
  out["input"] = Json{{"presentation", text}, {"digest", fnv1a64_digest(text)}};
  out["result"] = std::move(result);
  return out;
}

// ---- exact fragments ------------------------------------------------------------------

Json json_slope(const Slope& s) { return Json(s.str()); }

Json json_extended(const ExtendedSlope& s) { return Json(s.str()); }

Json json_rat(const Rat& r) { return Json(rat_to_string(r)); }

Json json_int(const Int& n) { return Json(n.str()); }

Json json_boundary_point(const BoundaryPoint& x) { return Json(x.str()); }

Json json_summary(const PreimageSummary& inv) {
  Json out;
  out["s"] = json_slope(inv.s);
  out["mu"] = json_extended(inv.mu);
  out["d"] = json_int(inv.d);
  out["c"] = json_int(inv.c);
  out["rho"] = json_rat(inv.rho);
  return out;
}

Json json_portrait(const Portrait& portrait, OrbifoldType orbifold) {
  Json pts = Json::array();
  for (const auto& e : portrait.points) {
    Json row;
    row["class"] = e.cls;
    row["point"] = e.rep.str();
    row["image_class"] = e.image_cls;
    row["critical"] = e.critical;
    pts.push_back(std::move(row));
  }
  Json out;
  out["points"] = std::move(pts);
  out["fixed_points"] = portrait.fixed_count();
  out["orbifold"] =
      orbifold == OrbifoldType::Hyperbolic ? "hyperbolic" : "euclidean";
  return out;
}

Json json_arc(const BoundaryArc& arc) {
  Json out;
  out["kind"] = arc_kind_name(arc.kind);
  out["s"] = json_slope(arc.s);
  out["sp"] = json_slope(arc.sp);
  out["quadratic"] =
      Json::array({json_rat(arc.qa), json_rat(arc.qb), json_rat(arc.qc)});
  out["start"] = json_boundary_point(arc.start);
  out["end"] = json_boundary_point(arc.end);
  return out;
}

Json json_coverage(const CoverageState& state) {
  Json residual = Json::array();
  for (const auto& piece : state.residual) {
    residual.push_back(Json{{"lo", json_boundary_point(piece.lo)},
                            {"hi", json_boundary_point(piece.hi)}});
  }
  Json probes = Json::array();
  for (const auto& probe : state.probes) {
    Json row;
    row["s"] = json_slope(probe.s);
    row["mu"] = json_extended(probe.mu);
    row["d"] = json_int(probe.d);
    row["c"] = json_int(probe.c);
    row["rho"] = json_rat(probe.rho);
    row["arc"] = probe.arc ? json_arc(*probe.arc) : Json(nullptr);
    probes.push_back(std::move(row));
  }
  Json certified = Json::array();
  for (const auto& check : state.certified) {
    Json row;
    row["point"] = json_boundary_point(check.point);
    row["slope"] = check.t ? json_slope(*check.t) : Json(nullptr);
    row["reason"] = check.reason;
    certified.push_back(std::move(row));
  }
  Json out;
  out["kind"] = arc_kind_name(state.kind);
  out["full_circle"] = state.full;
  out["residual"] = std::move(residual);
  out["probes"] = std::move(probes);
  out["certified"] = std::move(certified);
  return out;
}

Json json_verdict(const RationalityVerdict& verdict) {
  const char* tag = "inconclusive";
  if (verdict.tag == VerdictTag::Obstructed) tag = "obstructed";
  if (verdict.tag == VerdictTag::CertifiedUnobstructed) {
    tag = "certified-unobstructed";
  }
  Json out;
  out["verdict"] = tag;
  out["obstruction_slope"] = verdict.obstruction_slope
                                 ? json_slope(*verdict.obstruction_slope)
                                 : Json(nullptr);
  out["obstruction_rho"] =
      verdict.obstruction_rho ? json_rat(*verdict.obstruction_rho) : Json(nullptr);
  out["coverage"] = json_coverage(verdict.state);
  return out;
}

Json json_omit(const OmitReport& report) {
  Json out;
  out["s"] = json_slope(report.s);
  if (report.witness) {
    Json w;
    w["edge_start"] = report.witness->edge_start.str();
    w["start_marked"] = report.witness->start_marked;
    w["end_marked"] = report.witness->end_marked;
    w["slope"] = json_slope(report.witness->slope);
    out["witness"] = std::move(w);
  } else {
    out["witness"] = Json(nullptr);
  }
  Json failures = Json::array();
  for (const auto& t : report.c1_failures) failures.push_back(json_slope(t));
  out["fixed_all_c1"] = report.fixed_all_c1;
  out["c1_failures"] = std::move(failures);
  out["cusp_omitted"] = report.cusp_omitted;
  out["closure_check_applicable"] = report.omit2_applicable;
  out["closure_omitted"] = report.omit2_closure_omitted;
  out["other_obstructions_flagged"] = report.omit3_flagged;
  Json others = Json::array();
  for (const auto& t : report.other_obstructions) others.push_back(json_slope(t));
  out["other_obstructions"] = std::move(others);
  return out;
}

Json json_equators(const std::vector<EquatorReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) {
    Json row;
    row["s"] = json_slope(r.s);
    row["degree_matches"] = r.degree_matches;
    row["slope_fixed"] = r.slope_fixed;
    row["portrait_fixed"] = r.portrait_fixed;
    row["equator"] = r.equator;
    out.push_back(std::move(row));
  }
  return out;
}

Json json_family(const FamilyMatingReport& report) {
  Json slopes = Json::array();
  for (const auto& s : report.family_slopes) slopes.push_back(json_slope(s));
  Json out;
  out["n"] = report.n;
  out["expected_count"] = static_cast<int>(report.expected_count);
  out["count_matches"] = report.count_matches;
  out["slopes"] = std::move(slopes);
  out["checks"] = json_equators(report.checks);
  out["all_verified"] = report.all_verified;
  out["portrait_matches_parity"] = report.portrait_matches_parity;
  return out;
}

Json json_fixed_points(const std::vector<std::pair<Slope, Rat>>& fixed) {
  Json out = Json::array();
  for (const auto& [s, rho] : fixed) {
    out.push_back(Json{{"s", json_slope(s)}, {"rho", json_rat(rho)}});
  }
  return out;
}

// ---- SVG ------------------------------------------------------------------------------

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCx = 320.0;
constexpr double kCy = 320.0;
constexpr double kR = 260.0;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

/// Angle of a boundary point on the plotted circle: the real line wraps
/// once around via x ↦ 2·atan(x), with ∞ at the top seam.
double point_angle(const BoundaryPoint& x) {
  if (x == BoundaryPoint::infinity()) return kPi;
  return 2.0 * std::atan(x.approx());
}

double px(double theta) { return kCx + kR * std::cos(theta); }
double py(double theta) { return kCy - kR * std::sin(theta); }

/// Counterclockwise stroke from t1 to t2 (positive sweep up to a full turn,
/// split so no single SVG arc spans ≥ half the circle).
void append_arc_path(std::string& svg, double t1, double t2,
                     const std::string& style) {
  double span = t2 - t1;
  while (span <= 0) span += 2.0 * kPi;
  while (span > 2.0 * kPi) span -= 2.0 * kPi;
  const int pieces = span > kPi ? 3 : 1;
  const double step = span / pieces;
  svg += "<path d=\"M " + fmt(px(t1)) + " " + fmt(py(t1));
  for (int i = 1; i <= pieces; ++i) {
    const double t = t1 + step * i;
    svg += " A " + fmt(kR) + " " + fmt(kR) + " 0 0 0 " + fmt(px(t)) + " " +
           fmt(py(t));
  }
  svg += "\" fill=\"none\" " + style + "/>\n";
}

void append_dot(std::string& svg, const BoundaryPoint& x, double r,
                const std::string& style) {
  const double t = point_angle(x);
  svg += "<circle cx=\"" + fmt(px(t)) + "\" cy=\"" + fmt(py(t)) + "\" r=\"" +
         fmt(r) + "\" " + style + "/>\n";
}

}  // namespace

std::string emit_svg(const CoverageState& state,
                     const std::vector<BoundaryPoint>& markers) {
  std::string svg;
  svg +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
      "viewBox=\"0 0 640 640\">\n";
  svg += "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
  svg += "<circle cx=\"" + fmt(kCx) + "\" cy=\"" + fmt(kCy) + "\" r=\"" +
         fmt(kR) +
         "\" fill=\"none\" stroke=\"#d0d0d0\" stroke-width=\"2\"/>\n";

  // Excluded arcs, one stroke per accepted probe arc.
  for (const auto& probe : state.probes) {
    if (!probe.arc) continue;
    const BoundaryArc& arc = *probe.arc;
    const double t1 = point_angle(arc.start);
    const double t2 = point_angle(arc.end);
    if (arc.start == arc.end) {
      // Full circle minus one point: two half turns.
      append_arc_path(svg, t1, t1 + kPi,
                      "stroke=\"#9aa7b8\" stroke-width=\"10\"");
      append_arc_path(svg, t1 + kPi, t1 + 2.0 * kPi,
                      "stroke=\"#9aa7b8\" stroke-width=\"10\"");
    } else {
      append_arc_path(svg, t1, t2, "stroke=\"#9aa7b8\" stroke-width=\"10\"");
    }
  }

  // Residual: what the sweep has not excluded.  While the state is still
  // full the base circle itself is the residual and nothing extra is drawn.
  if (!state.full) {
    for (const auto& piece : state.residual) {
      if (piece.is_point()) {
        append_dot(svg, piece.lo, 5.0, "fill=\"#d04040\"");
      } else {
        append_arc_path(svg, point_angle(piece.lo), point_angle(piece.hi),
                        "stroke=\"#d04040\" stroke-width=\"4\"");
      }
    }
  }

  // Directly certified residual points.
  for (const auto& check : state.certified) {
    append_dot(svg, check.point, 7.0,
               "fill=\"none\" stroke=\"#2d8a4e\" stroke-width=\"3\"");
  }

  // Caller-supplied markers (e.g. omitted points).
  for (const auto& x : markers) {
    append_dot(svg, x, 10.0,
               "fill=\"none\" stroke=\"#3050c0\" stroke-width=\"3\"");
  }

  svg += "<text x=\"16\" y=\"28\" font-family=\"monospace\" font-size=\"16\">";
  svg += std::string(arc_kind_name(state.kind)) + " probes=" +
         std::to_string(state.probes.size()) + " residual=" +
         (state.full ? std::string("full")
                     : std::to_string(state.residual.size())) +
         "</text>\n";
  svg += "</svg>\n";
  return svg;
}

// ---- timing ---------------------------------------------------------------------------

ScopeTimer::ScopeTimer(std::string label)
    : label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}

ScopeTimer::~ScopeTimer() {
  const auto elapsed = std::chrono::steady_clock::now() - start_;
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  std::fprintf(stderr, "%s: %lld ms\n", label_.c_str(),
               static_cast<long long>(ms));
}

}  // namespace netslope
