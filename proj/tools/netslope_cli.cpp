/**
 * @file netslope_cli.cpp
 * @brief Command-line frontend over the exact slope-function engines:
 *        per-slope invariants, postcritical portraits, excluded boundary
 *        arcs, circle coverage with rationality verdicts, fixed-point and
 *        omitted-point reports, equator detection, and the parametrized
 *        family generator.  All reported numbers are exact; SVG output
 *        rounds for display only.
 */

#include "netslope/report.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace netslope;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

/// Thrown for bad argument values; mapped to the usage exit code.
struct UsageError {
  std::string message;
};

Slope parse_slope_arg(const std::string& text) {
  try {
    return Slope::parse(text);
  } catch (const Error& e) {
    throw UsageError{std::string("bad slope '") + text + "': " + e.what()};
  }
}

ArcKind parse_kind_arg(const std::string& text, bool coverage_only) {
  std::string key;
  for (char ch : text) {
    if (ch == '-' || ch == '_') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  std::optional<ArcKind> kind;
  if (key == "obstruction") kind = ArcKind::Obstruction;
  if (key == "netobstruction") kind = ArcKind::NetObstruction;
  if (!coverage_only) {
    if (key == "generalfixed") kind = ArcKind::GeneralFixed;
    if (key == "fixedpoint") kind = ArcKind::FixedPoint;
    if (key == "netfixedpoint") kind = ArcKind::NetFixedPoint;
  }
  if (!kind) {
    throw UsageError{std::string("unknown arc kind '") + text + "'" +
                     (coverage_only ? " (coverage kinds: obstruction, net-obstruction)"
                                    : "")};
  }
  return *kind;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error(Errc::IoError, "cannot write '" + path + "'");
}

void print_json(const Json& doc) { std::printf("%s\n", doc.dump(2).c_str()); }

// ---- shared option state ------------------------------------------------------------

struct Options {
  std::string presentation_path;
  std::string slope_text;
  std::string kind_text = "net-obstruction";
  std::string svg_path;
  std::string out_path;
  int height = 12;
  int family_n = 0;
  unsigned offset_skip = 0;
  bool json = false;
  bool debug = false;
};

// ---- subcommand bodies --------------------------------------------------------------

Json eval_components_json(const PreimageSummary& inv) {
  Json arr = Json::array();
  for (const auto& comp : inv.components) {
    Json row;
    row["offset_index"] = comp.offset_index;
    row["offset"] = json_rat(comp.offset);
    const char* kind = comp.kind == LiftKind::Essential
                           ? "essential"
                           : (comp.kind == LiftKind::Collapsed ? "collapsed"
                                                               : "reversing");
    row["kind"] = kind;
    row["slope"] = comp.slope ? json_slope(*comp.slope) : Json(nullptr);
    arr.push_back(std::move(row));
  }
  return arr;
}

int run_eval(const Options& opt) {
  const Slope s = parse_slope_arg(opt.slope_text);
  const Presentation pres = load_presentation_file(opt.presentation_path);
  const PreimageSummary inv = slope_invariants(pres, s, opt.offset_skip);

  if (opt.debug) {
    const Vec2 dir = s.direction();
    for (const auto& comp : inv.components) {
      std::printf("component %d offset=%s\n", comp.offset_index,
                  rat_to_string(comp.offset).c_str());
      const PhotonTrace trace =
          trace_segment(pres, dir, comp.offset, inv.d, opt.offset_skip);
      std::printf("%s", trace_debug_dump(trace).c_str());
    }
  }

  if (opt.json) {
    Json result = json_summary(inv);
    result["components"] = eval_components_json(inv);
    print_json(report_envelope(
        "eval",
        Json{{"slope", s.str()}, {"offset_skip", opt.offset_skip}}, pres,
        std::move(result)));
  } else {
    std::printf("mu=%s d=%s c=%s rho=%s\n", inv.mu.str().c_str(),
                inv.d.str().c_str(), inv.c.str().c_str(),
                rat_to_string(inv.rho).c_str());
  }
  return kExitOk;
}

int run_portrait(const Options& opt) {
  const Presentation pres = load_presentation_file(opt.presentation_path);
  const Portrait portrait = postcritical_portrait(pres);
  const OrbifoldType orbifold = orbifold_type(pres);
  if (opt.json) {
    print_json(report_envelope("portrait", Json::object(), pres,
                               json_portrait(portrait, orbifold)));
  } else {
    for (const auto& e : portrait.points) {
      std::printf("class=%d point=%s image=%d critical=%d\n", e.cls,
                  e.rep.str().c_str(), e.image_cls, e.critical ? 1 : 0);
    }
    std::printf("fixed=%d orbifold=%s\n", portrait.fixed_count(),
                orbifold == OrbifoldType::Hyperbolic ? "hyperbolic" : "euclidean");
  }
  return kExitOk;
}

int run_intervals(const Options& opt) {
  const Slope s = parse_slope_arg(opt.slope_text);
  const ArcKind kind = parse_kind_arg(opt.kind_text, /*coverage_only=*/false);
  const Presentation pres = load_presentation_file(opt.presentation_path);
  const PreimageSummary inv = slope_invariants(pres, s);

  std::optional<BoundaryArc> arc;
  if (inv.mu.is_slope()) {
    ArcParams params;
    params.rho = inv.rho;
    params.deg = degree(pres);
    params.d = inv.d;
    params.e = divisor_bound(degree(pres));
    const bool rho_kind =
        kind == ArcKind::Obstruction || kind == ArcKind::GeneralFixed;
    if (!rho_kind || inv.rho > 0) {
      arc = excluded_arc(kind, s, inv.mu.slope(), params);
    }
  }

  if (opt.json) {
    Json result;
    result["invariants"] = json_summary(inv);
    result["arc"] = arc ? json_arc(*arc) : Json(nullptr);
    print_json(report_envelope(
        "intervals", Json{{"slope", s.str()}, {"kind", arc_kind_name(kind)}},
        pres, std::move(result)));
  } else if (arc) {
    std::printf("kind=%s s=%s sp=%s start=%s end=%s\n",
                arc_kind_name(arc->kind).c_str(), arc->s.str().c_str(),
                arc->sp.str().c_str(), arc->start.str().c_str(),
                arc->end.str().c_str());
  } else {
    std::printf("empty\n");
  }
  return kExitOk;
}

const char* verdict_name(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::Obstructed: return "obstructed";
    case VerdictTag::CertifiedUnobstructed: return "certified-unobstructed";
    case VerdictTag::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

int run_cover(const Options& opt) {
  const ArcKind kind = parse_kind_arg(opt.kind_text, /*coverage_only=*/true);
  const Presentation pres = load_presentation_file(opt.presentation_path);
  const CoverageState state = coverage_run(pres, opt.height, kind);
  const RationalityVerdict verdict = rationality_verdict(pres, opt.height);

  if (!opt.svg_path.empty()) {
    // Permanently omitted points: cusps of fixed probe slopes that carry a
    // degree-one self-lift.
    std::vector<BoundaryPoint> markers;
    for (const auto& probe : state.probes) {
      if (!probe.mu.is_slope() || probe.mu.slope() != probe.s) continue;
      if (degree_one_self_lift(pres, probe.s)) {
        markers.push_back(cusp_of_slope(probe.s));
      }
    }
    write_text_file(opt.svg_path, emit_svg(state, markers));
  }

  if (opt.json) {
    Json result;
    result["coverage"] = json_coverage(state);
    result["verdict"] = json_verdict(verdict);
    print_json(report_envelope(
        "cover",
        Json{{"height", opt.height}, {"kind", arc_kind_name(kind)}}, pres,
        std::move(result)));
  } else {
    std::printf("verdict=%s\n", verdict_name(verdict.tag));
    if (verdict.obstruction_slope) {
      std::printf("obstruction s=%s rho=%s\n", verdict.obstruction_slope->str().c_str(),
                  rat_to_string(*verdict.obstruction_rho).c_str());
    }
    std::printf("kind=%s probes=%zu full=%d pieces=%zu\n",
                arc_kind_name(state.kind).c_str(), state.probes.size(),
                state.full ? 1 : 0, state.residual.size());
    for (const auto& piece : state.residual) {
      std::printf("residual lo=%s hi=%s\n", piece.lo.str().c_str(),
                  piece.hi.str().c_str());
    }
    for (const auto& check : verdict.state.certified) {
      std::printf("certified point=%s reason=%s\n", check.point.str().c_str(),
                  check.reason.c_str());
    }
  }
  return kExitOk;
}

int run_fixed(const Options& opt) {
  const Presentation pres = load_presentation_file(opt.presentation_path);
  const auto fixed = fixed_point_search(pres, opt.height);
  if (opt.json) {
    print_json(report_envelope("fixed", Json{{"height", opt.height}}, pres,
                               json_fixed_points(fixed)));
  } else {
    for (const auto& [s, rho] : fixed) {
      std::printf("s=%s rho=%s\n", s.str().c_str(), rat_to_string(rho).c_str());
    }
  }
  return kExitOk;
}

int run_omit(const Options& opt) {
  const Slope s = parse_slope_arg(opt.slope_text);
  const Presentation pres = load_presentation_file(opt.presentation_path);
  const OmitReport report = omit_check(pres, s);
  if (opt.json) {
    print_json(report_envelope("omit", Json{{"slope", s.str()}}, pres,
                               json_omit(report)));
  } else if (report.witness) {
    std::printf("witness edge_start=%s marks=%d->%d slope=%s\n",
                report.witness->edge_start.str().c_str(),
                report.witness->start_marked, report.witness->end_marked,
                report.witness->slope.str().c_str());
    std::printf("fixed_all_c1=%d cusp_omitted=%d\n", report.fixed_all_c1 ? 1 : 0,
                report.cusp_omitted ? 1 : 0);
    std::printf("closure_applicable=%d closure_omitted=%d others_flagged=%d\n",
                report.omit2_applicable ? 1 : 0,
                report.omit2_closure_omitted ? 1 : 0,
                report.omit3_flagged ? 1 : 0);
    for (const auto& t : report.c1_failures) {
      std::printf("c1_failure s=%s\n", t.str().c_str());
    }
    for (const auto& t : report.other_obstructions) {
      std::printf("other_obstruction s=%s\n", t.str().c_str());
    }
  } else {
    std::printf("no witness\n");
  }
  return kExitOk;
}

void print_equator_lines(const std::vector<EquatorReport>& reports) {
  for (const auto& r : reports) {
    std::printf("s=%s d_matches=%d fixed=%d portrait=%d equator=%d\n",
                r.s.str().c_str(), r.degree_matches ? 1 : 0, r.slope_fixed ? 1 : 0,
                r.portrait_fixed ? 1 : 0, r.equator ? 1 : 0);
  }
}

int run_matings(const Options& opt) {
  const Presentation pres = load_presentation_file(opt.presentation_path);
  const auto reports = find_equators(pres, opt.height);
  if (opt.json) {
    print_json(report_envelope("matings", Json{{"height", opt.height}}, pres,
                               json_equators(reports)));
  } else {
    print_equator_lines(reports);
  }
  return kExitOk;
}

int run_family(const Options& opt) {
  const FamilyMatingReport report = verify_family_matings(opt.family_n);
  if (opt.json) {
    print_json(report_envelope("family", Json{{"n", opt.family_n}},
                               family_fn(opt.family_n), json_family(report)));
  } else {
    std::printf("n=%d slopes=%zu expected=%zu count_ok=%d verified=%d parity_ok=%d\n",
                report.n, report.family_slopes.size(), report.expected_count,
                report.count_matches ? 1 : 0, report.all_verified ? 1 : 0,
                report.portrait_matches_parity ? 1 : 0);
    print_equator_lines(report.checks);
  }
  return kExitOk;
}

int run_family_gen(const Options& opt) {
  const Presentation pres = family_fn(opt.family_n);
  const std::string text = serialize(pres);
  if (!opt.out_path.empty()) {
    write_text_file(opt.out_path, text);
  }
  if (opt.json) {
    print_json(report_envelope("family-gen", Json{{"n", opt.family_n}}, pres,
                               Json{{"presentation", text}}));
  } else if (opt.out_path.empty()) {
    std::printf("%s", text.c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact slope-function computations for lattice-presented "
               "branched sphere covers"};
  app.require_subcommand(1);
  Options opt;

  auto add_presentation = [&](CLI::App* cmd) {
    cmd->add_option("-p,--presentation", opt.presentation_path,
                    "presentation file")
        ->required();
  };
  auto add_slope = [&](CLI::App* cmd) {
    cmd->add_option("-s,--slope", opt.slope_text, "slope p/q or inf")->required();
  };
  auto add_height = [&](CLI::App* cmd) {
    cmd->add_option("-H,--height", opt.height, "probe height bound")
        ->required()
        ->check(CLI::PositiveNumber);
  };
  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.json, "emit a JSON report");
  };
  auto add_n = [&](CLI::App* cmd) {
    cmd->add_option("--n", opt.family_n, "family parameter (n >= 4)")
        ->required()
        ->check(CLI::Range(4, 1000000));
  };

  CLI::App* eval = app.add_subcommand("eval", "per-slope preimage invariants");
  add_presentation(eval);
  add_slope(eval);
  add_json(eval);
  eval->add_flag("--debug", opt.debug, "dump the traced crossings");
  eval->add_option("--offset-skip", opt.offset_skip,
                   "skip this many generic offsets (determinism checks)");

  CLI::App* portrait =
      app.add_subcommand("portrait", "postcritical portrait and orbifold type");
  add_presentation(portrait);
  add_json(portrait);

  CLI::App* intervals =
      app.add_subcommand("intervals", "excluded boundary arc for one probe slope");
  add_presentation(intervals);
  add_slope(intervals);
  add_json(intervals);
  intervals->add_option("--kind", opt.kind_text,
                        "arc kind: obstruction, net-obstruction, fixed-point, "
                        "net-fixed-point, general-fixed");

  CLI::App* cover =
      app.add_subcommand("cover", "boundary-circle coverage and rationality verdict");
  add_presentation(cover);
  add_height(cover);
  add_json(cover);
  cover->add_option("--kind", opt.kind_text,
                    "coverage kind: obstruction or net-obstruction");
  cover->add_option("--svg", opt.svg_path, "write an SVG plot to this path");

  CLI::App* fixed = app.add_subcommand("fixed", "slope-map fixed points with multipliers");
  add_presentation(fixed);
  add_height(fixed);
  add_json(fixed);

  CLI::App* omit = app.add_subcommand("omit", "degree-one self-lift report");
  add_presentation(omit);
  add_slope(omit);
  add_json(omit);

  CLI::App* matings = app.add_subcommand("matings", "equator condition census");
  add_presentation(matings);
  add_height(matings);
  add_json(matings);

  CLI::App* family = app.add_subcommand("family", "verify the parametrized family");
  add_n(family);
  add_json(family);

  CLI::App* family_gen =
      app.add_subcommand("family-gen", "emit a family presentation file");
  add_n(family_gen);
  add_json(family_gen);
  family_gen->add_option("-o,--output", opt.out_path, "write to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    ScopeTimer timer(app.get_subcommands().front()->get_name());
    if (eval->parsed()) return run_eval(opt);
    if (portrait->parsed()) return run_portrait(opt);
    if (intervals->parsed()) return run_intervals(opt);
    if (cover->parsed()) return run_cover(opt);
    if (fixed->parsed()) return run_fixed(opt);
    if (omit->parsed()) return run_omit(opt);
    if (matings->parsed()) return run_matings(opt);
    if (family->parsed()) return run_family(opt);
    if (family_gen->parsed()) return run_family_gen(opt);
    std::fprintf(stderr, "error: no subcommand\n");
    return kExitUsage;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.message.c_str());
    return kExitUsage;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitDomain;
  }
}
