#include "netslope/coverage.hpp"

#include <algorithm>
#include <stdexcept>

namespace netslope {

// ---- residual arithmetic ------------------------------------------------------------

namespace {

/// A ∖ O for a closed arc A and a proper open arc O = (u, v), u ≠ v.
/// Appends 0, 1, or 2 closed pieces.
void subtract_proper(const ClosedArc& A, const BoundaryPoint& u,
                     const BoundaryPoint& v, std::vector<ClosedArc>& out) {
  if (A.is_point()) {
    if (!in_open_arc(u, v, A.lo)) out.push_back(A);
    return;
  }
  const bool has_u = in_closed_arc(A.lo, A.hi, u);
  const bool has_v = in_closed_arc(A.lo, A.hi, v);
  if (!has_u && !has_v) {
    // O cannot straddle a boundary of A, so A is untouched or swallowed.
    if (!in_open_arc(u, v, A.lo)) out.push_back(A);
    return;
  }
  if (has_u && !has_v) {
    out.push_back(ClosedArc{A.lo, u});
    return;
  }
  if (!has_u && has_v) {
    out.push_back(ClosedArc{v, A.hi});
    return;
  }
  // Both endpoints of O lie in A.
  const bool u_before_v = in_closed_arc(A.lo, v, u);
  if (u_before_v) {
    if (in_open_arc(u, v, A.hi)) return;  // O wraps around and engulfs A
    out.push_back(ClosedArc{A.lo, u});
    out.push_back(ClosedArc{v, A.hi});
    return;
  }
  // O leaves past A.hi and re-enters before v: only the middle survives.
  out.push_back(ClosedArc{v, u});
}

void sort_residual(std::vector<ClosedArc>& arcs) {
  std::sort(arcs.begin(), arcs.end(), [](const ClosedArc& x, const ClosedArc& y) {
    const int c = boundary_compare(x.lo, y.lo);
    if (c != 0) return c < 0;
    return boundary_compare(x.hi, y.hi) < 0;
  });
}

}  // namespace

void subtract_arc(CoverageState& state, const BoundaryArc& arc) {
  const BoundaryPoint& u = arc.start;
  const BoundaryPoint& v = arc.end;
  if (state.full) {
    state.full = false;
    // Complement of the open arc (u, v): the closed arc [v, u]; of a full
    // circle minus a point: that single point.
    state.residual.clear();
    state.residual.push_back(ClosedArc{v, u});
    return;
  }
  std::vector<ClosedArc> next;
  if (u == v) {
    // Full circle minus one point: only that point can survive.
    for (const ClosedArc& A : state.residual)
      if (in_closed_arc(A.lo, A.hi, u)) {
        next.push_back(ClosedArc{u, u});
        break;
      }
  } else {
    for (const ClosedArc& A : state.residual) subtract_proper(A, u, v, next);
  }
  sort_residual(next);
  state.residual = std::move(next);
}

bool residual_contains(const CoverageState& state, const BoundaryPoint& x) {
  if (state.full) return true;
  for (const ClosedArc& A : state.residual)
    if (in_closed_arc(A.lo, A.hi, x)) return true;
  return false;
}

bool residual_is_finite(const CoverageState& state) {
  if (state.full) return false;
  for (const ClosedArc& A : state.residual)
    if (!A.is_point()) return false;
  return true;
}

// ---- sweeps -------------------------------------------------------------------------

namespace {

std::vector<PreimageSummary> probe_invariants(const Presentation& pres,
                                              const std::vector<Slope>& probes) {
  std::vector<std::optional<PreimageSummary>> slots(probes.size());
  parallel_for_indexed(probes.size(), [&](std::size_t i) {
    slots[i] = slope_invariants(pres, probes[i]);
  });
  std::vector<PreimageSummary> out;
  out.reserve(probes.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::optional<BoundaryArc> probe_arc(ArcKind kind, const PreimageSummary& inv,
                                     const Int& ebound) {
  if (!inv.mu.is_slope()) return std::nullopt;
  ArcParams params;
  if (kind == ArcKind::Obstruction) {
    if (inv.rho <= 0) return std::nullopt;
    params.rho = inv.rho;
  } else {
    params.d = inv.d;
    params.e = ebound;
  }
  return excluded_arc(kind, inv.s, inv.mu.slope(), params);
}

}  // namespace

CoverageState coverage_run(const Presentation& pres, int height, ArcKind kind) {
  require_valid(pres);
  if (kind != ArcKind::Obstruction && kind != ArcKind::NetObstruction)
    throw Error(Errc::BadParameter,
                "coverage accepts the obstruction-excluding arc kinds only");
  if (orbifold_type(pres) != OrbifoldType::Hyperbolic)
    throw Error(Errc::UnsupportedOrbifold,
                "coverage requires a hyperbolic orbifold");
  if (height < 1) throw Error(Errc::BadParameter, "probe height must be positive");

  const std::vector<Slope> probes = farey_slopes(height);
  const std::vector<PreimageSummary> invs = probe_invariants(pres, probes);
  const Int ebound = divisor_bound(degree(pres));

  CoverageState state;
  state.kind = kind;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const PreimageSummary& inv = invs[i];
    ProbeRecord rec{inv.s, inv.mu, inv.d, inv.c, inv.rho, std::nullopt};
    rec.arc = probe_arc(kind, inv, ebound);
    if (rec.arc) subtract_arc(state, *rec.arc);
    state.probes.push_back(std::move(rec));
  }
  return state;
}

std::vector<std::pair<Slope, Rat>> fixed_point_search(const Presentation& pres,
                                                      int height) {
  require_valid(pres);
  if (height < 1) throw Error(Errc::BadParameter, "probe height must be positive");
  const std::vector<Slope> probes = farey_slopes(height);
  const std::vector<PreimageSummary> invs = probe_invariants(pres, probes);

  std::vector<std::pair<Slope, Rat>> out;
  for (const PreimageSummary& inv : invs)
    if (inv.mu.is_slope() && inv.mu.slope() == inv.s)
      out.emplace_back(inv.s, inv.rho);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) {
                     return x.first.height() < y.first.height();
                   });
  return out;
}

RationalityVerdict rationality_verdict(const Presentation& pres, int height) {
  require_valid(pres);
  if (orbifold_type(pres) != OrbifoldType::Hyperbolic)
    throw Error(Errc::UnsupportedOrbifold,
                "rationality analysis requires a hyperbolic orbifold");

  RationalityVerdict verdict;
  for (const auto& [s, rho] : fixed_point_search(pres, height)) {
    if (rho >= 1) {
      verdict.tag = VerdictTag::Obstructed;
      verdict.obstruction_slope = s;
      verdict.obstruction_rho = rho;
      return verdict;
    }
  }

  verdict.state = coverage_run(pres, height, ArcKind::NetObstruction);
  CoverageState& state = verdict.state;
  if (!residual_is_finite(state)) {
    verdict.tag = VerdictTag::Inconclusive;
    return verdict;
  }

  bool all_discharged = true;
  for (const ClosedArc& A : state.residual) {
    const BoundaryPoint& x = A.lo;
    if (x.kind() == BoundaryPoint::Kind::Surd) {
      state.certified.push_back(
          DirectCheck{x, std::nullopt, "irrational point is the cusp of no slope"});
      continue;
    }
    const Slope t = slope_of_cusp(x);
    const PreimageSummary inv = slope_invariants(pres, t);
    if (!inv.mu.is_slope() || inv.mu.slope() != t) {
      state.certified.push_back(
          DirectCheck{x, t, "slope is not fixed by the slope map"});
    } else if (inv.rho < 1) {
      state.certified.push_back(
          DirectCheck{x, t, "fixed slope has multiplier below one"});
    } else {
      all_discharged = false;
    }
  }
  verdict.tag = all_discharged ? VerdictTag::CertifiedUnobstructed
                               : VerdictTag::Inconclusive;
  return verdict;
}

// ---- omission report ----------------------------------------------------------------

OmitReport omit_check(const Presentation& pres, const Slope& s) {
  require_valid(pres);
  OmitReport report{s, degree_one_self_lift(pres, s)};
  if (!report.witness) return report;

  const std::vector<Slope> probes = farey_slopes(kOmitProbeHeight);
  const std::vector<PreimageSummary> invs = probe_invariants(pres, probes);
  const BoundaryPoint cusp = cusp_of_slope(s);

  // (1) every other fixed slope has a connected essential preimage.
  for (const PreimageSummary& inv : invs) {
    if (!inv.mu.is_slope() || inv.mu.slope() != inv.s || inv.s == s) continue;
    if (inv.c != 1) report.c1_failures.push_back(inv.s);
  }
  report.fixed_all_c1 = report.c1_failures.empty();

  // (2) the cusp of s escapes every generated excluded arc.
  std::vector<BoundaryArc> arcs;
  for (const PreimageSummary& inv : invs) {
    ArcParams params;
    params.rho = inv.rho;
    if (!inv.mu.is_slope() || inv.rho <= 0) continue;
    if (auto arc = excluded_arc(ArcKind::Obstruction, inv.s, inv.mu.slope(), params))
      arcs.push_back(*arc);
  }
  report.cusp_omitted = true;
  for (const BoundaryArc& arc : arcs)
    if (arc.contains(cusp)) report.cusp_omitted = false;

  // (3) strengthened omission under the stronger hypotheses.
  const PreimageSummary inv_s = slope_invariants(pres, s);
  const bool s_obstructs =
      inv_s.mu.is_slope() && inv_s.mu.slope() == s && inv_s.rho >= 1;
  const auto [m1, m2] = elementary_divisors(pres);
  report.omit2_applicable = m1 > 1 && m2 > 1 && !s_obstructs &&
                            orbifold_type(pres) == OrbifoldType::Hyperbolic;
  if (report.omit2_applicable) {
    report.omit2_closure_omitted = true;
    for (const BoundaryArc& arc : arcs)
      if (arc.closure_contains(cusp)) report.omit2_closure_omitted = false;
    for (const PreimageSummary& inv : invs)
      if (inv.mu.is_slope() && inv.mu.slope() == inv.s && inv.s != s &&
          inv.rho >= 1)
        report.other_obstructions.push_back(inv.s);
    report.omit3_flagged = !report.other_obstructions.empty();
  }
  return report;
}

}  // namespace netslope
