/**
 * @file test_coverage.cpp
 * @brief Boundary-circle coverage: residual subtraction, probe sweeps,
 *        fixed-point search, rationality verdicts, and omission reports.
 */

#include "netslope/coverage.hpp"

#include "netslope/boundary.hpp"
#include "netslope/halfspace.hpp"
#include "netslope/numbers.hpp"
#include "netslope/presentation.hpp"
#include "netslope/slope.hpp"

#include <doctest.h>

#include <optional>
#include <vector>

using namespace netslope;

namespace {

Presentation f5() { return family_fn(Int(5)); }

Presentation euclidean_double() {
  Presentation pres;
  pres.lambda1 = {2, 0};
  pres.lambda2 = {0, 2};
  pres.translation = {0, 0};
  for (auto& g : pres.green) g = std::nullopt;
  return pres;
}

/// Sample points scattered around the circle: rationals, surds, infinity.
std::vector<BoundaryPoint> sample_points() {
  std::vector<BoundaryPoint> pts;
  pts.push_back(BoundaryPoint::infinity());
  for (const Slope& s : farey_slopes(Int(4))) {
    if (!s.is_infinity())
      pts.push_back(BoundaryPoint::rational(Rat(s.p(), s.q())));
  }
  pts.push_back(BoundaryPoint::surd(Rat(0), Rat(1), Int(2)));
  pts.push_back(BoundaryPoint::surd(Rat(-3, 2), Rat(1, 2), Int(5)));
  pts.push_back(BoundaryPoint::surd(Rat(1), Rat(-1), Int(3)));
  return pts;
}

}  // namespace

// ---- residual subtraction -------------------------------------------------------------

TEST_CASE("subtracting open arcs keeps exactly the uncovered points") {
  Rng rng(91);
  for (int round = 0; round < 15; ++round) {
    CoverageState state;
    CHECK(state.full);
    CHECK_FALSE(residual_is_finite(state));

    std::vector<BoundaryArc> arcs;
    for (int k = 0; k < 10; ++k) {
      const Int p = rng.between(-5, 5), q = rng.between(0, 4);
      const Int pp = rng.between(-5, 5), qq = rng.between(0, 4);
      if (p == 0 && q == 0) continue;
      if (pp == 0 && qq == 0) continue;
      const Slope s = Slope::make(p, q);
      const Slope sp = Slope::make(pp, qq);
      ArcParams params;
      params.rho = make_rat(rng.between(1, 6), rng.between(1, 6));
      const ArcKind kind =
          (k % 2 == 0) ? ArcKind::Obstruction : ArcKind::FixedPoint;
      const auto arc = excluded_arc(kind, s, sp, params);
      if (!arc) continue;
      arcs.push_back(*arc);
      subtract_arc(state, *arc);

      // Every sampled point sits in the residual iff no accepted open
      // arc covers it.
      for (const BoundaryPoint& x : sample_points()) {
        bool covered = false;
        for (const BoundaryArc& a : arcs)
          if (a.contains(x)) covered = true;
        CHECK(residual_contains(state, x) == !covered);
      }
    }
  }
}

TEST_CASE("a punctured-circle arc leaves exactly one point behind") {
  // A self-pair with multiplier above one excludes everything except its
  // own cusp.
  ArcParams params;
  params.rho = Rat(2);
  const Slope three = Slope::make(3, 1);
  const auto arc = excluded_arc(ArcKind::Obstruction, three, three, params);
  REQUIRE(arc.has_value());

  CoverageState state;
  subtract_arc(state, *arc);
  CHECK_FALSE(state.full);
  REQUIRE(state.residual.size() == 1);
  CHECK(state.residual[0].is_point());
  CHECK(state.residual[0].lo == cusp_of_slope(three));
  CHECK(residual_is_finite(state));
  CHECK(residual_contains(state, cusp_of_slope(three)));
  CHECK_FALSE(residual_contains(state, BoundaryPoint::infinity()));
}

// ---- coverage sweeps ------------------------------------------------------------------

TEST_CASE("the degree-five family map's obstruction sweep leaves four cusps") {
  const CoverageState state = coverage_run(f5(), 12, ArcKind::Obstruction);
  CHECK(state.kind == ArcKind::Obstruction);
  CHECK_FALSE(state.full);
  REQUIRE(state.residual.size() == 4);
  for (const ClosedArc& piece : state.residual) CHECK(piece.is_point());
  CHECK(state.residual[0].lo == BoundaryPoint::rational(Rat(-1)));
  CHECK(state.residual[1].lo == BoundaryPoint::rational(Rat(-1, 2)));
  CHECK(state.residual[2].lo == BoundaryPoint::rational(Rat(0)));
  CHECK(state.residual[3].lo == BoundaryPoint::infinity());
  CHECK(residual_is_finite(state));

  // The four survivors are exactly the cusps of the four fixed slopes.
  CHECK(state.residual[3].lo == cusp_of_slope(Slope::make(0, 1)));
  CHECK(state.residual[2].lo == cusp_of_slope(Slope::infinity()));
  CHECK(state.residual[0].lo == cusp_of_slope(Slope::make(1, 1)));
  CHECK(state.residual[1].lo == cusp_of_slope(Slope::make(2, 1)));
}

TEST_CASE("the refined sweep covers the whole circle for the family map") {
  const CoverageState state = coverage_run(f5(), 12, ArcKind::NetObstruction);
  CHECK(state.kind == ArcKind::NetObstruction);
  CHECK_FALSE(state.full);
  CHECK(state.residual.empty());
  CHECK(residual_is_finite(state));
  CHECK_FALSE(residual_contains(state, BoundaryPoint::infinity()));
  CHECK(state.probes.size() == farey_slopes(Int(12)).size());
}

TEST_CASE("residual sets only shrink as the probe height grows") {
  const Presentation pres = f5();
  const CoverageState s4 = coverage_run(pres, 4, ArcKind::Obstruction);
  const CoverageState s8 = coverage_run(pres, 8, ArcKind::Obstruction);
  const CoverageState s12 = coverage_run(pres, 12, ArcKind::Obstruction);
  for (const BoundaryPoint& x : sample_points()) {
    if (!residual_contains(s4, x)) CHECK_FALSE(residual_contains(s8, x));
    if (!residual_contains(s8, x)) CHECK_FALSE(residual_contains(s12, x));
  }
  // The cusp of the fixed slope 0 survives at every height.
  for (const CoverageState* st : {&s4, &s8, &s12})
    CHECK(residual_contains(*st, BoundaryPoint::infinity()));
}

TEST_CASE("coverage sweeps reject bad inputs") {
  try {
    coverage_run(euclidean_double(), 4, ArcKind::Obstruction);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedOrbifold);
  }
  try {
    coverage_run(f5(), 4, ArcKind::FixedPoint);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadParameter);
  }
}

// ---- fixed-point search ---------------------------------------------------------------

TEST_CASE("the family map's fixed slopes appear in height order") {
  const auto fixed = fixed_point_search(f5(), 4);
  REQUIRE(fixed.size() == 4);
  CHECK(fixed[0].first == Slope::infinity());
  CHECK(fixed[1].first == Slope::make(0, 1));
  CHECK(fixed[2].first == Slope::make(1, 1));
  CHECK(fixed[3].first == Slope::make(2, 1));
  for (const auto& [s, rho] : fixed) CHECK(rho == Rat(1, 5));
}

TEST_CASE("the doubled Euclidean lattice fixes every slope with unit weight") {
  const auto fixed = fixed_point_search(euclidean_double(), 2);
  CHECK(fixed.size() == farey_slopes(Int(2)).size());
  for (const auto& [s, rho] : fixed) CHECK(rho == Rat(1));
}

// ---- rationality verdicts -------------------------------------------------------------

TEST_CASE("the degree-five family map is certified unobstructed") {
  const RationalityVerdict verdict = rationality_verdict(f5(), 12);
  CHECK(verdict.tag == VerdictTag::CertifiedUnobstructed);
  CHECK_FALSE(verdict.obstruction_slope.has_value());
  CHECK_FALSE(verdict.obstruction_rho.has_value());
  CHECK(verdict.state.kind == ArcKind::NetObstruction);
  CHECK_FALSE(verdict.state.full);
  CHECK(verdict.state.residual.empty());
  CHECK(verdict.state.certified.empty());
}

TEST_CASE("the degree-four family map is not obstructed") {
  const RationalityVerdict verdict = rationality_verdict(family_fn(Int(4)), 12);
  CHECK(verdict.tag != VerdictTag::Obstructed);
}

TEST_CASE("obstructed presentations are reported with slope and weight") {
  {
    const Presentation pres = random_presentation(27, 8);
    const RationalityVerdict verdict = rationality_verdict(pres, 6);
    CHECK(verdict.tag == VerdictTag::Obstructed);
    REQUIRE(verdict.obstruction_slope.has_value());
    CHECK(*verdict.obstruction_slope == Slope::make(-1, 1));
    REQUIRE(verdict.obstruction_rho.has_value());
    CHECK(*verdict.obstruction_rho == Rat(1));
  }
  {
    const Presentation pres = random_presentation(14, 8);
    const RationalityVerdict verdict = rationality_verdict(pres, 6);
    CHECK(verdict.tag == VerdictTag::Obstructed);
    REQUIRE(verdict.obstruction_slope.has_value());
    CHECK(*verdict.obstruction_slope == Slope::make(3, 1));
    REQUIRE(verdict.obstruction_rho.has_value());
    CHECK(*verdict.obstruction_rho == Rat(2));
  }
}

TEST_CASE("rationality analysis refuses non-hyperbolic orbifolds") {
  try {
    rationality_verdict(euclidean_double(), 4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedOrbifold);
  }
}

TEST_CASE("certificates replay: recorded probes regenerate the residual") {
  const Presentation pres = f5();
  const CoverageState first = coverage_run(pres, 8, ArcKind::Obstruction);
  const CoverageState second = coverage_run(pres, 8, ArcKind::Obstruction);

  REQUIRE(first.residual.size() == second.residual.size());
  for (size_t i = 0; i < first.residual.size(); ++i) {
    CHECK(first.residual[i].lo == second.residual[i].lo);
    CHECK(first.residual[i].hi == second.residual[i].hi);
  }
  REQUIRE(first.probes.size() == second.probes.size());

  // Each recorded probe's arc is reproducible from its recorded invariants.
  for (const ProbeRecord& probe : first.probes) {
    if (!probe.arc) continue;
    REQUIRE(probe.mu.is_slope());
    ArcParams params;
    params.rho = probe.rho;
    const auto redo =
        excluded_arc(ArcKind::Obstruction, probe.s, probe.mu.slope(), params);
    REQUIRE(redo.has_value());
    CHECK(same_arc(*redo, *probe.arc));
  }

  // Replaying the recorded arcs through a fresh state gives the same residual.
  CoverageState replay;
  replay.kind = first.kind;
  for (const ProbeRecord& probe : first.probes)
    if (probe.arc) subtract_arc(replay, *probe.arc);
  CHECK(replay.full == first.full);
  REQUIRE(replay.residual.size() == first.residual.size());
  for (size_t i = 0; i < replay.residual.size(); ++i) {
    CHECK(replay.residual[i].lo == first.residual[i].lo);
    CHECK(replay.residual[i].hi == first.residual[i].hi);
  }
}

// ---- omission reports -----------------------------------------------------------------

TEST_CASE("the degree-five family map omits the cusps of its self-lift slopes") {
  {
    const OmitReport report = omit_check(f5(), Slope::make(0, 1));
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->edge_start == Vec2{1, 0});
    CHECK(report.witness->start_marked == 0);
    CHECK(report.witness->end_marked == 1);
    CHECK(report.witness->slope == Slope::make(0, 1));
    CHECK(report.fixed_all_c1);
    CHECK(report.c1_failures.empty());
    CHECK(report.cusp_omitted);
    CHECK_FALSE(report.omit2_applicable);
    CHECK_FALSE(report.omit2_closure_omitted);
    CHECK_FALSE(report.omit3_flagged);
    CHECK(report.other_obstructions.empty());
  }
  {
    const OmitReport report = omit_check(f5(), Slope::make(1, 1));
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->edge_start == Vec2{-1, 1});
    CHECK(report.witness->start_marked == 2);
    CHECK(report.witness->end_marked == 1);
    CHECK(report.witness->slope == Slope::make(1, 1));
    CHECK(report.fixed_all_c1);
    CHECK(report.cusp_omitted);
    CHECK_FALSE(report.omit2_applicable);
  }
}

TEST_CASE("maps without a degree-one self-lift yield an empty omission report") {
  const OmitReport report = omit_check(euclidean_double(), Slope::make(0, 1));
  CHECK_FALSE(report.witness.has_value());
  CHECK_FALSE(report.fixed_all_c1);
  CHECK_FALSE(report.cusp_omitted);
  CHECK_FALSE(report.omit2_applicable);
  CHECK_FALSE(report.omit3_flagged);
}

TEST_CASE("the omission probe height is pinned") {
  CHECK(kOmitProbeHeight == 12);
}
