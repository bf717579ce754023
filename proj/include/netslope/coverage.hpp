#ifndef NETSLOPE_COVERAGE_HPP
#define NETSLOPE_COVERAGE_HPP

/**
 * @file coverage.hpp
 * @brief Covering the boundary circle by excluded arcs: the residual-arc
 *        engine, probe sweeps, fixed-point search, rationality verdicts,
 *        and the self-lift omission report.
 *
 * The engine subtracts the open excluded arc of each probe slope from a
 * residual set of closed arcs.  When the residual shrinks to finitely many
 * points that are each individually discharged, no obstruction cusp
 * survives anywhere on the circle and the map is certified unobstructed.
 */

#include "netslope/arcs.hpp"
#include "netslope/boundary.hpp"
#include "netslope/halfspace.hpp"
#include "netslope/numbers.hpp"
#include "netslope/presentation.hpp"
#include "netslope/slope.hpp"
#include "netslope/trace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace netslope {

// ---- residual bookkeeping -----------------------------------------------------------

/// Closed arc from lo to hi in the circle's positive direction; lo == hi is
/// a single point.
struct ClosedArc {
  BoundaryPoint lo;
  BoundaryPoint hi;
  bool is_point() const { return lo == hi; }
};

/// One probe slope with its invariants and the arc it contributed.
struct ProbeRecord {
  Slope s;
  ExtendedSlope mu;
  Int d{1};
  Int c{0};
  Rat rho{0};
  std::optional<BoundaryArc> arc;
};

/// A residual point discharged by a direct computation.
struct DirectCheck {
  BoundaryPoint point;
  std::optional<Slope> t;  ///< cusp slope, absent for irrational points
  std::string reason;
};

/**
 * The state of a coverage sweep: the residual (the circle minus the union
 * of all accepted open arcs) as pairwise-disjoint closed arcs in a
 * deterministic order, every processed probe, and any direct point
 * certifications.  `full` marks the untouched circle (empty residual list
 * then means "everything", not "nothing").
 */
struct CoverageState {
  ArcKind kind{ArcKind::NetObstruction};
  bool full = true;
  std::vector<ClosedArc> residual;
  std::vector<ProbeRecord> probes;
  std::vector<DirectCheck> certified;
};

/// Subtracts an open arc from the residual.
void subtract_arc(CoverageState& state, const BoundaryArc& arc);

/// Membership of x in the residual set.
bool residual_contains(const CoverageState& state, const BoundaryPoint& x);

/// True when the residual is a finite set of points (never true while full).
bool residual_is_finite(const CoverageState& state);

// ---- sweeps and verdicts ------------------------------------------------------------

/**
 * Sweeps every slope of height ≤ H in deterministic order; probes whose
 * image slope exists contribute their excluded arc (Obstruction built from
 * the probe's multiplier, NetObstruction from its direction order and the
 * degree's divisor bound).  Probe invariants are evaluated in parallel; the
 * subtraction order, and hence the result, is schedule-independent.
 * Requires a hyperbolic orbifold (UnsupportedOrbifold otherwise); the kind
 * must be Obstruction or NetObstruction (BadParameter).
 */
CoverageState coverage_run(const Presentation& pres, int height,
                           ArcKind kind);

/// All fixed slopes of height ≤ H with their multipliers, sorted by height
/// (stable within a height).
std::vector<std::pair<Slope, Rat>> fixed_point_search(const Presentation& pres,
                                                      int height);

enum class VerdictTag { Obstructed, CertifiedUnobstructed, Inconclusive };

struct RationalityVerdict {
  VerdictTag tag{VerdictTag::Inconclusive};
  std::optional<Slope> obstruction_slope;
  std::optional<Rat> obstruction_rho;
  CoverageState state;  ///< certificate: probes, residual, direct checks
};

/**
 * The rationality decision at probe height H.  Obstructed when some fixed
 * slope of height ≤ H has multiplier ≥ 1.  Otherwise a NetObstruction
 * coverage sweep runs: if the residual is a finite point set and every
 * point is discharged — irrational points are no cusps; rational points'
 * cusp slopes are checked to move under the slope map or to have
 * multiplier < 1 — the map is certified unobstructed.  Any surviving arc
 * or undischarged point leaves the verdict inconclusive.  Requires a
 * hyperbolic orbifold (UnsupportedOrbifold otherwise).
 */
RationalityVerdict rationality_verdict(const Presentation& pres, int height);

// ---- omission report ----------------------------------------------------------------

/// Probe height used by omit_check's consequence verification.
inline constexpr int kOmitProbeHeight = 12;

/**
 * The consequences of a degree-one self-lift at s, each verified against
 * probes of height ≤ 12: (1) every other fixed slope has a connected
 * essential preimage (c = 1); (2) the cusp of s lies outside every
 * generated excluded arc; (3) when both elementary divisors exceed 1, the
 * orbifold is hyperbolic, and s is not itself an obstruction, the cusp of s
 * avoids even the closures of the arcs — and if some other slope is an
 * obstruction, an infinite family of omitted points accumulating at that
 * obstruction's cusp exists (flagged, not enumerated).
 */
struct OmitReport {
  Slope s;
  std::optional<SelfLiftWitness> witness;
  bool fixed_all_c1 = false;
  std::vector<Slope> c1_failures;
  bool cusp_omitted = false;
  bool omit2_applicable = false;
  bool omit2_closure_omitted = false;
  bool omit3_flagged = false;
  std::vector<Slope> other_obstructions;
};

OmitReport omit_check(const Presentation& pres, const Slope& s);

}  // namespace netslope

#endif  // NETSLOPE_COVERAGE_HPP
