#ifndef NETSLOPE_HALFSPACE_HPP
#define NETSLOPE_HALFSPACE_HPP

/**
 * @file halfspace.hpp
 * @brief Horoballs, parabolic traces, and the excluded boundary arcs: open
 *        arcs of ℝ ∪ {∞} cut out by quadratic inequalities comparing two
 *        slopes, which cannot contain cusps of obstructions or of fixed
 *        slopes of large multiplier.
 *
 * Every arc is the solution set {x : Q(x) < 0} of an exact rational
 * quadratic (or linear) form; membership queries always evaluate the form,
 * never the stored endpoints, which exist only for coverage bookkeeping.
 */

#include "netslope/boundary.hpp"
#include "netslope/numbers.hpp"
#include "netslope/slope.hpp"

#include <optional>
#include <string>

namespace netslope {

// ---- horoballs and traces -----------------------------------------------------------

/// The horoball {z ∈ H : Im(z)/|pz+q|² > scale} tangent to the boundary at
/// the cusp −q/p of slope p/q; Euclidean diameter 1/(scale·p²) when p ≠ 0.
struct Horoball {
  Slope s;
  Rat scale;
};

/**
 * The scale m′ making the horoball at cusp(t) tangent to the horoball at
 * cusp(s) of scale m: m′ = 1/(m·ι(s,t)²).  Throws EqualSlopes when s = t.
 */
Rat tangent_horoball_scale(const Slope& s, const Slope& t, const Rat& m);

/**
 * |2 + n₁·n₂·ι(s₁,s₂)²|, the absolute trace of P₁P₂⁻¹ for parabolics Pᵢ
 * twisting nᵢ times about the cusp of sᵢ.
 */
Int parabolic_trace(const Int& n1, const Slope& s1, const Int& n2,
                    const Slope& s2);

// ---- excluded arcs ------------------------------------------------------------------

/// Which inequality generated an arc.
enum class ArcKind {
  GeneralFixed,    ///< |px+q|² < ρρ₀|p′x+q′|²; excludes fixed cusps of multiplier ≥ ρ₀
  Obstruction,     ///< |px+q|² < ρ|p′x+q′|²; excludes obstruction cusps
  FixedPoint,      ///< deg|px+q| < |p′x+q′|; excludes all fixed cusps
  NetObstruction,  ///< d|px+q| < e|p′x+q′|; excludes obstruction cusps
  NetFixedPoint,   ///< d|px+q| < |p′x+q′|; excludes all fixed cusps
};

std::string arc_kind_name(ArcKind kind);

/// Parameters for excluded_arc; each kind reads the fields it needs.
struct ArcParams {
  Rat rho{1};   ///< multiplier (Obstruction, GeneralFixed)
  Rat rho0{1};  ///< multiplier threshold (GeneralFixed)
  Int deg{1};   ///< map degree (FixedPoint)
  Int d{1};     ///< direction order (NetObstruction, NetFixedPoint)
  Int e{1};     ///< divisor bound (NetObstruction)
};

/**
 * An open arc {x : Q(x) < 0} of the boundary circle with Q(∞) read as the
 * leading coefficient.  The arc runs in the circle's positive direction
 * from `start` to `end`; equal endpoints encode the full circle minus that
 * point.  Membership is decided by the sign of Q alone.
 */
struct BoundaryArc {
  Rat qa, qb, qc;  ///< Q(x) = qa·x² + qb·x + qc
  BoundaryPoint start;
  BoundaryPoint end;
  ArcKind kind{ArcKind::Obstruction};
  Slope s{Slope::make(0, 1)};   ///< source slope (cusp inside the arc)
  Slope sp{Slope::make(0, 1)};  ///< image slope

  /// Sign of Q at x: −1 inside, 0 on the boundary, +1 outside.
  int side(const BoundaryPoint& x) const;
  bool contains(const BoundaryPoint& x) const { return side(x) < 0; }
  /// Closed containment: Q(x) ≤ 0.
  bool closure_contains(const BoundaryPoint& x) const { return side(x) <= 0; }
};

/// Endpoint-for-endpoint equality (defining forms may differ by scale).
bool same_arc(const BoundaryArc& lhs, const BoundaryArc& rhs);

/// Smallest positive divisor e of deg with e² ≥ deg.
Int divisor_bound(const Int& deg);

/**
 * The exact open solution arc of the kind's inequality for reduced slopes
 * s = p/q against s′ = p′/q′, or nothing when the inequality has no
 * solutions.  Quadratic endpoints may be real quadratic surds; a vanishing
 * leading coefficient puts one endpoint at ∞; s = s′ collapses the form to
 * a multiple of (px+q)², yielding nothing or the full circle minus cusp(s).
 * The arc always contains cusp(s) when s ≠ s′; a form negative on the whole
 * circle is impossible and aborts.
 */
std::optional<BoundaryArc> excluded_arc(ArcKind kind, const Slope& s,
                                        const Slope& sp,
                                        const ArcParams& params);

/**
 * The same arc for the Obstruction inequality built geometrically and
 * independently: the ideal boundary of the half-space bounded by the
 * geodesic through the tangency point of the horoballs at cusp(s) and
 * cusp(s′) with scales m and ρm, transported exactly from the model pair
 * (∞, 0) by the Möbius map matching cusps and scales.  Agrees with
 * excluded_arc(Obstruction, ...) endpoint for endpoint.  Throws EqualSlopes
 * when s = s′.
 */
BoundaryArc halfspace_geometric_arc(const Slope& s, const Slope& sp,
                                    const Rat& rho);

/// 2·lcm(1..deg): the uniform denominator bound for multipliers of a map of
/// the given degree.
Int d_f_constant(const Int& deg);

}  // namespace netslope

#endif  // NETSLOPE_HALFSPACE_HPP
