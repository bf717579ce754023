#ifndef NETSLOPE_TRACE_HPP
#define NETSLOPE_TRACE_HPP

/**
 * @file trace.hpp
 * @brief Line tracing through the reflector family: a straight segment of
 *        rational slope is intersected with every reflector segment it meets,
 *        and the ordered reflection centers are composed into the folded
 *        endpoint.  On top of this sit the per-slope invariants d, c, μ and
 *        ρ obtained by tracing one representative line per preimage
 *        component.
 */

#include "netslope/lattice.hpp"
#include "netslope/numbers.hpp"
#include "netslope/presentation.hpp"
#include "netslope/slope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace netslope {

// ---- photon traces -----------------------------------------------------------------

/// One transversal crossing of the traced segment with a reflector.
struct Crossing {
  Rat t;        ///< parameter along the traced segment, strictly in (0, 1)
  Vec2 center;  ///< center of the crossed reflector
};

/// Homotopy effect of one traced period of a lifted line.
enum class LiftKind {
  Essential,  ///< even crossing count, nonzero displacement: carries a slope
  Collapsed,  ///< even crossing count, zero displacement
  Reversing,  ///< odd crossing count: the period closes through a point flip
};

/**
 * A traced segment [start, start + 2k·direction] with its reflector
 * crossings in order and the folded endpoint
 * w' = (−1)ⁿ·end + 2·Σ (−1)^{i+1}·centerᵢ.
 *
 * When k·direction lies in the sublattice the segment spans a full period of
 * its line's image curve, the crossing count parity matches the kind, and
 * the displacement invariants hold: w' − start ∈ 2Λ₁ for even counts (the
 * half displacement's basis coordinates are recorded), w' + start ∈ 2Λ₁ for
 * odd counts.
 */
struct PhotonTrace {
  Vec2 direction;  ///< primitive direction (q, p) of slope p/q
  Int k;           ///< length multiplier
  Rat offset;      ///< generic line offset actually used
  Rat2 start;      ///< v
  Rat2 end;        ///< w = v + 2k·direction
  std::vector<Crossing> crossings;
  Rat2 folded_end; ///< w'
  LiftKind kind{LiftKind::Collapsed};
  std::optional<Vec2> half_coords;      ///< (a, b): w' − v = 2(a·λ₁ + b·λ₂)
  std::optional<Slope> component_slope; ///< reduced b/a, Essential only
};

/**
 * Traces one line of the given primitive direction.  The line offset
 * ⟨x, (p,−q)⟩ starts from the requested value and is perturbed along a
 * deterministic schedule until the line is generic (no lattice points, no
 * reflector endpoints or reflector–reflector intersections on it, no
 * collinear reflectors); for each candidate line the segment start slides
 * deterministically along the direction until no crossing sits exactly on a
 * segment endpoint.  The first `skip` generic offsets are passed over, which
 * yields an independent generic choice for determinism checks.
 *
 * Throws NonGenericUnresolvable when the schedule is exhausted, reporting
 * the blocking incidence.
 */
PhotonTrace trace_segment(const Presentation& pres, const Vec2& direction,
                          const Rat& offset, const Int& k, unsigned skip = 0);

/// Debug rendering: one "t=... center=(..,..)" line per crossing, then the
/// folded endpoint, its half-displacement coordinates, and the slope.
std::string trace_debug_dump(const PhotonTrace& trace);

/**
 * Crossings of the fixed segment [start, start + steps·direction] with the
 * reflector family, ordered by parameter.  No offset perturbation happens:
 * the segment is taken literally.  Exact contact between a segment endpoint
 * and a reflector endpoint is accepted (the expected picture when the
 * endpoint is a marked point with a nontrivial reflector); every other
 * boundary contact — a reflector endpoint interior to the segment, a segment
 * endpoint interior to a reflector, a collinear reflector overlapping the
 * open segment, or two crossings at one parameter — throws
 * Errc::DegenerateArcModel.
 */
std::vector<Crossing> open_segment_crossings(const Presentation& pres,
                                             const Vec2& start,
                                             const Vec2& direction,
                                             const Int& steps);

/// Composite of the point reflections through the crossing centers, first
/// crossing outermost: x ↦ (−1)ⁿ·x + 2·Σ (−1)^{i+1}·centerᵢ.
Rat2 fold_point(const std::vector<Crossing>& crossings, const Rat2& x);

// ---- per-slope invariants ---------------------------------------------------------

/// Result of tracing one preimage component's representative line.
struct ComponentReport {
  int offset_index;  ///< which of the degree/d parallel line classes
  Rat offset;        ///< generic offset used for this class
  LiftKind kind;
  std::optional<Slope> slope;  ///< Essential components only
};

/**
 * The full per-slope invariant package: the direction order d, one report
 * per preimage component (degree/d of them), the essential count c, the
 * common essential slope μ (or the non-slope value when c = 0), and the
 * multiplier ρ = c/d.
 */
struct PreimageSummary {
  Slope s;
  Int d;
  std::vector<ComponentReport> components;
  Int c;
  ExtendedSlope mu;
  Rat rho;
};

/**
 * Enumerates the preimage components of the curve of slope s — one line
 * class per offset in {base + 2j : j = 0..degree/d − 1} modulo the isometry
 * action on offsets — traces each with k = d, classifies them, and checks
 * that all essential components agree on one slope.
 *
 * `skip` passes over that many generic offset families (batch retries keep
 * the 2j spacing intact).  Throws NonGenericUnresolvable when no generic
 * family exists in the schedule.
 */
PreimageSummary slope_invariants(const Presentation& pres, const Slope& s,
                                 unsigned skip = 0);

}  // namespace netslope

#endif  // NETSLOPE_TRACE_HPP
