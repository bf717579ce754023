#ifndef NETSLOPE_PRESENTATION_HPP
#define NETSLOPE_PRESENTATION_HPP

/**
 * @file presentation.hpp
 * @brief The lattice presentation data model: a sublattice basis, a
 *        translation term, and up to four marked segments ("greens"), with
 *        validation, derived combinatorics (degree, elementary divisors,
 *        direction orders, the reflector-segment family, the marked-point
 *        portrait, orbifold type), a built-in one-parameter family,
 *        deterministic random sampling, and the text file format.
 */

#include "netslope/lattice.hpp"
#include "netslope/numbers.hpp"
#include "netslope/slope.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace netslope {

// ---- core data model -----------------------------------------------------------

/// Corner classes of the index-4 quotient Λ₁/2Λ₁, in file order.
inline constexpr std::array<const char*, 4> kCornerLabels = {"00", "10", "01",
                                                             "11"};

/**
 * A lattice presentation.  Basis vectors lambda1, lambda2 span the sublattice
 * Λ₁ ⊆ ℤ²; translation is the affine term of Φ(x) = A·x + translation with
 * A = [lambda1 lambda2]; green[i] is the far endpoint of the marked segment
 * attached to corner i (corner 00 = 0, 10 = λ₁, 01 = λ₂, 11 = λ₁+λ₂), or
 * absent when that marked segment is collapsed to the corner itself.
 */
struct Presentation {
  Vec2 lambda1;
  Vec2 lambda2;
  Vec2 translation;
  std::array<std::optional<Vec2>, 4> green;

  Mat2 matrix() const { return Mat2::from_columns(lambda1, lambda2); }
  Int det() const { return matrix().det(); }

  /// Corner representative of class index 0..3.
  Vec2 corner(int idx) const;
  /// Marked-point representative of class index: green far endpoint when
  /// present, the corner otherwise.
  Vec2 marked_rep(int idx) const;
  /// True when green[idx] is absent (segment collapsed to the corner).
  bool trivial_green(int idx) const { return !green[idx].has_value(); }
};

/// Membership of an integer vector in Λ₁ (requires nonsingular basis).
bool in_lattice(const Presentation& pres, const Vec2& v);
/// Membership in 2Λ₁.
bool in_double_lattice(const Presentation& pres, const Vec2& v);
/// Basis coordinates (a, b) with v = a·λ₁ + b·λ₂; nullopt when v ∉ Λ₁.
std::optional<Vec2> lattice_coords(const Presentation& pres, const Vec2& v);

/**
 * Canonical representative of v modulo 2Λ₁ (basis coordinates reduced into
 * [0, 2·|det|) through the adjugate).
 */
Vec2 canonical_mod_double(const Presentation& pres, const Vec2& v);

/**
 * Canonical representative of v modulo the involution group {x ↦ 2λ ± x}:
 * the lexicographic minimum of the two canonical 2Λ₁-reductions of ±v.
 */
Vec2 canonical_mod_involution(const Presentation& pres, const Vec2& v);

/// Equivalence of integer points under the involution group {x ↦ 2λ ± x}.
bool involution_equivalent(const Presentation& pres, const Vec2& x, const Vec2& y);

/// Canonical representatives of ℤ²/2Λ₁ (4·degree values, ascending).
std::vector<Vec2> residues_mod_double(const Presentation& pres);

/// Canonical representatives of ℤ² modulo the involution group
/// (2·degree + 2 values, ascending).
std::vector<Vec2> point_classes_mod_involution(const Presentation& pres);

// ---- validation ------------------------------------------------------------------

/// One failed presentation invariant, with human-readable witnesses.
struct Violation {
  std::string name;    ///< stable identifier, e.g. "SingularLattice"
  std::string detail;  ///< witnesses in free text
};

/**
 * Checks every structural invariant; returns an empty list exactly when the
 * presentation is usable by the engines.  Violations are data, not errors.
 */
std::vector<Violation> validate(const Presentation& pres);

/// Throws BadParameter listing the violations when validate is nonempty.
void require_valid(const Presentation& pres);

// ---- derived combinatorics ---------------------------------------------------------

/// Lattice index [ℤ² : Λ₁] = |det|.
Int degree(const Presentation& pres);

/// Smith invariants (m₁, m₂) of the basis matrix, m₁ | m₂, m₁·m₂ = degree.
std::pair<Int, Int> elementary_divisors(const Presentation& pres);

/// Least k ≥ 1 with k·(q, p) ∈ Λ₁ for the direction (q, p) of s; divides degree.
Int direction_order(const Presentation& pres, const Slope& s);

/**
 * A reflector segment: a marked segment doubled about its corner.  The full
 * family consists of the 2Λ₁-translates of the doubled segments of the
 * non-collapsed greens; it is invariant under the involution group.
 */
struct Mirror {
  Vec2 center;    ///< translated corner (the midpoint)
  Vec2 halfvec;   ///< far endpoint minus corner
  int corner_idx; ///< which green generated it (0..3)

  SegmentQ segment() const {
    return {to_rat2(center - halfvec), to_rat2(center + halfvec)};
  }
};

/// Every family member whose closed segment meets the closed box, once each.
std::vector<Mirror> mirror_segments(const Presentation& pres, const BoxQ& box);

/// Base (untranslated) reflector segments, one per non-collapsed green.
std::vector<Mirror> base_mirrors(const Presentation& pres);

// ---- marked-point dynamics -----------------------------------------------------------

/// Where each of the four marked points goes, and whether it is critical.
struct Portrait {
  struct Entry {
    int cls;        ///< source class index 0..3
    Vec2 rep;       ///< marked representative
    int image_cls;  ///< class index of the affine image
    bool critical;  ///< true iff the representative lies outside Λ₁
  };
  std::array<Entry, 4> points;

  bool has_fixed_point() const;
  int fixed_count() const;
};

enum class OrbifoldType { Hyperbolic, Euclidean };

/**
 * Applies Φ to each marked representative, reduces its basis coordinates
 * mod 2 to a corner class, and flags criticality.  LatticeImageFailure when
 * an image leaves Λ₁ (impossible for validated input).
 */
Portrait postcritical_portrait(const Presentation& pres);

/// Hyperbolic iff some marked point is critical.
OrbifoldType orbifold_type(const Presentation& pres);

// ---- generators -------------------------------------------------------------------

/**
 * The built-in one-parameter family: λ₁ = (n,0), λ₂ = (−1,1),
 * translation (n,0), greens 00 ↦ (1,0) and 10 ↦ (2,0), 01 and 11 collapsed.
 * Validates cleanly for every n ≥ 4.
 */
Presentation family_fn(const Int& n);

/**
 * Deterministic random presentation with 2 ≤ degree ≤ bound, translation at
 * one of the four corners, and green far endpoints in a small window around
 * their corners.  Resamples until validation passes (cap 5000 attempts,
 * then ExhaustedRetries).
 */
Presentation random_presentation(std::uint64_t seed, const Int& bound);

// ---- file format -------------------------------------------------------------------

/// Renders the line-oriented text form (see README for the grammar).
std::string serialize(const Presentation& pres);

/**
 * Parses the text form.  Raises ParseError with a line number on syntax
 * errors; the result is not validated (run validate separately).
 */
Presentation parse_presentation(const std::string& text);

/// Reads and parses a presentation file; IoError on filesystem failure.
Presentation load_presentation_file(const std::string& path);

}  // namespace netslope

#endif  // NETSLOPE_PRESENTATION_HPP
