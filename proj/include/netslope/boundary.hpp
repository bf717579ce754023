#ifndef NETSLOPE_BOUNDARY_HPP
#define NETSLOPE_BOUNDARY_HPP

/**
 * @file boundary.hpp
 * @brief Exact points on the circle ℝ ∪ {∞}: rationals, real quadratic
 *        surds a + b√D, and ∞, with a total linear order (∞ greatest),
 *        exact comparison, circular-arc membership, and the slope/cusp
 *        correspondence.
 */

#include "netslope/numbers.hpp"
#include "netslope/slope.hpp"

#include <string>

namespace netslope {

/**
 * A point of ℝ ∪ {∞} stored exactly.  Surds are canonical: b ≠ 0 and D
 * squarefree ≥ 2 (square factors of D are folded into b; b = 0 collapses to
 * a rational).  Structural equality coincides with numerical equality.
 */
class BoundaryPoint {
 public:
  enum class Kind { Rational, Surd, Infinity };

  BoundaryPoint() : kind_(Kind::Rational) {}
  static BoundaryPoint rational(Rat value);
  /// a + b*sqrt(radicand); radicand >= 0.  Collapses to a rational when the
  /// radicand's squarefree part is 1 or b = 0.
  static BoundaryPoint surd(Rat a, Rat b, Int radicand);
  static BoundaryPoint infinity();

  Kind kind() const { return kind_; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  bool is_rational() const { return kind_ == Kind::Rational; }

  /// Rational value; BadParameter unless kind is Rational.
  const Rat& rational_value() const;
  /// Surd parts (a, b, D); BadParameter unless kind is Surd.
  const Rat& surd_a() const;
  const Rat& surd_b() const;
  const Int& surd_d() const;

  /// "n/d", "(a + b*sqrt(D))" with n/d parts, or "inf".
  std::string str() const;

  /// Approximate real value for display; ∞ maps to +HUGE_VAL.
  double approx() const;

  friend bool operator==(const BoundaryPoint& x, const BoundaryPoint& y);
  friend bool operator!=(const BoundaryPoint& x, const BoundaryPoint& y) {
    return !(x == y);
  }

 private:
  Kind kind_;
  Rat a_{0};  // rational value, or the rational part of a surd
  Rat b_{0};  // surd coefficient
  Int d_{1};  // squarefree radicand
};

/// Three-way exact comparison in the linear order where ∞ is greatest:
/// -1 (x < y), 0 (equal), +1 (x > y).
int boundary_compare(const BoundaryPoint& x, const BoundaryPoint& y);

/**
 * Membership of x in the open arc from lo to hi in the circle's positive
 * direction (increasing reals, wrapping through ∞).  When lo == hi the arc
 * is the full circle minus that point.
 */
bool in_open_arc(const BoundaryPoint& lo, const BoundaryPoint& hi,
                 const BoundaryPoint& x);

/// Membership in the closed arc from lo to hi (a single point when lo == hi).
bool in_closed_arc(const BoundaryPoint& lo, const BoundaryPoint& hi,
                   const BoundaryPoint& x);

/**
 * True when x strictly precedes y on the positive walk that starts at
 * anchor.  The anchor itself occupies position zero.  x == y is never
 * "before"; x == anchor is before every y ≠ anchor.
 */
bool circularly_before(const BoundaryPoint& anchor, const BoundaryPoint& x,
                       const BoundaryPoint& y);

// ---- the slope/cusp correspondence ------------------------------------------

/// The boundary point -q/p attached to slope p/q (0 ↦ ∞, ∞ ↦ 0).
BoundaryPoint cusp_of_slope(const Slope& s);

/// Inverse of cusp_of_slope on rational points and ∞; BadParameter on surds.
Slope slope_of_cusp(const BoundaryPoint& x);

}  // namespace netslope

#endif  // NETSLOPE_BOUNDARY_HPP
