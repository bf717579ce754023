#ifndef NETSLOPE_LATTICE_HPP
#define NETSLOPE_LATTICE_HPP

/**
 * @file lattice.hpp
 * @brief Exact planar lattice and segment geometry: integer/rational
 *        2-vectors, 2x2 integer matrices, sublattice membership, Smith
 *        divisors, and exact segment intersection.
 */

#include "netslope/numbers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace netslope {

// ---- vectors ----------------------------------------------------------------

/// Integer 2-vector.
struct Vec2 {
  Int x{0};
  Int y{0};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(const Int& k, const Vec2& a) { return {k * a.x, k * a.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
  /// Lexicographic order (x, then y); used for canonical representatives.
  friend bool operator<(const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
  std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

/// Rational 2-vector.
struct Rat2 {
  Rat x{0};
  Rat y{0};

  friend Rat2 operator+(const Rat2& a, const Rat2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Rat2 operator-(const Rat2& a, const Rat2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Rat2 operator-(const Rat2& a) { return {-a.x, -a.y}; }
  friend Rat2 operator*(const Rat& k, const Rat2& a) { return {k * a.x, k * a.y}; }
  friend bool operator==(const Rat2& a, const Rat2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Rat2& a, const Rat2& b) { return !(a == b); }
};

inline Rat2 to_rat2(const Vec2& v) { return {Rat(v.x), Rat(v.y)}; }

inline Int dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Int cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Rat2& a, const Rat2& b) { return a.x * b.x + a.y * b.y; }
inline Rat cross(const Rat2& a, const Rat2& b) { return a.x * b.y - a.y * b.x; }

/// True when gcd(|x|, |y|) == 1 (the vector generates a primitive direction).
bool is_primitive(const Vec2& v);

// ---- integer 2x2 matrices -----------------------------------------------------

/// Column-major 2x2 integer matrix [[a, b], [c, d]] = columns (a,c), (b,d).
struct Mat2 {
  Int a{0}, b{0}, c{0}, d{0};

  static Mat2 from_columns(const Vec2& col1, const Vec2& col2) {
    return {col1.x, col2.x, col1.y, col2.y};
  }
  Int det() const { return a * d - b * c; }
  /// Adjugate: mat * adjugate() == det * identity.
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
};

/**
 * Smith-form diagonal (m1, m2) of a nonsingular integer 2x2 matrix, with
 * m1 | m2 and m1*m2 = |det|.  For 2x2 matrices m1 is the gcd of the entries.
 */
std::pair<Int, Int> smith_divisors(const Mat2& m);

// ---- exact segment geometry ----------------------------------------------------

/// Closed rational segment [p0, p1].
struct SegmentQ {
  Rat2 p0;
  Rat2 p1;
};

/// Classification of a segment/segment incidence.
enum class SegHit {
  Disjoint,      ///< no common point on the parametrized lines' relevant ranges
  Transversal,   ///< unique intersection point; parameters reported
  ParallelApart, ///< parallel supporting lines, no common point
  CollinearTouch,///< same supporting line, closed overlap is a single point
  CollinearOverlap ///< same supporting line, overlap of positive length
};

/// Result of intersecting segments A(t) = a0 + t (a1-a0), B(u) = b0 + u (b1-b0).
struct SegIntersection {
  SegHit kind{SegHit::Disjoint};
  Rat t{0};  ///< parameter on A for Transversal / a touch point
  Rat u{0};  ///< parameter on B for Transversal / a touch point
};

/**
 * Exact intersection of two closed segments.  Degenerate (point) segments are
 * rejected with BadParameter.  Collinear configurations are classified rather
 * than resolved to parameters beyond a single touch point.
 */
SegIntersection intersect_segments(const SegmentQ& a, const SegmentQ& b);

/// Axis-aligned rational box [xmin, xmax] x [ymin, ymax].
struct BoxQ {
  Rat xmin, xmax, ymin, ymax;
};

/// True when the closed segment meets the closed box (exact clipping test).
bool segment_meets_box(const SegmentQ& seg, const BoxQ& box);

/// Tight axis-aligned bounding box of a segment.
BoxQ segment_box(const SegmentQ& seg);

/**
 * All integer pairs (a, b) with a*col1 + b*col2 inside the closed box,
 * ascending in (a, b).  The columns must be linearly independent.
 */
std::vector<Vec2> lattice_points_in_box(const Vec2& col1, const Vec2& col2,
                                        const BoxQ& box);

}  // namespace netslope

#endif  // NETSLOPE_LATTICE_HPP
