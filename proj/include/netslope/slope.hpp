#ifndef NETSLOPE_SLOPE_HPP
#define NETSLOPE_SLOPE_HPP

/**
 * @file slope.hpp
 * @brief Reduced extended rationals p/q (with ∞ = 1/0), the distinguished
 *        non-slope value, geometric intersection numbers, and ordered
 *        enumeration of all slopes up to a height bound.
 */

#include "netslope/lattice.hpp"
#include "netslope/numbers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace netslope {

// ---- slopes -------------------------------------------------------------------

/**
 * A reduced extended rational p/q.  Canonical form: gcd(|p|, q) = 1 and
 * q >= 0; infinity is stored as 1/0.  Equality is structural.
 */
class Slope {
 public:
  /// Builds p/q in canonical form.  p = q = 0 raises ZeroZero.
  static Slope make(Int p, Int q);
  /// The slope at infinity (1/0).
  static Slope infinity() { return Slope(1, 0, PrivateTag{}); }

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  bool is_infinity() const { return q_ == 0; }

  /// max(|p|, q); always >= 1.
  Int height() const;

  /// Primitive tangent vector (q, p) of a line with this slope.
  Vec2 direction() const { return {q_, p_}; }

  /// Normal form coefficients: the line {x : <x, normal()> = offset}.
  Vec2 normal() const { return {p_, -q_}; }

  /// Exact value comparison; infinity compares greater than every rational.
  static int compare_value(const Slope& a, const Slope& b);

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
  friend bool operator<(const Slope& a, const Slope& b) {
    return compare_value(a, b) < 0;
  }

  /// "p/q", or "inf" for the slope at infinity.
  std::string str() const;

  /// Parses "p/q", "inf", or a bare integer "p".  Raises ZeroZero on 0/0 and
  /// BadParameter on malformed text.
  static Slope parse(const std::string& text);

 private:
  struct PrivateTag {};
  Slope(Int p, Int q, PrivateTag) : p_(std::move(p)), q_(std::move(q)) {}
  Int p_;
  Int q_;
};

/**
 * A slope or the distinguished non-slope value (the result of a slope
 * function when no preimage component is essential).
 */
class ExtendedSlope {
 public:
  ExtendedSlope() = default;  // non-slope
  explicit ExtendedSlope(Slope s) : value_(std::move(s)) {}
  static ExtendedSlope non_slope() { return ExtendedSlope(); }

  bool is_slope() const { return value_.has_value(); }
  const Slope& slope() const {
    if (!value_) throw Error(Errc::BadParameter, "non-slope has no slope value");
    return *value_;
  }

  friend bool operator==(const ExtendedSlope& a, const ExtendedSlope& b) {
    if (a.is_slope() != b.is_slope()) return false;
    return !a.is_slope() || a.slope() == b.slope();
  }
  friend bool operator!=(const ExtendedSlope& a, const ExtendedSlope& b) {
    return !(a == b);
  }

  /// "p/q", "inf", or "nonslope".
  std::string str() const { return value_ ? value_->str() : "nonslope"; }

 private:
  std::optional<Slope> value_;
};

// ---- intersection numbers -------------------------------------------------------

/// Geometric intersection number |p q' - q p'| of two slopes.
Int intersection_number(const Slope& a, const Slope& b);

/// Bilinear extension: sum of intersection_number over a multiset.
Int intersection_number(const std::vector<Slope>& multiset, const Slope& b);

// ---- enumeration -----------------------------------------------------------------

/**
 * All reduced slopes of height <= H, each once, ordered by ascending height
 * block; inside a block by increasing value, except that infinity (height 1)
 * leads its block.  H >= 1 required.
 */
std::vector<Slope> farey_slopes(const Int& H);

}  // namespace netslope

#endif  // NETSLOPE_SLOPE_HPP
