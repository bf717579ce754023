#include "netslope/boundary.hpp"

#include <cmath>

namespace netslope {

// ---- construction -----------------------------------------------------------

BoundaryPoint BoundaryPoint::rational(Rat value) {
  BoundaryPoint p;
  p.kind_ = Kind::Rational;
  p.a_ = std::move(value);
  return p;
}

BoundaryPoint BoundaryPoint::surd(Rat a, Rat b, Int radicand) {
  if (radicand < 0)
    throw Error(Errc::BadParameter, "negative radicand in boundary surd");
  if (b == 0 || radicand == 0) return rational(std::move(a));
  auto [sq, rest] = squarefree_decompose(radicand);
  if (rest == 1) return rational(a + b * Rat(sq));
  BoundaryPoint p;
  p.kind_ = Kind::Surd;
  p.a_ = std::move(a);
  p.b_ = b * Rat(sq);
  p.d_ = rest;
  return p;
}

BoundaryPoint BoundaryPoint::infinity() {
  BoundaryPoint p;
  p.kind_ = Kind::Infinity;
  return p;
}

const Rat& BoundaryPoint::rational_value() const {
  if (kind_ != Kind::Rational)
    throw Error(Errc::BadParameter, "boundary point is not rational");
  return a_;
}

const Rat& BoundaryPoint::surd_a() const {
  if (kind_ != Kind::Surd) throw Error(Errc::BadParameter, "not a surd");
  return a_;
}

const Rat& BoundaryPoint::surd_b() const {
  if (kind_ != Kind::Surd) throw Error(Errc::BadParameter, "not a surd");
  return b_;
}

const Int& BoundaryPoint::surd_d() const {
  if (kind_ != Kind::Surd) throw Error(Errc::BadParameter, "not a surd");
  return d_;
}

static std::string rat_nd(const Rat& r) {
  return num(r).str() + "/" + den(r).str();
}

std::string BoundaryPoint::str() const {
  switch (kind_) {
    case Kind::Infinity: return "inf";
    case Kind::Rational: return rat_nd(a_);
    case Kind::Surd:
      return "(" + rat_nd(a_) + " + " + rat_nd(b_) + "*sqrt(" + d_.str() + "))";
  }
  return "?";
}

double BoundaryPoint::approx() const {
  switch (kind_) {
    case Kind::Infinity: return HUGE_VAL;
    case Kind::Rational: return static_cast<double>(a_);
    case Kind::Surd:
      return static_cast<double>(a_) +
             static_cast<double>(b_) * std::sqrt(static_cast<double>(d_));
  }
  return 0.0;
}

bool operator==(const BoundaryPoint& x, const BoundaryPoint& y) {
  if (x.kind_ != y.kind_) return false;
  switch (x.kind_) {
    case BoundaryPoint::Kind::Infinity: return true;
    case BoundaryPoint::Kind::Rational: return x.a_ == y.a_;
    case BoundaryPoint::Kind::Surd:
      return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  return false;
}

// ---- exact sign machinery -----------------------------------------------------

// Sign of r + b*sqrt(D) with D squarefree >= 2.
static int sign_rat_plus_surd(const Rat& r, const Rat& b, const Int& D) {
  if (b == 0) return sgn(r);
  if (r == 0) return sgn(b);
  int sr = sgn(r), sb = sgn(b);
  if (sr == sb) return sr;
  // Opposite signs: compare r^2 with b^2 D; the larger magnitude wins.
  Rat lhs = r * r;
  Rat rhs = b * b * Rat(D);
  if (lhs > rhs) return sr;
  if (lhs < rhs) return sb;
  return 0;  // r^2 == b^2 D would force sqrt(D) rational; cannot happen.
}

// Sign of b1*sqrt(D1) - b2*sqrt(D2), D1 != D2 squarefree >= 2, b1, b2 != 0.
static int sign_surd_difference(const Rat& b1, const Int& D1, const Rat& b2,
                                const Int& D2) {
  int s1 = sgn(b1), s2 = sgn(b2);
  if (s1 >= 0 && s2 <= 0) return 1;
  if (s1 <= 0 && s2 >= 0) return -1;
  // Same sign: compare squared magnitudes (equality impossible for D1 != D2).
  Rat m1 = b1 * b1 * Rat(D1);
  Rat m2 = b2 * b2 * Rat(D2);
  if (m1 == m2)
    throw Error(Errc::BadParameter, "incomparable surds with equal squares");
  return s1 * (m1 > m2 ? 1 : -1);
}

// Sign of r + b1*sqrt(D1) - b2*sqrt(D2) with distinct squarefree D's >= 2.
static int sign_two_radicals(const Rat& r, const Rat& b1, const Int& D1,
                             const Rat& b2, const Int& D2) {
  int su = sign_surd_difference(b1, D1, b2, D2);
  if (r == 0) return su;
  int sr = sgn(r);
  if (su == sr) return sr;
  if (su == 0) return sr;  // unreachable: the difference is irrational
  // Compare |u|^2 against r^2 where u = b1 sqrt(D1) - b2 sqrt(D2):
  //   u^2 = b1^2 D1 + b2^2 D2 - 2 b1 b2 sqrt(D1 D2).
  auto [sq, rest] = squarefree_decompose(D1 * D2);
  Rat u_sq_rat = b1 * b1 * Rat(D1) + b2 * b2 * Rat(D2);
  Rat u_sq_coef = -2 * b1 * b2 * Rat(sq);
  // sign(u^2 - r^2) via the single-radical rule (rest >= 2 since D1 != D2).
  int cmp = sign_rat_plus_surd(u_sq_rat - r * r, u_sq_coef, rest);
  if (cmp > 0) return su;   // |u| > |r|: the radical part dominates
  if (cmp < 0) return sr;   // |u| < |r|: the rational part dominates
  throw Error(Errc::BadParameter, "irrational value equal to a rational");
}

int boundary_compare(const BoundaryPoint& x, const BoundaryPoint& y) {
  using K = BoundaryPoint::Kind;
  if (x.kind() == K::Infinity && y.kind() == K::Infinity) return 0;
  if (x.kind() == K::Infinity) return 1;
  if (y.kind() == K::Infinity) return -1;
  if (x.kind() == K::Rational && y.kind() == K::Rational) {
    const Rat &a = x.rational_value(), &b = y.rational_value();
    return a < b ? -1 : (a > b ? 1 : 0);
  }
  if (x.kind() == K::Rational) {
    // x - y = (x - a) - b*sqrt(D)
    return sign_rat_plus_surd(x.rational_value() - y.surd_a(), -y.surd_b(),
                              y.surd_d());
  }
  if (y.kind() == K::Rational) {
    return sign_rat_plus_surd(x.surd_a() - y.rational_value(), x.surd_b(),
                              x.surd_d());
  }
  // Both surds.
  if (x.surd_d() == y.surd_d())
    return sign_rat_plus_surd(x.surd_a() - y.surd_a(), x.surd_b() - y.surd_b(),
                              x.surd_d());
  return sign_two_radicals(x.surd_a() - y.surd_a(), x.surd_b(), x.surd_d(),
                           y.surd_b(), y.surd_d());
}

// ---- circular arcs --------------------------------------------------------------

bool in_open_arc(const BoundaryPoint& lo, const BoundaryPoint& hi,
                 const BoundaryPoint& x) {
  int lh = boundary_compare(lo, hi);
  if (lh == 0) return boundary_compare(x, lo) != 0;  // circle minus a point
  if (lh < 0)  // ordinary interval (lo, hi)
    return boundary_compare(lo, x) < 0 && boundary_compare(x, hi) < 0;
  // Wrapping arc: everything outside the closed interval [hi, lo].
  return boundary_compare(x, hi) < 0 || boundary_compare(lo, x) < 0;
}

bool in_closed_arc(const BoundaryPoint& lo, const BoundaryPoint& hi,
                   const BoundaryPoint& x) {
  if (x == lo || x == hi) return true;
  if (boundary_compare(lo, hi) == 0) return x == lo;  // degenerate point
  return in_open_arc(lo, hi, x);
}

bool circularly_before(const BoundaryPoint& anchor, const BoundaryPoint& x,
                       const BoundaryPoint& y) {
  if (x == y) return false;
  if (x == anchor) return true;
  if (y == anchor) return false;
  return in_open_arc(anchor, y, x);
}

// ---- slope/cusp correspondence ----------------------------------------------------

BoundaryPoint cusp_of_slope(const Slope& s) {
  if (s.p() == 0) return BoundaryPoint::infinity();
  return BoundaryPoint::rational(make_rat(-s.q(), s.p()));
}

Slope slope_of_cusp(const BoundaryPoint& x) {
  if (x.is_infinity()) return Slope::make(0, 1);
  if (!x.is_rational())
    throw Error(Errc::BadParameter, "no rational slope has an irrational cusp");
  const Rat& v = x.rational_value();
  // cusp(p/q) = -q/p = v = n/d  =>  (p, q) = (-d, n).
  return Slope::make(-den(v), num(v));
}

}  // namespace netslope
