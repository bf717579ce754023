#include "netslope/halfspace.hpp"

#include <stdexcept>

namespace netslope {

// ---- horoballs and traces -----------------------------------------------------------

Rat tangent_horoball_scale(const Slope& s, const Slope& t, const Rat& m) {
  if (s == t)
    throw Error(Errc::EqualSlopes, "tangency scale needs two distinct cusps");
  if (m <= 0) throw Error(Errc::BadParameter, "horoball scale must be positive");
  const Int i = intersection_number(s, t);
  return Rat(1) / (m * Rat(i * i));
}

Int parabolic_trace(const Int& n1, const Slope& s1, const Int& n2,
                    const Slope& s2) {
  const Int i = intersection_number(s1, s2);
  return abs_int(Int(2) + n1 * n2 * i * i);
}

// ---- arc construction ---------------------------------------------------------------

std::string arc_kind_name(ArcKind kind) {
  switch (kind) {
    case ArcKind::GeneralFixed: return "general-fixed";
    case ArcKind::Obstruction: return "obstruction";
    case ArcKind::FixedPoint: return "fixed-point";
    case ArcKind::NetObstruction: return "net-obstruction";
    case ArcKind::NetFixedPoint: return "net-fixed-point";
  }
  return "unknown";
}

Int divisor_bound(const Int& deg) {
  if (deg < 1) throw Error(Errc::BadParameter, "degree must be positive");
  for (Int e(1); e <= deg; ++e)
    if (deg % e == 0 && e * e >= deg) return e;
  return deg;
}

Int d_f_constant(const Int& deg) {
  if (deg < 1) throw Error(Errc::BadParameter, "degree must be positive");
  Int l(1);
  for (Int k(2); k <= deg; ++k) l = lcm(l, k);
  return 2 * l;
}

namespace {

/// The weights (a, b) of the unified inequality a·|px+q|² < b·|p′x+q′|².
std::pair<Rat, Rat> arc_weights(ArcKind kind, const ArcParams& params) {
  switch (kind) {
    case ArcKind::GeneralFixed:
      if (params.rho <= 0 || params.rho0 <= 0)
        throw Error(Errc::BadParameter, "multipliers must be positive");
      return {Rat(1), params.rho * params.rho0};
    case ArcKind::Obstruction:
      if (params.rho <= 0)
        throw Error(Errc::BadParameter, "multiplier must be positive");
      return {Rat(1), params.rho};
    case ArcKind::FixedPoint:
      if (params.deg < 1)
        throw Error(Errc::BadParameter, "degree must be positive");
      return {Rat(params.deg * params.deg), Rat(1)};
    case ArcKind::NetObstruction:
      if (params.d < 1 || params.e < 1)
        throw Error(Errc::BadParameter, "order and divisor must be positive");
      return {Rat(params.d * params.d), Rat(params.e * params.e)};
    case ArcKind::NetFixedPoint:
      if (params.d < 1)
        throw Error(Errc::BadParameter, "order must be positive");
      return {Rat(params.d * params.d), Rat(1)};
  }
  throw Error(Errc::BadParameter, "unknown arc kind");
}



/// √w for positive rational w as s₀·√D with D squarefree: w = n/dn gives
/// √w = √(n·dn)/dn and n·dn = k²·D.
std::pair<Rat, Int> exact_sqrt(const Rat& w) {
  const auto [k, d] = squarefree_decompose(num(w) * den(w));
  return {Rat(k, den(w)), d};
}

}  // namespace

int BoundaryArc::side(const BoundaryPoint& x) const {
  switch (x.kind()) {
    case BoundaryPoint::Kind::Infinity:
      return sgn(qa);
    case BoundaryPoint::Kind::Rational: {
      const Rat& v = x.rational_value();
      return sgn(qa * v * v + qb * v + qc);
    }
    case BoundaryPoint::Kind::Surd: {
      // Q(r + c√D) = A + B√D.
      const Rat& r = x.surd_a();
      const Rat& c = x.surd_b();
      const Rat dd(x.surd_d());
      const Rat A = qa * (r * r + c * c * dd) + qb * r + qc;
      const Rat B = (2 * qa * r + qb) * c;
      if (B == 0) return sgn(A);
      if (A == 0) return sgn(B);
      const int sa = sgn(A);
      if (sa == sgn(B)) return sa;
      return sa * sgn(A * A - B * B * dd);
    }
  }
  return 0;
}

bool same_arc(const BoundaryArc& lhs, const BoundaryArc& rhs) {
  return lhs.start == rhs.start && lhs.end == rhs.end;
}

std::optional<BoundaryArc> excluded_arc(ArcKind kind, const Slope& s,
                                        const Slope& sp,
                                        const ArcParams& params) {
  const auto [a, b] = arc_weights(kind, params);
  const Int p = s.p(), q = s.q();
  const Int pp = sp.p(), qq = sp.q();

  BoundaryArc arc;
  arc.kind = kind;
  arc.s = s;
  arc.sp = sp;
  arc.qa = a * Rat(p * p) - b * Rat(pp * pp);
  arc.qb = 2 * (a * Rat(p * q) - b * Rat(pp * qq));
  arc.qc = a * Rat(q * q) - b * Rat(qq * qq);

  if (s == sp) {
    // The form collapses to (a−b)(px+q)²: empty, or all but the cusp.
    if (a >= b) return std::nullopt;
    arc.start = arc.end = cusp_of_slope(s);
    if (arc.side(arc.start) != 0)
      throw std::logic_error("collapsed arc form does not vanish at its cusp");
    return arc;
  }

  const Int inter = intersection_number(s, sp);
  if (arc.qb * arc.qb - 4 * arc.qa * arc.qc != 4 * a * b * Rat(inter * inter))
    throw std::logic_error("arc discriminant disagrees with the intersection number");

  if (arc.qa == 0) {
    if (arc.qb == 0)
      throw std::logic_error("arc form degenerated to a constant for distinct slopes");
    const BoundaryPoint root = BoundaryPoint::rational(-arc.qc / arc.qb);
    if (arc.qb > 0) {
      arc.start = BoundaryPoint::infinity();
      arc.end = root;
    } else {
      arc.start = root;
      arc.end = BoundaryPoint::infinity();
    }
  } else {
    const auto [s0, d] = exact_sqrt(a * b);
    const Rat mid = -arc.qb / (2 * arc.qa);
    const Rat coeff = Rat(inter) * s0 / arc.qa;
    const BoundaryPoint lo = BoundaryPoint::surd(mid, -abs_rat(coeff), d);
    const BoundaryPoint hi = BoundaryPoint::surd(mid, abs_rat(coeff), d);
    if (arc.qa > 0) {
      arc.start = lo;
      arc.end = hi;
    } else {
      arc.start = hi;
      arc.end = lo;
    }
  }

  if (arc.side(arc.start) != 0 || arc.side(arc.end) != 0)
    throw std::logic_error("arc endpoints are not roots of its form");
  if (!arc.contains(cusp_of_slope(s)))
    throw std::logic_error("excluded arc does not contain its own cusp");
  return arc;
}

BoundaryArc halfspace_geometric_arc(const Slope& s, const Slope& sp,
                                    const Rat& rho) {
  if (s == sp)
    throw Error(Errc::EqualSlopes, "the half-space construction needs distinct cusps");
  if (rho <= 0) throw Error(Errc::BadParameter, "multiplier must be positive");

  const Int p = s.p(), q = s.q();
  const Int pp = sp.p(), qq = sp.q();

  // Orientation-preserving transport M of the model pair (cusp ∞ ↦ cusp(s′),
  // cusp 0 ↦ cusp(s)): columns are the cusp vectors signed to make det = ι.
  const Int sigma = sgn(Int(q * pp - qq * p));
  const Int inter = intersection_number(s, sp);

  // Model arc endpoints are ∓√ρ; their images under M(w) = (−q′w − σq)/(p′w + σp).
  const auto [s0, d] = exact_sqrt(rho);
  BoundaryArc arc;
  arc.kind = ArcKind::Obstruction;
  arc.s = s;
  arc.sp = sp;
  arc.qa = Rat(p * p) - rho * Rat(pp * pp);
  arc.qb = 2 * (Rat(p * q) - rho * Rat(pp * qq));
  arc.qc = Rat(q * q) - rho * Rat(qq * qq);

  if (d == 1) {
    const auto transport = [&](int eta) {
      const Rat w = Rat(eta) * s0;
      const Rat dn = Rat(pp) * w + Rat(sigma * p);
      if (dn == 0) return BoundaryPoint::infinity();
      return BoundaryPoint::rational((Rat(-qq) * w - Rat(sigma * q)) / dn);
    };
    arc.start = transport(-1);
    arc.end = transport(+1);
  } else {
    // Rationalized image: x(η) = (q′p′ρ − qp)/(p² − ρp′²) + η·ι·s₀√D/(p² − ρp′²).
    const Rat dn = Rat(p * p) - rho * Rat(pp * pp);
    if (dn == 0)
      throw std::logic_error("irrational tangency scale cannot zero the transport");
    const Rat mid = (Rat(qq * pp) * rho - Rat(q * p)) / dn;
    const Rat coeff = Rat(inter) * s0 / dn;
    arc.start = BoundaryPoint::surd(mid, -coeff, d);
    arc.end = BoundaryPoint::surd(mid, coeff, d);
  }

  if (arc.side(arc.start) != 0 || arc.side(arc.end) != 0)
    throw std::logic_error("transported endpoints are not roots of the arc form");
  if (!arc.contains(cusp_of_slope(s)))
    throw std::logic_error("transported arc does not contain its own cusp");
  return arc;
}

}  // namespace netslope
