/**
 * @file test_halfspace.cpp
 * @brief Horoball scales, parabolic traces, and the excluded-arc
 *        constructions (quadratic and geometric).
 */

#include "netslope/halfspace.hpp"

#include "netslope/boundary.hpp"
#include "netslope/numbers.hpp"
#include "netslope/slope.hpp"

#include <doctest.h>

#include <vector>

using namespace netslope;

namespace {

Slope random_slope(Rng& rng, long long bound) {
  for (;;) {
    long long p = rng.between(-bound, bound);
    long long q = rng.between(0, bound);
    if (p != 0 || q != 0) return Slope::make(p, q);
  }
}

/// 2x2 integer matrix with multiplication, for the parabolic oracle.
struct TwMat {
  Int a, b, c, d;
  friend TwMat operator*(const TwMat& m, const TwMat& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
};

/// The parabolic twisting n times about the cusp -q/p of slope p/q:
/// conjugate of [[1, n], [0, 1]] fixing that boundary point.
TwMat twist_matrix(const Int& n, const Slope& s) {
  const Int p = s.p(), q = s.q();
  return {1 + n * q * p, n * q * q, -n * p * p, 1 - n * p * q};
}

}  // namespace

// ---- horoball scales -----------------------------------------------------------

TEST_CASE("tangent horoball scales from the intersection number") {
  CHECK(tangent_horoball_scale(Slope::make(1, 1), Slope::make(0, 1), Rat(1)) ==
        Rat(1));
  CHECK(tangent_horoball_scale(Slope::make(2, 1), Slope::make(0, 1), Rat(1)) ==
        Rat(1, 4));
  CHECK(tangent_horoball_scale(Slope::infinity(), Slope::make(0, 1), Rat(3)) ==
        Rat(1, 3));
  CHECK_THROWS_AS(
      tangent_horoball_scale(Slope::make(1, 2), Slope::make(1, 2), Rat(1)),
      Error);

  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    Slope s = random_slope(rng, 8);
    Slope t = random_slope(rng, 8);
    if (s == t) continue;
    Rat m = make_rat(rng.between(1, 9), rng.between(1, 9));
    Rat mp = tangent_horoball_scale(s, t, m);
    Int iota = intersection_number(s, t);
    CHECK(mp == Rat(1) / (m * Rat(iota) * Rat(iota)));
    CHECK(tangent_horoball_scale(t, s, mp) == m);  // round trip
  }
}

// ---- parabolic traces ------------------------------------------------------------

TEST_CASE("parabolic traces match the closed formula on fixed examples") {
  CHECK(parabolic_trace(Int(1), Slope::infinity(), Int(1), Slope::infinity()) ==
        2);
  CHECK(parabolic_trace(Int(1), Slope::infinity(), Int(1), Slope::make(0, 1)) ==
        3);
  CHECK(parabolic_trace(Int(1), Slope::infinity(), Int(-5), Slope::make(0, 1)) ==
        3);
  CHECK(parabolic_trace(Int(2), Slope::make(1, 1), Int(3), Slope::make(-1, 1)) ==
        abs_int(Int(2) + Int(2) * Int(3) * Int(4)));
}

TEST_CASE("parabolic traces match brute-force matrix products") {
  Rng rng(43);
  for (int i = 0; i < 400; ++i) {
    Slope s1 = random_slope(rng, 7);
    Slope s2 = random_slope(rng, 7);
    Int n1 = rng.between(-6, 6);
    Int n2 = rng.between(-6, 6);
    if (n1 == 0) n1 = 1;
    if (n2 == 0) n2 = 1;
    // P1 * P2^{-1}: inverting a parabolic negates its twist count.
    TwMat prod = twist_matrix(n1, s1) * twist_matrix(-n2, s2);
    CHECK(parabolic_trace(n1, s1, n2, s2) == abs_int(prod.a + prod.d));
  }
}

// ---- small integer constants --------------------------------------------------------

TEST_CASE("divisor bounds and the multiplier denominator constant") {
  CHECK(divisor_bound(Int(1)) == 1);
  CHECK(divisor_bound(Int(2)) == 2);
  CHECK(divisor_bound(Int(3)) == 3);
  CHECK(divisor_bound(Int(4)) == 2);
  CHECK(divisor_bound(Int(5)) == 5);
  CHECK(divisor_bound(Int(6)) == 3);
  CHECK(divisor_bound(Int(8)) == 4);
  CHECK(divisor_bound(Int(9)) == 3);
  CHECK(divisor_bound(Int(12)) == 4);
  for (Int deg = 1; deg <= 30; ++deg) {
    Int e = divisor_bound(deg);
    CHECK(deg % e == 0);
    CHECK(e * e >= deg);
    // Minimality among divisors.
    for (Int f = 1; f < e; ++f)
      if (deg % f == 0) CHECK(f * f < deg);
  }

  CHECK(d_f_constant(Int(1)) == 2);
  CHECK(d_f_constant(Int(4)) == 24);
  CHECK(d_f_constant(Int(6)) == 120);
}

// ---- excluded arcs --------------------------------------------------------------------

TEST_CASE("the linear fixed-point inequality gives a rational arc") {
  ArcParams params;
  params.deg = 2;
  const auto arc = excluded_arc(ArcKind::FixedPoint, Slope::infinity(),
                                Slope::make(0, 1), params);
  REQUIRE(arc.has_value());
  CHECK(arc->start == BoundaryPoint::rational(Rat(-1, 2)));
  CHECK(arc->end == BoundaryPoint::rational(Rat(1, 2)));
  CHECK(arc->contains(BoundaryPoint::rational(Rat(0))));
  CHECK(arc->contains(cusp_of_slope(Slope::infinity())));
  CHECK_FALSE(arc->contains(BoundaryPoint::rational(Rat(1, 2))));
  CHECK(arc->closure_contains(BoundaryPoint::rational(Rat(1, 2))));
  CHECK_FALSE(arc->contains(BoundaryPoint::infinity()));
}

TEST_CASE("degenerate comparisons yield no arc or the punctured circle") {
  ArcParams same;
  same.d = 5;
  same.e = 5;
  CHECK_FALSE(excluded_arc(ArcKind::NetObstruction, Slope::make(1, 2),
                           Slope::make(1, 2), same)
                  .has_value());

  ArcParams weak;
  weak.rho = Rat(1, 2);
  CHECK_FALSE(excluded_arc(ArcKind::Obstruction, Slope::make(3, 1),
                           Slope::make(3, 1), weak)
                  .has_value());

  ArcParams strong;
  strong.rho = Rat(2);
  const auto punctured = excluded_arc(ArcKind::Obstruction, Slope::make(3, 1),
                                      Slope::make(3, 1), strong);
  REQUIRE(punctured.has_value());
  const BoundaryPoint cusp = cusp_of_slope(Slope::make(3, 1));
  CHECK(punctured->start == cusp);
  CHECK(punctured->end == cusp);
  CHECK_FALSE(punctured->contains(cusp));
  CHECK(punctured->closure_contains(cusp));
  CHECK(punctured->contains(BoundaryPoint::rational(Rat(7))));
  CHECK(punctured->contains(BoundaryPoint::infinity()));
}

TEST_CASE("the symmetric obstruction arc and a surd-endpoint arc are exact") {
  ArcParams unit;
  unit.rho = Rat(1);
  const auto sym = excluded_arc(ArcKind::Obstruction, Slope::infinity(),
                                Slope::make(0, 1), unit);
  REQUIRE(sym.has_value());
  CHECK(sym->start == BoundaryPoint::rational(Rat(-1)));
  CHECK(sym->end == BoundaryPoint::rational(Rat(1)));

  // 5*(x+2)^2 < x^2, the arc of the probe 1/2 against image infinity with
  // multiplier 1/5: endpoints -5/2 -+ sqrt(5)/2.
  ArcParams fifth;
  fifth.rho = Rat(1, 5);
  const auto surd = excluded_arc(ArcKind::Obstruction, Slope::make(1, 2),
                                 Slope::infinity(), fifth);
  REQUIRE(surd.has_value());
  CHECK(surd->start == BoundaryPoint::surd(Rat(-5, 2), Rat(-1, 2), Int(5)));
  CHECK(surd->end == BoundaryPoint::surd(Rat(-5, 2), Rat(1, 2), Int(5)));
  CHECK(surd->contains(cusp_of_slope(Slope::make(1, 2))));
  CHECK_FALSE(surd->contains(BoundaryPoint::rational(Rat(0))));
  CHECK_FALSE(surd->contains(surd->start));
  CHECK(surd->closure_contains(surd->start));
}

TEST_CASE("obstruction arcs contain their source cusp") {
  Rng rng(47);
  for (int i = 0; i < 300; ++i) {
    Slope s = random_slope(rng, 9);
    Slope sp = random_slope(rng, 9);
    if (s == sp) continue;
    ArcParams params;
    params.rho = make_rat(rng.between(1, 12), rng.between(1, 12));
    const auto arc = excluded_arc(ArcKind::Obstruction, s, sp, params);
    REQUIRE(arc.has_value());
    CHECK(arc->contains(cusp_of_slope(s)));
    CHECK(arc->kind == ArcKind::Obstruction);
    CHECK(arc->s == s);
    CHECK(arc->sp == sp);
  }
}

TEST_CASE("membership by sign agrees with membership by interval") {
  Rng rng(53);
  std::vector<BoundaryPoint> probes;
  for (const Slope& t : farey_slopes(Int(3))) probes.push_back(cusp_of_slope(t));
  probes.push_back(BoundaryPoint::surd(Rat(0), Rat(1), Int(2)));
  probes.push_back(BoundaryPoint::surd(Rat(-2), Rat(-1), Int(3)));

  int arcs_checked = 0;
  for (int i = 0; i < 150; ++i) {
    Slope s = random_slope(rng, 8);
    Slope sp = random_slope(rng, 8);
    if (s == sp) continue;
    ArcParams params;
    params.rho = make_rat(rng.between(1, 10), rng.between(1, 10));
    params.deg = rng.between(2, 9);
    params.d = rng.between(1, 6);
    params.e = rng.between(1, 6);
    for (ArcKind kind : {ArcKind::Obstruction, ArcKind::GeneralFixed,
                         ArcKind::FixedPoint, ArcKind::NetObstruction,
                         ArcKind::NetFixedPoint}) {
      const auto arc = excluded_arc(kind, s, sp, params);
      if (!arc) continue;
      ++arcs_checked;
      for (const BoundaryPoint& x : probes)
        CHECK(arc->contains(x) == in_open_arc(arc->start, arc->end, x));
    }
  }
  CHECK(arcs_checked > 300);
}

TEST_CASE("kind names are stable") {
  CHECK(arc_kind_name(ArcKind::GeneralFixed) == "general-fixed");
  CHECK(arc_kind_name(ArcKind::Obstruction) == "obstruction");
  CHECK(arc_kind_name(ArcKind::FixedPoint) == "fixed-point");
  CHECK(arc_kind_name(ArcKind::NetObstruction) == "net-obstruction");
  CHECK(arc_kind_name(ArcKind::NetFixedPoint) == "net-fixed-point");
}

// ---- geometric construction -------------------------------------------------------------

TEST_CASE("the geometric arc equals the quadratic arc on fixed cases") {
  const BoundaryArc model =
      halfspace_geometric_arc(Slope::infinity(), Slope::make(0, 1), Rat(1));
  CHECK(model.start == BoundaryPoint::rational(Rat(-1)));
  CHECK(model.end == BoundaryPoint::rational(Rat(1)));

  ArcParams unit;
  unit.rho = Rat(1);
  const auto quad = excluded_arc(ArcKind::Obstruction, Slope::infinity(),
                                 Slope::make(0, 1), unit);
  REQUIRE(quad.has_value());
  CHECK(same_arc(model, *quad));

  CHECK_THROWS_AS(
      halfspace_geometric_arc(Slope::make(1, 2), Slope::make(1, 2), Rat(1)),
      Error);
}

TEST_CASE("the geometric arc equals the quadratic arc on random inputs") {
  Rng rng(59);
  int compared = 0;
  while (compared < 120) {
    Slope s = random_slope(rng, 9);
    Slope sp = random_slope(rng, 9);
    if (s == sp) continue;
    Rat rho = make_rat(rng.between(1, 15), rng.between(1, 15));
    ArcParams params;
    params.rho = rho;
    const auto quad = excluded_arc(ArcKind::Obstruction, s, sp, params);
    REQUIRE(quad.has_value());
    const BoundaryArc geo = halfspace_geometric_arc(s, sp, rho);
    CHECK(same_arc(geo, *quad));
    CHECK(geo.start == quad->start);
    CHECK(geo.end == quad->end);
    ++compared;
  }
}

TEST_CASE("same_arc distinguishes genuinely different arcs") {
  ArcParams unit;
  unit.rho = Rat(1);
  const auto a = excluded_arc(ArcKind::Obstruction, Slope::infinity(),
                              Slope::make(0, 1), unit);
  ArcParams half;
  half.rho = Rat(1, 4);
  const auto b = excluded_arc(ArcKind::Obstruction, Slope::infinity(),
                              Slope::make(0, 1), half);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK_FALSE(same_arc(*a, *b));
  CHECK(same_arc(*a, *a));
  // Scaling the defining form preserves the arc.
  BoundaryArc scaled = *a;
  scaled.qa *= 3;
  scaled.qb *= 3;
  scaled.qc *= 3;
  CHECK(same_arc(*a, scaled));
}
