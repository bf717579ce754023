/**
 * @file test_presentation.cpp
 * @brief The presentation data model: validation, lattice reductions,
 *        derived combinatorics, reflector segments, marked-point dynamics,
 *        generators, and the text format.
 */

#include "netslope/presentation.hpp"

#include "netslope/numbers.hpp"
#include "netslope/slope.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace netslope;

namespace {

/// The degree-5 member of the built-in family; used as the main oracle.
Presentation f5() { return family_fn(Int(5)); }

/// Degree-4 Euclidean example: doubled lattice, all marked segments trivial.
Presentation euclidean_double() {
  Presentation pres;
  pres.lambda1 = {2, 0};
  pres.lambda2 = {0, 2};
  pres.translation = {0, 0};
  for (auto& g : pres.green) g = std::nullopt;
  return pres;
}

bool has_violation(const std::vector<Violation>& vs, const std::string& name) {
  return std::any_of(vs.begin(), vs.end(),
                     [&](const Violation& v) { return v.name == name; });
}

}  // namespace

// ---- validation ---------------------------------------------------------------

TEST_CASE("the family member and the Euclidean example validate cleanly") {
  CHECK(validate(f5()).empty());
  CHECK(validate(euclidean_double()).empty());
  CHECK_NOTHROW(require_valid(f5()));
}

TEST_CASE("violations are returned as data with stable names") {
  Presentation bad = f5();
  bad.translation = {1, 0};  // (1,0) has no integral basis coordinates
  CHECK(has_violation(validate(bad), "TranslationNotInLattice"));

  Presentation singular = f5();
  singular.lambda2 = singular.lambda1;
  CHECK(has_violation(validate(singular), "SingularLattice"));

  Presentation degenerate = f5();
  degenerate.green[0] = degenerate.corner(0);  // zero-length marked segment
  CHECK_FALSE(validate(degenerate).empty());

  CHECK_THROWS_AS(require_valid(singular), Error);
}

// ---- lattice membership and reductions ---------------------------------------------

TEST_CASE("lattice membership and basis coordinates") {
  const Presentation pres = f5();
  CHECK(in_lattice(pres, Vec2{5, 0}));
  CHECK(in_lattice(pres, Vec2{-1, 1}));
  CHECK(in_lattice(pres, Vec2{4, 1}));  // lambda1 + lambda2
  CHECK_FALSE(in_lattice(pres, Vec2{1, 0}));
  CHECK(in_double_lattice(pres, Vec2{10, 0}));
  CHECK_FALSE(in_double_lattice(pres, Vec2{5, 0}));

  auto coords = lattice_coords(pres, Vec2{14, 1});
  REQUIRE(coords.has_value());
  CHECK(*coords == Vec2{3, 1});
  CHECK_FALSE(lattice_coords(pres, Vec2{1, 0}).has_value());
}

TEST_CASE("canonical reductions are idempotent class representatives") {
  const Presentation pres = f5();
  Rng rng(17);
  for (int i = 0; i < 150; ++i) {
    Vec2 v{rng.between(-30, 30), rng.between(-30, 30)};
    Vec2 c = canonical_mod_double(pres, v);
    CHECK(canonical_mod_double(pres, c) == c);
    CHECK(in_double_lattice(pres, v - c));

    Vec2 w = canonical_mod_involution(pres, v);
    CHECK(canonical_mod_involution(pres, w) == w);
    CHECK(involution_equivalent(pres, v, w));
    CHECK(canonical_mod_involution(pres, -v) == w);
    // Involution-equivalence is reflexive and absorbs 2-lattice shifts.
    CHECK(involution_equivalent(pres, v, v + Int(2) * pres.lambda1));
  }
}

TEST_CASE("residue systems have the forced cardinalities") {
  for (const Presentation& pres : {f5(), euclidean_double(), family_fn(Int(8))}) {
    const Int deg = degree(pres);
    const auto doubles = residues_mod_double(pres);
    CHECK(Int(doubles.size()) == 4 * deg);
    std::set<std::string> keys;
    for (const Vec2& v : doubles) {
      CHECK(canonical_mod_double(pres, v) == v);
      keys.insert(v.str());
    }
    CHECK(keys.size() == doubles.size());

    const auto points = point_classes_mod_involution(pres);
    CHECK(Int(points.size()) == 2 * deg + 2);
    for (const Vec2& v : points) CHECK(canonical_mod_involution(pres, v) == v);
  }
}

// ---- derived combinatorics -----------------------------------------------------------

TEST_CASE("degree and elementary divisors") {
  CHECK(degree(f5()) == 5);
  CHECK(elementary_divisors(f5()) == std::pair<Int, Int>(1, 5));
  CHECK(degree(euclidean_double()) == 4);
  CHECK(elementary_divisors(euclidean_double()) == std::pair<Int, Int>(2, 2));

  Presentation unit;
  unit.lambda1 = {1, 0};
  unit.lambda2 = {0, 1};
  unit.translation = {0, 0};
  for (auto& g : unit.green) g = std::nullopt;
  CHECK(degree(unit) == 1);
  CHECK(elementary_divisors(unit) == std::pair<Int, Int>(1, 1));
}

TEST_CASE("direction orders divide the degree") {
  const Presentation pres = f5();
  CHECK(direction_order(pres, Slope::make(0, 1)) == 5);
  CHECK(direction_order(pres, Slope::make(-1, 1)) == 1);  // (1,-1) spans -lambda2
  CHECK(direction_order(pres, Slope::infinity()) == 5);
  for (const Slope& s : farey_slopes(Int(4)))
    CHECK(degree(pres) % direction_order(pres, s) == 0);

  // Doubled lattice: both divisors are 2, so no direction order is 1.
  const Presentation eu = euclidean_double();
  for (const Slope& s : farey_slopes(Int(4))) {
    Int d = direction_order(eu, s);
    CHECK(d == 2);
  }
}

// ---- reflector segments ---------------------------------------------------------------

TEST_CASE("the reflector family in a window is exactly the translate set") {
  const Presentation pres = f5();
  const auto base = base_mirrors(pres);
  REQUIRE(base.size() == 2);  // two non-collapsed marked segments

  BoxQ box{Rat(-1), Rat(11), Rat(-1), Rat(1)};
  const auto mirrors = mirror_segments(pres, box);
  REQUIRE(mirrors.size() == 3);

  auto find_center = [&](long long x, long long y) -> const Mirror* {
    for (const auto& m : mirrors)
      if (m.center == Vec2{x, y}) return &m;
    return nullptr;
  };
  const Mirror* m0 = find_center(0, 0);
  REQUIRE(m0 != nullptr);
  CHECK(m0->halfvec == Vec2{1, 0});  // segment [(-1,0),(1,0)]
  const Mirror* m5 = find_center(5, 0);
  REQUIRE(m5 != nullptr);
  CHECK(m5->halfvec == Vec2{-3, 0});  // segment [(2,0),(8,0)]
  const Mirror* m10 = find_center(10, 0);
  REQUIRE(m10 != nullptr);
  CHECK(m10->halfvec == Vec2{1, 0});  // translate of the small reflector

  // The family is closed under x -> 2*lambda - x inside the window: the
  // doubled segments are center-symmetric, so closure reduces to the center
  // set being stable mod 2*Lattice. All three centers differ by (10,0).
  for (const auto& m : mirrors)
    CHECK(in_double_lattice(pres, m.center - mirrors[0].center) ==
          (m.corner_idx == mirrors[0].corner_idx));
}

TEST_CASE("an all-trivial presentation generates no reflectors") {
  const Presentation eu = euclidean_double();
  CHECK(base_mirrors(eu).empty());
  BoxQ box{Rat(-10), Rat(10), Rat(-10), Rat(10)};
  CHECK(mirror_segments(eu, box).empty());
}

// ---- marked-point dynamics --------------------------------------------------------------

TEST_CASE("the degree-5 member fixes all four marked points") {
  const Portrait portrait = postcritical_portrait(f5());
  for (const auto& entry : portrait.points) CHECK(entry.image_cls == entry.cls);
  CHECK(portrait.fixed_count() == 4);
  CHECK(portrait.has_fixed_point());
  // The two non-collapsed marked segments make their classes critical.
  CHECK(portrait.points[0].critical);
  CHECK(portrait.points[1].critical);
  CHECK_FALSE(portrait.points[2].critical);
  CHECK_FALSE(portrait.points[3].critical);
  CHECK(orbifold_type(f5()) == OrbifoldType::Hyperbolic);
}

TEST_CASE("the degree-4 member moves exactly one marked point") {
  const Presentation pres = family_fn(Int(4));
  const Portrait portrait = postcritical_portrait(pres);
  CHECK(portrait.fixed_count() == 3);
  // The class of lambda1+lambda2 = (3,1) lands on the lambda2 class: the
  // affine image is (15,1) with basis coordinates (4,1), i.e. class 01.
  CHECK(portrait.points[3].rep == Vec2{3, 1});
  CHECK(portrait.points[3].image_cls == 2);
  CHECK(orbifold_type(pres) == OrbifoldType::Hyperbolic);
}

TEST_CASE("a presentation with no critical marked point is Euclidean") {
  CHECK(orbifold_type(euclidean_double()) == OrbifoldType::Euclidean);
  const Portrait portrait = postcritical_portrait(euclidean_double());
  for (const auto& entry : portrait.points) CHECK_FALSE(entry.critical);
  CHECK(portrait.fixed_count() == 4);  // translation 0 fixes every corner
}

// ---- generators ----------------------------------------------------------------------

TEST_CASE("the one-parameter family is valid across its range") {
  for (int n = 4; n <= 12; ++n) {
    const Presentation pres = family_fn(Int(n));
    CHECK(validate(pres).empty());
    CHECK(degree(pres) == n);
    CHECK(pres.lambda1 == Vec2{n, 0});
    CHECK(pres.lambda2 == Vec2{-1, 1});
    CHECK(pres.translation == Vec2{n, 0});
    REQUIRE(pres.green[0].has_value());
    CHECK(*pres.green[0] == Vec2{1, 0});
    REQUIRE(pres.green[1].has_value());
    CHECK(*pres.green[1] == Vec2{2, 0});
    CHECK(pres.trivial_green(2));
    CHECK(pres.trivial_green(3));
  }
  CHECK_THROWS_AS(family_fn(Int(3)), Error);
}

TEST_CASE("random presentations are deterministic, valid, and degree-bounded") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Presentation a = random_presentation(seed, Int(8));
    const Presentation b = random_presentation(seed, Int(8));
    CHECK(serialize(a) == serialize(b));
    CHECK(validate(a).empty());
    CHECK(degree(a) >= 2);
    CHECK(degree(a) <= 8);
  }
}

// ---- text format ----------------------------------------------------------------------

TEST_CASE("serialization of the degree-5 member is frozen") {
  CHECK(serialize(f5()) ==
        "netmap-presentation v1\n"
        "lambda1: 5 0\n"
        "lambda2: -1 1\n"
        "translation: 5 0\n"
        "green 00: 1 0\n"
        "green 10: 2 0\n"
        "green 01: trivial\n"
        "green 11: trivial\n");
}

TEST_CASE("parse round-trips serialize") {
  for (const Presentation& pres :
       {f5(), euclidean_double(), family_fn(Int(9)),
        random_presentation(7, Int(8)), random_presentation(23, Int(6))}) {
    const Presentation back = parse_presentation(serialize(pres));
    CHECK(back.lambda1 == pres.lambda1);
    CHECK(back.lambda2 == pres.lambda2);
    CHECK(back.translation == pres.translation);
    for (int i = 0; i < 4; ++i) CHECK(back.green[i] == pres.green[i]);
  }
}

TEST_CASE("parse errors carry positions and are distinct from validation") {
  CHECK_THROWS_AS(parse_presentation("bogus header\n"), Error);
  try {
    parse_presentation("netmap-presentation v1\nlambda1: 5 0\n");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
  // A parsable but invalid presentation parses fine; validate flags it.
  const char* singular =
      "netmap-presentation v1\n"
      "lambda1: 0 0\n"
      "lambda2: 0 1\n"
      "translation: 0 0\n"
      "green 00: trivial\n"
      "green 10: trivial\n"
      "green 01: trivial\n"
      "green 11: trivial\n";
  const Presentation pres = parse_presentation(singular);
  CHECK(has_violation(validate(pres), "SingularLattice"));

  CHECK_THROWS_AS(load_presentation_file("/nonexistent/path.nm"), Error);
}
