#include "netslope/lattice.hpp"

#include <utility>

namespace netslope {

bool is_primitive(const Vec2& v) {
  return gcd(v.x, v.y) == 1;
}

std::pair<Int, Int> smith_divisors(const Mat2& m) {
  Int det = abs_int(m.det());
  if (det == 0) throw Error(Errc::BadParameter, "smith_divisors of singular matrix");
  Int m1 = gcd(gcd(m.a, m.b), gcd(m.c, m.d));
  return {m1, det / m1};
}

SegIntersection intersect_segments(const SegmentQ& a, const SegmentQ& b) {
  Rat2 da = a.p1 - a.p0;
  Rat2 db = b.p1 - b.p0;
  if ((da.x == 0 && da.y == 0) || (db.x == 0 && db.y == 0))
    throw Error(Errc::BadParameter, "intersect_segments: degenerate segment");

  Rat denom = cross(da, db);
  Rat2 diff = b.p0 - a.p0;
  if (denom == 0) {
    if (cross(da, diff) != 0) return {SegHit::ParallelApart, 0, 0};
    // Collinear: project b's endpoints onto a's parameter line.
    Rat len2 = dot(da, da);
    Rat t0 = dot(b.p0 - a.p0, da) / len2;
    Rat t1 = dot(b.p1 - a.p0, da) / len2;
    Rat lo = t0 < t1 ? t0 : t1;
    Rat hi = t0 < t1 ? t1 : t0;
    Rat ov_lo = lo > 0 ? lo : Rat(0);
    Rat ov_hi = hi < 1 ? hi : Rat(1);
    if (ov_lo > ov_hi) return {SegHit::ParallelApart, 0, 0};
    if (ov_lo == ov_hi) {
      Rat2 touch = a.p0 + ov_lo * da;
      Rat u = dot(touch - b.p0, db) / dot(db, db);
      return {SegHit::CollinearTouch, ov_lo, u};
    }
    return {SegHit::CollinearOverlap, ov_lo, ov_hi};
  }
  Rat t = cross(diff, db) / denom;
  Rat u = cross(diff, da) / denom;
  if (t < 0 || t > 1 || u < 0 || u > 1) return {SegHit::Disjoint, t, u};
  return {SegHit::Transversal, t, u};
}

BoxQ segment_box(const SegmentQ& seg) {
  BoxQ box;
  box.xmin = seg.p0.x < seg.p1.x ? seg.p0.x : seg.p1.x;
  box.xmax = seg.p0.x < seg.p1.x ? seg.p1.x : seg.p0.x;
  box.ymin = seg.p0.y < seg.p1.y ? seg.p0.y : seg.p1.y;
  box.ymax = seg.p0.y < seg.p1.y ? seg.p1.y : seg.p0.y;
  return box;
}

std::vector<Vec2> lattice_points_in_box(const Vec2& col1, const Vec2& col2,
                                        const BoxQ& box) {
  Mat2 m = Mat2::from_columns(col1, col2);
  Int det = m.det();
  if (det == 0)
    throw Error(Errc::BadParameter, "lattice_points_in_box: dependent columns");
  if (box.xmin > box.xmax || box.ymin > box.ymax) return {};

  // Pull the box corners back through the inverse to bound the a-coordinate.
  Mat2 adj = m.adjugate();
  Rat a_min, a_max;
  bool first = true;
  for (const Rat& bx : {box.xmin, box.xmax}) {
    for (const Rat& by : {box.ymin, box.ymax}) {
      Rat a_img = (Rat(adj.a) * bx + Rat(adj.b) * by) / Rat(det);
      if (first || a_img < a_min) a_min = a_img;
      if (first || a_img > a_max) a_max = a_img;
      first = false;
    }
  }

  std::vector<Vec2> out;
  Int a_lo = ceil_rat(a_min);
  Int a_hi = floor_rat(a_max);
  for (Int a = a_lo; a <= a_hi; ++a) {
    // Intersect the two coordinate constraints, each linear in b.
    Rat b_lo, b_hi;
    bool b_first = true;
    bool feasible = true;
    auto clip = [&](const Int& coeff, const Rat& lo, const Rat& hi) {
      // Constraint: lo <= coeff * b <= hi.
      if (coeff == 0) {
        if (lo > 0 || hi < 0) feasible = false;
        return;
      }
      Rat l = lo / Rat(coeff);
      Rat h = hi / Rat(coeff);
      if (l > h) std::swap(l, h);
      if (b_first) {
        b_lo = l;
        b_hi = h;
        b_first = false;
      } else {
        if (l > b_lo) b_lo = l;
        if (h < b_hi) b_hi = h;
      }
    };
    clip(col2.x, box.xmin - Rat(a * col1.x), box.xmax - Rat(a * col1.x));
    if (feasible) clip(col2.y, box.ymin - Rat(a * col1.y), box.ymax - Rat(a * col1.y));
    if (!feasible || b_first || b_lo > b_hi) continue;
    Int lo = ceil_rat(b_lo);
    Int hi = floor_rat(b_hi);
    for (Int b = lo; b <= hi; ++b) out.push_back({a, b});
  }
  return out;
}

bool segment_meets_box(const SegmentQ& seg, const BoxQ& box) {
  // Liang–Barsky style exact clipping of the parameter interval [0,1].
  Rat t_lo(0), t_hi(1);
  Rat2 d = seg.p1 - seg.p0;
  auto clip = [&](const Rat& dir, const Rat& dist) -> bool {
    // Constraint: dir * t <= dist on [t_lo, t_hi].
    if (dir == 0) return dist >= 0;
    Rat bound = dist / dir;
    if (dir > 0) {
      if (bound < t_hi) t_hi = bound;
    } else {
      if (bound > t_lo) t_lo = bound;
    }
    return t_lo <= t_hi;
  };
  return clip(-d.x, seg.p0.x - box.xmin) && clip(d.x, box.xmax - seg.p0.x) &&
         clip(-d.y, seg.p0.y - box.ymin) && clip(d.y, box.ymax - seg.p0.y);
}

}  // namespace netslope
