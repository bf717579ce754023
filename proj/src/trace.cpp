/**
 * @file trace.cpp
 * @brief Exact crossing enumeration for straight traces against the
 *        reflector family, fold classification, and the per-slope
 *        invariants built on top.
 *
 * The enumeration never scans translate boxes.  For a traced line with
 * normal N, every reflector translate lives on a "row" of constant
 * ⟨center, N⟩ = ⟨base center, N⟩ + 2m with m ranging over G·ℤ
 * (G = gcd(⟨λ₁,N⟩, ⟨λ₂,N⟩)), and the line meets the row's reflectors at a
 * fixed signed position u across the reflector.  Within one row the
 * translates differ by the direction-lattice step d·direction, shifting the
 * segment parameter by the constant 2d/steps.  The cost is therefore linear
 * in the number of crossings actually reported.
 */

#include "netslope/trace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace netslope {

namespace {

// ---- line context -----------------------------------------------------------------

/// Everything about a primitive direction that tracing needs repeatedly.
struct LineContext {
  Vec2 dir;   ///< primitive direction (q, p)
  Vec2 nrm;   ///< normal (p, −q)
  Int order;  ///< least k >= 1 with k·dir in the lattice
  Int g1;     ///< ⟨λ₁, nrm⟩
  Int g2;     ///< ⟨λ₂, nrm⟩
  Int G;      ///< gcd(g1, g2) >= 1; the number of parallel line classes
  Int sx;     ///< Bézout coefficients: g1·sx + g2·sy == G
  Int sy;
};

LineContext line_context(const Presentation& pres, const Vec2& dir) {
  if (!is_primitive(dir)) {
    throw Error(Errc::BadParameter, "trace direction must be a primitive vector");
  }
  LineContext ctx;
  ctx.dir = dir;
  ctx.nrm = Vec2{dir.y, -dir.x};
  ctx.order = direction_order(pres, Slope::make(dir.y, dir.x));
  ctx.g1 = dot(pres.lambda1, ctx.nrm);
  ctx.g2 = dot(pres.lambda2, ctx.nrm);
  ctx.G = egcd(ctx.g1, ctx.g2, ctx.sx, ctx.sy);
  if (ctx.G <= 0) throw std::logic_error("degenerate lattice escaped validation");
  return ctx;
}

/// A lattice member λ with ⟨λ, nrm⟩ == m.  Requires G | m.
Vec2 lattice_with_height(const Presentation& pres, const LineContext& ctx,
                         const Int& m) {
  Int f = m / ctx.G;
  return (f * ctx.sx) * pres.lambda1 + (f * ctx.sy) * pres.lambda2;
}

/// Foot of the perpendicular from the origin onto the line ⟨x, nrm⟩ = o.
Rat2 line_base_point(const LineContext& ctx, const Rat& o) {
  const Rat scale = o / Rat(dot(ctx.nrm, ctx.nrm));
  return scale * to_rat2(ctx.nrm);
}

// ---- crossing scan ----------------------------------------------------------------

/// How a scan failed, if it did.  Line-bad incidences (a lattice point,
/// reflector endpoint, reflector center or reflector–reflector intersection
/// on the line, or a collinear reflector) persist for every start point on
/// that line, so the line offset must change.  Seam-bad incidences (a
/// crossing exactly at a segment endpoint) are artifacts of where the
/// periodic segment was cut and go away under a start shift along the
/// direction.
enum class ScanStatus { Ok, LineBad, SeamBad };

/// Crossings of one segment, or the incidence that makes it non-generic.
struct ScanOutcome {
  ScanStatus status{ScanStatus::LineBad};
  std::string incidence;
  std::vector<Crossing> crossings;
};

/**
 * Enumerates reflector crossings of [v, v + steps·dir].
 *
 * With `pinned` set, exact contact between a segment endpoint and a
 * reflector endpoint is accepted silently (the marked-point contact of a
 * developed core arc); everything else on a boundary — reflector endpoints
 * interior to the segment, segment endpoints interior to a reflector,
 * collinear overlap, crossings through a reflector center, or two crossings
 * sharing a parameter — is returned as an incidence.
 */
ScanOutcome scan_crossings(const Presentation& pres, const LineContext& ctx,
                           const Rat2& v, const Int& steps, bool pinned) {
  ScanOutcome out;
  const Rat2 dirq = to_rat2(ctx.dir);
  const Rat o = dot(v, to_rat2(ctx.nrm));
  if (!pinned && is_integer(o)) {
    out.status = ScanStatus::LineBad;
    out.incidence = "integer line offset admits lattice points on the line";
    return out;
  }
  const Rat span = Rat(steps) * Rat(dot(ctx.dir, ctx.dir));
  const Rat vdot = dot(v, dirq);
  const Rat delta = Rat(Int(2) * ctx.order) / Rat(steps);
  const Rat gq = Rat(ctx.G);
  std::vector<Crossing> found;

  for (const Mirror& base : base_mirrors(pres)) {
    const Int cN = dot(base.center, ctx.nrm);
    const Int gN = dot(base.halfvec, ctx.nrm);
    const Rat base_row = o - Rat(cN);

    if (gN == 0) {
      // Reflector parallel to the trace: it matters only when a translate is
      // collinear with the traced line and its open span overlaps (0, 1).
      const Rat row = base_row / 2;
      if (!is_integer(row)) continue;
      const Int m = floor_rat(row);
      if (m % ctx.G != 0) continue;
      const Vec2 lam = lattice_with_height(pres, ctx, m);
      const Rat2 pc = to_rat2(base.center + Int(2) * lam);
      const Rat tc = (dot(pc, dirq) - vdot) / span;
      const Rat half = abs_rat(Rat(dot(base.halfvec, ctx.dir))) / span;
      const Rat jlo = (-half - tc) / delta;
      const Rat jhi = (Rat(1) + half - tc) / delta;
      if (floor_rat(jlo) + 1 <= ceil_rat(jhi) - 1) {
        out.status = ScanStatus::LineBad;
        out.incidence = "a reflector translate is collinear with the traced segment";
        return out;
      }
      continue;
    }

    // Rows through a reflector endpoint (|u| == 1).
    for (int side = -1; side <= 1; side += 2) {
      const Rat mb = (base_row - Rat(side * gN)) / 2;
      if (!is_integer(mb)) continue;
      const Int m = floor_rat(mb);
      if (m % ctx.G != 0) continue;
      const Vec2 lam = lattice_with_height(pres, ctx, m);
      const Rat2 pb =
          to_rat2(base.center + Int(2) * lam) + Rat(side) * to_rat2(base.halfvec);
      const Rat t0 = (dot(pb, dirq) - vdot) / span;
      const Int jfirst = ceil_rat(-t0 / delta);
      const Int jlast = floor_rat((Rat(1) - t0) / delta);
      for (Int j = jfirst; j <= jlast; ++j) {
        const Rat t = t0 + Rat(j) * delta;
        if (t < 0 || t > 1) continue;
        if ((t == 0 || t == 1) && pinned) continue;
        out.status = ScanStatus::LineBad;
        out.incidence = "a reflector endpoint lies on the traced line";
        return out;
      }
    }

    // Rows the line crosses through the reflector interior (|u| < 1).
    const Rat mlo = (base_row - Rat(abs_int(gN))) / 2;
    const Rat mhi = (base_row + Rat(abs_int(gN))) / 2;
    const Int ilast = ceil_rat(mhi / gq) - 1;
    for (Int i = floor_rat(mlo / gq) + 1; i <= ilast; ++i) {
      const Int m = i * ctx.G;
      const Rat u = (base_row - Rat(Int(2) * m)) / Rat(gN);
      const Vec2 lam = lattice_with_height(pres, ctx, m);
      const Vec2 row_center = base.center + Int(2) * lam;
      const Rat2 pt = to_rat2(row_center) + u * to_rat2(base.halfvec);
      const Rat t0 = (dot(pt, dirq) - vdot) / span;
      if (u == 0) {
        // The line runs through the centers of this whole row; that only
        // degenerates the segment when one of those passages lands on it.
        const Int jfirst = ceil_rat(-t0 / delta);
        if (t0 + Rat(jfirst) * delta <= 1) {
          out.status = ScanStatus::LineBad;
          out.incidence = "the traced segment passes through a reflector center";
          return out;
        }
        continue;
      }
      const Rat jlo = -t0 / delta;
      const Rat jhi = (Rat(1) - t0) / delta;
      if (is_integer(jlo) || is_integer(jhi)) {
        out.status = ScanStatus::SeamBad;
        out.incidence = "a crossing falls exactly on a segment endpoint";
        return out;
      }
      const Int jmax = floor_rat(jhi);
      for (Int j = floor_rat(jlo) + 1; j <= jmax; ++j) {
        found.push_back(Crossing{t0 + Rat(j) * delta,
                                 row_center + (Int(2) * j * ctx.order) * ctx.dir});
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const Crossing& lhs, const Crossing& rhs) { return lhs.t < rhs.t; });
  for (std::size_t i = 1; i < found.size(); ++i) {
    if (found[i - 1].t == found[i].t) {
      out.status = ScanStatus::LineBad;
      out.incidence = "two reflectors cross the traced line at one point";
      return out;
    }
  }
  out.status = ScanStatus::Ok;
  out.crossings = std::move(found);
  return out;
}

// ---- fold and classification -------------------------------------------------------

/// Σ (−1)^{i+1} centerᵢ over the crossings in parameter order.
Vec2 alternating_center_sum(const std::vector<Crossing>& crossings) {
  Vec2 acc{0, 0};
  bool positive = true;
  for (const Crossing& c : crossings) {
    acc = positive ? acc + c.center : acc - c.center;
    positive = !positive;
  }
  return acc;
}

/**
 * Fills kind / half_coords / component_slope from the crossing list.  When
 * k·direction lies in the lattice the segment closes up downstairs, and the
 * holonomy identities are enforced: even crossing counts must displace by a
 * doubled lattice member, odd ones must close through a point flip.
 */
void classify_trace(const Presentation& pres, PhotonTrace& tr) {
  const Vec2 span = (Int(2) * tr.k) * tr.direction;
  const Vec2 twice_alt = Int(2) * alternating_center_sum(tr.crossings);
  const bool closed = in_lattice(pres, tr.k * tr.direction);

  if (tr.crossings.size() % 2 == 1) {
    tr.kind = LiftKind::Reversing;
    if (closed && !in_double_lattice(pres, twice_alt - span)) {
      throw std::logic_error("odd-crossing trace must close through a point flip");
    }
    return;
  }

  const Vec2 disp = span + twice_alt;  // folded_end − start, exactly
  if (disp == Vec2{0, 0}) {
    tr.kind = LiftKind::Collapsed;
    return;
  }
  tr.kind = LiftKind::Essential;
  if (disp.x % 2 != 0 || disp.y % 2 != 0) {
    throw std::logic_error("even-crossing displacement must have even coordinates");
  }
  const Vec2 half{disp.x / 2, disp.y / 2};
  const auto coords = lattice_coords(pres, half);
  if (!coords) {
    if (closed) {
      throw std::logic_error("even-crossing trace displacement left the lattice");
    }
    return;
  }
  tr.half_coords = *coords;
  tr.component_slope = Slope::make(coords->y, coords->x);
}

// ---- the genericity schedule -------------------------------------------------------

/// 1 base candidate plus Σ_{J=1..64} 2J perturbed ones.
constexpr unsigned kOffsetScheduleSize = 1 + 64 * 65;

/// Start shifts tried per line before the offset is given up (Σ_{J=1..16} 2J
/// perturbations plus the unshifted start).
constexpr unsigned kShiftScheduleSize = 1 + 16 * 17;

/**
 * Deterministic perturbation candidates: the base value itself, then
 * base + j/(2J+1) for J = 1, 2, ... and j = 1..2J.  Odd denominators keep
 * half-integer offset bases away from the integers, so candidate lines never
 * pick up lattice points.
 */
Rat offset_candidate(const Rat& base, unsigned index) {
  if (index == 0) return base;
  unsigned rem = index - 1;
  unsigned radius = 1;
  while (rem >= 2 * radius) {
    rem -= 2 * radius;
    ++radius;
  }
  return base + Rat(Int(rem + 1), Int(2 * radius + 1));
}

/// A generic configuration for one line: the start actually used and the
/// crossings found from it.
struct GenericScan {
  Rat2 start;
  std::vector<Crossing> crossings;
};

/**
 * Searches for a generic start on the line of offset o.  The first start is
 * the perpendicular foot; when a crossing lands exactly on the segment seam
 * the start slides along the direction by a scheduled fraction of the
 * period.  Returns nothing when the line itself is non-generic (recording
 * the incidence) or when — pathologically — every scheduled start is on a
 * seam.
 */
std::optional<GenericScan> scan_line(const Presentation& pres,
                                     const LineContext& ctx, const Rat& o,
                                     const Int& steps, std::string& last) {
  const Rat2 foot = line_base_point(ctx, o);
  const Rat2 period = to_rat2(steps * ctx.dir);
  for (unsigned sidx = 0; sidx < kShiftScheduleSize; ++sidx) {
    const Rat tau = offset_candidate(Rat(0), sidx);
    const Rat2 v = foot + tau * period;
    ScanOutcome sc = scan_crossings(pres, ctx, v, steps, false);
    if (sc.status == ScanStatus::Ok) {
      return GenericScan{v, std::move(sc.crossings)};
    }
    last = sc.incidence;
    if (sc.status == ScanStatus::LineBad) return std::nullopt;
  }
  return std::nullopt;
}

PhotonTrace assemble_trace(const Presentation& pres, const LineContext& ctx,
                           const Rat& offset, const Int& k, const Rat2& v,
                           std::vector<Crossing> crossings) {
  PhotonTrace tr;
  tr.direction = ctx.dir;
  tr.k = k;
  tr.offset = offset;
  tr.start = v;
  tr.end = v + to_rat2((Int(2) * k) * ctx.dir);
  tr.crossings = std::move(crossings);
  tr.folded_end = fold_point(tr.crossings, tr.end);
  classify_trace(pres, tr);
  return tr;
}

}  // namespace

// ---- public API ---------------------------------------------------------------------

Rat2 fold_point(const std::vector<Crossing>& crossings, const Rat2& x) {
  const Rat2 shift = to_rat2(Int(2) * alternating_center_sum(crossings));
  return crossings.size() % 2 == 0 ? x + shift : -x + shift;
}

PhotonTrace trace_segment(const Presentation& pres, const Vec2& direction,
                          const Rat& offset, const Int& k, unsigned skip) {
  require_valid(pres);
  if (k < 1) {
    throw Error(Errc::BadParameter, "trace length multiplier must be >= 1");
  }
  const LineContext ctx = line_context(pres, direction);
  unsigned generic = 0;
  std::string last = "no candidate offset was tested";
  for (unsigned idx = 0; idx < kOffsetScheduleSize; ++idx) {
    const Rat o = offset_candidate(offset, idx);
    std::optional<GenericScan> sc = scan_line(pres, ctx, o, Int(2) * k, last);
    if (!sc) continue;
    if (generic++ < skip) continue;
    return assemble_trace(pres, ctx, o, k, sc->start, std::move(sc->crossings));
  }
  throw Error(Errc::NonGenericUnresolvable,
              "offset perturbation schedule exhausted; last incidence: " + last);
}

std::vector<Crossing> open_segment_crossings(const Presentation& pres,
                                             const Vec2& start,
                                             const Vec2& direction,
                                             const Int& steps) {
  require_valid(pres);
  if (steps < 1) {
    throw Error(Errc::BadParameter, "segment step count must be >= 1");
  }
  const LineContext ctx = line_context(pres, direction);
  ScanOutcome sc = scan_crossings(pres, ctx, to_rat2(start), steps, true);
  if (sc.status != ScanStatus::Ok) {
    throw Error(Errc::DegenerateArcModel, sc.incidence);
  }
  return std::move(sc.crossings);
}

std::string trace_debug_dump(const PhotonTrace& trace) {
  std::ostringstream os;
  for (const Crossing& c : trace.crossings) {
    os << "t=" << rat_to_string(c.t) << " center=(" << c.center.x.str() << ","
       << c.center.y.str() << ")\n";
  }
  os << "w'=(" << rat_to_string(trace.folded_end.x) << ","
     << rat_to_string(trace.folded_end.y) << ")";
  if (trace.kind == LiftKind::Essential && trace.half_coords &&
      trace.component_slope) {
    os << " coords=(" << trace.half_coords->x.str() << ","
       << trace.half_coords->y.str() << ")"
       << " slope=" << trace.component_slope->str();
  } else {
    os << " coords=(0,0) slope=trivial";
  }
  os << "\n";
  return os.str();
}

PreimageSummary slope_invariants(const Presentation& pres, const Slope& s,
                                 unsigned skip) {
  require_valid(pres);
  const LineContext ctx = line_context(pres, s.direction());
  const Int deg = degree(pres);
  if (ctx.G * ctx.order != deg) {
    throw std::logic_error(
        "parallel line classes times direction order must equal the degree");
  }
  const long classes = ctx.G.convert_to<long>();

  unsigned generic = 0;
  std::string last = "no candidate offset was tested";
  for (unsigned idx = 0; idx < kOffsetScheduleSize; ++idx) {
    const Rat base = offset_candidate(Rat(1, 2), idx);
    std::vector<PhotonTrace> traces;
    traces.reserve(static_cast<std::size_t>(classes));
    bool all_ok = true;
    for (long j = 0; j < classes; ++j) {
      const Rat o = base + Rat(2 * j);
      std::optional<GenericScan> sc =
          scan_line(pres, ctx, o, Int(2) * ctx.order, last);
      if (!sc) {
        all_ok = false;
        break;
      }
      traces.push_back(assemble_trace(pres, ctx, o, ctx.order, sc->start,
                                      std::move(sc->crossings)));
    }
    if (!all_ok) continue;  // restart the whole family to keep the 2j spacing
    if (generic++ < skip) continue;

    PreimageSummary sum{s, ctx.order, {}, Int(0), ExtendedSlope::non_slope(), Rat(0)};
    std::optional<Slope> common;
    Int essential = 0;
    for (long j = 0; j < classes; ++j) {
      const PhotonTrace& tr = traces[static_cast<std::size_t>(j)];
      ComponentReport rep;
      rep.offset_index = static_cast<int>(j);
      rep.offset = tr.offset;
      rep.kind = tr.kind;
      rep.slope = tr.component_slope;
      if (tr.kind == LiftKind::Essential) {
        ++essential;
        if (!tr.component_slope) {
          throw std::logic_error("essential component without a slope");
        }
        if (common && *common != *tr.component_slope) {
          throw std::logic_error(
              "essential components disagree on the pulled-back slope");
        }
        common = tr.component_slope;
      }
      sum.components.push_back(std::move(rep));
    }
    sum.c = essential;
    sum.mu = common ? ExtendedSlope(*common) : ExtendedSlope::non_slope();
    sum.rho = Rat(essential) / Rat(ctx.order);
    return sum;
  }
  throw Error(Errc::NonGenericUnresolvable,
              "offset perturbation schedule exhausted; last incidence: " + last);
}

}  // namespace netslope
