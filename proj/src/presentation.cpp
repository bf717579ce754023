#include "netslope/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace netslope {

// ---- core data model -----------------------------------------------------------

Vec2 Presentation::corner(int idx) const {
  if (idx < 0 || idx > 3) throw Error(Errc::BadParameter, "corner index out of range");
  Int e1 = idx & 1;
  Int e2 = (idx >> 1) & 1;
  return e1 * lambda1 + e2 * lambda2;
}

Vec2 Presentation::marked_rep(int idx) const {
  if (idx < 0 || idx > 3) throw Error(Errc::BadParameter, "marked_rep index out of range");
  if (green[static_cast<std::size_t>(idx)].has_value())
    return *green[static_cast<std::size_t>(idx)];
  return corner(idx);
}

bool in_lattice(const Presentation& pres, const Vec2& v) {
  Int det = pres.det();
  if (det == 0) throw Error(Errc::BadParameter, "in_lattice: singular basis");
  Vec2 w = pres.matrix().adjugate().apply(v);
  return w.x % det == 0 && w.y % det == 0;
}

bool in_double_lattice(const Presentation& pres, const Vec2& v) {
  Int det = pres.det();
  if (det == 0) throw Error(Errc::BadParameter, "in_double_lattice: singular basis");
  Int two_det = 2 * det;
  Vec2 w = pres.matrix().adjugate().apply(v);
  return w.x % two_det == 0 && w.y % two_det == 0;
}

std::optional<Vec2> lattice_coords(const Presentation& pres, const Vec2& v) {
  Int det = pres.det();
  if (det == 0) throw Error(Errc::BadParameter, "lattice_coords: singular basis");
  Vec2 w = pres.matrix().adjugate().apply(v);
  if (w.x % det != 0 || w.y % det != 0) return std::nullopt;
  return Vec2{w.x / det, w.y / det};
}

Vec2 canonical_mod_double(const Presentation& pres, const Vec2& v) {
  Int det = pres.det();
  if (det == 0) throw Error(Errc::BadParameter, "canonical_mod_double: singular basis");
  Int d = abs_int(det);
  Int s = sgn(det);
  Vec2 w = pres.matrix().adjugate().apply(v);
  Vec2 n{mod_floor(s * w.x, 2 * d), mod_floor(s * w.y, 2 * d)};
  Vec2 scaled = pres.matrix().apply(n);
  // scaled = |det| * (v - 2*lambda) for the reducing lattice vector.
  if (scaled.x % d != 0 || scaled.y % d != 0)
    throw Error(Errc::BadParameter, "canonical_mod_double: non-integral input class");
  return {scaled.x / d, scaled.y / d};
}

Vec2 canonical_mod_involution(const Presentation& pres, const Vec2& v) {
  Vec2 a = canonical_mod_double(pres, v);
  Vec2 b = canonical_mod_double(pres, -v);
  return a < b ? a : b;
}

bool involution_equivalent(const Presentation& pres, const Vec2& x, const Vec2& y) {
  return in_double_lattice(pres, x - y) || in_double_lattice(pres, x + y);
}

std::vector<Vec2> residues_mod_double(const Presentation& pres) {
  Int det = pres.det();
  if (det == 0) throw Error(Errc::BadParameter, "residues_mod_double: singular basis");
  Int d = abs_int(det);
  std::vector<Vec2> out;
  for (Int nx = 0; nx < 2 * d; ++nx) {
    for (Int ny = 0; ny < 2 * d; ++ny) {
      Vec2 scaled = pres.matrix().apply({nx, ny});
      if (scaled.x % d != 0 || scaled.y % d != 0) continue;
      out.push_back({scaled.x / d, scaled.y / d});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec2> point_classes_mod_involution(const Presentation& pres) {
  std::vector<Vec2> out;
  for (const Vec2& r : residues_mod_double(pres)) {
    if (canonical_mod_involution(pres, r) == r) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- validation ------------------------------------------------------------------

namespace {

/// Coefficient pairs (a, b) with 2(a*lambda1 + b*lambda2) inside the box.
std::vector<Vec2> double_translates_into(const Presentation& pres, const BoxQ& box) {
  return lattice_points_in_box(Int(2) * pres.lambda1, Int(2) * pres.lambda2, box);
}

BoxQ shift_box(const BoxQ& box, const Rat2& by) {
  return {box.xmin - by.x, box.xmax - by.x, box.ymin - by.y, box.ymax - by.y};
}

Vec2 lattice_combo(const Presentation& pres, const Vec2& ab) {
  return ab.x * pres.lambda1 + ab.y * pres.lambda2;
}

/// Strictly interior point test: collinear with the segment and 0 < t < 1.
bool point_in_open_segment(const Vec2& p, const Vec2& s0, const Vec2& s1) {
  Vec2 d = s1 - s0;
  Vec2 r = p - s0;
  if (cross(d, r) != 0) return false;
  Int num = dot(r, d);
  Int den = dot(d, d);
  return num > 0 && num < den;
}

}  // namespace

std::vector<Violation> validate(const Presentation& pres) {
  std::vector<Violation> out;
  if (pres.det() == 0) {
    out.push_back({"SingularLattice",
                   "lambda1 " + pres.lambda1.str() + " and lambda2 " +
                       pres.lambda2.str() + " are linearly dependent"});
    return out;  // everything downstream needs a basis
  }
  if (!in_lattice(pres, pres.translation)) {
    out.push_back({"TranslationNotInLattice",
                   "translation " + pres.translation.str() +
                       " is not an integer combination of the basis"});
  }

  // Degenerate greens: far endpoint equal to the corner.
  bool greens_ok = true;
  for (int i = 0; i < 4; ++i) {
    if (pres.trivial_green(i)) continue;
    if (*pres.green[static_cast<std::size_t>(i)] == pres.corner(i)) {
      greens_ok = false;
      out.push_back({"DegenerateGreen",
                     std::string("green ") + kCornerLabels[static_cast<std::size_t>(i)] +
                         " far endpoint equals its corner " + pres.corner(i).str()});
    }
  }

  // Marked representatives pairwise inequivalent under the involution group.
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (involution_equivalent(pres, pres.marked_rep(i), pres.marked_rep(j))) {
        out.push_back({"EquivalentMarkedPoints",
                       std::string("representatives of classes ") +
                           kCornerLabels[static_cast<std::size_t>(i)] + " and " +
                           kCornerLabels[static_cast<std::size_t>(j)] + " (" +
                           pres.marked_rep(i).str() + ", " + pres.marked_rep(j).str() +
                           ") are equivalent"});
      }
    }
  }

  if (!greens_ok) return out;  // segment checks need nondegenerate greens

  // Distinguished points: corners and marked representatives.
  std::vector<std::pair<std::string, Vec2>> special;
  for (int i = 0; i < 4; ++i) {
    special.push_back({std::string("corner ") + kCornerLabels[static_cast<std::size_t>(i)],
                       pres.corner(i)});
    if (!pres.trivial_green(i))
      special.push_back({std::string("marked point ") +
                             kCornerLabels[static_cast<std::size_t>(i)],
                         pres.marked_rep(i)});
  }

  // Green interiors must avoid the orbits of every distinguished point.
  for (int i = 0; i < 4; ++i) {
    if (pres.trivial_green(i)) continue;
    Vec2 c = pres.corner(i);
    Vec2 z = pres.marked_rep(i);
    SegmentQ seg{to_rat2(c), to_rat2(z)};
    BoxQ box = segment_box(seg);
    for (const auto& [label, pt] : special) {
      for (int sign : {+1, -1}) {
        BoxQ target = shift_box(box, to_rat2(Int(sign) * pt));
        for (const Vec2& ab : double_translates_into(pres, target)) {
          Vec2 q = 2 * Int(1) * lattice_combo(pres, ab) + Int(sign) * pt;
          if (point_in_open_segment(q, c, z)) {
            out.push_back({"MarkedPointOnGreenInterior",
                           "orbit point " + q.str() + " of " + label +
                               " lies inside green " +
                               kCornerLabels[static_cast<std::size_t>(i)]});
          }
        }
      }
    }
  }

  // Orbits of the green segments must be pairwise disjoint, allowing only the
  // fold of a segment onto itself across one of its own endpoints.
  for (int i = 0; i < 4; ++i) {
    if (pres.trivial_green(i)) continue;
    Vec2 ci = pres.corner(i);
    Vec2 zi = pres.marked_rep(i);
    for (int j = i; j < 4; ++j) {
      if (pres.trivial_green(j)) continue;
      Vec2 cj = pres.corner(j);
      Vec2 zj = pres.marked_rep(j);
      SegmentQ seg_j{to_rat2(cj), to_rat2(zj)};
      BoxQ box_j = segment_box(seg_j);
      for (int sign : {+1, -1}) {
        Vec2 a0 = Int(sign) * ci;
        Vec2 a1 = Int(sign) * zi;
        BoxQ ibox = segment_box({to_rat2(a0), to_rat2(a1)});
        BoxQ target{box_j.xmin - ibox.xmax, box_j.xmax - ibox.xmin,
                    box_j.ymin - ibox.ymax, box_j.ymax - ibox.ymin};
        for (const Vec2& ab : double_translates_into(pres, target)) {
          Vec2 shift = 2 * Int(1) * lattice_combo(pres, ab);
          if (i == j && sign == 1 && shift == Vec2{0, 0}) continue;  // identity
          Vec2 g0 = a0 + shift;
          Vec2 g1 = a1 + shift;
          SegmentQ moved{to_rat2(g0), to_rat2(g1)};
          SegIntersection hit = intersect_segments(moved, seg_j);
          if (hit.kind == SegHit::Disjoint || hit.kind == SegHit::ParallelApart)
            continue;
          // A segment may fold onto itself across one of its own endpoints
          // (that is how the doubled reflector arises); anything else —
          // interior touches, crossings, overlaps, contact between distinct
          // greens' orbits — is a violation.
          bool single_point =
              hit.kind == SegHit::Transversal || hit.kind == SegHit::CollinearTouch;
          bool end_on_moved = hit.t == 0 || hit.t == 1;
          bool end_on_fixed = hit.u == 0 || hit.u == 1;
          bool allowed = i == j && single_point && end_on_moved && end_on_fixed;
          if (!allowed) {
            out.push_back({"OverlappingGreens",
                           std::string("image [") + g0.str() + "," + g1.str() +
                               "] of green " +
                               kCornerLabels[static_cast<std::size_t>(i)] +
                               " meets green " +
                               kCornerLabels[static_cast<std::size_t>(j)]});
          }
        }
      }
    }
  }

  return out;
}

void require_valid(const Presentation& pres) {
  std::vector<Violation> v = validate(pres);
  if (v.empty()) return;
  std::string msg = "invalid presentation:";
  for (const Violation& viol : v) msg += " [" + viol.name + "] " + viol.detail + ";";
  throw Error(Errc::BadParameter, msg);
}

// ---- derived combinatorics ---------------------------------------------------------

Int degree(const Presentation& pres) {
  Int det = pres.det();
  if (det == 0) throw Error(Errc::BadParameter, "degree: singular basis");
  return abs_int(det);
}

std::pair<Int, Int> elementary_divisors(const Presentation& pres) {
  return smith_divisors(pres.matrix());
}

Int direction_order(const Presentation& pres, const Slope& s) {
  Int det = pres.det();
  if (det == 0) throw Error(Errc::BadParameter, "direction_order: singular basis");
  Int d = abs_int(det);
  Vec2 w = pres.matrix().adjugate().apply(s.direction());
  Int k1 = d / gcd(d, w.x);
  Int k2 = d / gcd(d, w.y);
  return lcm(k1, k2);
}

std::vector<Mirror> base_mirrors(const Presentation& pres) {
  std::vector<Mirror> out;
  for (int i = 0; i < 4; ++i) {
    if (pres.trivial_green(i)) continue;
    Vec2 c = pres.corner(i);
    out.push_back({c, pres.marked_rep(i) - c, i});
  }
  return out;
}

std::vector<Mirror> mirror_segments(const Presentation& pres, const BoxQ& box) {
  std::vector<Mirror> out;
  for (const Mirror& base : base_mirrors(pres)) {
    SegmentQ seg = base.segment();
    BoxQ sbox = segment_box(seg);
    BoxQ target{box.xmin - sbox.xmax, box.xmax - sbox.xmin,
                box.ymin - sbox.ymax, box.ymax - sbox.ymin};
    for (const Vec2& ab : lattice_points_in_box(2 * Int(1) * pres.lambda1,
                                                2 * Int(1) * pres.lambda2, target)) {
      Vec2 shift = 2 * Int(1) * (ab.x * pres.lambda1 + ab.y * pres.lambda2);
      Mirror moved{base.center + shift, base.halfvec, base.corner_idx};
      if (segment_meets_box(moved.segment(), box)) out.push_back(moved);
    }
  }
  std::sort(out.begin(), out.end(), [](const Mirror& a, const Mirror& b) {
    if (a.center != b.center) return a.center < b.center;
    return a.corner_idx < b.corner_idx;
  });
  return out;
}

// ---- marked-point dynamics -----------------------------------------------------------

bool Portrait::has_fixed_point() const {
  for (const Entry& e : points)
    if (e.image_cls == e.cls) return true;
  return false;
}

int Portrait::fixed_count() const {
  int n = 0;
  for (const Entry& e : points)
    if (e.image_cls == e.cls) ++n;
  return n;
}

Portrait postcritical_portrait(const Presentation& pres) {
  Portrait result;
  for (int i = 0; i < 4; ++i) {
    Vec2 rep = pres.marked_rep(i);
    Vec2 image = pres.matrix().apply(rep) + pres.translation;
    std::optional<Vec2> coords = lattice_coords(pres, image);
    if (!coords)
      throw Error(Errc::LatticeImageFailure,
                  "image " + image.str() + " of marked point " + rep.str() +
                      " is outside the sublattice");
    int cls = (coords->x % 2 != 0 ? 1 : 0) + (coords->y % 2 != 0 ? 2 : 0);
    result.points[static_cast<std::size_t>(i)] =
        Portrait::Entry{i, rep, cls, !in_lattice(pres, rep)};
  }
  return result;
}

OrbifoldType orbifold_type(const Presentation& pres) {
  Portrait p = postcritical_portrait(pres);
  for (const Portrait::Entry& e : p.points)
    if (e.critical) return OrbifoldType::Hyperbolic;
  return OrbifoldType::Euclidean;
}

// ---- generators -------------------------------------------------------------------

Presentation family_fn(const Int& n) {
  if (n < 4) throw Error(Errc::BadParameter, "family parameter must be at least 4");
  Presentation pres;
  pres.lambda1 = {n, 0};
  pres.lambda2 = {-1, 1};
  pres.translation = {n, 0};
  pres.green[0] = Vec2{1, 0};
  pres.green[1] = Vec2{2, 0};
  pres.green[2] = std::nullopt;
  pres.green[3] = std::nullopt;
  return pres;
}

Presentation random_presentation(std::uint64_t seed, const Int& bound) {
  if (bound < 2) throw Error(Errc::BadParameter, "degree bound must be at least 2");
  Rng rng(seed);
  constexpr int kMaxAttempts = 5000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Presentation pres;
    pres.lambda1 = {Int(rng.between(-4, 4)), Int(rng.between(-4, 4))};
    pres.lambda2 = {Int(rng.between(-4, 4)), Int(rng.between(-4, 4))};
    Int det = pres.det();
    if (abs_int(det) < 2 || abs_int(det) > bound) continue;
    pres.translation = pres.corner(static_cast<int>(rng.below(4)));
    bool offset_ok = true;
    for (int i = 0; i < 4 && offset_ok; ++i) {
      if (rng.below(2) == 0) {
        pres.green[static_cast<std::size_t>(i)] = std::nullopt;
        continue;
      }
      Vec2 off{0, 0};
      int guard = 0;
      while (off == Vec2{0, 0}) {
        off = {Int(rng.between(-3, 3)), Int(rng.between(-3, 3))};
        if (++guard > 100) {
          offset_ok = false;
          break;
        }
      }
      pres.green[static_cast<std::size_t>(i)] = pres.corner(i) + off;
    }
    if (!offset_ok) continue;
    if (validate(pres).empty()) return pres;
  }
  throw Error(Errc::ExhaustedRetries,
              "no valid presentation after 5000 attempts (seed " +
                  std::to_string(seed) + ")");
}

// ---- file format -------------------------------------------------------------------

std::string serialize(const Presentation& pres) {
  std::ostringstream os;
  os << "netmap-presentation v1\n";
  os << "lambda1: " << pres.lambda1.x << " " << pres.lambda1.y << "\n";
  os << "lambda2: " << pres.lambda2.x << " " << pres.lambda2.y << "\n";
  os << "translation: " << pres.translation.x << " " << pres.translation.y << "\n";
  for (int i = 0; i < 4; ++i) {
    os << "green " << kCornerLabels[static_cast<std::size_t>(i)] << ":";
    if (pres.trivial_green(i)) {
      os << " trivial";
    } else {
      const Vec2& z = *pres.green[static_cast<std::size_t>(i)];
      os << " " << z.x << " " << z.y;
    }
    os << "\n";
  }
  return os.str();
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

Int parse_int_token(const std::string& tok, int line_no) {
  if (tok.empty()) parse_fail(line_no, "expected an integer");
  std::size_t start = tok[0] == '-' || tok[0] == '+' ? 1 : 0;
  if (start == tok.size()) parse_fail(line_no, "expected an integer, got '" + tok + "'");
  for (std::size_t k = start; k < tok.size(); ++k)
    if (tok[k] < '0' || tok[k] > '9')
      parse_fail(line_no, "expected an integer, got '" + tok + "'");
  return Int(tok);
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  std::istringstream is(text);
  std::string raw;
  int line_no = 0;
  bool header_seen = false;
  std::map<std::string, std::pair<std::vector<std::string>, int>> directives;

  while (std::getline(is, raw)) {
    ++line_no;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;

    if (!header_seen) {
      if (tokens.size() != 2 || tokens[0] != "netmap-presentation" || tokens[1] != "v1")
        parse_fail(line_no, "expected header 'netmap-presentation v1'");
      header_seen = true;
      continue;
    }

    std::string key;
    std::vector<std::string> args;
    if (tokens[0] == "green") {
      if (tokens.size() < 2) parse_fail(line_no, "green line missing corner label");
      key = tokens[0] + " " + tokens[1];
      args.assign(tokens.begin() + 2, tokens.end());
    } else {
      key = tokens[0];
      args.assign(tokens.begin() + 1, tokens.end());
    }
    if (key.empty() || key.back() != ':') {
      // Accept "green 00:" (colon attached to the label) and "lambda1:".
      parse_fail(line_no, "expected a 'name:' directive, got '" + key + "'");
    }
    key.pop_back();
    if (directives.count(key)) parse_fail(line_no, "duplicate directive '" + key + "'");
    directives[key] = {args, line_no};
  }

  if (!header_seen) parse_fail(line_no + 1, "missing header 'netmap-presentation v1'");

  auto take_vec = [&](const std::string& key) -> Vec2 {
    auto it = directives.find(key);
    if (it == directives.end())
      parse_fail(line_no + 1, "missing directive '" + key + "'");
    const auto& [args, at] = it->second;
    if (args.size() != 2) parse_fail(at, "'" + key + "' needs two integers");
    return {parse_int_token(args[0], at), parse_int_token(args[1], at)};
  };

  Presentation pres;
  pres.lambda1 = take_vec("lambda1");
  pres.lambda2 = take_vec("lambda2");
  pres.translation = take_vec("translation");
  for (int i = 0; i < 4; ++i) {
    std::string key = std::string("green ") + kCornerLabels[static_cast<std::size_t>(i)];
    auto it = directives.find(key);
    if (it == directives.end())
      parse_fail(line_no + 1, "missing directive '" + key + "'");
    const auto& [args, at] = it->second;
    if (args.size() == 1 && args[0] == "trivial") {
      pres.green[static_cast<std::size_t>(i)] = std::nullopt;
    } else if (args.size() == 2) {
      pres.green[static_cast<std::size_t>(i)] =
          Vec2{parse_int_token(args[0], at), parse_int_token(args[1], at)};
    } else {
      parse_fail(at, "'" + key + "' needs two integers or 'trivial'");
    }
  }

  std::vector<std::string> known = {"lambda1", "lambda2", "translation",
                                    "green 00", "green 10", "green 01", "green 11"};
  for (const auto& [key, val] : directives) {
    if (std::find(known.begin(), known.end(), key) == known.end())
      parse_fail(val.second, "unknown directive '" + key + "'");
  }
  return pres;
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(Errc::IoError, "cannot read '" + path + "'");
  return parse_presentation(buf.str());
}

}  // namespace netslope
