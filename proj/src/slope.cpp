#include "netslope/slope.hpp"

#include <algorithm>

namespace netslope {

// ---- Slope ------------------------------------------------------------------

Slope Slope::make(Int p, Int q) {
  if (p == 0 && q == 0) throw Error(Errc::ZeroZero, "slope 0/0 is undefined");
  Int g = gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return Slope(std::move(p), std::move(q), PrivateTag{});
}

Int Slope::height() const {
  Int ap = abs_int(p_);
  return ap > q_ ? ap : q_;
}

int Slope::compare_value(const Slope& a, const Slope& b) {
  if (a.is_infinity() && b.is_infinity()) return 0;
  if (a.is_infinity()) return 1;
  if (b.is_infinity()) return -1;
  Int lhs = a.p_ * b.q_;
  Int rhs = b.p_ * a.q_;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

std::string Slope::str() const {
  if (is_infinity()) return "inf";
  return p_.str() + "/" + q_.str();
}

Slope Slope::parse(const std::string& text) {
  if (text == "inf" || text == "INF" || text == "oo") return infinity();
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return make(Int(text), 1);
    Int p((std::string(text, 0, slash)));
    Int q(text.substr(slash + 1));
    return make(std::move(p), std::move(q));
  } catch (const Error&) {
    throw;  // ZeroZero from make
  } catch (const std::exception&) {
    throw Error(Errc::BadParameter, "malformed slope '" + text + "'");
  }
}

// ---- intersection numbers -----------------------------------------------------

Int intersection_number(const Slope& a, const Slope& b) {
  return abs_int(a.p() * b.q() - a.q() * b.p());
}

Int intersection_number(const std::vector<Slope>& multiset, const Slope& b) {
  Int total = 0;
  for (const Slope& s : multiset) total += intersection_number(s, b);
  return total;
}

// ---- enumeration ----------------------------------------------------------------

std::vector<Slope> farey_slopes(const Int& H) {
  if (H < 1) throw Error(Errc::BadParameter, "farey_slopes needs H >= 1");
  std::vector<Slope> out;
  for (Int h = 1; h <= H; ++h) {
    std::vector<Slope> block;
    if (h == 1) block.push_back(Slope::infinity());
    std::vector<Slope> finite;
    // Finite slopes of height exactly h: max(|p|, q) == h with q >= 1.
    //  - q == h: p in [-h, h] coprime to h (|p| <= h keeps height == h).
    //  - |p| == h: q in [1, h-1] coprime to h.
    for (Int p = -h; p <= h; ++p) {
      if (gcd(p, h) != 1) continue;
      finite.push_back(Slope::make(p, h));
    }
    for (Int q = 1; q < h; ++q) {
      if (gcd(h, q) != 1) continue;
      finite.push_back(Slope::make(h, q));
      finite.push_back(Slope::make(-h, q));
    }
    std::sort(finite.begin(), finite.end(),
              [](const Slope& a, const Slope& b) { return Slope::compare_value(a, b) < 0; });
    for (auto& s : finite) block.push_back(std::move(s));
    for (auto& s : block) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace netslope
