#include "netslope/matings.hpp"

#include "netslope/numbers.hpp"
#include "netslope/trace.hpp"

#include <algorithm>
#include <optional>

namespace netslope {

std::vector<EquatorReport> find_equators(const Presentation& pres, int height) {
  require_valid(pres);
  if (height < 1) throw Error(Errc::BadParameter, "probe height must be positive");
  const bool portrait_fixed = postcritical_portrait(pres).has_fixed_point();
  const Int deg = degree(pres);
  const std::vector<Slope> probes = farey_slopes(height);

  std::vector<std::optional<PreimageSummary>> slots(probes.size());
  parallel_for_indexed(probes.size(), [&](std::size_t i) {
    slots[i] = slope_invariants(pres, probes[i]);
  });

  std::vector<EquatorReport> out;
  out.reserve(probes.size());
  for (const auto& slot : slots) {
    const PreimageSummary& inv = *slot;
    EquatorReport rep{inv.s, inv.d == deg,
                      inv.mu.is_slope() && inv.mu.slope() == inv.s,
                      portrait_fixed, false};
    rep.equator = rep.degree_matches && rep.slope_fixed && rep.portrait_fixed;
    out.push_back(rep);
  }
  return out;
}

FamilyMatingReport verify_family_matings(int n) {
  if (n < 4) throw Error(Errc::BadParameter, "the family starts at degree 4");
  const Presentation pres = family_fn(n);
  const Int deg = degree(pres);
  const bool portrait_fixed = postcritical_portrait(pres).has_fixed_point();

  FamilyMatingReport report{n, {}, static_cast<std::size_t>((n + 1) / 2),
                            false, {}, true, false};
  const int mmax = (n - 1) / 2;  // ⌈(n−2)/2⌉
  for (int m = 0; m <= mmax; ++m) {
    const Slope s = Slope::make(Int(2 * m), Int(n - 2 * m - 1));
    if (std::find(report.family_slopes.begin(), report.family_slopes.end(), s) ==
        report.family_slopes.end())
      report.family_slopes.push_back(s);
  }
  report.count_matches = report.family_slopes.size() == report.expected_count;

  for (const Slope& s : report.family_slopes) {
    const PreimageSummary inv = slope_invariants(pres, s);
    EquatorReport rep{s, inv.d == deg,
                      inv.mu.is_slope() && inv.mu.slope() == s, portrait_fixed,
                      false};
    rep.equator = rep.degree_matches && rep.slope_fixed && rep.portrait_fixed;
    if (!rep.degree_matches || !rep.slope_fixed) report.all_verified = false;
    report.checks.push_back(rep);
  }

  const int fixed = postcritical_portrait(pres).fixed_count();
  report.portrait_matches_parity = (n % 2 == 0) ? fixed == 3 : fixed == 4;
  return report;
}

}  // namespace netslope
