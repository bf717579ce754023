#ifndef NETSLOPE_MATINGS_HPP
#define NETSLOPE_MATINGS_HPP

/**
 * @file matings.hpp
 * @brief Equator detection and the translation-family mating counts.
 *
 * A slope s is flagged as an equator candidate when its preimage is a single
 * essential curve of full direction order (d(s) = degree), the slope map
 * fixes it (μ(s) = s), and the marked-point dynamics fix some point.  Each
 * condition is necessary for an equator, so the flagged set is a superset of
 * the true equators; the report carries the full condition vector.  The
 * translation family below consists of slopes that are genuine equators, and
 * the family checks verify the computable conditions for each of them.
 */

#include "netslope/presentation.hpp"
#include "netslope/slope.hpp"

#include <vector>

namespace netslope {

/// Condition vector for one slope; `equator` is the conjunction.
struct EquatorReport {
  Slope s;
  bool degree_matches;  ///< d(s) equals the map degree
  bool slope_fixed;     ///< μ(s) = s
  bool portrait_fixed;  ///< some marked point is fixed (slope-independent)
  bool equator;
};

/// Evaluates the three conditions for every slope of height ≤ H in
/// deterministic order.
std::vector<EquatorReport> find_equators(const Presentation& pres, int height);

/**
 * The verification bundle for the degree-n translation family: the slopes
 * 2m/(n−2m−1) for 0 ≤ m ≤ ⌈(n−2)/2⌉ (reduced; the vanishing denominator
 * gives ∞), each checked to be fixed with full direction order, the count
 * ⌈n/2⌉, and the parity pattern of the marked-point dynamics (all four
 * points fixed for odd n, exactly three for even n).
 */
struct FamilyMatingReport {
  int n;
  std::vector<Slope> family_slopes;
  std::size_t expected_count;
  bool count_matches;
  std::vector<EquatorReport> checks;
  bool all_verified;             ///< every family slope fixed with d = n
  bool portrait_matches_parity;  ///< fixed-point count equals the parity rule
};

/// Builds the family member and runs every check.  BadParameter when n < 4.
FamilyMatingReport verify_family_matings(int n);

}  // namespace netslope

#endif  // NETSLOPE_MATINGS_HPP
