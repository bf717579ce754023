#ifndef NETSLOPE_REPORT_HPP
#define NETSLOPE_REPORT_HPP

/**
 * @file report.hpp
 * @brief Machine-readable run reports: a JSON envelope embedding the input
 *        presentation by value (with digest) so every report is
 *        re-runnable, exact string renderings of all numbers, a
 *        deterministic SVG plot of coverage states, and a stderr timer.
 */

#include "netslope/boundary.hpp"
#include "netslope/coverage.hpp"
#include "netslope/halfspace.hpp"
#include "netslope/matings.hpp"
#include "netslope/presentation.hpp"
#include "netslope/slope.hpp"
#include "netslope/trace.hpp"

#include <json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace netslope {

inline constexpr const char* kToolName = "netslope";
inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// The common envelope: tool identity, command, parameters, the input
/// presentation embedded verbatim with its digest, and the result payload.
Json report_envelope(const std::string& command, Json parameters,
                     const Presentation& pres, Json result);

// ---- exact JSON fragments (all numbers rendered as strings) -------------------------

Json json_slope(const Slope& s);
Json json_extended(const ExtendedSlope& s);
Json json_rat(const Rat& r);
Json json_int(const Int& n);
Json json_boundary_point(const BoundaryPoint& x);
Json json_summary(const PreimageSummary& inv);
Json json_portrait(const Portrait& portrait, OrbifoldType orbifold);
Json json_arc(const BoundaryArc& arc);
Json json_coverage(const CoverageState& state);
Json json_verdict(const RationalityVerdict& verdict);
Json json_omit(const OmitReport& report);
Json json_equators(const std::vector<EquatorReport>& reports);
Json json_family(const FamilyMatingReport& report);
Json json_fixed_points(const std::vector<std::pair<Slope, Rat>>& fixed);

// ---- SVG ----------------------------------------------------------------------------

/**
 * A deterministic SVG picture of a coverage state: the boundary circle,
 * excluded arcs shaded, residual arcs and points highlighted, and any
 * marker points labelled.  Coordinates are formatted to four decimals;
 * identical inputs give identical bytes.
 */
std::string emit_svg(const CoverageState& state,
                     const std::vector<BoundaryPoint>& markers = {});

// ---- timing -------------------------------------------------------------------------

/// Prints "<label>: <ms> ms" to stderr on destruction.  Reports stay on
/// stdout untouched by timing noise.
class ScopeTimer {
 public:
  explicit ScopeTimer(std::string label);
  ~ScopeTimer();
  ScopeTimer(const ScopeTimer&) = delete;
  ScopeTimer& operator=(const ScopeTimer&) = delete;

 private:
  std::string label_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace netslope

#endif  // NETSLOPE_REPORT_HPP
