#ifndef NETSLOPE_NUMBERS_HPP
#define NETSLOPE_NUMBERS_HPP

/**
 * @file numbers.hpp
 * @brief Exact arbitrary-precision integers and rationals, plus the small
 *        deterministic utilities (RNG, hashing, worker pool) shared by the
 *        rest of the library.
 *
 * All arithmetic in the library is exact; no routine on the certification
 * path ever rounds.  Floating point appears only in the SVG renderer.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace netslope {

// ---- exact number types ---------------------------------------------------

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Numerator of an exact rational (canonical form: denominator > 0).
Int num(const Rat& r);
/// Denominator of an exact rational (always > 0).
Int den(const Rat& r);

/**
 * n/d as an exact rational for any nonzero d.  The two-argument Rat
 * constructor rejects negative denominators outright, so every quotient of
 * integers with an unknown sign must come through here.
 */
Rat make_rat(const Int& n, const Int& d);

/// Non-negative gcd; gcd(0, 0) == 0.
Int gcd(const Int& a, const Int& b);
/// Least common multiple; lcm(0, x) == 0.
Int lcm(const Int& a, const Int& b);

/// Extended gcd: returns g = gcd(a, b) >= 0 and sets x, y so a*x + b*y == g.
Int egcd(const Int& a, const Int& b, Int& x, Int& y);

/// -1, 0 or +1.
int sgn(const Int& x);
int sgn(const Rat& x);

/// |x|.
Int abs_int(const Int& x);
Rat abs_rat(const Rat& x);

/// Floor division (rounds toward negative infinity, unlike operator/).
Int floor_div(const Int& a, const Int& b);
/// a mod b with result in [0, |b|).
Int mod_floor(const Int& a, const Int& b);

/// Floor of an exact rational.
Int floor_rat(const Rat& r);
/// Ceiling of an exact rational.
Int ceil_rat(const Rat& r);

/// True when r is an integer.
bool is_integer(const Rat& r);

/// Largest integer s with s*s <= n (n >= 0).
Int isqrt(const Int& n);
/// True when n is a perfect square (n >= 0).
bool is_square(const Int& n);

/**
 * Writes n = s^2 * d with d squarefree, d >= 1.  Returns {s, d}.
 * Requires n >= 1.  Used to canonicalise quadratic surds; inputs on every
 * call path are tiny (products of map degrees), so trial division is ample.
 */
std::pair<Int, Int> squarefree_decompose(const Int& n);

/// Renders an exact rational as "n" or "n/d" (denominator omitted when 1).
std::string rat_to_string(const Rat& r);
/// Parses "n" or "n/d"; throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& text);

// ---- errors ---------------------------------------------------------------

/// Machine-readable failure categories surfaced across the library API.
enum class Errc {
  ZeroZero,               ///< slope 0/0 requested
  EqualSlopes,            ///< a pairing that requires distinct slopes
  BadParameter,           ///< argument outside the documented domain
  NonGenericUnresolvable, ///< genericity retries exhausted
  NotACoreArc,            ///< chain endpoints are not marked-class vertices
  DegenerateArcModel,     ///< arc-system invariants failed on given input
  UnsupportedOrbifold,    ///< operation needs a hyperbolic orbifold
  ExhaustedRetries,       ///< random search hit its retry cap
  LatticeImageFailure,    ///< affine data leaves the coarser lattice
  ParseError,             ///< malformed presentation file
  IoError,                ///< filesystem failure
};

/// Human-readable name of an error category ("ZeroZero", ...).
const char* errc_name(Errc code);

/// Exception carrying a category plus a diagnostic message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// ---- deterministic utilities ----------------------------------------------

/**
 * Deterministic 64-bit RNG (splitmix64).  The standard distributions are
 * implementation-defined, so sampling helpers are provided here to keep
 * generated presentations identical across platforms.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform in [0, bound); bound > 0.  Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi] inclusive.
  long long between(long long lo, long long hi);

 private:
  std::uint64_t state_;
};

/// FNV-1a 64-bit digest of a byte string, rendered as "fnv1a64:" + 16 hex.
std::string fnv1a64_digest(const std::string& bytes);

/**
 * Applies fn to each index in [0, count) and collects results in index
 * order.  Uses a worker pool when the NETSLOPE_THREADS environment variable
 * requests more than one thread; output is identical regardless of the
 * thread count.  Exceptions from workers are rethrown on the caller.
 */
void parallel_for_indexed(std::size_t count,
                          const std::function<void(std::size_t)>& fn);

/// Thread count honoured by parallel_for_indexed (>= 1).
unsigned worker_thread_count();

}  // namespace netslope

#endif  // NETSLOPE_NUMBERS_HPP
