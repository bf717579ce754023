#include "netslope/numbers.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace netslope {

// ---- exact number helpers ---------------------------------------------------

Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

Rat make_rat(const Int& n, const Int& d) {
  if (d == 0) throw Error(Errc::BadParameter, "zero denominator");
  if (d < 0) return Rat(-n, -d);
  return Rat(n, d);
}

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

int sgn(const Int& x) { return x.sign(); }
int sgn(const Rat& x) { return x.sign(); }

Int abs_int(const Int& x) { return boost::multiprecision::abs(x); }
Rat abs_rat(const Rat& x) { return boost::multiprecision::abs(x); }

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw Error(Errc::BadParameter, "floor_div by zero");
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int egcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int r0 = a, r1 = b;
  Int x0 = 1, x1 = 0;
  Int y0 = 0, y1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (r0 < 0) {
    r0 = -r0;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return r0;
}

Int mod_floor(const Int& a, const Int& b) {
  if (b == 0) throw Error(Errc::BadParameter, "mod_floor by zero");
  Int m = abs_int(b);
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int floor_rat(const Rat& r) { return floor_div(num(r), den(r)); }

Int ceil_rat(const Rat& r) { return -floor_div(-num(r), den(r)); }

bool is_integer(const Rat& r) { return den(r) == 1; }

Int isqrt(const Int& n) {
  if (n < 0) throw Error(Errc::BadParameter, "isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

bool is_square(const Int& n) {
  if (n < 0) return false;
  Int s = isqrt(n);
  return s * s == n;
}

std::pair<Int, Int> squarefree_decompose(const Int& n) {
  if (n < 1) throw Error(Errc::BadParameter, "squarefree_decompose needs n >= 1");
  Int square = 1;
  Int rest = n;
  for (Int p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square *= p;
    }
  }
  return {square, rest};
}

std::string rat_to_string(const Rat& r) {
  std::string s = num(r).str();
  if (den(r) != 1) s += "/" + den(r).str();
  return s;
}

Rat rat_from_string(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int n(text.substr(0, slash));
    Int d(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Rat(n, d);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("bad rational '") + text + "'");
  }
}

// ---- errors -----------------------------------------------------------------

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroZero: return "ZeroZero";
    case Errc::EqualSlopes: return "EqualSlopes";
    case Errc::BadParameter: return "BadParameter";
    case Errc::NonGenericUnresolvable: return "NonGenericUnresolvable";
    case Errc::NotACoreArc: return "NotACoreArc";
    case Errc::DegenerateArcModel: return "DegenerateArcModel";
    case Errc::UnsupportedOrbifold: return "UnsupportedOrbifold";
    case Errc::ExhaustedRetries: return "ExhaustedRetries";
    case Errc::LatticeImageFailure: return "LatticeImageFailure";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

// ---- deterministic utilities -------------------------------------------------

std::uint64_t Rng::next() {
  // splitmix64: tiny, portable, and fully specified.
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::BadParameter, "Rng::below(0)");
  const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
  for (;;) {
    std::uint64_t v = next();
    if (v < limit || limit == 0) return v % bound;
  }
}

long long Rng::between(long long lo, long long hi) {
  if (lo > hi) throw Error(Errc::BadParameter, "Rng::between empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(below(span));
}

std::string fnv1a64_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

unsigned worker_thread_count() {
  const char* env = std::getenv("NETSLOPE_THREADS");
  if (env == nullptr) return 1;
  long n = std::strtol(env, nullptr, 10);
  if (n < 1) return 1;
  if (n > 64) return 64;
  return static_cast<unsigned>(n);
}

void parallel_for_indexed(std::size_t count,
                          const std::function<void(std::size_t)>& fn) {
  unsigned threads = worker_thread_count();
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned live = std::min<std::size_t>(threads, count);
  pool.reserve(live);
  for (unsigned t = 0; t < live; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace netslope
