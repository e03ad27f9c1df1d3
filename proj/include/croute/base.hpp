#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace croute {

using Vertex = int;
using EdgeId = int;
using Rat = boost::multiprecision::cpp_rational;

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

inline long long rat_floor(const Rat& r) {
  boost::multiprecision::cpp_int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q.convert_to<long long>();
}

inline long long rat_ceil(const Rat& r) { return -rat_floor(-r); }

enum class Err {
  MalformedInput,
  Precondition,
  DegenerateCut,
  OracleTooLarge,
  ContractViolation,
  InternalInvariant,
  StochasticFailure,
  ParameterDegeneracy,
  VerificationFailure,
};

struct Error : std::runtime_error {
  Err kind;
  Error(Err k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(Err k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool ok, Err k, const char* msg) {
  if (!ok) fail(k, std::string(msg));
}
inline void require(bool ok, Err k, const std::string& msg) {
  if (!ok) fail(k, msg);
}

// Runtime invariant check. Stays on in release builds: the pipeline's
// correctness story is "every paper inequality is re-checked exactly".
// const char* overloads keep hot paths free of string construction.
inline void check(bool ok, const char* msg) {
  if (!ok) fail(Err::InternalInvariant, std::string(msg));
}
inline void check(bool ok, const std::string& msg) {
  if (!ok) fail(Err::InternalInvariant, msg);
}

// xoshiro256** with splitmix64 seeding. One stream per run; all randomized
// choices draw from it sequentially so a fixed seed fixes the whole run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : s_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      w = z ^ (z >> 31);
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, n) without implementation-defined distributions.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t bound = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= bound);
    return v % n;
  }

  double unit() { return (next() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (deterministic given the stream).
  double gaussian() {
    double u1 = unit(), u2 = unit();
    while (u1 <= 1e-300) u1 = unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

}  // namespace croute
