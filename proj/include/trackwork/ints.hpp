#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace trackwork {

// Exact integer type used everywhere. Hom composition and Smith reduction
// grow entries quickly, so no fixed-width arithmetic is used in the library.
using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

// floor division / modulo with nonnegative remainder (cpp_int '%' truncates)
inline Int floor_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += boost::multiprecision::abs(m);
  return r;
}

inline Int binom2(const Int& k) { return k * (k - 1) / 2; }

// Deterministic 64-bit stream; std:: distributions are not byte-portable,
// and reports must be reproducible from the seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), n > 0
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // uniform in [lo, hi] inclusive
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  Rng fork(std::uint64_t salt) {
    return Rng(state_ ^ (salt * 0xd1342543de82ef95ull + 0x632be59bd9b4e019ull));
  }

 private:
  std::uint64_t state_;
};

// Stable string hash (FNV-1a), used to derive per-key seeds.
inline std::uint64_t stable_hash(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace trackwork
