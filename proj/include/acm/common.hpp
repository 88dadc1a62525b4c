#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace acm {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Thrown when an input violates a documented precondition (bad monoid
// parameters, non-member element, invalid block, ...).  The CLI maps this
// to exit code 2.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a configurable resource cap would be exceeded (sieve limits,
// enumeration horizons, overflow guards).  The CLI maps this to exit code 3.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Cap on intermediate products; all arithmetic stays in 64 bits.
inline constexpr u64 kProductCap = u64(1) << 62;

inline u64 checked_mul(u64 x, u64 y, u64 cap = kProductCap) {
  if (x != 0 && y > cap / x) {
    throw resource_error("product " + std::to_string(x) + " * " +
                         std::to_string(y) + " exceeds the configured cap");
  }
  return x * y;
}

// Exact nonnegative rational, kept reduced.  Counting code never touches
// floating point; decimals appear only as renderings of these pairs.
struct Ratio {
  u64 num = 0;
  u64 den = 1;

  static Ratio of(u64 n, u64 d) {
    if (d == 0) throw validation_error("rational with zero denominator");
    u64 g = std::gcd(n, d);
    if (g == 0) g = 1;
    return Ratio{n / g, d / g};
  }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Ratio& a, const Ratio& b) {
    return u128(a.num) * b.den < u128(b.num) * a.den;
  }
  friend bool operator<=(const Ratio& a, const Ratio& b) {
    return u128(a.num) * b.den <= u128(b.num) * a.den;
  }

  // "0", "3", or "1/2"
  std::string str() const {
    if (num == 0) return "0";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Renders num/den rounded half-up to six decimal places, via integer
// arithmetic only, so output is bit-stable across platforms and runs.
inline std::string decimal6(u64 num, u64 den) {
  if (den == 0) throw validation_error("decimal rendering with zero denominator");
  u128 scaled = (u128(num) * 2000000 + den) / (u128(den) * 2);
  u64 whole = u64(scaled / 1000000);
  u64 frac = u64(scaled % 1000000);
  std::string f = std::to_string(frac);
  return std::to_string(whole) + "." + std::string(6 - f.size(), '0') + f;
}

inline std::string decimal6(const Ratio& r) { return decimal6(r.num, r.den); }

}  // namespace acm
