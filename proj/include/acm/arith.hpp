#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "acm/common.hpp"

namespace acm {

inline constexpr u64 kDefaultSegmentSize = u64(1) << 20;
inline constexpr u64 kDefaultSieveLimitCap = u64(1) << 31;
inline constexpr u64 kDefaultSpfLimitCap = u64(1) << 28;

struct SieveConfig {
  u64 segment_size = kDefaultSegmentSize;
  u64 limit_cap = kDefaultSieveLimitCap;
};

// Residue class [r]_m.  The stored residue is always reduced mod m, so
// membership is the plain test n % m == residue.
struct ResidueClass {
  u64 residue;
  u64 modulus;

  ResidueClass(u64 r, u64 m) : residue(0), modulus(m) {
    if (m == 0) throw validation_error("residue class needs modulus >= 1");
    residue = r % m;
  }

  bool contains(u64 n) const { return n % modulus == residue; }

  friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
    return a.residue == b.residue && a.modulus == b.modulus;
  }
};

// Multiset of (prime, exponent) pairs, primes strictly increasing.
// factorize(1) is the empty list.
struct PrimeFactorization {
  std::vector<std::pair<u64, u32>> factors;

  bool empty() const { return factors.empty(); }

  u64 value() const {
    u64 v = 1;
    for (const auto& [p, e] : factors)
      for (u32 i = 0; i < e; ++i) v = checked_mul(v, p);
    return v;
  }

  // Omega(n): prime factors counted with multiplicity.
  u32 total_multiplicity() const {
    u32 t = 0;
    for (const auto& [p, e] : factors) t += e;
    return t;
  }
};

// Segmented sieve of Eratosthenes.  Returns all primes in [2, limit],
// ascending; the result is independent of the segment size.
inline std::vector<u64> sieve_primes(u64 limit, const SieveConfig& cfg = {}) {
  if (limit > cfg.limit_cap) {
    throw resource_error("sieve limit " + std::to_string(limit) +
                         " exceeds cap " + std::to_string(cfg.limit_cap));
  }
  std::vector<u64> primes;
  if (limit < 2) return primes;

  u64 root = 1;
  while ((root + 1) * (root + 1) <= limit) ++root;

  // small primes up to sqrt(limit)
  std::vector<char> small(root + 1, 1);
  for (u64 i = 2; i * i <= root; ++i)
    if (small[i])
      for (u64 j = i * i; j <= root; j += i) small[j] = 0;

  std::vector<u64> base;
  for (u64 i = 2; i <= root; ++i)
    if (small[i]) base.push_back(i);

  const u64 seg = std::max<u64>(cfg.segment_size, 16);
  std::vector<char> mark(seg);
  for (u64 lo = 2; lo <= limit; lo += seg) {
    u64 hi = std::min(lo + seg - 1, limit);
    std::fill(mark.begin(), mark.begin() + (hi - lo + 1), 1);
    for (u64 p : base) {
      if (p * p > hi) break;
      u64 start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (u64 j = start; j <= hi; j += p) mark[j - lo] = 0;
    }
    for (u64 n = lo; n <= hi; ++n)
      if (mark[n - lo]) primes.push_back(n);
  }
  return primes;
}

// Trial division with a 6k+-1 wheel; fine for isolated 64-bit inputs.
inline PrimeFactorization factorize(u64 n) {
  if (n == 0) throw validation_error("factorize: n must be >= 1");
  PrimeFactorization pf;
  auto strip = [&](u64 p) {
    u32 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) pf.factors.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (u64 d = 5, step = 2; d <= n / d; d += step, step = 6 - step) strip(d);
  if (n > 1) pf.factors.emplace_back(n, 1);
  return pf;
}

// Smallest-prime-factor table for bulk factorization of a dense range.
// Agrees with trial-division factorize() by construction (and by test).
class SpfTable {
 public:
  explicit SpfTable(u64 limit, u64 limit_cap = kDefaultSpfLimitCap)
      : limit_(limit) {
    if (limit > limit_cap) {
      throw resource_error("spf table limit " + std::to_string(limit) +
                           " exceeds cap " + std::to_string(limit_cap));
    }
    spf_.assign(limit_ + 1, 0);
    for (u64 i = 2; i <= limit_; ++i) {
      if (spf_[i] == 0)
        for (u64 j = i; j <= limit_; j += i)
          if (spf_[j] == 0) spf_[j] = static_cast<u32>(i);
    }
  }

  u64 limit() const { return limit_; }

  PrimeFactorization factorize(u64 n) const {
    if (n == 0) throw validation_error("factorize: n must be >= 1");
    if (n > limit_) {
      throw validation_error("spf table built to " + std::to_string(limit_) +
                             ", cannot factor " + std::to_string(n));
    }
    PrimeFactorization pf;
    while (n > 1) {
      u64 p = spf_[n];
      u32 e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      pf.factors.emplace_back(p, e);
    }
    return pf;
  }

 private:
  u64 limit_;
  std::vector<u32> spf_;
};

// All primes p <= limit with p in cls, ascending.
inline std::vector<u64> primes_in_class(const ResidueClass& cls, u64 limit,
                                        const SieveConfig& cfg = {}) {
  std::vector<u64> out;
  for (u64 p : sieve_primes(limit, cfg))
    if (cls.contains(p)) out.push_back(p);
  return out;
}

enum class PrimeCounting { with_multiplicity, distinct };

// Number of primes in the factorization lying in cls.  Counted with
// multiplicity by default; both conventions are exposed.
inline u32 omega_in_class(const PrimeFactorization& pf, const ResidueClass& cls,
                          PrimeCounting counting = PrimeCounting::with_multiplicity) {
  u32 t = 0;
  for (const auto& [p, e] : pf.factors)
    if (cls.contains(p)) t += (counting == PrimeCounting::with_multiplicity) ? e : 1;
  return t;
}

inline u32 omega_in_class(u64 n, const ResidueClass& cls,
                          PrimeCounting counting = PrimeCounting::with_multiplicity) {
  return omega_in_class(factorize(n), cls, counting);
}

// Euler phi from the factorization; used for cap checks before any
// group is materialized.
inline u64 euler_phi(u64 n) {
  u64 phi = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    phi = checked_mul(phi, p - 1);
    for (u32 i = 1; i < e; ++i) phi = checked_mul(phi, p);
  }
  return phi;
}

}  // namespace acm
