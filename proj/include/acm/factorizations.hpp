#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "acm/acm.hpp"
#include "acm/common.hpp"

namespace acm {

struct FactorizationCaps {
  u64 max_value = 1000000000;  // largest element accepted for enumeration
  u32 max_factors = 64;
};

namespace detail {

inline std::vector<u64> sorted_divisors(u64 n) {
  std::vector<u64> divs{1};
  for (const auto& [p, e] : factorize(n).factors) {
    std::size_t count = divs.size();
    u64 pe = 1;
    for (u32 i = 0; i < e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace detail

// All multisets of atoms whose product is n, as non-decreasing sequences
// sorted by (length, lexicographic).  n = 1 yields the single empty
// factorization.  Caps are hard errors; partial results are never returned.
inline std::vector<std::vector<u64>> factorizations(const Acm& m, u64 n,
                                                    const FactorizationCaps& caps = {}) {
  if (!m.contains(n)) {
    throw validation_error(std::to_string(n) + " is not a member of M_{" +
                           std::to_string(m.a()) + "," + std::to_string(m.b()) + "}");
  }
  if (n > caps.max_value) {
    throw resource_error("element " + std::to_string(n) +
                         " exceeds the enumeration cap " + std::to_string(caps.max_value));
  }
  if (n == 1) return {{}};

  // member divisors of n > 1, each flagged atom/reducible once
  std::vector<u64> member_divs;
  std::vector<bool> divisor_is_atom;
  for (u64 d : detail::sorted_divisors(n)) {
    if (d > 1 && m.contains(d)) {
      member_divs.push_back(d);
      divisor_is_atom.push_back(classify(m, d) == ElementStatus::atom);
    }
  }

  // rec(v, lo): factorizations of member v into atoms, each >= lo,
  // emitted in non-decreasing order so every multiset appears once
  std::map<std::pair<u64, u64>, std::vector<std::vector<u64>>> memo;
  auto rec = [&](auto&& self, u64 v, u64 lo) -> const std::vector<std::vector<u64>>& {
    auto key = std::make_pair(v, lo);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<u64>> out;
    for (std::size_t i = 0; i < member_divs.size(); ++i) {
      u64 d = member_divs[i];
      if (d < lo || !divisor_is_atom[i]) continue;
      if (d > v) break;
      if (v % d != 0) continue;
      if (d == v) {
        out.push_back({d});
      } else if (m.contains(v / d)) {
        for (const auto& rest : self(self, v / d, d)) {
          std::vector<u64> f;
          f.reserve(rest.size() + 1);
          f.push_back(d);
          f.insert(f.end(), rest.begin(), rest.end());
          if (f.size() > caps.max_factors)
            throw resource_error("factorization longer than the cap of " +
                                 std::to_string(caps.max_factors) + " factors");
          out.push_back(std::move(f));
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };

  std::vector<std::vector<u64>> result = rec(rec, n, 2);
  std::sort(result.begin(), result.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return result;
}

inline std::set<u32> length_set(const Acm& m, u64 n, const FactorizationCaps& caps = {}) {
  std::set<u32> lengths;
  for (const auto& f : factorizations(m, n, caps))
    lengths.insert(static_cast<u32>(f.size()));
  return lengths;
}

// max length / min length as an exact reduced rational; 1 for the unit.
inline Ratio elasticity(const Acm& m, u64 n, const FactorizationCaps& caps = {}) {
  std::set<u32> lengths = length_set(m, n, caps);
  if (lengths.empty()) {
    throw validation_error("element " + std::to_string(n) +
                           " has no factorization into atoms");
  }
  u32 lo = *lengths.begin();
  u32 hi = *lengths.rbegin();
  if (lo == 0) return Ratio{1, 1};  // the unit's empty factorization
  return Ratio::of(hi, lo);
}

}  // namespace acm
