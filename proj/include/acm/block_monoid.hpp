#pragma once

#include <algorithm>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "acm/acm.hpp"
#include "acm/arith.hpp"
#include "acm/common.hpp"

namespace acm {

// Z_b^*: residues in [1, b] coprime to b, ascending.  b = 1 gives the
// trivial group {1} so every operation stays total there.
struct UnitGroup {
  u64 modulus;
  std::vector<u32> elements;

  std::size_t order() const { return elements.size(); }
};

inline UnitGroup unit_group(u64 b) {
  if (b == 0) throw validation_error("unit group needs modulus >= 1");
  UnitGroup g{b, {}};
  if (b == 1) {
    g.elements = {1};
    return g;
  }
  for (u64 r = 1; r < b; ++r)
    if (std::gcd(r, b) == 1) g.elements.push_back(static_cast<u32>(r));
  return g;
}

// Residue multiplication with 1 as the identity representative; the b = 1
// group collapses everything to 1.
inline u32 residue_mul(u64 b, u32 x, u32 y) {
  if (b == 1) return 1;
  return static_cast<u32>((u64(x) * y) % b);
}

inline u32 residue_identity(u64) { return 1; }

// A commutative word over Z_b^* whose letters multiply to the identity.
// Letters are kept sorted, so equal multisets compare equal.
struct Block {
  u64 modulus;
  std::vector<u32> letters;

  friend bool operator==(const Block& x, const Block& y) {
    return x.modulus == y.modulus && x.letters == y.letters;
  }
  friend bool operator<(const Block& x, const Block& y) {
    if (x.letters.size() != y.letters.size())
      return x.letters.size() < y.letters.size();
    return x.letters < y.letters;
  }
};

inline Block make_block(u64 modulus, std::vector<u32> letters) {
  if (modulus == 0) throw validation_error("block needs modulus >= 1");
  u32 prod = residue_identity(modulus);
  for (u32 x : letters) {
    if (x == 0 || x > modulus || std::gcd(u64(x), modulus) != 1) {
      throw validation_error("letter " + std::to_string(x) +
                             " is not a unit mod " + std::to_string(modulus));
    }
    prod = residue_mul(modulus, prod, x);
  }
  if (prod != residue_identity(modulus)) {
    throw validation_error("invalid block: letters multiply to " + std::to_string(prod) +
                           ", not 1 (mod " + std::to_string(modulus) + ")");
  }
  std::sort(letters.begin(), letters.end());
  return Block{modulus, std::move(letters)};
}

// True iff the block is nonempty and no proper nonempty sub-multiset
// multiplies to 1, i.e. the word does not split into two nonempty
// product-one words.  Tracks the achievable products of nonempty
// sub-multisets (all of them, and the proper ones) letter by letter.
inline bool is_block_atom(const Block& blk) {
  Block checked = make_block(blk.modulus, blk.letters);  // revalidates
  if (checked.letters.empty()) return false;
  const u64 b = checked.modulus;
  const u32 id = residue_identity(b);
  std::unordered_set<u32> all;     // products of nonempty sub-multisets
  std::unordered_set<u32> proper;  // products of nonempty proper sub-multisets
  std::size_t processed = 0;
  for (u32 x : checked.letters) {
    std::unordered_set<u32> next_all = all;
    std::unordered_set<u32> next_proper = all;  // subsets avoiding x are proper now
    if (processed > 0) next_proper.insert(x);
    for (u32 p : proper) next_proper.insert(residue_mul(b, p, x));
    next_all.insert(x);
    for (u32 p : all) next_all.insert(residue_mul(b, p, x));
    all = std::move(next_all);
    proper = std::move(next_proper);
    ++processed;
  }
  return proper.find(id) == proper.end();
}

struct BlockAtomsConfig {
  u64 max_group_order = 24;  // exhaustive-search horizon cap on phi(b)
};

// Every atom of B(Z_b^*), found by DFS over non-decreasing letter words of
// length at most |Z_b^*| (the classical Davenport bound).  A prefix whose
// nonempty sub-multisets already realize the identity cannot extend to an
// atom and is pruned; the bookkeeping uses bitmasks over group indices.
inline std::vector<Block> block_atoms(u64 b, const BlockAtomsConfig& cfg = {}) {
  if (b == 0) throw validation_error("block monoid needs modulus >= 1");
  u64 phi = b == 1 ? 1 : euler_phi(b);
  if (phi > cfg.max_group_order) {
    throw resource_error("phi(" + std::to_string(b) + ") = " + std::to_string(phi) +
                         " exceeds the enumeration cap " +
                         std::to_string(cfg.max_group_order));
  }
  if (phi > 32) {
    throw resource_error("group order " + std::to_string(phi) +
                         " exceeds the 32-element search bound");
  }
  const UnitGroup g = unit_group(b);
  const std::size_t k = g.order();
  std::vector<u8> mul(k * k);
  std::vector<std::size_t> index_of(b + 1, 0);
  for (std::size_t i = 0; i < k; ++i) index_of[g.elements[i]] = i;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      mul[i * k + j] = static_cast<u8>(index_of[residue_mul(b, g.elements[i], g.elements[j])]);
  const std::size_t id = index_of[residue_identity(b)];

  auto map_mask = [&](u32 mask, std::size_t x) {
    u32 out = 0;
    while (mask) {
      std::size_t i = static_cast<std::size_t>(__builtin_ctz(mask));
      out |= u32(1) << mul[i * k + x];
      mask &= mask - 1;
    }
    return out;
  };

  std::vector<Block> atoms;
  std::vector<u32> word;

  // state: product index, masks of nonempty (all / proper) subset products
  auto dfs = [&](auto&& self, std::size_t start, std::size_t prod, u32 all_mask,
                 u32 proper_mask) -> void {
    for (std::size_t j = start; j < k; ++j) {
      std::size_t new_prod = mul[prod * k + j];
      u32 new_proper = all_mask | map_mask(proper_mask, j);
      if (!word.empty()) new_proper |= u32(1) << j;
      u32 new_all = all_mask | (u32(1) << j) | map_mask(all_mask, j);
      word.push_back(g.elements[j]);
      if (new_prod == id) {
        if (!(new_proper & (u32(1) << id))) atoms.push_back(Block{b, word});
        // any extension would contain this product-one word: stop here
      } else if (!(new_all & (u32(1) << id)) && word.size() < k) {
        self(self, j, new_prod, new_all, new_proper);
      }
      word.pop_back();
    }
  };
  dfs(dfs, 0, id, 0, 0);
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

// Length of the longest atom of B(Z_b^*).
inline u32 davenport_constant(u64 b, const BlockAtomsConfig& cfg = {}) {
  u32 d = 0;
  for (const Block& blk : block_atoms(b, cfg))
    d = std::max<u32>(d, static_cast<u32>(blk.letters.size()));
  return d;
}

// Image of a member of a regular ACM under the prime-to-residue map:
// each prime in the factorization becomes its class mod b, with
// multiplicity.  Members of M_{1,b} are coprime to b, so the image is a
// valid block.
inline Block transfer(const Acm& m, const PrimeFactorization& pf) {
  if (!m.regular()) {
    throw validation_error("transfer is defined for regular ACMs only (a = 1); M_{" +
                           std::to_string(m.a()) + "," + std::to_string(m.b()) +
                           "} is singular");
  }
  const u64 b = m.b();
  std::vector<u32> letters;
  letters.reserve(pf.total_multiplicity());
  for (const auto& [p, e] : pf.factors) {
    u32 r = b == 1 ? 1 : static_cast<u32>(p % b);
    for (u32 i = 0; i < e; ++i) letters.push_back(r);
  }
  return make_block(b, std::move(letters));
}

inline Block transfer(const Acm& m, u64 n) {
  if (!m.contains(n)) {
    throw validation_error(std::to_string(n) + " is not a member of M_{" +
                           std::to_string(m.a()) + "," + std::to_string(m.b()) + "}");
  }
  return transfer(m, factorize(n));
}

}  // namespace acm
