#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "acm/atom_sieve.hpp"
#include "acm/block_monoid.hpp"
#include "oracles.hpp"

using namespace acm;

TEST_CASE("unit groups") {
  CHECK(unit_group(5).elements == std::vector<u32>{1, 2, 3, 4});
  CHECK(unit_group(4).elements == std::vector<u32>{1, 3});
  CHECK(unit_group(1).elements == std::vector<u32>{1});
  CHECK(unit_group(2).elements == std::vector<u32>{1});
  CHECK(unit_group(12).elements == std::vector<u32>{1, 5, 7, 11});
  CHECK_THROWS_AS(unit_group(0), validation_error);
}

TEST_CASE("block validation") {
  CHECK_NOTHROW(make_block(5, {2, 2, 2, 2}));
  CHECK_NOTHROW(make_block(5, {}));
  CHECK_THROWS_AS(make_block(5, {2}), validation_error);       // product 2, not 1
  CHECK_THROWS_AS(make_block(6, {2, 3}), validation_error);    // letters not units
  CHECK(make_block(5, {3, 2}).letters == std::vector<u32>{2, 3});
}

TEST_CASE("block atom decision") {
  CHECK(is_block_atom(make_block(5, {2, 2, 2, 2})));
  CHECK(is_block_atom(make_block(5, {2, 3})));
  CHECK(is_block_atom(make_block(5, {1})));
  CHECK_FALSE(is_block_atom(make_block(5, {})));
  CHECK_FALSE(is_block_atom(make_block(5, {2, 2, 2, 2, 3, 3, 3, 3})));
  CHECK_FALSE(is_block_atom(make_block(5, {1, 1})));
  CHECK_FALSE(is_block_atom(make_block(5, {2, 3, 2, 3})));
}

TEST_CASE("block atom decision matches brute force") {
  std::mt19937_64 rng(11);
  for (u64 b : {4, 5, 7, 8, 12}) {
    UnitGroup g = unit_group(b);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    int found = 0;
    while (found < 200) {
      std::uniform_int_distribution<std::size_t> len_dist(1, 9);
      std::vector<u32> letters;
      u32 prod = 1;
      std::size_t len = len_dist(rng);
      for (std::size_t i = 0; i < len; ++i) {
        u32 x = g.elements[pick(rng)];
        letters.push_back(x);
        prod = residue_mul(b, prod, x);
      }
      if (prod != residue_identity(b)) continue;
      ++found;
      Block blk = make_block(b, letters);
      REQUIRE(is_block_atom(blk) == oracle::naive_is_block_atom(b, blk.letters));
    }
  }
}

TEST_CASE("the seven atoms of B(Z_5^*)") {
  std::vector<Block> atoms = block_atoms(5);
  std::vector<Block> expected{
      make_block(5, {1}),          make_block(5, {2, 3}),
      make_block(5, {4, 4}),       make_block(5, {2, 2, 4}),
      make_block(5, {3, 3, 4}),    make_block(5, {2, 2, 2, 2}),
      make_block(5, {3, 3, 3, 3})};
  std::sort(expected.begin(), expected.end());
  CHECK(atoms == expected);
  CHECK(davenport_constant(5) == 4);
}

TEST_CASE("block atom enumeration matches brute force") {
  for (u64 b : {1, 2, 3, 4, 5, 7, 8, 9, 12, 15, 16}) {
    std::vector<Block> got = block_atoms(b);
    auto expected = oracle::block_atoms_bruteforce(b);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i)
      REQUIRE(got[i].letters == expected[i]);
  }
}

TEST_CASE("davenport constants") {
  CHECK(davenport_constant(4) == 2);
  CHECK(davenport_constant(2) == 1);
  CHECK(davenport_constant(1) == 1);
  CHECK(davenport_constant(8) == 3);
  CHECK(davenport_constant(12) == 3);
  CHECK(davenport_constant(3) == 2);
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(block_atoms(97), resource_error);  // phi = 96
  BlockAtomsConfig loose;
  loose.max_group_order = 100;
  CHECK_THROWS_AS(block_atoms(97, loose), resource_error);  // beyond the mask bound
}

TEST_CASE("transfer images") {
  Acm hilbert = Acm::create(1, 4);
  CHECK(transfer(hilbert, 441) == make_block(4, {3, 3, 3, 3}));
  CHECK(transfer(hilbert, 1) == make_block(4, {}));
  CHECK(transfer(Acm::create(1, 5), 341) == make_block(5, {1, 1}));  // 11 * 31
  CHECK_THROWS_AS(transfer(Acm::create(4, 6), 16), validation_error);
  CHECK_THROWS_AS(transfer(hilbert, 7), validation_error);  // not a member
}

TEST_CASE("transfer is a homomorphism") {
  Acm m = Acm::create(1, 5);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<u64> dist(0, 60);
  for (int i = 0; i < 200; ++i) {
    u64 x = 1 + 5 * dist(rng), y = 1 + 5 * dist(rng);
    Block bx = transfer(m, x), by = transfer(m, y), bxy = transfer(m, x * y);
    std::vector<u32> merged = bx.letters;
    merged.insert(merged.end(), by.letters.begin(), by.letters.end());
    std::sort(merged.begin(), merged.end());
    REQUIRE(bxy.letters == merged);
  }
}

TEST_CASE("atoms map to block atoms and back") {
  for (u64 b : {4, 5}) {
    Acm m = Acm::create(1, b);
    AtomSieve sieve(m, 10000);
    for (u64 n = 1 + b; n <= 10000; n += b) {
      bool atom = sieve.status(n) == ElementStatus::atom;
      REQUIRE(atom == is_block_atom(transfer(m, n)));
    }
  }
}

TEST_CASE("atoms of a regular ACM respect the Davenport bound") {
  for (u64 b : {4, 5, 8}) {
    Acm m = Acm::create(1, b);
    u32 dav = davenport_constant(b);
    AtomSieve sieve(m, 10000);
    for (u64 n : sieve.collect(ElementStatus::atom, 10000))
      REQUIRE(factorize(n).total_multiplicity() <= dav);
  }
}
