#include <catch2/catch_amalgamated.hpp>

#include "subshift/block.hpp"

using namespace subshift;

TEST_CASE("ones_count") {
  CHECK(ones_count(Block::from_string("0110")) == 2);
  CHECK(ones_count(Block::from_string("0000")) == 0);
  CHECK(ones_count(Block::from_string("1111")) == 4);
}

TEST_CASE("dominates basics") {
  CHECK(dominates(Block::from_string("110"), Block::from_string("100")));
  CHECK_FALSE(dominates(Block::from_string("100"), Block::from_string("110")));
  const Block w = Block::from_string("0101");
  CHECK(dominates(w, w));
  CHECK_THROWS_AS(dominates(Block::from_string("01"), Block::from_string("011")), input_error);
}

TEST_CASE("subword") {
  CHECK(subword(Block::from_string("01101"), 1, 3) == Block::from_string("110"));
  const Block w = Block::from_string("100110");
  CHECK(subword(w, 0, w.length() - 1) == w);
  CHECK(subword(Block::from_string("10"), 1, 1) == Block::from_string("0"));
  CHECK_THROWS_AS(subword(w, 3, 2), input_error);
  CHECK_THROWS_AS(subword(w, 0, 6), input_error);
  CHECK_THROWS_AS(subword(w, -1, 2), input_error);
}

TEST_CASE("dominating_set examples") {
  const auto blocks2 = [] {
    std::set<Block> s;
    for (const Block& b : all_blocks(2)) s.insert(b);
    return s;
  }();
  CHECK(dominating_set(Block::from_string("00"), blocks2) == blocks2);
  CHECK(dominating_set(Block::from_string("11"), blocks2) ==
        std::set<Block>{Block::from_string("11")});
  const std::set<Block> candidates{Block::from_string("00"), Block::from_string("01"),
                                   Block::from_string("11")};
  CHECK(dominating_set(Block::from_string("01"), candidates) ==
        std::set<Block>{Block::from_string("01"), Block::from_string("11")});
}

TEST_CASE("block parsing and formatting") {
  CHECK(Block::from_string("0110").to_string() == "0110");
  CHECK_THROWS_AS(Block::from_string(""), input_error);
  CHECK_THROWS_AS(Block::from_string("01x"), input_error);
  CHECK_THROWS_AS(Block::from_string(std::string(65, '0')), input_error);
  CHECK(Block::from_string(std::string(64, '1')).ones_count() == 64);
}

TEST_CASE("lexicographic order and equality") {
  CHECK(Block::from_string("011") < Block::from_string("100"));
  CHECK(Block::from_string("0011") < Block::from_string("0100"));
  CHECK_FALSE(Block::from_string("10") < Block::from_string("10"));
  CHECK(Block::from_string("0") < Block::from_string("00"));  // shorter first
}

TEST_CASE("dominates is a partial order (exhaustive)") {
  for (int n = 1; n <= 5; ++n) {
    const auto blocks = all_blocks(n);
    for (const Block& a : blocks) {
      CHECK(a.dominates(a));
      for (const Block& b : blocks) {
        if (a.dominates(b) && b.dominates(a)) CHECK(a == b);
        for (const Block& c : blocks)
          if (a.dominates(b) && b.dominates(c)) CHECK(a.dominates(c));
      }
    }
  }
  // length 8: transitivity via the bit identity is cheap enough to brute force
  int violations = 0;
  for (std::uint64_t a = 0; a < 256; ++a)
    for (std::uint64_t b = 0; b < 256; ++b) {
      if ((b & ~a) != 0) continue;  // need a >= b
      for (std::uint64_t c = 0; c < 256; ++c)
        if ((c & ~b) == 0 && (c & ~a) != 0) ++violations;
    }
  CHECK(violations == 0);
}

TEST_CASE("dominates implies ones_count dominance (exhaustive n=8)") {
  const auto blocks = all_blocks(8);
  for (const Block& a : blocks)
    for_each_dominated(a, [&](const Block& b) {
      REQUIRE(a.ones_count() >= b.ones_count());
      REQUIRE(a.dominates(b));
    });
}

TEST_CASE("dominating_set cardinality is 2^(n - ones)") {
  for (int n = 1; n <= 8; ++n) {
    std::set<Block> all;
    for (const Block& b : all_blocks(n)) all.insert(b);
    for (const Block& w : all_blocks(n)) {
      const auto ds = dominating_set(w, all);
      CHECK(ds.size() == (std::size_t{1} << (n - w.ones_count())));
    }
  }
}

TEST_CASE("for_each_dominated enumerates the full down-set") {
  const Block w = Block::from_string("1011");
  std::set<Block> seen;
  for_each_dominated(w, [&](const Block& b) { seen.insert(b); });
  CHECK(seen.size() == 8);
  for (const Block& b : seen) CHECK(w.dominates(b));
}
