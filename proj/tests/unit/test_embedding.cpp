#include <catch2/catch_amalgamated.hpp>

#include "subshift/embedding.hpp"
#include "subshift/forbidden.hpp"
#include "subshift/language.hpp"
#include "subshift/spec.hpp"

using namespace subshift;

TEST_CASE("upgrade keeps length-1 gaps") {
  CHECK(bitseq_to_string(upgrade_embedding(bitseq_from_string("101"))) == "101");
}

TEST_CASE("upgrade fills an even interior gap") {
  CHECK(bitseq_to_string(upgrade_embedding(bitseq_from_string("100001"))) == "101101");
}

TEST_CASE("upgrade fills an odd interior gap") {
  CHECK(bitseq_to_string(upgrade_embedding(bitseq_from_string("10001"))) == "10101");
}

TEST_CASE("upgrade fills boundary runs and all-zero words") {
  const BitSeq x = upgrade_embedding(bitseq_from_string("00100"));
  CHECK(avoids_00_111(x));
  CHECK(dominates(x, bitseq_from_string("00100")));
  const BitSeq z = upgrade_embedding(bitseq_from_string("0000"));
  CHECK(avoids_00_111(z));
  CHECK(bitseq_to_string(upgrade_embedding(bitseq_from_string("0"))) == "1");
}

TEST_CASE("upgrade rejects words outside the domain") {
  CHECK_THROWS_AS(upgrade_embedding(bitseq_from_string("111")), input_error);
  CHECK_THROWS_AS(upgrade_embedding(bitseq_from_string("01001")), input_error);
  CHECK_THROWS_AS(upgrade_embedding(BitSeq{}), input_error);
}

TEST_CASE("upgrade dominates and avoids 00/111 on the whole language, n <= 12") {
  const SubshiftSpec y_spec = SubshiftSpec::sft(
      ForbiddenSet({Block::from_string("111"), Block::from_string("1001")}));
  for (int n = 1; n <= 12; ++n) {
    for (const Block& y : language(y_spec, n)) {
      const BitSeq yb = to_bitseq(y);
      REQUIRE(in_embedding_domain(yb));
      const BitSeq x = upgrade_embedding(yb);
      REQUIRE(x.size() == yb.size());
      REQUIRE(dominates(x, yb));
      REQUIRE(avoids_00_111(x));
    }
  }
}

TEST_CASE("language words of Y coincide with locally admissible words") {
  const SubshiftSpec y_spec = SubshiftSpec::sft(
      ForbiddenSet({Block::from_string("111"), Block::from_string("1001")}));
  for (int n = 1; n <= 10; ++n) {
    std::set<Block> local;
    for (const Block& w : all_blocks(n))
      if (in_embedding_domain(to_bitseq(w))) local.insert(w);
    CHECK(language(y_spec, n) == local);
  }
}
