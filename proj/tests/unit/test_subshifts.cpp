#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "subshift/forbidden.hpp"
#include "subshift/graph.hpp"
#include "subshift/language.hpp"
#include "subshift/spec.hpp"
#include "subshift/spectral.hpp"

using namespace subshift;

namespace {

ForbiddenSet fs(std::initializer_list<const char*> words) {
  std::vector<Block> out;
  for (const char* w : words) out.push_back(Block::from_string(w));
  return ForbiddenSet(std::move(out));
}

// Brute-force language oracle for an SFT: all n-words avoiding F that extend
// to a word of length n + 2*max_len avoiding F on both sides.
std::set<Block> brute_language(const ForbiddenSet& f, int n) {
  const int pad = 2 * std::max(f.max_len(), 1);
  std::set<Block> out;
  for (const Block& mid : all_blocks(n)) {
    if (f.forbids(mid)) continue;
    bool extends = false;
    for (const Block& left : all_blocks(pad)) {
      if (extends) break;
      for (const Block& right : all_blocks(pad)) {
        Block whole = left.concat(mid).concat(right);
        if (!f.forbids(whole)) {
          extends = true;
          break;
        }
      }
    }
    if (extends) out.insert(mid);
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> adjacency_rows(const LabeledGraph& g) {
  return AdjacencyMatrix::from_graph(g).entries;
}

}  // namespace

TEST_CASE("normalize forbidden sets") {
  CHECK(fs({"00", "000"}) == fs({"00"}));
  CHECK(fs({"00", "111"}).words().size() == 2);
  CHECK(ForbiddenSet{}.words().empty());
  CHECK(fs({"101", "0101", "11"}) == fs({"101", "11"}));
}

TEST_CASE("hereditary sufficient condition") {
  CHECK(is_hereditary_sufficient(fs({"11"})));
  CHECK_FALSE(is_hereditary_sufficient(fs({"00", "111"})));
  CHECK(is_hereditary_sufficient(ForbiddenSet{}));
  CHECK(is_hereditary_sufficient(fs({"1"})));
}

TEST_CASE("sft_to_graph reproduces the printed presentation of X_{00,111}") {
  const LabeledGraph g = sft_to_graph(fs({"00", "111"}));
  REQUIRE(g.vertex_count == 3);
  CHECK(g.vertex_names == std::vector<std::string>{"11", "10", "01"});
  CHECK(adjacency_rows(g) ==
        std::vector<std::vector<std::uint64_t>>{{0, 1, 0}, {0, 0, 1}, {1, 1, 0}});
}

TEST_CASE("sft_to_graph golden mean") {
  const LabeledGraph g = sft_to_graph(fs({"11"}));
  REQUIRE(g.vertex_count == 2);
  // vertices are 1, 0 in descending order; edges 1->0(0), 0->0(0), 0->1(1)
  REQUIRE(g.edges.size() == 3);
  int ones_labels = 0;
  for (const auto& e : g.edges) ones_labels += e.label;
  CHECK(ones_labels == 1);
}

TEST_CASE("sft_to_graph full shift and degenerate cases") {
  const LabeledGraph g = sft_to_graph(ForbiddenSet{});
  CHECK(g.vertex_count == 1);
  CHECK(g.edges.size() == 2);
  const LabeledGraph fixed = sft_to_graph(fs({"1"}));
  CHECK(fixed.vertex_count == 1);
  CHECK(fixed.edges.size() == 1);
  CHECK_THROWS_AS(sft_to_graph(fs({"0", "1"})), empty_subshift_error);
  CHECK_THROWS_AS(sft_to_graph(fs({"00", "01", "10", "11"})), empty_subshift_error);
}

TEST_CASE("language of the golden mean") {
  const SubshiftSpec spec = SubshiftSpec::sft(fs({"11"}));
  CHECK(language(spec, 2) == std::set<Block>{Block::from_string("00"), Block::from_string("01"),
                                             Block::from_string("10")});
  const auto counts = language_counts(spec, 8);
  CHECK(counts == std::vector<std::uint64_t>{2, 3, 5, 8, 13, 21, 34, 55});
  for (int n = 1; n <= 8; ++n) {
    const auto oracle = brute_language(fs({"11"}), n);
    CHECK(language(spec, n) == oracle);
  }
}

TEST_CASE("language of X_{00,111} at length 2") {
  const SubshiftSpec spec = SubshiftSpec::sft(fs({"00", "111"}));
  CHECK(language(spec, 2) == std::set<Block>{Block::from_string("01"), Block::from_string("10"),
                                             Block::from_string("11")});
  for (int n = 1; n <= 7; ++n) CHECK(language(spec, n) == brute_language(fs({"00", "111"}), n));
}

TEST_CASE("periodic and full-shift languages") {
  CHECK(language(SubshiftSpec::periodic(Block::from_string("011")), 3) ==
        std::set<Block>{Block::from_string("011"), Block::from_string("110"),
                        Block::from_string("101")});
  CHECK(language(SubshiftSpec::full_shift(), 3).size() == 8);
  CHECK_THROWS_AS(language(SubshiftSpec::full_shift(), 25), enumeration_cap_error);
}

TEST_CASE("languages are factorial and submultiplicative") {
  const std::vector<SubshiftSpec> specs = {
      SubshiftSpec::sft(fs({"11"})), SubshiftSpec::sft(fs({"00", "111"})),
      SubshiftSpec::sft(fs({"111", "1001"})), SubshiftSpec::periodic(Block::from_string("0110")),
      SubshiftSpec::full_shift()};
  for (const auto& spec : specs) {
    for (int n = 1; n <= 6; ++n) {
      const auto lang_n = language(spec, n);
      const auto lang_n1 = language(spec, n + 1);
      for (const Block& w : lang_n1) {
        CHECK(lang_n.count(w.subword(0, n - 1)) == 1);
        CHECK(lang_n.count(w.subword(1, n)) == 1);
      }
    }
    const auto counts = language_counts(spec, 16);
    for (int m = 1; m <= 8; ++m)
      for (int n = 1; n <= 8; ++n)
        CHECK(counts[m + n - 1] <= counts[m - 1] * counts[n - 1]);
  }
}

TEST_CASE("hereditary closure of a language") {
  std::set<Block> top{Block::from_string("11")};
  CHECK(hereditary_closure_language(top).size() == 4);
  std::set<Block> bottom{Block::from_string("00")};
  CHECK(hereditary_closure_language(bottom) == bottom);
  const auto gm2 = language(SubshiftSpec::sft(fs({"11"})), 2);
  CHECK(hereditary_closure_language(gm2) == gm2);
}

TEST_CASE("hereditary closure is idempotent and monotone") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::set<Block> small, large;
    for (int i = 0; i < 5; ++i) {
      const Block b(rng() & Block::mask(n), n);
      large.insert(b);
      if (i < 3) small.insert(b);
    }
    const auto closed = hereditary_closure_language(large);
    CHECK(hereditary_closure_language(closed) == closed);
    const auto closed_small = hereditary_closure_language(small);
    for (const Block& w : closed_small) CHECK(closed.count(w) == 1);
  }
}

TEST_CASE("closure graph: edge count and language equality") {
  const LabeledGraph golden = sft_to_graph(fs({"11"}));
  CHECK(hereditary_closure_graph(golden).edges.size() == 4);

  // full shift is hereditary: closure leaves the language unchanged
  const LabeledGraph full = full_shift_graph();
  const SubshiftSpec full_closed = SubshiftSpec::sofic(hereditary_closure_graph(full));
  for (int n = 1; n <= 8; ++n)
    CHECK(language(full_closed, n).size() == (std::size_t{1} << n));

  // golden mean is hereditary by the sufficient condition
  const SubshiftSpec gm = SubshiftSpec::sft(fs({"11"}));
  const SubshiftSpec gm_closed = SubshiftSpec::sofic(hereditary_closure_graph(golden));
  for (int n = 1; n <= 8; ++n) CHECK(language(gm_closed, n) == language(gm, n));
}

TEST_CASE("closure graph language equals downward-closed language") {
  const std::vector<ForbiddenSet> sets = {fs({"00", "111"}), fs({"11"}), fs({"111", "1001"}),
                                          fs({"101", "1100"})};
  for (const auto& f : sets) {
    const LabeledGraph g = sft_to_graph(f);
    const SubshiftSpec closed = SubshiftSpec::sofic(hereditary_closure_graph(g));
    const SubshiftSpec original = SubshiftSpec::sft(f);
    for (int n = 1; n <= 10; ++n)
      CHECK(language(closed, n) == hereditary_closure_language(language(original, n)));
  }
}

TEST_CASE("window-observed languages for generator kinds") {
  const SubshiftSpec spec = SubshiftSpec::bfree(BFreeSpec({2}, 6));
  CHECK(language(spec, 2) ==
        std::set<Block>{Block::from_string("01"), Block::from_string("10")});
}

TEST_CASE("essentialize prunes dead vertices") {
  LabeledGraph g;
  g.vertex_count = 3;
  g.add_edge(0, 0, 1);
  g.add_edge(0, 1, 0);  // 1 has no outgoing edge; 2 is isolated
  const LabeledGraph e = essentialize(g);
  CHECK(e.vertex_count == 1);
  CHECK(e.edges.size() == 1);
}

TEST_CASE("strongly connected components") {
  LabeledGraph g;
  g.vertex_count = 4;
  g.add_edge(0, 1, 0);
  g.add_edge(1, 0, 1);
  g.add_edge(1, 2, 0);
  g.add_edge(2, 3, 0);
  g.add_edge(3, 2, 1);
  const auto comps = strongly_connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{2, 3});
}
