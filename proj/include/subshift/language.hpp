#pragma once

#include <cstdint>
#include <set>
#include <unordered_set>
#include <vector>

#include "subshift/bitseq.hpp"
#include "subshift/block.hpp"
#include "subshift/errors.hpp"
#include "subshift/graph.hpp"
#include "subshift/spec.hpp"

namespace subshift {

/// Enumeration guard; languages grow like 2^(hn).
struct EnumLimits {
  int max_n = 24;
};

namespace detail {

inline void check_cap(int n, const EnumLimits& limits, const char* who) {
  if (n < 1) throw input_error(std::string(who) + ": length must be >= 1");
  if (n > limits.max_n)
    throw enumeration_cap_error(std::string(who) + ": length " + std::to_string(n) +
                                " exceeds enumeration cap " + std::to_string(limits.max_n));
}

/// All words of length n readable along paths of an essential labeled graph,
/// via the subset construction (one DFA path per distinct word).
inline std::set<Block> graph_language(const LabeledGraph& g, int n) {
  const DeterminizedGraph dfa = determinize(g);
  std::vector<std::array<int, 2>> next(dfa.graph.vertex_count, {-1, -1});
  for (const auto& e : dfa.graph.edges) next[e.from][e.label] = e.to;
  std::set<Block> out;
  // Depth-first over DFA paths from the start state.
  struct Frame {
    int state;
    int depth;
    std::uint64_t word;
  };
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.depth == n) {
      out.insert(Block(f.word, n));
      continue;
    }
    for (int b = 1; b >= 0; --b) {
      int t = next[f.state][b];
      if (t >= 0)
        stack.push_back(
            {t, f.depth + 1, f.word | (static_cast<std::uint64_t>(b) << f.depth)});
    }
  }
  return out;
}

/// |L_n| for n = 1..n_max by dynamic programming over the determinized
/// presentation (counts distinct words, not paths).
inline std::vector<std::uint64_t> graph_language_counts(const LabeledGraph& g, int n_max) {
  const DeterminizedGraph dfa = determinize(g);
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> cur(dfa.graph.vertex_count, 0), nxt;
  cur[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    nxt.assign(dfa.graph.vertex_count, 0);
    for (const auto& e : dfa.graph.edges) nxt[e.to] += cur[e.from];
    std::uint64_t total = 0;
    for (std::uint64_t c : nxt) total += c;
    counts.push_back(total);
    cur.swap(nxt);
  }
  return counts;
}

inline std::set<Block> window_language(const BitSeq& x, int n) {
  if (static_cast<std::size_t>(n) > x.size())
    throw input_error("window shorter than requested block length");
  std::set<Block> out;
  std::uint64_t w = 0;
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    w >>= 1;
    if (x[i]) w |= top;
    if (i + 1 >= static_cast<std::size_t>(n)) out.insert(Block(w, n));
  }
  return out;
}

}  // namespace detail

/// L_n(X) for presentations; the window-observed language (a subset of
/// L_n(X)) for generator kinds.
inline std::set<Block> language(const SubshiftSpec& spec, int n, const EnumLimits& limits = {}) {
  detail::check_cap(n, limits, "language");
  switch (spec.kind) {
    case SpecKind::full: {
      std::set<Block> out;
      for (const Block& b : all_blocks(n, limits.max_n)) out.insert(b);
      return out;
    }
    case SpecKind::sft:
    case SpecKind::sofic:
      return detail::graph_language(presentation_graph(spec), n);
    case SpecKind::periodic: {
      const Block& p = std::get<PeriodicSpec>(spec.payload).pattern;
      std::set<Block> out;
      const int k = p.length();
      for (int j = 0; j < k; ++j) {
        std::uint64_t bits = 0;
        for (int i = 0; i < n; ++i)
          if (p.bit((j + i) % k)) bits |= std::uint64_t{1} << i;
        out.insert(Block(bits, n));
      }
      return out;
    }
    case SpecKind::bfree:
    case SpecKind::sturmian:
      return detail::window_language(generated_window(spec), n);
  }
  throw input_error("language: unknown spec kind");
}

/// |L_n| for n = 1..n_max (observed-window counts for generator kinds).
inline std::vector<std::uint64_t> language_counts(const SubshiftSpec& spec, int n_max,
                                                  const EnumLimits& limits = {}) {
  detail::check_cap(n_max, limits, "language_counts");
  switch (spec.kind) {
    case SpecKind::full: {
      std::vector<std::uint64_t> out;
      for (int n = 1; n <= n_max; ++n) out.push_back(std::uint64_t{1} << n);
      return out;
    }
    case SpecKind::sft:
    case SpecKind::sofic:
    case SpecKind::periodic:
      return detail::graph_language_counts(presentation_graph(spec), n_max);
    case SpecKind::bfree:
    case SpecKind::sturmian: {
      const BitSeq x = generated_window(spec);
      std::vector<std::uint64_t> out;
      for (int n = 1; n <= n_max; ++n) {
        std::unordered_set<std::uint64_t> seen;
        std::uint64_t w = 0;
        const std::uint64_t top = std::uint64_t{1} << (n - 1);
        for (std::size_t i = 0; i < x.size(); ++i) {
          w >>= 1;
          if (x[i]) w |= top;
          if (i + 1 >= static_cast<std::size_t>(n)) seen.insert(w);
        }
        out.push_back(seen.size());
      }
      return out;
    }
  }
  throw input_error("language_counts: unknown spec kind");
}

/// Downward closure {W' : W' <= W for some W in L}.
inline std::set<Block> hereditary_closure_language(const std::set<Block>& language) {
  std::set<Block> out;
  int len = -1;
  for (const Block& w : language) {
    if (len == -1) len = w.length();
    if (w.length() != len) throw input_error("hereditary_closure_language: mixed lengths");
    for_each_dominated(w, [&](const Block& below) { out.insert(below); });
  }
  return out;
}

}  // namespace subshift
