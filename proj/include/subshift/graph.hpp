#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subshift/block.hpp"
#include "subshift/errors.hpp"
#include "subshift/forbidden.hpp"

namespace subshift {

/// A labeled graph (sofic presentation). Parallel edges are permitted; they
/// arise from the hereditary closure construction.
struct LabeledEdge {
  int from;
  int to;
  std::uint8_t label;  // 0 or 1

  friend bool operator==(const LabeledEdge& a, const LabeledEdge& b) {
    return a.from == b.from && a.to == b.to && a.label == b.label;
  }
};

struct LabeledGraph {
  int vertex_count = 0;
  std::vector<LabeledEdge> edges;
  /// Optional vertex annotations (the (m-1)-blocks of a de Bruijn
  /// presentation); purely informational.
  std::vector<std::string> vertex_names;

  void add_edge(int from, int to, int label) {
    if (from < 0 || from >= vertex_count || to < 0 || to >= vertex_count)
      throw input_error("edge endpoint out of range");
    if (label != 0 && label != 1) throw input_error("edge label must be 0 or 1");
    edges.push_back({from, to, static_cast<std::uint8_t>(label)});
  }

  std::vector<std::vector<int>> out_adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count);
    for (std::size_t e = 0; e < edges.size(); ++e) adj[edges[e].from].push_back(static_cast<int>(e));
    return adj;
  }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.vertex_count == b.vertex_count && a.edges == b.edges;
  }
};

/// Remove vertices without outgoing or incoming edges until stable. Keeps
/// exactly the part of the graph carrying bi-infinite paths; vertex order is
/// preserved. The result may be empty.
inline LabeledGraph essentialize(const LabeledGraph& g) {
  std::vector<char> alive(g.vertex_count, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> outdeg(g.vertex_count, 0), indeg(g.vertex_count, 0);
    for (const auto& e : g.edges)
      if (alive[e.from] && alive[e.to]) {
        ++outdeg[e.from];
        ++indeg[e.to];
      }
    for (int v = 0; v < g.vertex_count; ++v)
      if (alive[v] && (outdeg[v] == 0 || indeg[v] == 0)) {
        alive[v] = 0;
        changed = true;
      }
  }
  std::vector<int> remap(g.vertex_count, -1);
  LabeledGraph out;
  for (int v = 0; v < g.vertex_count; ++v)
    if (alive[v]) {
      remap[v] = out.vertex_count++;
      if (v < static_cast<int>(g.vertex_names.size()))
        out.vertex_names.push_back(g.vertex_names[v]);
    }
  for (const auto& e : g.edges)
    if (alive[e.from] && alive[e.to]) out.edges.push_back({remap[e.from], remap[e.to], e.label});
  return out;
}

/// Strongly connected components (iterative Tarjan), in a deterministic
/// order. Components are lists of vertex ids.
inline std::vector<std::vector<int>> strongly_connected_components(const LabeledGraph& g) {
  const int n = g.vertex_count;
  auto adj = g.out_adjacency();
  std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0), stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;

  struct Frame {
    int v;
    std::size_t edge_i;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge_i < adj[f.v].size()) {
        int w = g.edges[adj[f.v][f.edge_i++]].to;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == index[v]) {
          std::vector<int> comp;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp.push_back(w);
            if (w == v) break;
          }
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
      }
    }
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

/// Presentation of the hereditary closure: every 1-labeled edge gains a
/// parallel 0-labeled copy.
inline LabeledGraph hereditary_closure_graph(const LabeledGraph& g) {
  LabeledGraph out = g;
  for (const auto& e : g.edges)
    if (e.label == 1) out.edges.push_back({e.from, e.to, 0});
  return out;
}

/// Deterministic presentation of the same finite-word language, built by the
/// subset construction from the all-vertices state. Distinct words then
/// correspond to distinct paths from vertex 0, which makes word counting and
/// entropy well defined even for ambiguous labelings (hereditary closures).
struct DeterminizedGraph {
  LabeledGraph graph;      // transitions; vertex 0 is the start state
  std::vector<std::uint64_t> state_masks;
};

inline DeterminizedGraph determinize(const LabeledGraph& g) {
  if (g.vertex_count == 0) throw empty_subshift_error("determinize: empty graph");
  if (g.vertex_count > 64) throw enumeration_cap_error("determinize: more than 64 vertices");
  // succ[v][b] = bitmask of b-successors of v
  std::vector<std::array<std::uint64_t, 2>> succ(g.vertex_count, {0, 0});
  for (const auto& e : g.edges) succ[e.from][e.label] |= std::uint64_t{1} << e.to;

  const std::uint64_t start =
      g.vertex_count == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.vertex_count) - 1);
  std::map<std::uint64_t, int> id;
  DeterminizedGraph out;
  out.state_masks.push_back(start);
  id[start] = 0;
  out.graph.vertex_count = 1;
  for (std::size_t i = 0; i < out.state_masks.size(); ++i) {
    const std::uint64_t s = out.state_masks[i];
    for (int b = 0; b < 2; ++b) {
      std::uint64_t t = 0;
      for (std::uint64_t rest = s; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        t |= succ[v][b];
      }
      if (t == 0) continue;
      auto [it, inserted] = id.emplace(t, out.graph.vertex_count);
      if (inserted) {
        out.state_masks.push_back(t);
        ++out.graph.vertex_count;
      }
      out.graph.add_edge(static_cast<int>(i), it->second, b);
    }
  }
  return out;
}

namespace detail {
inline std::vector<Block> admissible_blocks_desc(const ForbiddenSet& f, int len) {
  // Descending lexicographic order, matching the layout of the presentations
  // this library reproduces (e.g. vertices 11, 10, 01 for F = {00, 111}).
  std::vector<Block> out;
  for (std::int64_t b = (std::int64_t{1} << len) - 1; b >= 0; --b) {
    Block w(static_cast<std::uint64_t>(b), len);
    if (!f.forbids(w)) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return b < a; });
  return out;
}
}  // namespace detail

/// Higher-block (de Bruijn) presentation of the SFT X_F: vertices are the
/// admissible (m-1)-blocks in descending lexicographic order, an edge
/// u -> suffix(u.b) labeled b exists iff the m-block u.b avoids F. The
/// result is essentialized; an empty result raises empty_subshift_error.
inline LabeledGraph sft_to_graph(const ForbiddenSet& f) {
  LabeledGraph g;
  if (f.empty()) {
    g.vertex_count = 1;
    g.vertex_names = {"*"};
    g.add_edge(0, 0, 0);
    g.add_edge(0, 0, 1);
    return g;
  }
  const int m = f.max_len();
  if (m == 1) {
    // Forbidden single symbols restrict the alphabet of a one-vertex loop.
    g.vertex_count = 1;
    g.vertex_names = {"*"};
    for (int b = 0; b < 2; ++b)
      if (!f.forbids(Block(static_cast<std::uint64_t>(b), 1))) g.add_edge(0, 0, b);
    if (g.edges.empty()) throw empty_subshift_error("sft_to_graph: all symbols forbidden");
    return g;
  }
  if (m - 1 > 24) throw enumeration_cap_error("sft_to_graph: forbidden words too long");
  const auto vertices = detail::admissible_blocks_desc(f, m - 1);
  if (vertices.empty())
    throw empty_subshift_error("sft_to_graph: empty language at length " + std::to_string(m - 1));
  std::map<Block, int> vid;
  for (std::size_t i = 0; i < vertices.size(); ++i) vid[vertices[i]] = static_cast<int>(i);
  g.vertex_count = static_cast<int>(vertices.size());
  for (const Block& v : vertices) g.vertex_names.push_back(v.to_string());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int b = 0; b < 2; ++b) {
      Block w = vertices[i].concat(Block(static_cast<std::uint64_t>(b), 1));
      if (f.forbids(w)) continue;
      Block suffix = w.subword(1, m - 1);
      auto it = vid.find(suffix);
      if (it == vid.end()) continue;  // suffix inadmissible; w was already rejected
      g.add_edge(static_cast<int>(i), it->second, b);
    }
  }
  LabeledGraph ess = essentialize(g);
  if (ess.vertex_count == 0)
    throw empty_subshift_error("sft_to_graph: no bi-infinite admissible sequence");
  return ess;
}

/// Orbit presentation of the periodic point with the given pattern: a k-cycle
/// reading the pattern's symbols.
inline LabeledGraph periodic_orbit_graph(const Block& pattern) {
  LabeledGraph g;
  const int k = pattern.length();
  g.vertex_count = k;
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k, pattern.bit(i));
  return g;
}

inline LabeledGraph full_shift_graph() {
  LabeledGraph g;
  g.vertex_count = 1;
  g.add_edge(0, 0, 0);
  g.add_edge(0, 0, 1);
  return g;
}

}  // namespace subshift
