#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "subshift/errors.hpp"
#include "subshift/graph.hpp"
#include "subshift/language.hpp"
#include "subshift/spec.hpp"

namespace subshift {

using Rat = boost::rational<long long>;

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Square matrix of nonnegative edge multiplicities.
struct AdjacencyMatrix {
  int dim = 0;
  std::vector<std::vector<std::uint64_t>> entries;

  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(int d) : dim(d), entries(d, std::vector<std::uint64_t>(d, 0)) {
    if (d < 1) throw input_error("AdjacencyMatrix: dimension must be positive");
  }
  explicit AdjacencyMatrix(std::vector<std::vector<std::uint64_t>> rows)
      : dim(static_cast<int>(rows.size())), entries(std::move(rows)) {
    if (dim < 1) throw input_error("AdjacencyMatrix: dimension must be positive");
    for (const auto& r : entries)
      if (static_cast<int>(r.size()) != dim) throw input_error("AdjacencyMatrix: not square");
  }

  static AdjacencyMatrix from_graph(const LabeledGraph& g) {
    AdjacencyMatrix a(g.vertex_count);
    for (const auto& e : g.edges) ++a.entries[e.from][e.to];
    return a;
  }
};

namespace detail {

inline std::vector<std::vector<char>> bool_square(const std::vector<std::vector<char>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<char>> out(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (m[i][k])
        for (int j = 0; j < n; ++j)
          if (m[k][j]) out[i][j] = 1;
  return out;
}

inline bool strongly_connected(const AdjacencyMatrix& a) {
  LabeledGraph g;
  g.vertex_count = a.dim;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      if (a.entries[i][j]) g.add_edge(i, j, 0);
  auto comps = strongly_connected_components(g);
  return comps.size() == 1 && static_cast<int>(comps[0].size()) == a.dim && !g.edges.empty();
}

}  // namespace detail

/// Primitivity via the Wielandt bound: A is primitive iff A^k > 0 for some
/// k <= (n-1)^2 + 1. Checked by repeated boolean squaring (a power of a
/// primitive matrix stays positive once positive, so checking a single
/// power 2^j >= the bound suffices).
inline bool is_primitive(const AdjacencyMatrix& a) {
  if (a.dim == 1) return a.entries[0][0] > 0;
  std::vector<std::vector<char>> m(a.dim, std::vector<char>(a.dim, 0));
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) m[i][j] = a.entries[i][j] ? 1 : 0;
  const std::int64_t wielandt =
      static_cast<std::int64_t>(a.dim - 1) * (a.dim - 1) + 1;
  std::int64_t power = 1;
  while (power < wielandt) {
    m = detail::bool_square(m);
    power *= 2;
  }
  for (const auto& row : m)
    for (char c : row)
      if (!c) return false;
  return true;
}

/// Detail for the "not primitive" error message: reducible vs periodic.
inline std::string primitivity_failure(const AdjacencyMatrix& a) {
  if (!detail::strongly_connected(a)) return "reducible (not strongly connected)";
  return "irreducible but periodic";
}

struct PowerIterationResult {
  double lambda = 0.0;
  std::int64_t iterations = 0;
  std::vector<double> eigenvector;
};

/// Spectral radius of a primitive nonnegative matrix by power iteration.
/// Start vector all-ones; convergence when both the eigenvalue increment and
/// the residual ||Av - lambda v||_inf fall below tol (relative).
inline PowerIterationResult pf_eigenvalue(const AdjacencyMatrix& a, double tol = 1e-12,
                                          std::int64_t max_iterations = 1000000) {
  if (tol <= 0) throw input_error("pf_eigenvalue: tol must be positive");
  if (!is_primitive(a))
    throw not_primitive_error("pf_eigenvalue: matrix is not primitive: " +
                              primitivity_failure(a));
  const int n = a.dim;
  std::vector<double> v(n, 1.0), av(n, 0.0);
  double lambda = 0.0, prev = -1.0;
  std::int64_t it = 0;
  while (it < max_iterations) {
    ++it;
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += static_cast<double>(a.entries[i][j]) * v[j];
      av[i] = s;
      norm = std::max(norm, std::abs(s));
    }
    if (norm == 0.0) throw not_primitive_error("pf_eigenvalue: vector vanished");
    lambda = norm;  // refined below via the Rayleigh quotient
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
      num += av[i] * v[i];
      den += v[i] * v[i];
    }
    lambda = num / den;
    for (int i = 0; i < n; ++i) v[i] = av[i] / norm;
    if (prev >= 0 && std::abs(lambda - prev) <= tol * std::max(1.0, lambda)) {
      // Residual check on the normalized iterate.
      double resid = 0.0, vmax = 0.0;
      for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += static_cast<double>(a.entries[i][j]) * v[j];
        resid = std::max(resid, std::abs(s - lambda * v[i]));
        vmax = std::max(vmax, std::abs(v[i]));
      }
      if (resid <= tol * std::max(1.0, vmax) * std::max(1.0, lambda) * 10) break;
    }
    prev = lambda;
  }
  return {lambda, it, v};
}

namespace detail {

inline AdjacencyMatrix submatrix(const AdjacencyMatrix& a, const std::vector<int>& idx) {
  AdjacencyMatrix out(static_cast<int>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      out.entries[i][j] = a.entries[idx[i]][idx[j]];
  return out;
}

inline AdjacencyMatrix matrix_power(const AdjacencyMatrix& a, int p) {
  // Plain repeated multiply; p is a graph period, tiny in practice.
  AdjacencyMatrix r = a;
  for (int q = 1; q < p; ++q) {
    AdjacencyMatrix nxt(a.dim);
    for (int i = 0; i < a.dim; ++i)
      for (int k = 0; k < a.dim; ++k)
        if (r.entries[i][k])
          for (int j = 0; j < a.dim; ++j)
            nxt.entries[i][j] += r.entries[i][k] * a.entries[k][j];
    r = std::move(nxt);
  }
  return r;
}

/// Period (gcd of cycle lengths) of a strongly connected graph given as a
/// matrix, via BFS levels.
inline int graph_period(const AdjacencyMatrix& a) {
  const int n = a.dim;
  std::vector<int> level(n, -1);
  std::vector<int> queue{0};
  level[0] = 0;
  int g = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (int v = 0; v < n; ++v)
      if (a.entries[u][v]) {
        if (level[v] == -1) {
          level[v] = level[u] + 1;
          queue.push_back(v);
        } else {
          g = std::gcd(g, std::abs(level[u] + 1 - level[v]));
        }
      }
  }
  return g == 0 ? 1 : g;
}

/// Power iteration without the primitivity gate (used on per-SCC matrices
/// that are already known irreducible and made aperiodic by powering).
inline double spectral_radius_primitive_like(const AdjacencyMatrix& a, double tol) {
  const int n = a.dim;
  std::vector<double> v(n, 1.0), av(n, 0.0);
  double lambda = 0.0, prev = -1.0;
  for (std::int64_t it = 0; it < 1000000; ++it) {
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += static_cast<double>(a.entries[i][j]) * v[j];
      av[i] = s;
      norm = std::max(norm, std::abs(s));
    }
    if (norm == 0.0) return 0.0;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
      num += av[i] * v[i];
      den += v[i] * v[i];
    }
    lambda = num / den;
    for (int i = 0; i < n; ++i) v[i] = av[i] / norm;
    if (prev >= 0 && std::abs(lambda - prev) <= tol * std::max(1.0, lambda)) break;
    prev = lambda;
  }
  return lambda;
}

}  // namespace detail

/// Spectral radius of an arbitrary nonnegative integer matrix: the maximum
/// Perron root over strongly connected components (periodic components are
/// handled by powering to their period).
inline double spectral_radius(const AdjacencyMatrix& a, double tol = 1e-12) {
  LabeledGraph g;
  g.vertex_count = a.dim;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      if (a.entries[i][j]) g.add_edge(i, j, 0);
  double best = 0.0;
  for (const auto& comp : strongly_connected_components(g)) {
    if (comp.size() == 1 && a.entries[comp[0]][comp[0]] == 0) continue;
    AdjacencyMatrix sub = detail::submatrix(a, comp);
    if (is_primitive(sub)) {
      best = std::max(best, pf_eigenvalue(sub, tol).lambda);
    } else {
      const int p = detail::graph_period(sub);
      const double rho_p = detail::spectral_radius_primitive_like(detail::matrix_power(sub, p), tol);
      best = std::max(best, std::pow(rho_p, 1.0 / p));
    }
  }
  return best;
}

/// log2 of the spectral radius of the determinized presentation: the exact
/// topological entropy of the presented sofic shift (word counts equal path
/// counts only after determinization).
inline double topological_entropy_exact(const LabeledGraph& g, double tol = 1e-12) {
  LabeledGraph ess = essentialize(g);
  if (ess.vertex_count == 0) throw empty_subshift_error("topological_entropy_exact: empty graph");
  const DeterminizedGraph dfa = determinize(ess);
  const double rho = spectral_radius(AdjacencyMatrix::from_graph(dfa.graph), tol);
  if (rho <= 0) throw empty_subshift_error("topological_entropy_exact: no cycles");
  return std::log2(rho);
}

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

struct EntropySeries {
  struct Entry {
    int n;
    std::uint64_t count;  // |L_n|
    double value;         // (1/n) log2 |L_n|
  };
  std::vector<Entry> entries;
};

inline EntropySeries entropy_series(const SubshiftSpec& spec, int n_max,
                                    const EnumLimits& limits = {}) {
  EntropySeries s;
  const auto counts = language_counts(spec, n_max, limits);
  for (int n = 1; n <= n_max; ++n) {
    const std::uint64_t c = counts[static_cast<std::size_t>(n - 1)];
    if (c == 0) throw empty_subshift_error("entropy_series: empty language at length " +
                                           std::to_string(n));
    s.entries.push_back({n, c, std::log2(static_cast<double>(c)) / n});
  }
  return s;
}

struct DensitySeries {
  struct Entry {
    int n;
    int max_ones;
    Rat value;  // max_ones / n
    Block witness;
  };
  std::vector<Entry> entries;
};

/// max_{W in L_n} #1(W) / n via dynamic programming over the presentation
/// (with a witness path). For generator kinds the maximum runs over observed
/// windows instead.
inline DensitySeries ones_density_series(const SubshiftSpec& spec, int n_max,
                                         const EnumLimits& limits = {}) {
  detail::check_cap(n_max, limits, "ones_density_series");
  DensitySeries out;
  if (spec.has_graph_presentation()) {
    const LabeledGraph g = presentation_graph(spec);
    const int V = g.vertex_count;
    constexpr int kNeg = std::numeric_limits<int>::min() / 2;
    std::vector<int> cur(V, 0), nxt;
    // backtracking tables: per step, per vertex, (edge index into g.edges)
    std::vector<std::vector<int>> back;
    for (int n = 1; n <= n_max; ++n) {
      nxt.assign(V, kNeg);
      std::vector<int> choice(V, -1);
      for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        const auto& e = g.edges[ei];
        if (cur[e.from] == kNeg) continue;
        const int cand = cur[e.from] + e.label;
        if (cand > nxt[e.to]) {
          nxt[e.to] = cand;
          choice[e.to] = static_cast<int>(ei);
        }
      }
      back.push_back(choice);
      int best_v = 0;
      for (int v = 1; v < V; ++v)
        if (nxt[v] > nxt[best_v]) best_v = v;
      // reconstruct the witness word
      std::uint64_t bits = 0;
      int v = best_v;
      for (int k = n - 1; k >= 0; --k) {
        const auto& e = g.edges[back[static_cast<std::size_t>(k)][v]];
        if (e.label) bits |= std::uint64_t{1} << k;
        v = e.from;
      }
      out.entries.push_back({n, nxt[best_v], Rat(nxt[best_v], n), Block(bits, n)});
      cur = nxt;
    }
    return out;
  }
  const BitSeq x = generated_window(spec);
  for (int n = 1; n <= n_max; ++n) {
    if (static_cast<std::size_t>(n) > x.size())
      throw input_error("ones_density_series: window shorter than n");
    int best = -1;
    std::size_t best_i = 0;
    int ones = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      ones += x[i] ? 1 : 0;
      if (i >= static_cast<std::size_t>(n)) ones -= x[i - n] ? 1 : 0;
      if (i + 1 >= static_cast<std::size_t>(n) && ones > best) {
        best = ones;
        best_i = i + 1 - n;
      }
    }
    out.entries.push_back({n, best, Rat(best, n), window_block(x, best_i, n)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Maximum mean cycle (Karp), exact rational
// ---------------------------------------------------------------------------

/// Exact max over directed cycles of (sum of labels) / (length): the density
/// d = D of the presented sofic shift. Realized by Karp's dynamic program on
/// each strongly connected component; cycles live inside components, so the
/// global maximum is the max over components.
inline Rat max_mean_cycle(const LabeledGraph& g_in) {
  const LabeledGraph g = essentialize(g_in);
  if (g.vertex_count == 0)
    throw no_cycle_error("max_mean_cycle: graph has no cycle, no invariant measure");
  bool found = false;
  Rat best(0);
  for (const auto& comp : strongly_connected_components(g)) {
    std::vector<int> id(g.vertex_count, -1);
    for (std::size_t i = 0; i < comp.size(); ++i) id[comp[i]] = static_cast<int>(i);
    std::vector<LabeledEdge> edges;
    for (const auto& e : g.edges)
      if (id[e.from] >= 0 && id[e.to] >= 0)
        edges.push_back({id[e.from], id[e.to], e.label});
    if (edges.empty()) continue;  // single vertex without a self-loop
    const int m = static_cast<int>(comp.size());
    constexpr long long kNeg = std::numeric_limits<long long>::min() / 4;
    // F[k][v] = max label-sum over walks of exactly k edges from vertex 0.
    std::vector<std::vector<long long>> f(m + 1, std::vector<long long>(m, kNeg));
    f[0][0] = 0;
    for (int k = 1; k <= m; ++k)
      for (const auto& e : edges)
        if (f[k - 1][e.from] > kNeg)
          f[k][e.to] = std::max(f[k][e.to], f[k - 1][e.from] + e.label);
    for (int v = 0; v < m; ++v) {
      if (f[m][v] <= kNeg) continue;
      bool have = false;
      Rat worst(0);
      for (int k = 0; k < m; ++k) {
        if (f[k][v] <= kNeg) continue;
        Rat r(f[m][v] - f[k][v], m - k);
        if (!have || r < worst) {
          worst = r;
          have = true;
        }
      }
      if (have && (!found || worst > best)) {
        best = worst;
        found = true;
      }
    }
  }
  if (!found) throw no_cycle_error("max_mean_cycle: graph has no cycle, no invariant measure");
  return best;
}

inline Rat max_mean_cycle(const SubshiftSpec& spec) {
  return max_mean_cycle(presentation_graph(spec));
}

// ---------------------------------------------------------------------------
// Shannon entropy and the h <= H(d) bound
// ---------------------------------------------------------------------------

/// H(p) in bits, with the 0 log 0 = 0 convention.
inline double shannon_entropy(const std::vector<double>& p) {
  double sum = 0.0;
  for (double v : p) {
    if (v < 0) throw input_error("shannon_entropy: negative entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw input_error("shannon_entropy: entries sum to " + std::to_string(sum) + ", not 1");
  double h = 0.0;
  for (double v : p)
    if (v > 0) h -= v * std::log2(v);
  return h;
}

inline double binary_entropy(double p) {
  if (p < 0 || p > 1) throw input_error("binary_entropy: p outside [0,1]");
  double h = 0.0;
  if (p > 0) h -= p * std::log2(p);
  if (p < 1) h -= (1 - p) * std::log2(1 - p);
  return h;
}

struct EntropyDensityVerdict {
  double h;
  double d;
  double bound;  // H(d)
  double slack;  // H(d) - h
  bool holds;
};

/// Checks h <= H(d), valid for d <= 1/2.
inline EntropyDensityVerdict entropy_density_bound_check(double h, double d, double tol = 1e-9) {
  if (h < 0) throw input_error("entropy_density_bound_check: h must be >= 0");
  if (d < 0 || d > 0.5)
    throw input_error("entropy_density_bound_check: bound not applicable, needs 0 <= d <= 1/2");
  const double bound = binary_entropy(d);
  return {h, d, bound, bound - h, h <= bound + tol};
}

}  // namespace subshift
