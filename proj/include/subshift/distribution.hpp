#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "subshift/bitseq.hpp"
#include "subshift/block.hpp"
#include "subshift/errors.hpp"
#include "subshift/spectral.hpp"

namespace subshift {

enum class Provenance { empirical, periodic, explicit_ };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::empirical: return "empirical";
    case Provenance::periodic: return "periodic";
    case Provenance::explicit_: return "explicit";
  }
  return "?";
}

namespace detail {
inline double prob_to_double(double p) { return p; }
inline double prob_to_double(const Rat& p) { return to_double(p); }

inline double half_power(double p, int ones) { return std::ldexp(p, -ones); }
inline Rat half_power(const Rat& p, int ones) {
  if (ones > 62) throw enumeration_cap_error("rational 2^-ones underflows int64");
  return p / Rat(std::int64_t{1} << ones);
}

template <class P>
P zero_prob() {
  return P(0);
}
}  // namespace detail

/// A probability assignment on length-n blocks. The support map stores only
/// positive entries, ordered lexicographically (deterministic iteration and
/// tie-breaks). P is double for empirical estimates, Rat for exact periodic
/// and convolution arithmetic.
template <class P>
struct BlockDist {
  int length = 0;
  std::map<Block, P> probs;
  Provenance provenance = Provenance::explicit_;

  BlockDist() = default;
  BlockDist(int n, std::map<Block, P> support, Provenance prov)
      : length(n), probs(std::move(support)), provenance(prov) {
    validate();
  }

  void validate() const {
    if (length < 1) throw input_error("BlockDist: length must be >= 1");
    P sum = detail::zero_prob<P>();
    for (const auto& [w, p] : probs) {
      if (w.length() != length) throw input_error("BlockDist: block of wrong length in support");
      if (p < detail::zero_prob<P>()) throw input_error("BlockDist: negative probability");
      sum = sum + p;
    }
    if (std::abs(detail::prob_to_double(sum) - 1.0) > 1e-12)
      throw input_error("BlockDist: probabilities sum to " +
                        std::to_string(detail::prob_to_double(sum)) + ", not 1");
  }

  P prob(const Block& w) const {
    auto it = probs.find(w);
    return it == probs.end() ? detail::zero_prob<P>() : it->second;
  }
};

using BlockDistribution = BlockDist<double>;
using RationalBlockDistribution = BlockDist<Rat>;

/// Sliding-window frequencies of the length-n factors of x. A block is
/// positive-measure iff it occurs at least once.
inline BlockDistribution empirical_measure(const BitSeq& x, int n) {
  if (n < 1 || n > Block::max_length) throw input_error("empirical_measure: bad block length");
  if (x.size() < static_cast<std::size_t>(n))
    throw input_error("empirical_measure: window shorter than block length");
  std::unordered_map<std::uint64_t, std::int64_t> counts;
  std::uint64_t w = 0;
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    w >>= 1;
    if (x[i]) w |= top;
    if (i + 1 >= static_cast<std::size_t>(n)) ++counts[w];
  }
  const double total = static_cast<double>(x.size() - n + 1);
  std::map<Block, double> probs;
  for (const auto& [bits, c] : counts) probs.emplace(Block(bits, n), c / total);
  return {n, std::move(probs), Provenance::empirical};
}

/// Exact distribution of the orbit of a periodic point: the k cyclic
/// length-n windows of the pattern, each of weight 1/k (duplicates merged).
template <class P = Rat>
BlockDist<P> periodic_measure(const Block& pattern, int n) {
  if (n < 1 || n > Block::max_length) throw input_error("periodic_measure: bad block length");
  const int k = pattern.length();
  std::map<Block, P> probs;
  const P share = P(1) / P(k);
  for (int j = 0; j < k; ++j) {
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i)
      if (pattern.bit((j + i) % k)) bits |= std::uint64_t{1} << i;
    auto [it, inserted] = probs.emplace(Block(bits, n), share);
    if (!inserted) it->second = it->second + share;
  }
  return {n, std::move(probs), Provenance::periodic};
}

/// Exact Bernoulli(1/2, 1/2) product distribution on length-n blocks.
template <class P = double>
BlockDist<P> bernoulli_half(int n, int cap = 20) {
  if (n < 1) throw input_error("bernoulli_half: length must be >= 1");
  if (n > cap) throw enumeration_cap_error("bernoulli_half: length exceeds cap");
  std::map<Block, P> probs;
  const P share = detail::half_power(P(1), n);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) probs.emplace(Block(b, n), share);
  return {n, std::move(probs), Provenance::explicit_};
}

/// The multiplicative convolution kappa = nu * B_{1/2,1/2} at block level:
/// kappa(C) = sum over support blocks C' >= C of nu(C') 2^{-#1 C'}. Mass is
/// pushed downward from each support block to the 2^{#1 C'} blocks below it,
/// which is far cheaper than scanning all 2^n targets when nu is sparse.
template <class P>
BlockDist<P> convolve_half(const BlockDist<P>& nu) {
  std::map<Block, P> out;
  for (const auto& [w, p] : nu.probs) {
    const P share = detail::half_power(p, w.ones_count());
    for_each_dominated(w, [&](const Block& below) {
      auto [it, inserted] = out.emplace(below, share);
      if (!inserted) it->second = it->second + share;
    });
  }
  return {nu.length, std::move(out), Provenance::explicit_};
}

/// A positive-measure block with the most ones; ties resolved to the
/// lexicographically smallest witness.
template <class P>
Block ones_maximal_block(const BlockDist<P>& nu) {
  if (nu.probs.empty()) throw input_error("ones_maximal_block: empty support");
  const Block* best = nullptr;
  int best_ones = -1;
  for (const auto& [w, p] : nu.probs)
    if (w.ones_count() > best_ones) {  // map is in lex order; first hit is lex-smallest
      best = &w;
      best_ones = w.ones_count();
    }
  return *best;
}

/// Checks kappa(C) = nu(C) 2^{-#1 C} for every nu-ones-maximal block and
/// every coordinatewise-maximal block of the support.
struct FormulaCheck {
  bool holds = true;
  double worst_abs_deviation = 0.0;
  std::vector<Block> checked;
};

template <class P>
FormulaCheck maximal_block_formula_check(const BlockDist<P>& nu, const BlockDist<P>& kappa,
                                         double tol = 1e-12) {
  FormulaCheck result;
  const int max_ones = ones_maximal_block(nu).ones_count();
  for (const auto& [w, p] : nu.probs) {
    bool ones_maximal = w.ones_count() == max_ones;
    bool coord_maximal = true;
    for (const auto& [other, q] : nu.probs)
      if (other != w && other.dominates(w)) {
        coord_maximal = false;
        break;
      }
    if (!ones_maximal && !coord_maximal) continue;
    result.checked.push_back(w);
    const double expected = detail::prob_to_double(detail::half_power(p, w.ones_count()));
    const double got = detail::prob_to_double(kappa.prob(w));
    const double dev = std::abs(expected - got);
    result.worst_abs_deviation = std::max(result.worst_abs_deviation, dev);
    if (dev > tol) result.holds = false;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Series of distributions from one source
// ---------------------------------------------------------------------------

template <class P>
struct MeasureSeries {
  std::vector<BlockDist<P>> dists;  // dists[i] has length i+1

  const BlockDist<P>& at(int n) const {
    if (n < 1 || n > static_cast<int>(dists.size()))
      throw input_error("MeasureSeries: no distribution at length " + std::to_string(n));
    return dists[static_cast<std::size_t>(n - 1)];
  }
  int n_max() const { return static_cast<int>(dists.size()); }
};

inline MeasureSeries<double> empirical_series(const BitSeq& x, int n_max) {
  MeasureSeries<double> s;
  for (int n = 1; n <= n_max; ++n) s.dists.push_back(empirical_measure(x, n));
  return s;
}

template <class P = Rat>
MeasureSeries<P> periodic_series(const Block& pattern, int n_max) {
  MeasureSeries<P> s;
  for (int n = 1; n <= n_max; ++n) s.dists.push_back(periodic_measure<P>(pattern, n));
  return s;
}

template <class P>
MeasureSeries<P> convolve_series(const MeasureSeries<P>& nu) {
  MeasureSeries<P> s;
  for (const auto& d : nu.dists) s.dists.push_back(convolve_half(d));
  return s;
}

/// d_nu = nu([1]), read off the length-1 distribution.
template <class P>
P d_nu(const MeasureSeries<P>& series) {
  return series.at(1).prob(Block::ones(1));
}

struct MeasureDensityEntry {
  int n;
  int max_ones;
  Rat value;  // max_ones / n
  Block witness;
};

/// Per-n maxima of #1(W)/n over positive-measure blocks (the D_nu series).
template <class P>
std::vector<MeasureDensityEntry> D_nu_series(const MeasureSeries<P>& series) {
  std::vector<MeasureDensityEntry> out;
  for (const auto& d : series.dists) {
    const Block w = ones_maximal_block(d);
    out.push_back({d.length, w.ones_count(), Rat(w.ones_count(), d.length), w});
  }
  return out;
}

struct MeasureEntropyEntry {
  int n;
  double value;  // (1/n) H(length-n distribution)
};

template <class P>
std::vector<MeasureEntropyEntry> measure_entropy_series(const MeasureSeries<P>& series) {
  std::vector<MeasureEntropyEntry> out;
  for (const auto& d : series.dists) {
    double h = 0.0;
    for (const auto& [w, p] : d.probs) {
      const double v = detail::prob_to_double(p);
      if (v > 0) h -= v * std::log2(v);
    }
    out.push_back({d.length, h / d.length});
  }
  return out;
}

struct AtomBoundEntry {
  int n;
  double max_prob;
  Block witness;
};

/// Per-n maximum block probability. A positive floor is numeric evidence of
/// an atom; decay to zero is evidence of non-atomicity.
template <class P>
std::vector<AtomBoundEntry> atom_bound_series(const MeasureSeries<P>& series) {
  std::vector<AtomBoundEntry> out;
  for (const auto& d : series.dists) {
    const Block* best = nullptr;
    double best_p = -1.0;
    for (const auto& [w, p] : d.probs) {
      const double v = detail::prob_to_double(p);
      if (v > best_p) {
        best_p = v;
        best = &w;
      }
    }
    if (!best) throw input_error("atom_bound_series: empty support");
    out.push_back({d.length, best_p, *best});
  }
  return out;
}

/// Monotonicity of a convolution: W1 <= W2 implies kappa(W1) >= kappa(W2).
/// Checked over every comparable pair at the distribution's length.
struct MonotonicityVerdict {
  bool holds = true;
  double worst_violation = 0.0;
  Block lower = Block::zeros(1), upper = Block::zeros(1);
};

template <class P>
MonotonicityVerdict monotonicity_check(const BlockDist<P>& kappa, double tol = 1e-12) {
  MonotonicityVerdict v;
  for (const auto& [w2, p2] : kappa.probs) {
    const double upper_p = detail::prob_to_double(p2);
    for_each_dominated(w2, [&](const Block& w1) {
      const double lower_p = detail::prob_to_double(kappa.prob(w1));
      const double violation = upper_p - lower_p;
      if (violation > tol && violation > v.worst_violation) {
        v.holds = false;
        v.worst_violation = violation;
        v.lower = w1;
        v.upper = w2;
      }
    });
  }
  return v;
}

/// One-symbol marginals of a length-(n+1) distribution; exact sources must
/// reproduce the length-n distribution on the nose (shift invariance at
/// finite observation), empirical sources within window edge effects.
template <class P>
BlockDist<P> marginal_drop_last(const BlockDist<P>& d) {
  if (d.length < 2) throw input_error("marginal: need length >= 2");
  std::map<Block, P> out;
  for (const auto& [w, p] : d.probs) {
    const Block prefix = w.subword(0, d.length - 2);
    auto [it, inserted] = out.emplace(prefix, p);
    if (!inserted) it->second = it->second + p;
  }
  return {d.length - 1, std::move(out), d.provenance};
}

template <class P>
BlockDist<P> marginal_drop_first(const BlockDist<P>& d) {
  if (d.length < 2) throw input_error("marginal: need length >= 2");
  std::map<Block, P> out;
  for (const auto& [w, p] : d.probs) {
    const Block suffix = w.subword(1, d.length - 1);
    auto [it, inserted] = out.emplace(suffix, p);
    if (!inserted) it->second = it->second + p;
  }
  return {d.length - 1, std::move(out), d.provenance};
}

template <class P>
void write_distribution_csv(std::ostream& os, const BlockDist<P>& d) {
  os << "length,block,probability,provenance\n";
  for (const auto& [w, p] : d.probs)
    os << d.length << ',' << w.to_string() << ',' << detail::prob_to_double(p) << ','
       << to_string(d.provenance) << '\n';
}

}  // namespace subshift
