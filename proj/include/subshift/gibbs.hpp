#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "subshift/block.hpp"
#include "subshift/distribution.hpp"
#include "subshift/errors.hpp"
#include "subshift/spectral.hpp"

namespace subshift {

// ---------------------------------------------------------------------------
// Gibbs ratio series at the ones-maximal witnesses
// ---------------------------------------------------------------------------

struct GibbsEntry {
  int n;
  Block witness;   // C_n, nu-ones-maximal, lexicographically smallest
  int ones;        // o_n = #1(C_n)
  double nu;       // nu(C_n)
  double kappa;    // nu(C_n) 2^{-o_n}, by the maximal-block formula
  double ratio;    // kappa(C_n) 2^{n h}
  bool certified;  // n h <= o_n, hence ratio <= nu(C_n)
};

struct GibbsReport {
  double h = 0.0;
  std::vector<GibbsEntry> entries;

  bool all_certified() const {
    for (const auto& e : entries)
      if (!e.certified) return false;
    return true;
  }
};

/// For each n: locate the nu-ones-maximal block C_n, evaluate kappa(C_n) by
/// the maximal-block formula and the scaled ratio kappa(C_n) 2^{nh}. When
/// n h <= o_n the entry is certified: the ratio is bounded by nu(C_n), so a
/// decaying nu(C_n) drags any would-be Gibbs constant to zero.
template <class P>
GibbsReport gibbs_ratio_series(const MeasureSeries<P>& series, double h) {
  if (h < 0) throw input_error("gibbs_ratio_series: h must be >= 0");
  GibbsReport report;
  report.h = h;
  for (const auto& dist : series.dists) {
    const Block c = ones_maximal_block(dist);
    const int o = c.ones_count();
    const int n = dist.length;
    const double nu = detail::prob_to_double(dist.prob(c));
    const double kappa = std::ldexp(nu, -o);
    const double ratio = nu * std::exp2(n * h - o);
    report.entries.push_back({n, c, o, nu, kappa, ratio, n * h <= o + 1e-12});
  }
  return report;
}

inline void write_gibbs_csv(std::ostream& os, const GibbsReport& r) {
  os << "n,witness,ones,nu,kappa,ratio,certified_bound\n";
  for (const auto& e : r.entries)
    os << e.n << ',' << e.witness.to_string() << ',' << e.ones << ',' << e.nu << ',' << e.kappa
       << ',' << e.ratio << ',' << (e.certified ? 1 : 0) << '\n';
}

// ---------------------------------------------------------------------------
// Gibbs lower bound scan
// ---------------------------------------------------------------------------

struct GibbsLowerBoundEntry {
  int n;
  double a_star;  // min over positive-kappa blocks of kappa(C) 2^{nh}
  Block worst;
};

struct GibbsLowerBoundReport {
  double h = 0.0;
  double a = 0.0;
  double a_star = 0.0;  // min over all scanned n
  int worst_n = 0;
  Block worst_block = Block::zeros(1);
  bool passes = false;
  std::vector<GibbsLowerBoundEntry> per_n;
};

/// Scans every positive-kappa block at each n and reports the minimal
/// witnessed Gibbs constant a* = min kappa(C) 2^{nh}, with the pass verdict
/// against a supplied candidate a.
template <class P>
GibbsLowerBoundReport gibbs_lower_bound_check(const MeasureSeries<P>& kappa_series, double h,
                                              double a, double tol = 1e-12) {
  if (a <= 0) throw input_error("gibbs_lower_bound_check: a must be positive");
  GibbsLowerBoundReport report;
  report.h = h;
  report.a = a;
  bool first = true;
  for (const auto& dist : kappa_series.dists) {
    const int n = dist.length;
    double best = 0.0;
    const Block* worst = nullptr;
    for (const auto& [w, p] : dist.probs) {
      const double scaled = detail::prob_to_double(p) * std::exp2(n * h);
      if (!worst || scaled < best) {
        best = scaled;
        worst = &w;
      }
    }
    if (!worst) throw input_error("gibbs_lower_bound_check: empty support");
    report.per_n.push_back({n, best, *worst});
    if (first || best < report.a_star) {
      report.a_star = best;
      report.worst_n = n;
      report.worst_block = *worst;
      first = false;
    }
  }
  report.passes = report.a_star >= a - tol;
  return report;
}

// ---------------------------------------------------------------------------
// Exact Gibbs floor for periodic hereditary closures
// ---------------------------------------------------------------------------

struct PeriodicGibbsEntry {
  int n;
  int max_ones;    // max #1 over positive-kappa blocks = n * (finite-n density)
  Rat a_star;      // min over positive-kappa blocks of kappa(C) 2^{max_ones}
  Block worst;
};

/// For the orbit closure of a periodic pattern (period k), scan the exact
/// rational convolution kappa = nu * B_{1/2,1/2} at each length n and report
/// a*(n) = min kappa(C) 2^{m(n)} with m(n) the maximal ones count among
/// positive blocks. The floor a*(n) >= 1/k holds at every n; when k | n the
/// exponent m(n) equals n*d with d the orbit's ones density.
inline std::vector<PeriodicGibbsEntry> periodic_gibbs_floor(const Block& pattern, int n_max) {
  std::vector<PeriodicGibbsEntry> out;
  for (int n = 1; n <= n_max; ++n) {
    const RationalBlockDistribution nu = periodic_measure<Rat>(pattern, n);
    const RationalBlockDistribution kappa = convolve_half(nu);
    int m = 0;
    for (const auto& [w, p] : kappa.probs) m = std::max(m, w.ones_count());
    if (m > 62) throw enumeration_cap_error("periodic_gibbs_floor: exponent too large");
    const Rat scale(std::int64_t{1} << m);
    bool first = true;
    Rat best(0);
    Block worst = Block::zeros(n);
    for (const auto& [w, p] : kappa.probs) {
      const Rat scaled = p * scale;
      if (first || scaled < best) {
        best = scaled;
        worst = w;
        first = false;
      }
    }
    out.push_back({n, m, best, worst});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Entropy consequences of the Gibbs property
// ---------------------------------------------------------------------------

struct EntropyGibbsEntry {
  int n;
  double lhs;  // (1/n) H(length-n distribution)
  double rhs;  // a (1 - 2^{-nh}) (h - log2(a)/n)
  bool holds;
};

struct EntropyGibbsReport {
  bool applicable = true;
  std::string reason;
  bool holds = true;
  std::vector<EntropyGibbsEntry> entries;
};

/// Checks (1/n) H_n(kappa) >= a (1 - 2^{-nh}) (h - log2(a)/n) for each n,
/// the finite-n form of h_kappa >= a h for a full-support Gibbs measure.
/// Preconditions are verified when the language sizes are supplied: the
/// support must exhaust L_n, and the Gibbs floor must hold with constant a.
template <class P>
EntropyGibbsReport entropy_gibbs_bound_check(const MeasureSeries<P>& kappa_series, double h,
                                             double a, double tol = 1e-9,
                                             const std::vector<std::uint64_t>* ell = nullptr) {
  EntropyGibbsReport report;
  if (a <= 0 || a > 1) {
    report.applicable = false;
    report.reason = "inapplicable: constant a must lie in (0, 1]";
    return report;
  }
  if (h < 0) {
    report.applicable = false;
    report.reason = "inapplicable: h must be >= 0";
    return report;
  }
  if (ell) {
    for (const auto& dist : kappa_series.dists) {
      const std::size_t idx = static_cast<std::size_t>(dist.length - 1);
      if (idx >= ell->size()) break;
      if (dist.probs.size() != (*ell)[idx]) {
        report.applicable = false;
        report.reason = "inapplicable: kappa is not fully supported at length " +
                        std::to_string(dist.length);
        return report;
      }
    }
    const auto floor = gibbs_lower_bound_check(kappa_series, h, a, tol);
    if (!floor.passes) {
      report.applicable = false;
      report.reason = "inapplicable: Gibbs floor a = " + std::to_string(a) +
                      " not witnessed (a* = " + std::to_string(floor.a_star) + ")";
      return report;
    }
  }
  const auto hs = measure_entropy_series(kappa_series);
  for (const auto& e : hs) {
    const double rhs = a * (1.0 - std::exp2(-e.n * h)) * (h - std::log2(a) / e.n);
    const bool ok = e.value >= rhs - tol;
    report.entries.push_back({e.n, e.value, rhs, ok});
    if (!ok) report.holds = false;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Rate of convergence of (1/n) log |L_n| under a Gibbs measure
// ---------------------------------------------------------------------------

struct RateEntry {
  int n;
  double slack;        // log2(ell_n)/n - h, must be >= 0
  double upper_bound;  // (1/n) log2(1/a)
  bool holds;
};

struct RateReport {
  bool holds = true;
  std::vector<RateEntry> entries;
};

/// Checks 0 <= log2(ell_n)/n - h <= (1/n) log2(1/a) for each n.
inline RateReport rate_of_convergence_check(const std::vector<std::uint64_t>& ell, double h,
                                            double a, double tol = 1e-9) {
  if (a <= 0 || a > 1) throw input_error("rate_of_convergence_check: a must be in (0, 1]");
  if (h < 0) throw input_error("rate_of_convergence_check: h must be >= 0");
  RateReport report;
  for (std::size_t i = 0; i < ell.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (ell[i] == 0) throw input_error("rate_of_convergence_check: ell_n must be positive");
    const double slack = std::log2(static_cast<double>(ell[i])) / n - h;
    const double upper = std::log2(1.0 / a) / n;
    const bool ok = slack >= -tol && slack <= upper + tol;
    report.entries.push_back({n, slack, upper, ok});
    if (!ok) report.holds = false;
  }
  return report;
}

}  // namespace subshift
