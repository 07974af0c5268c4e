#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "subshift/bitseq.hpp"
#include "subshift/errors.hpp"

namespace subshift {

// ---------------------------------------------------------------------------
// B-free machinery
// ---------------------------------------------------------------------------

/// Remove every element that is a multiple of another; sorted ascending.
/// eta() is invariant under this operation.
inline std::vector<std::int64_t> primitivize(std::vector<std::int64_t> b) {
  for (std::int64_t v : b)
    if (v <= 1) throw input_error("primitivize: entries must be >= 2, got " + std::to_string(v));
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  if (b.empty()) return b;
  std::set<std::int64_t> present(b.begin(), b.end());
  const std::int64_t max = b.back();
  std::set<std::int64_t> dropped;
  for (std::int64_t a : b) {
    if (dropped.count(a)) continue;
    for (std::int64_t m = 2 * a; m <= max; m += a)
      if (present.count(m)) dropped.insert(m);
  }
  std::vector<std::int64_t> out;
  for (std::int64_t a : b)
    if (!dropped.count(a)) out.push_back(a);
  return out;
}

/// A B-free specification: a primitive set B and a window size N >= max(B).
struct BFreeSpec {
  std::vector<std::int64_t> b;
  std::int64_t window = 0;

  BFreeSpec() = default;
  BFreeSpec(std::vector<std::int64_t> b_in, std::int64_t window_in)
      : b(primitivize(std::move(b_in))), window(window_in) {
    if (window < 1) throw input_error("BFreeSpec: window must be positive");
    if (!b.empty() && window < b.back())
      throw input_error("BFreeSpec: window must be >= max(B)");
  }

  friend bool operator==(const BFreeSpec& x, const BFreeSpec& y) {
    return x.b == y.b && x.window == y.window;
  }
};

/// eta over positions 1..N: position i carries 1 iff no b in B divides i.
/// Position 0 is excluded (every b divides 0). Sieve cost sum_b N/b.
inline BitSeq eta(const BFreeSpec& spec) {
  std::vector<std::uint8_t> sieve(static_cast<std::size_t>(spec.window) + 1, 1);
  for (std::int64_t b : spec.b)
    for (std::int64_t m = b; m <= spec.window; m += b) sieve[static_cast<std::size_t>(m)] = 0;
  return BitSeq(sieve.begin() + 1, sieve.end());
}

/// Admissibility of one modulus: the residues mod b hit by supp x (positions
/// 1..N) must number fewer than b. `conclusive` is false when the window is
/// too short to see every residue class.
struct AdmissibleVerdict {
  std::int64_t b;
  std::int64_t residues_hit;
  bool admissible;
  bool conclusive;
};

inline AdmissibleVerdict admissible_check(const BitSeq& x, std::int64_t b) {
  if (b < 2) throw input_error("admissible_check: modulus must be >= 2");
  std::vector<char> hit(static_cast<std::size_t>(b), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) hit[static_cast<std::size_t>((i + 1) % static_cast<std::size_t>(b))] = 1;
  std::int64_t count = std::count(hit.begin(), hit.end(), char(1));
  return {b, count, count < b, static_cast<std::int64_t>(x.size()) >= b};
}

inline std::vector<AdmissibleVerdict> admissible_check(const BitSeq& x,
                                                       const std::vector<std::int64_t>& b) {
  std::vector<AdmissibleVerdict> out;
  out.reserve(b.size());
  for (std::int64_t m : b) out.push_back(admissible_check(x, m));
  return out;
}

// ---------------------------------------------------------------------------
// Densities
// ---------------------------------------------------------------------------

/// (1 / ln N) * sum of 1/a over members a in [1, N]. The normalizer is the
/// natural log, matching the harmonic-sum asymptotics of the summand (all
/// entropies elsewhere are base 2; units are per operation).
inline double logarithmic_density(const std::vector<std::uint8_t>& member_1_to_n) {
  const std::size_t n = member_1_to_n.size();
  if (n < 100) throw input_error("logarithmic_density: window must be >= 100");
  long double s = 0.0L;
  for (std::size_t a = n; a >= 1; --a)
    if (member_1_to_n[a - 1]) s += 1.0L / static_cast<long double>(a);
  return static_cast<double>(s / std::log(static_cast<long double>(n)));
}

namespace detail {
/// divisor_count[i] = number of elements of B dividing i, for i in 1..N
/// (saturating at 65535, which no primitive B at these scales approaches).
inline std::vector<std::uint16_t> divisor_counts(const std::vector<std::int64_t>& b,
                                                 std::int64_t n) {
  std::vector<std::uint16_t> cnt(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t d : b)
    for (std::int64_t m = d; m <= n; m += d) {
      auto& c = cnt[static_cast<std::size_t>(m)];
      if (c < 65535) ++c;
    }
  return cnt;
}
}  // namespace detail

/// Numeric tautness evidence. gap_b estimates delta(M_B) - delta(M_{B \ b});
/// tautness requires every gap positive. Finite windows witness, they do not
/// certify: verdicts are labeled evidence, never proof.
struct TautReport {
  struct Entry {
    std::int64_t b;
    double gap;
    bool passes_margin;
  };
  std::int64_t window;
  double margin;
  double delta_multiples;  // estimate of delta(M_B)
  std::vector<Entry> entries;
  bool taut_evidence;  // all gaps exceed the margin
  static constexpr const char* caveat = "numeric evidence, not a proof";
};

inline TautReport taut_check(const std::vector<std::int64_t>& b_in, std::int64_t n,
                             double margin = 0.01) {
  const auto b = primitivize(b_in);
  if (n < 100) throw input_error("taut_check: window must be >= 100");
  const auto cnt = detail::divisor_counts(b, n);
  const long double log_n = std::log(static_cast<long double>(n));

  long double sum_m = 0.0L;
  for (std::int64_t i = 1; i <= n; ++i)
    if (cnt[static_cast<std::size_t>(i)] > 0) sum_m += 1.0L / static_cast<long double>(i);

  TautReport report;
  report.window = n;
  report.margin = margin;
  report.delta_multiples = static_cast<double>(sum_m / log_n);
  report.taut_evidence = true;
  for (std::int64_t d : b) {
    // Members lost on removing d: multiples of d divided by no other element.
    long double lost = 0.0L;
    for (std::int64_t m = d; m <= n; m += d)
      if (cnt[static_cast<std::size_t>(m)] == 1) lost += 1.0L / static_cast<long double>(m);
    const double gap = static_cast<double>(lost / log_n);
    const bool pass = gap > margin;
    report.entries.push_back({d, gap, pass});
    if (!pass) report.taut_evidence = false;
  }
  return report;
}

/// Numeric Behrend evidence: the logarithmic density estimate of F_B, with
/// the (slowly converging) verdict against a threshold.
struct BehrendReport {
  std::int64_t window;
  double delta_free;  // estimate of delta(F_B)
  double threshold;
  bool behrend_evidence;
  static constexpr const char* caveat =
      "numeric evidence, not a proof; convergence is logarithmically slow";
};

inline BehrendReport behrend_check(const std::vector<std::int64_t>& b_in, std::int64_t n,
                                   double threshold = 0.05) {
  const auto b = primitivize(b_in);
  if (n < 100) throw input_error("behrend_check: window must be >= 100");
  const auto cnt = detail::divisor_counts(b, n);
  std::vector<std::uint8_t> member(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i)
    member[static_cast<std::size_t>(i - 1)] = cnt[static_cast<std::size_t>(i)] == 0 ? 1 : 0;
  BehrendReport report;
  report.window = n;
  report.delta_free = logarithmic_density(member);
  report.threshold = threshold;
  report.behrend_evidence = report.delta_free < threshold;
  return report;
}

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

inline std::vector<std::int64_t> primes_upto(std::int64_t n) {
  if (n < 2) return {};
  std::vector<std::uint8_t> sieve(static_cast<std::size_t>(n) + 1, 1);
  sieve[0] = sieve[1] = 0;
  for (std::int64_t i = 2; i * i <= n; ++i)
    if (sieve[static_cast<std::size_t>(i)])
      for (std::int64_t m = i * i; m <= n; m += i) sieve[static_cast<std::size_t>(m)] = 0;
  std::vector<std::int64_t> out;
  for (std::int64_t i = 2; i <= n; ++i)
    if (sieve[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

inline std::vector<std::int64_t> family_primes(std::int64_t cutoff) { return primes_upto(cutoff); }

inline std::vector<std::int64_t> family_prime_squares(std::int64_t cutoff) {
  std::vector<std::int64_t> out;
  for (std::int64_t p : primes_upto(cutoff)) out.push_back(p * p);
  return out;
}

/// {a*k + r : k >= 1} intersected with [2, cutoff].
inline std::vector<std::int64_t> family_progression(std::int64_t a, std::int64_t r,
                                                    std::int64_t cutoff) {
  if (a < 1) throw input_error("progression: modulus must be >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t v = a + r; v <= cutoff; v += a)
    if (v >= 2) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Sturmian points
// ---------------------------------------------------------------------------

/// Rotation-coded Sturmian generator: x_n = floor((n+1)a + rho) -
/// floor(na + rho) over positions 1..N. Alpha may be a double or an exact
/// rational convergent p/q; low-denominator rationals are rejected as
/// degenerate (they code periodic points, not Sturmian ones).
struct SturmianSpec {
  static constexpr std::int64_t min_denominator = 1000;

  double alpha = 0.0;
  std::int64_t alpha_num = 0, alpha_den = 0;  // used iff alpha_den > 0
  double rho = 0.0;
  std::int64_t window = 0;

  SturmianSpec() = default;

  static SturmianSpec from_double(double alpha, double rho, std::int64_t window) {
    SturmianSpec s;
    s.alpha = alpha;
    s.rho = rho;
    s.window = window;
    s.validate();
    return s;
  }

  static SturmianSpec from_rational(std::int64_t p, std::int64_t q, double rho,
                                    std::int64_t window) {
    SturmianSpec s;
    if (q <= 0) throw input_error("sturmian: denominator must be positive");
    std::int64_t g = std::gcd(p, q);
    s.alpha_num = p / g;
    s.alpha_den = q / g;
    if (s.alpha_den < min_denominator)
      throw input_error("sturmian: rational alpha " + std::to_string(p) + "/" + std::to_string(q) +
                        " is degenerate; supply an irrational value or a convergent with "
                        "denominator >= " +
                        std::to_string(min_denominator));
    s.alpha = static_cast<double>(s.alpha_num) / static_cast<double>(s.alpha_den);
    s.rho = rho;
    s.window = window;
    s.validate();
    return s;
  }

  void validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw input_error("sturmian: alpha must be in (0, 1)");
    if (!(rho >= 0.0 && rho < 1.0)) throw input_error("sturmian: rho must be in [0, 1)");
    if (window < 1) throw input_error("sturmian: window must be positive");
  }

  friend bool operator==(const SturmianSpec& a, const SturmianSpec& b) {
    return a.alpha == b.alpha && a.alpha_num == b.alpha_num && a.alpha_den == b.alpha_den &&
           a.rho == b.rho && a.window == b.window;
  }
};

inline BitSeq sturmian_point(const SturmianSpec& spec) {
  spec.validate();
  BitSeq out(static_cast<std::size_t>(spec.window));
  if (spec.alpha_den > 0) {
    // Exact path: floor((n p + r') / q) with rho folded into an integer offset.
    const __int128 p = spec.alpha_num, q = spec.alpha_den;
    const __int128 roff = static_cast<__int128>(spec.rho * static_cast<double>(spec.alpha_den));
    auto level = [&](std::int64_t n) {
      return static_cast<std::int64_t>((static_cast<__int128>(n) * p + roff) / q);
    };
    for (std::int64_t n = 1; n <= spec.window; ++n)
      out[static_cast<std::size_t>(n - 1)] =
          static_cast<std::uint8_t>(level(n + 1) - level(n));
  } else {
    const long double a = spec.alpha, r = spec.rho;
    auto level = [&](std::int64_t n) {
      return static_cast<std::int64_t>(std::floor(static_cast<long double>(n) * a + r));
    };
    for (std::int64_t n = 1; n <= spec.window; ++n)
      out[static_cast<std::size_t>(n - 1)] =
          static_cast<std::uint8_t>(level(n + 1) - level(n));
  }
  return out;
}

}  // namespace subshift
