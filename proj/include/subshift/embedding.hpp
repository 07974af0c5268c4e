#pragma once

#include <cstddef>

#include "subshift/bitseq.hpp"
#include "subshift/errors.hpp"

namespace subshift {

/// Is y a word of Y = X_{111,1001}? Equivalent to containing neither factor
/// (every locally admissible word of this SFT extends bi-infinitely: a zero
/// can always be appended or prepended).
inline bool in_embedding_domain(const BitSeq& y) {
  for (std::size_t i = 0; i + 2 < y.size(); ++i)
    if (y[i] && y[i + 1] && y[i + 2]) return false;
  for (std::size_t i = 0; i + 3 < y.size(); ++i)
    if (y[i] && !y[i + 1] && !y[i + 2] && y[i + 3]) return false;
  return true;
}

namespace detail {

// Interior zero-gap filling between two ones. ell = 1 stays; ell = 2 cannot
// occur in the domain; otherwise a fixed 00/111-free pattern of the same
// length: odd ell -> 0(10)^{(ell-1)/2}, even ell -> 0110(10)^{(ell-4)/2}.
inline void fill_interior_gap(BitSeq& x, std::size_t begin, std::size_t ell) {
  if (ell <= 1) return;
  if (ell % 2 == 1) {
    for (std::size_t t = 0; t < ell; ++t) x[begin + t] = t % 2 == 0 ? 0 : 1;
  } else {
    x[begin] = 0;
    x[begin + 1] = 1;
    x[begin + 2] = 1;
    for (std::size_t t = 3; t < ell; ++t) x[begin + t] = t % 2 == 1 ? 0 : 1;
  }
}

}  // namespace detail

/// Gap-filling upgrade: returns x >= y coordinatewise with |x| = |y| and no
/// 00 or 111 factor, for any y in the language of X_{111,1001}. Interior
/// zero-gaps of length 1 are kept, longer ones are filled with a fixed
/// alternating pattern; boundary zero-runs get the alternation anchored at
/// the adjacent 1.
inline BitSeq upgrade_embedding(const BitSeq& y) {
  if (y.empty()) throw input_error("upgrade_embedding: empty word");
  if (!in_embedding_domain(y))
    throw input_error("upgrade_embedding: word contains 111 or 1001, not in the domain");

  BitSeq x = y;
  std::size_t first_one = y.size(), last_one = y.size();
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i]) {
      if (first_one == y.size()) first_one = i;
      last_one = i;
    }

  if (first_one == y.size()) {
    // All-zero input: alternate starting with 1.
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = i % 2 == 0 ? 1 : 0;
    return x;
  }

  // Leading run [0, first_one): alternation ending with 0 next to the 1.
  for (std::size_t t = 0; t < first_one; ++t)
    x[first_one - 1 - t] = t % 2 == 0 ? 0 : 1;
  // Trailing run (last_one, end): alternation starting with 0 after the 1.
  for (std::size_t t = 0; last_one + 1 + t < x.size(); ++t)
    x[last_one + 1 + t] = t % 2 == 0 ? 0 : 1;
  // Interior gaps.
  std::size_t prev = first_one;
  for (std::size_t i = first_one + 1; i <= last_one; ++i) {
    if (!y[i]) continue;
    detail::fill_interior_gap(x, prev + 1, i - prev - 1);
    prev = i;
  }
  return x;
}

/// Does x avoid both 00 and 111 (i.e. lie in the language of X_{00,111})?
inline bool avoids_00_111(const BitSeq& x) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (!x[i] && !x[i + 1]) return false;
  for (std::size_t i = 0; i + 2 < x.size(); ++i)
    if (x[i] && x[i + 1] && x[i + 2]) return false;
  return true;
}

inline bool dominates(const BitSeq& x, const BitSeq& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i] && !x[i]) return false;
  return true;
}

}  // namespace subshift
