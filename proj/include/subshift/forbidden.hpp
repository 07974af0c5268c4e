#pragma once

#include <algorithm>
#include <vector>

#include "subshift/block.hpp"
#include "subshift/errors.hpp"

namespace subshift {

/// A finite set of forbidden words presenting an SFT. Kept factor-minimal:
/// no member is a subword of another. The empty set denotes the full shift.
class ForbiddenSet {
 public:
  ForbiddenSet() = default;

  explicit ForbiddenSet(std::vector<Block> words) : words_(std::move(words)) {
    normalize_();
  }

  const std::vector<Block>& words() const { return words_; }
  bool empty() const { return words_.empty(); }

  int max_len() const {
    int m = 0;
    for (const Block& w : words_) m = std::max(m, w.length());
    return m;
  }

  bool forbids(const Block& w) const {
    for (const Block& f : words_)
      if (w.contains_factor(f)) return true;
    return false;
  }

  friend bool operator==(const ForbiddenSet& a, const ForbiddenSet& b) {
    return a.words_ == b.words_;
  }

 private:
  // Drop any word containing another member as a factor; the presented
  // subshift is unchanged. Sorted (length, lex) for reproducible output.
  void normalize_() {
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    std::vector<Block> kept;
    for (const Block& w : words_) {
      bool redundant = false;
      for (const Block& f : kept)
        if (f != w && w.contains_factor(f)) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(w);
    }
    words_ = std::move(kept);
  }

  std::vector<Block> words_;
};

inline ForbiddenSet normalize(const ForbiddenSet& f) { return f; }

/// Sufficient condition for heredity (upward closure of the forbidden set):
/// for every C in F, every C' >= C of the same length contains some member
/// of F as a factor. True is a proof of heredity; false is inconclusive in
/// general (but e.g. witnesses non-heredity for F = {00, 111}).
inline bool is_hereditary_sufficient(const ForbiddenSet& f) {
  for (const Block& c : f.words()) {
    bool ok = true;
    for_each_dominating(c, [&](const Block& up) {
      if (!ok) return;
      if (!f.forbids(up)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace subshift
