#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "subshift/errors.hpp"

namespace subshift {

/// A finite binary word, stored as a packed bit vector.
///
/// Bit i of `bits()` is the symbol at position i, so the canonical textual
/// form "w0 w1 ... w_{n-1}" reads the bits LSB-first. Words are immutable
/// values; every operation on them is pure. The empty word is rejected,
/// lengths above 64 are not representable (languages at such lengths are out
/// of enumeration range anyway).
class Block {
 public:
  static constexpr int max_length = 64;

  Block(std::uint64_t bits, int length) : bits_(bits), len_(length) {
    if (length < 1 || length > max_length)
      throw input_error("Block length must be in [1, 64], got " + std::to_string(length));
    if (length < 64 && (bits >> length) != 0)
      throw input_error("Block bits exceed stated length");
  }

  static Block from_string(std::string_view s) {
    if (s.empty()) throw input_error("empty word rejected");
    if (s.size() > static_cast<std::size_t>(max_length))
      throw input_error("word longer than 64 symbols rejected");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        bits |= std::uint64_t{1} << i;
      else if (s[i] != '0')
        throw input_error(std::string("invalid symbol '") + s[i] + "' in word");
    }
    return Block(bits, static_cast<int>(s.size()));
  }

  static Block zeros(int length) { return Block(0, length); }
  static Block ones(int length) {
    Block b(0, length);
    b.bits_ = mask(length);
    return b;
  }

  int length() const { return len_; }
  std::uint64_t bits() const { return bits_; }
  int bit(int i) const { return static_cast<int>((bits_ >> i) & 1u); }

  int ones_count() const { return std::popcount(bits_); }

  /// Coordinatewise order: *this >= other at every position.
  bool dominates(const Block& other) const {
    if (len_ != other.len_)
      throw input_error("dominates: length mismatch (" + std::to_string(len_) + " vs " +
                        std::to_string(other.len_) + ")");
    return (other.bits_ & ~bits_) == 0;
  }

  /// The slice [i, j], inclusive on both ends.
  Block subword(int i, int j) const {
    if (i < 0 || j < i || j >= len_)
      throw input_error("subword: indices (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") out of range for length " + std::to_string(len_));
    return Block((bits_ >> i) & mask(j - i + 1), j - i + 1);
  }

  Block concat(const Block& other) const {
    if (len_ + other.len_ > max_length) throw input_error("concat: would exceed 64 symbols");
    return Block(bits_ | (other.bits_ << len_), len_ + other.len_);
  }

  bool contains_factor(const Block& f) const {
    if (f.len_ > len_) return false;
    const std::uint64_t m = mask(f.len_);
    for (int i = 0; i + f.len_ <= len_; ++i)
      if (((bits_ >> i) & m) == f.bits_) return true;
    return false;
  }

  std::string to_string() const {
    std::string s(len_, '0');
    for (int i = 0; i < len_; ++i)
      if (bit(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const Block& a, const Block& b) {
    return a.len_ == b.len_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Block& a, const Block& b) { return !(a == b); }

  /// Strict order: by length, then lexicographic on the textual form.
  friend bool operator<(const Block& a, const Block& b) {
    if (a.len_ != b.len_) return a.len_ < b.len_;
    return reverse_bits(a.bits_, a.len_) < reverse_bits(b.bits_, b.len_);
  }

  static std::uint64_t mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  }

 private:
  static std::uint64_t reverse_bits(std::uint64_t v, int len) {
    std::uint64_t r = 0;
    for (int i = 0; i < len; ++i) r = (r << 1) | ((v >> i) & 1u);
    return r;
  }

  std::uint64_t bits_;
  int len_;
};

inline int ones_count(const Block& w) { return w.ones_count(); }

inline bool dominates(const Block& w1, const Block& w2) { return w1.dominates(w2); }

inline Block subword(const Block& w, int i, int j) { return w.subword(i, j); }

/// The candidates C' with C' >= w coordinatewise.
inline std::set<Block> dominating_set(const Block& w, const std::set<Block>& candidates) {
  std::set<Block> out;
  for (const Block& c : candidates)
    if (c.dominates(w)) out.insert(c);
  return out;
}

/// Visit every word <= w coordinatewise (all 2^{#1 w} of them), w included.
template <class Fn>
void for_each_dominated(const Block& w, Fn&& fn) {
  const std::uint64_t m = w.bits();
  std::uint64_t sub = m;
  while (true) {
    fn(Block(sub, w.length()));
    if (sub == 0) break;
    sub = (sub - 1) & m;
  }
}

/// Visit every word >= w coordinatewise (all 2^{n - #1 w} of them), w included.
template <class Fn>
void for_each_dominating(const Block& w, Fn&& fn) {
  const std::uint64_t zeros = ~w.bits() & Block::mask(w.length());
  std::uint64_t sub = zeros;
  while (true) {
    fn(Block(w.bits() | sub, w.length()));
    if (sub == 0) break;
    sub = (sub - 1) & zeros;
  }
}

/// All 2^n words of length n, in increasing bit-pattern order.
inline std::vector<Block> all_blocks(int n, int cap = 24) {
  if (n < 1) throw input_error("all_blocks: length must be >= 1");
  if (n > cap)
    throw enumeration_cap_error("all_blocks: length " + std::to_string(n) +
                                " exceeds enumeration cap " + std::to_string(cap));
  std::vector<Block> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.emplace_back(b, n);
  return out;
}

}  // namespace subshift

template <>
struct std::hash<subshift::Block> {
  std::size_t operator()(const subshift::Block& b) const noexcept {
    return std::hash<std::uint64_t>{}(b.bits() * 0x9e3779b97f4a7c15ull ^
                                      static_cast<std::uint64_t>(b.length()));
  }
};
