#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "subshift/block.hpp"
#include "subshift/errors.hpp"

namespace subshift {

/// An arbitrary-length 0/1 sequence (generated windows, generic-point
/// segments). One byte per symbol; plenty at the 10^6 scale this library
/// works at.
using BitSeq = std::vector<std::uint8_t>;

inline BitSeq bitseq_from_string(std::string_view s) {
  BitSeq out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '0')
      out.push_back(0);
    else if (c == '1')
      out.push_back(1);
    else
      throw input_error(std::string("invalid symbol '") + c + "' in 0/1 sequence");
  }
  return out;
}

inline std::string bitseq_to_string(const BitSeq& x) {
  std::string s(x.size(), '0');
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) s[i] = '1';
  return s;
}

inline BitSeq to_bitseq(const Block& b) {
  BitSeq out(b.length());
  for (int i = 0; i < b.length(); ++i) out[i] = static_cast<std::uint8_t>(b.bit(i));
  return out;
}

/// Pack the window x[start, start+n) into a Block.
inline Block window_block(const BitSeq& x, std::size_t start, int n) {
  if (n < 1 || n > Block::max_length || start + n > x.size())
    throw input_error("window_block: window out of range");
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i)
    if (x[start + i]) bits |= std::uint64_t{1} << i;
  return Block(bits, n);
}

}  // namespace subshift
