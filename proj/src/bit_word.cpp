// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#include "imc/bit_word.hpp"

#include <algorithm>

#include "imc/error.hpp"

namespace imc {

BitWord BitWord::parse(std::string_view text) {
  if (text.empty()) throw Error(Errc::ParseError, "empty bit word");
  BitWord w(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1')
      throw Error(Errc::ParseError,
                  "bit word '" + std::string(text) + "' has non-binary character '" + c + "'");
    w.bits_[i] = c == '1' ? 1 : 0;
  }
  return w;
}

BitWord BitWord::from_uint(std::uint64_t value, std::size_t width) {
  BitWord w(width);
  for (std::size_t i = 0; i < width; ++i) w.bits_[i] = (value >> (width - 1 - i)) & 1U;
  return w;
}

BitWord BitWord::prefix_ones(std::size_t ones, std::size_t width) {
  BitWord w(width);
  std::fill_n(w.bits_.begin(), std::min(ones, width), std::uint8_t{1});
  return w;
}

std::size_t BitWord::popcount() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::uint64_t BitWord::to_uint() const noexcept {
  std::uint64_t v = 0;
  for (auto b : bits_) v = (v << 1) | b;
  return v;
}

std::string BitWord::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

}  // namespace imc
