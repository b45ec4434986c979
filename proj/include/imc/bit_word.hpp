// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IMC_BIT_WORD_HPP
#define IMC_BIT_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace imc {

/// A row-indexed bit vector. Textual form is row 0 first ("10000000" sets
/// only row 0), which is also the most-significant bit of the integer form.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::size_t width, bool fill = false) : bits_(width, fill ? 1 : 0) {}

  /// Throws ParseError on any character other than '0' or '1', or on empty input.
  static BitWord parse(std::string_view text);
  /// Bit i of the word is bit (width - 1 - i) of value.
  static BitWord from_uint(std::uint64_t value, std::size_t width);
  /// `ones` leading ones followed by zeros.
  static BitWord prefix_ones(std::size_t ones, std::size_t width);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
  void set(std::size_t i, bool v) { bits_.at(i) = v ? 1 : 0; }

  std::size_t popcount() const noexcept;
  std::uint64_t to_uint() const noexcept;
  std::string to_string() const;

  friend bool operator==(const BitWord&, const BitWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace imc

#endif  // IMC_BIT_WORD_HPP
