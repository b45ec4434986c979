// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IMC_MAC_DECODER_HPP
#define IMC_MAC_DECODER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace imc {

/// Comparator references of one column's MAC decoder. Threshold i separates
/// count i from count i+1; offset i is that comparator's input-referred offset.
struct ThresholdBank {
  std::vector<double> thresholds;  // V, strictly decreasing
  std::vector<double> offsets;     // V, same length

  std::size_t size() const noexcept { return thresholds.size(); }
  void validate() const;
  /// Additionally checks that each threshold sits strictly between ladder[i] and ladder[i+1].
  void validate_against(std::span<const double> ladder) const;
};

/// Comparator output word; bit i = 1 iff V_RBL is above comparator i's trip point.
/// Printed with comparator 0 first, so MAC 1 reads "01111111".
struct ThermometerCode {
  std::vector<std::uint8_t> bits;

  static ThermometerCode parse(const std::string& text);
  std::string to_string() const;
  /// True for the form 0^k 1^(n-k).
  bool is_valid() const noexcept;
  friend bool operator==(const ThermometerCode&, const ThermometerCode&) = default;
};

/// Midpoint thresholds between adjacent ladder levels, zero offsets.
ThresholdBank derive_thresholds(std::span<const double> ladder);

ThermometerCode compare(double v_rbl, const ThresholdBank& bank);

/// Number of zero bits of a valid code; BubbleError otherwise.
int to_count(const ThermometerCode& code);

/// Distance from each ladder level to its nearest threshold, minimised over levels.
double decode_margin(std::span<const double> ladder, const ThresholdBank& bank);

}  // namespace imc

#endif  // IMC_MAC_DECODER_HPP
