// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#include "imc/mac_decoder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "imc/error.hpp"

namespace imc {

void ThresholdBank::validate() const {
  if (thresholds.empty()) throw Error(Errc::ConfigInvalid, "threshold bank is empty");
  if (offsets.size() != thresholds.size())
    throw Error(Errc::ConfigInvalid, "threshold bank has " + std::to_string(thresholds.size()) +
                                         " thresholds but " + std::to_string(offsets.size()) +
                                         " offsets");
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (!(thresholds[i] < thresholds[i - 1]))
      throw Error(Errc::NonMonotoneLadder,
                  "thresholds not strictly decreasing at comparator " + std::to_string(i));
  }
}

void ThresholdBank::validate_against(std::span<const double> ladder) const {
  validate();
  if (ladder.size() != thresholds.size() + 1)
    throw Error(Errc::ConfigInvalid, "threshold bank has " + std::to_string(thresholds.size()) +
                                         " comparators for a " + std::to_string(ladder.size()) +
                                         "-level ladder");
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (!(thresholds[i] < ladder[i] && thresholds[i] > ladder[i + 1]))
      throw Error(Errc::ConfigInvalid,
                  "threshold " + std::to_string(i) + " does not separate levels " +
                      std::to_string(i) + " and " + std::to_string(i + 1));
  }
}

ThermometerCode ThermometerCode::parse(const std::string& text) {
  ThermometerCode code;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw Error(Errc::ParseError, "thermometer code '" + text + "' has non-binary character");
    code.bits.push_back(c == '1' ? 1 : 0);
  }
  return code;
}

std::string ThermometerCode::to_string() const {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

bool ThermometerCode::is_valid() const noexcept {
  const auto first_one = std::find(bits.begin(), bits.end(), std::uint8_t{1});
  return std::find(first_one, bits.end(), std::uint8_t{0}) == bits.end();
}

ThresholdBank derive_thresholds(std::span<const double> ladder) {
  if (ladder.size() < 2) throw Error(Errc::NonMonotoneLadder, "ladder needs at least two levels");
  ThresholdBank bank;
  for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
    if (!(ladder[i + 1] < ladder[i]))
      throw Error(Errc::NonMonotoneLadder,
                  "ladder not strictly decreasing at level " + std::to_string(i + 1));
    bank.thresholds.push_back((ladder[i] + ladder[i + 1]) / 2.0);
  }
  bank.offsets.assign(bank.thresholds.size(), 0.0);
  return bank;
}

ThermometerCode compare(double v_rbl, const ThresholdBank& bank) {
  ThermometerCode code;
  code.bits.resize(bank.size());
  for (std::size_t i = 0; i < bank.size(); ++i)
    code.bits[i] = v_rbl > bank.thresholds[i] + bank.offsets[i] ? 1 : 0;
  return code;
}

int to_count(const ThermometerCode& code) {
  if (!code.is_valid())
    throw Error(Errc::BubbleError, "comparator word " + code.to_string() + " is not a thermometer code");
  return static_cast<int>(std::count(code.bits.begin(), code.bits.end(), std::uint8_t{0}));
}

double decode_margin(std::span<const double> ladder, const ThresholdBank& bank) {
  double margin = std::numeric_limits<double>::infinity();
  for (double v : ladder)
    for (double t : bank.thresholds) margin = std::min(margin, std::abs(v - t));
  return margin;
}

}  // namespace imc
