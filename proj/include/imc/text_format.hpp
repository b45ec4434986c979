// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

// Plain-text file formats:
//
//   # comment / unit header
//   voltage_mV = [1758, 1528, 1308]
//   vdd_V = 1.8
//
// Arrays hold decimal numerals; scalars hold one numeral.

#ifndef IMC_TEXT_FORMAT_HPP
#define IMC_TEXT_FORMAT_HPP

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "imc/analog.hpp"
#include "imc/cell_array.hpp"
#include "imc/mac_decoder.hpp"

namespace imc {

struct TextEntry {
  int line = 0;
  bool is_array = false;
  std::vector<double> values;
};

struct TextDocument {
  std::string source;
  std::map<std::string, TextEntry, std::less<>> entries;

  static TextDocument parse(std::string_view text, std::string source);
  static TextDocument load(const std::filesystem::path& path);

  bool has(std::string_view key) const;
  const TextEntry& at(std::string_view key) const;
  const std::vector<double>& array(std::string_view key) const;
  double scalar(std::string_view key) const;
  /// "source:line" for diagnostics.
  std::string where(std::string_view key) const;
};

/// Shortest round-trip decimal form.
std::string format_number(double v);

CalibrationTable parse_calibration_table(const TextDocument& doc);
CalibrationTable load_calibration_table(const std::filesystem::path& path);
void write_calibration_table(std::ostream& out, const CalibrationTable& table);

ThresholdBank parse_threshold_bank(const TextDocument& doc);
ThresholdBank load_threshold_bank(const std::filesystem::path& path);
void write_threshold_bank(std::ostream& out, const ThresholdBank& bank);

AnalogParams parse_analog_params(const TextDocument& doc);
void write_analog_params(std::ostream& out, const AnalogParams& params);

/// One line per row of '0'/'1'; every row the same width.
CellArray parse_array_image(std::string_view text, const std::string& source);
CellArray load_array_image(const std::filesystem::path& path);
void write_array_image(std::ostream& out, const CellArray& array);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace imc

#endif  // IMC_TEXT_FORMAT_HPP
