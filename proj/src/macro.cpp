// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#include "imc/macro.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "imc/error.hpp"

namespace imc {

LogicVerdict LogicVerdict::from_count(int count) {
  if (count < 0 || count > 2)
    throw Error(Errc::CountOutOfRange,
                "two-row evaluation decoded count " + std::to_string(count));
  LogicVerdict v;
  v.and_bit = count == 2;
  v.nor_bit = count == 0;
  v.xor_bit = count == 1;
  v.nand_bit = !v.and_bit;
  v.or_bit = !v.nor_bit;
  v.xnor_bit = !v.xor_bit;
  v.sum_bit = v.xor_bit;
  v.carry_bit = v.and_bit;
  return v;
}

std::string_view to_string(LogicOp op) noexcept {
  switch (op) {
    case LogicOp::And: return "AND";
    case LogicOp::Nand: return "NAND";
    case LogicOp::Or: return "OR";
    case LogicOp::Nor: return "NOR";
    case LogicOp::Xor: return "XOR";
    case LogicOp::Xnor: return "XNOR";
  }
  return "?";
}

LogicOp parse_logic_op(std::string_view text) {
  std::string up(text);
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
  for (LogicOp op : {LogicOp::And, LogicOp::Nand, LogicOp::Or, LogicOp::Nor, LogicOp::Xor,
                     LogicOp::Xnor})
    if (up == to_string(op)) return op;
  throw Error(Errc::ParseError, "unknown logic op '" + std::string(text) + "'");
}

bool select(const LogicVerdict& v, LogicOp op) noexcept {
  switch (op) {
    case LogicOp::And: return v.and_bit;
    case LogicOp::Nand: return v.nand_bit;
    case LogicOp::Or: return v.or_bit;
    case LogicOp::Nor: return v.nor_bit;
    case LogicOp::Xor: return v.xor_bit;
    case LogicOp::Xnor: return v.xnor_bit;
  }
  return false;
}

ImcMacro::ImcMacro(MacroConfig config) : config_(std::move(config)), array_(config_.array) {
  config_.table.validate();
  config_.timing.validate();
  const int rows = config_.array.rows;
  const int ref_rows = config_.table.max_count();

  FitOptions fit_options;
  fit_options.max_rows = ref_rows;
  analog_ = fit_discharge_model(config_.table, config_.analog, fit_options);
  if (rows != ref_rows) analog_ = rescale_params(analog_, ref_rows, rows, config_.capacitance);

  if (config_.mode == EnergyMode::Table) {
    if (rows != ref_rows)
      throw Error(Errc::ConfigInvalid, "table mode needs " + std::to_string(ref_rows) +
                                           " rows to match the calibration table, got " +
                                           std::to_string(rows));
    ladder_ = config_.table.voltage_by_count;
  } else {
    ladder_ = model_ladder(rows, analog_);
    for (std::size_t i = 1; i < ladder_.size(); ++i)
      if (!(ladder_[i] < ladder_[i - 1]))
        throw Error(Errc::NonMonotoneFit,
                    "model ladder not strictly decreasing at level " + std::to_string(i));
  }

  bank_ = config_.thresholds ? *config_.thresholds : derive_thresholds(ladder_);
  bank_.validate_against(ladder_);
}

double ImcMacro::column_voltage(int col, std::span<const int> discharging_rows,
                                const Variation* variation) const {
  const int n = static_cast<int>(discharging_rows.size());
  const bool mismatched = variation != nullptr && !variation->cell_strength.empty();
  if (!mismatched) {
    return config_.mode == EnergyMode::Table ? table_voltage(n, config_.table)
                                             : model_voltage(n, analog_);
  }

  const auto cells = static_cast<std::size_t>(array_.rows()) * static_cast<std::size_t>(array_.cols());
  if (variation->cell_strength.size() != cells)
    throw Error(Errc::ConfigInvalid, "cell strength grid has " +
                                         std::to_string(variation->cell_strength.size()) +
                                         " entries, array has " + std::to_string(cells));
  std::vector<double> strengths;
  strengths.reserve(discharging_rows.size());
  for (int r : discharging_rows)
    strengths.push_back(variation->cell_strength[static_cast<std::size_t>(r) *
                                                     static_cast<std::size_t>(array_.cols()) +
                                                 static_cast<std::size_t>(col)]);
  const double mismatched_v = model_voltage(strengths, analog_);
  if (config_.mode == EnergyMode::Parametric) return mismatched_v;
  // Table mode: the table anchors the level, the model supplies the mismatch shift.
  const double shift = mismatched_v - model_voltage(n, analog_);
  return std::clamp(table_voltage(n, config_.table) + shift, 0.0, analog_.vdd);
}

std::vector<ColumnSense> ImcMacro::sense(const BitWord& rwl, std::span<const int> columns,
                                         const Variation* variation) {
  std::vector<std::vector<int>> rows_per_col;
  rows_per_col.reserve(columns.size());
  for (int c : columns) rows_per_col.push_back(array_.discharging_rows(rwl, c));
  const auto counts = array_.active_counts(rwl, columns);

  const std::size_t comparators = bank_.size();
  const bool offsets = variation != nullptr && !variation->comparator_offset.empty();
  if (offsets && variation->comparator_offset.size() !=
                     comparators * static_cast<std::size_t>(array_.cols()))
    throw Error(Errc::ConfigInvalid, "comparator offset block has wrong size");

  std::vector<ColumnSense> out;
  out.reserve(columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k) {
    ColumnSense s;
    s.col = columns[k];
    s.active_cells = counts[k];
    s.v_rbl = column_voltage(s.col, rows_per_col[k], variation);
    if (offsets) {
      ThresholdBank shifted = bank_;
      const std::size_t base = static_cast<std::size_t>(s.col) * comparators;
      for (std::size_t i = 0; i < comparators; ++i)
        shifted.offsets[i] += variation->comparator_offset[base + i];
      s.code = compare(s.v_rbl, shifted);
    } else {
      s.code = compare(s.v_rbl, bank_);
    }
    s.energy_fj = config_.mode == EnergyMode::Table
                      ? energy_of_count(s.active_cells, config_.table, EnergyMode::Table)
                      : parametric_energy(s.v_rbl, analog_);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<MacResult> ImcMacro::evaluate(const BitWord& rwl, std::span<const int> columns,
                                          const Variation* variation) {
  std::vector<MacResult> out;
  for (auto& s : sense(rwl, columns, variation)) {
    MacResult r;
    r.col = s.col;
    r.count = to_count(s.code);
    r.active_cells = s.active_cells;
    r.v_rbl = s.v_rbl;
    r.code = std::move(s.code);
    r.energy_fj = s.energy_fj;
    out.push_back(std::move(r));
  }
  return out;
}

MacResult ImcMacro::mac_column(int col, const BitWord& a, const BitWord& b,
                               const Variation* variation) {
  if (a.size() != static_cast<std::size_t>(array_.rows()))
    throw Error(Errc::WordLengthMismatch, "operand A has " + std::to_string(a.size()) +
                                              " bits, array has " + std::to_string(array_.rows()) +
                                              " rows");
  array_.load_column_word(col, b);
  array_.precharge(col);
  const int cols[] = {col};
  return evaluate(a, cols, variation).front();
}

std::vector<MacResult> ImcMacro::mac_parallel(const BitWord& a, std::span<const BitWord> b_cols,
                                              const Variation* variation) {
  if (b_cols.empty() || b_cols.size() > static_cast<std::size_t>(array_.cols()))
    throw Error(Errc::AddressOutOfRange, "got " + std::to_string(b_cols.size()) +
                                             " column operands for " +
                                             std::to_string(array_.cols()) + " columns");
  if (a.size() != static_cast<std::size_t>(array_.rows()))
    throw Error(Errc::WordLengthMismatch, "operand A has " + std::to_string(a.size()) +
                                              " bits, array has " + std::to_string(array_.rows()) +
                                              " rows");
  std::vector<int> cols;
  for (std::size_t j = 0; j < b_cols.size(); ++j) {
    const int c = static_cast<int>(j);
    array_.load_column_word(c, b_cols[j]);
    cols.push_back(c);
  }
  for (int c : cols) array_.precharge(c);
  return evaluate(a, cols, variation);
}

std::vector<MacResult> ImcMacro::evaluate_resident(const BitWord& a, const Variation* variation) {
  array_.precharge_all();
  std::vector<int> cols(static_cast<std::size_t>(array_.cols()));
  for (int c = 0; c < array_.cols(); ++c) cols[static_cast<std::size_t>(c)] = c;
  return evaluate(a, cols, variation);
}

BitWord ImcMacro::two_row_pattern() const {
  if (array_.rows() < 2) throw Error(Errc::ConfigInvalid, "logic needs at least two rows");
  return BitWord::prefix_ones(2, static_cast<std::size_t>(array_.rows()));
}

std::vector<LogicResult> ImcMacro::logic_columns(const BitWord& a, const BitWord& b) {
  if (a.size() != b.size())
    throw Error(Errc::WordLengthMismatch, "logic operands differ in width");
  if (a.size() == 0 || a.size() > static_cast<std::size_t>(array_.cols()))
    throw Error(Errc::WordLengthMismatch, "logic operand width " + std::to_string(a.size()) +
                                              " does not fit " + std::to_string(array_.cols()) +
                                              " columns");
  const BitWord rwl = two_row_pattern();
  std::vector<int> cols;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = static_cast<int>(i);
    array_.write_bit(0, c, a[i]);
    array_.write_bit(1, c, b[i]);
    array_.precharge(c);
    cols.push_back(c);
  }
  std::vector<LogicResult> out;
  for (auto& mac : evaluate(rwl, cols)) {
    LogicResult r;
    r.verdict = LogicVerdict::from_count(mac.count);
    if (config_.mode == EnergyMode::Table) mac.energy_fj = energy_of_logic(mac.count, config_.table);
    r.mac = std::move(mac);
    out.push_back(std::move(r));
  }
  return out;
}

LogicResult ImcMacro::logic_pair(bool a_bit, bool b_bit) {
  BitWord a(1, a_bit), b(1, b_bit);
  return logic_columns(a, b).front();
}

BitWord ImcMacro::logic_word(const BitWord& a, const BitWord& b, LogicOp op) {
  const auto results = logic_columns(a, b);
  BitWord out(results.size());
  for (std::size_t i = 0; i < results.size(); ++i) out.set(i, select(results[i].verdict, op));
  return out;
}

std::uint8_t ImcMacro::logic_word(std::uint8_t a, std::uint8_t b, LogicOp op) {
  return static_cast<std::uint8_t>(
      logic_word(BitWord::from_uint(a, 8), BitWord::from_uint(b, 8), op).to_uint());
}

AddResult ImcMacro::add_1bit(bool a_bit, bool b_bit) {
  auto r = logic_pair(a_bit, b_bit);
  return {r.verdict.sum_bit, r.verdict.carry_bit, std::move(r.mac)};
}

}  // namespace imc
