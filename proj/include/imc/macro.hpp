// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IMC_MACRO_HPP
#define IMC_MACRO_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "imc/analog.hpp"
#include "imc/cell_array.hpp"
#include "imc/mac_decoder.hpp"
#include "imc/metrics.hpp"

namespace imc {

struct MacroConfig {
  ArrayConfig array;
  EnergyMode mode = EnergyMode::Table;
  CalibrationTable table = CalibrationTable::reference();
  CapacitanceModel capacitance;
  AnalogParams analog;  // coefficients are (re)fitted from `table`
  std::optional<ThresholdBank> thresholds;  // midpoints of the active ladder when absent
  TimingModel timing;
};

/// Per-evaluation device mismatch. Empty vectors mean nominal devices.
struct Variation {
  std::vector<double> cell_strength;      // rows x cols, row-major, nominal 1.0
  std::vector<double> comparator_offset;  // cols x comparators, column-major blocks, V
};

/// Raw outcome of sensing one column: no decode attempted.
struct ColumnSense {
  int col = 0;
  int active_cells = 0;
  double v_rbl = 0.0;
  ThermometerCode code;
  double energy_fj = 0.0;
};

struct MacResult {
  int col = 0;
  int count = 0;         // decoded
  int active_cells = 0;  // cells that actually discharged the RBL
  double v_rbl = 0.0;
  ThermometerCode code;
  double energy_fj = 0.0;
};

struct LogicVerdict {
  bool and_bit = false;
  bool nand_bit = true;
  bool nor_bit = true;
  bool or_bit = false;
  bool xor_bit = false;
  bool xnor_bit = true;
  bool sum_bit = false;
  bool carry_bit = false;

  /// Interpretation of a two-row MAC count; CountOutOfRange above 2.
  static LogicVerdict from_count(int count);
};

enum class LogicOp { And, Nand, Or, Nor, Xor, Xnor };

std::string_view to_string(LogicOp op) noexcept;
LogicOp parse_logic_op(std::string_view text);
bool select(const LogicVerdict& v, LogicOp op) noexcept;

struct LogicResult {
  MacResult mac;
  LogicVerdict verdict;
};

struct AddResult {
  bool sum = false;
  bool carry = false;
  MacResult mac;
};

/// An 8T-SRAM compute macro: cell array, per-column RBL analog model and
/// MAC decoder, and energy accounting.
class ImcMacro {
 public:
  explicit ImcMacro(MacroConfig config = {});

  CellArray& array() noexcept { return array_; }
  const CellArray& array() const noexcept { return array_; }
  const MacroConfig& config() const noexcept { return config_; }
  EnergyMode mode() const noexcept { return config_.mode; }
  /// Fitted and scaled to this macro's column height.
  const AnalogParams& analog() const noexcept { return analog_; }
  /// Nominal RBL level per count in the active mode.
  const std::vector<double>& ladder() const noexcept { return ladder_; }
  const ThresholdBank& thresholds() const noexcept { return bank_; }

  /// Nominal or mismatched RBL voltage for the given discharging rows of `col`.
  double column_voltage(int col, std::span<const int> discharging_rows,
                        const Variation* variation = nullptr) const;

  /// Asserts `rwl` on the addressed (already precharged) columns and senses
  /// each RBL. Throws NotPrecharged.
  std::vector<ColumnSense> sense(const BitWord& rwl, std::span<const int> columns,
                                 const Variation* variation = nullptr);
  /// sense() followed by thermometer decode. Throws BubbleError.
  std::vector<MacResult> evaluate(const BitWord& rwl, std::span<const int> columns,
                                  const Variation* variation = nullptr);

  /// Loads b into `col`, precharges it, applies a on the RWLs, decodes.
  MacResult mac_column(int col, const BitWord& a, const BitWord& b,
                       const Variation* variation = nullptr);
  /// Loads b_cols[j] into column j, then evaluates all of them in one window.
  std::vector<MacResult> mac_parallel(const BitWord& a, std::span<const BitWord> b_cols,
                                      const Variation* variation = nullptr);
  /// Precharges every column and evaluates the array contents as stored.
  std::vector<MacResult> evaluate_resident(const BitWord& a, const Variation* variation = nullptr);

  LogicResult logic_pair(bool a_bit, bool b_bit);
  /// Bit pair i goes to rows 0/1 of column i; all pairs share one evaluation.
  std::vector<LogicResult> logic_columns(const BitWord& a, const BitWord& b);
  BitWord logic_word(const BitWord& a, const BitWord& b, LogicOp op);
  std::uint8_t logic_word(std::uint8_t a, std::uint8_t b, LogicOp op);
  AddResult add_1bit(bool a_bit, bool b_bit);

 private:
  BitWord two_row_pattern() const;

  MacroConfig config_;
  CellArray array_;
  AnalogParams analog_;
  std::vector<double> ladder_;
  ThresholdBank bank_;
};

}  // namespace imc

#endif  // IMC_MACRO_HPP
