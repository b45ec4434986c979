// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IMC_CELL_ARRAY_HPP
#define IMC_CELL_ARRAY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "imc/bit_word.hpp"
#include "imc/reference_data.hpp"

namespace imc {

struct ArrayConfig {
  int rows = reference::kRows;
  int cols = reference::kCols;

  void validate() const;
};

/// One-hot select lines of a 3:8 address decoder.
std::vector<bool> decode_address(int addr, int lines = 8);

/// Behavioral 8T-SRAM array. The write port (WL, BL/BLbar) is a direct bit
/// store; the read port is one RBL per column that must be precharged
/// (BLPC) before each evaluation. Evaluation consumes the precharge.
class CellArray {
 public:
  explicit CellArray(ArrayConfig config = {});

  const ArrayConfig& config() const noexcept { return config_; }
  int rows() const noexcept { return config_.rows; }
  int cols() const noexcept { return config_.cols; }

  void write_bit(int row, int col, bool bit);
  bool read_bit(int row, int col) const;

  /// Stores word bit i into row i of `col`, one write cycle per row.
  /// Returns the number of write cycles consumed.
  int load_column_word(int col, const BitWord& word);
  BitWord column_word(int col) const;

  void precharge(int col);
  void precharge_all();
  bool is_precharged(int col) const;

  /// Cells discharging each addressed column: stored 1 AND RWL asserted.
  /// Throws NotPrecharged if any addressed column lacks precharge; on
  /// success the addressed columns' precharge flags are cleared.
  std::vector<int> active_counts(const BitWord& rwl, std::span<const int> columns);
  std::vector<int> active_counts(const BitWord& rwl);

  /// Rows of `col` that discharge under `rwl` (no precharge bookkeeping).
  std::vector<int> discharging_rows(const BitWord& rwl, int col) const;

 private:
  void check_cell(int row, int col) const;
  void check_col(int col) const;
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(config_.cols) +
           static_cast<std::size_t>(col);
  }

  ArrayConfig config_;
  std::vector<std::uint8_t> bits_;
  std::vector<std::uint8_t> precharged_;
};

}  // namespace imc

#endif  // IMC_CELL_ARRAY_HPP
