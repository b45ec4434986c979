// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#include "imc/cell_array.hpp"

#include <numeric>
#include <string>

#include "imc/error.hpp"

namespace imc {

void ArrayConfig::validate() const {
  if (rows < 1 || cols < 1)
    throw Error(Errc::ConfigInvalid, "array dimensions must be positive, got " +
                                         std::to_string(rows) + "x" + std::to_string(cols));
}

std::vector<bool> decode_address(int addr, int lines) {
  if (addr < 0 || addr >= lines)
    throw Error(Errc::AddressOutOfRange,
                "address " + std::to_string(addr) + " outside 0.." + std::to_string(lines - 1));
  std::vector<bool> select(static_cast<std::size_t>(lines), false);
  select[static_cast<std::size_t>(addr)] = true;
  return select;
}

CellArray::CellArray(ArrayConfig config) : config_(config) {
  config_.validate();
  bits_.assign(static_cast<std::size_t>(config_.rows) * static_cast<std::size_t>(config_.cols), 0);
  precharged_.assign(static_cast<std::size_t>(config_.cols), 0);
}

void CellArray::check_cell(int row, int col) const {
  if (row < 0 || row >= config_.rows)
    throw Error(Errc::AddressOutOfRange,
                "row " + std::to_string(row) + " outside 0.." + std::to_string(config_.rows - 1));
  check_col(col);
}

void CellArray::check_col(int col) const {
  if (col < 0 || col >= config_.cols)
    throw Error(Errc::AddressOutOfRange,
                "column " + std::to_string(col) + " outside 0.." + std::to_string(config_.cols - 1));
}

void CellArray::write_bit(int row, int col, bool bit) {
  check_cell(row, col);
  bits_[index(row, col)] = bit ? 1 : 0;
}

bool CellArray::read_bit(int row, int col) const {
  check_cell(row, col);
  return bits_[index(row, col)] != 0;
}

int CellArray::load_column_word(int col, const BitWord& word) {
  check_col(col);
  if (word.size() != static_cast<std::size_t>(config_.rows))
    throw Error(Errc::WordLengthMismatch, "column word has " + std::to_string(word.size()) +
                                              " bits, array has " + std::to_string(config_.rows) +
                                              " rows");
  int cycles = 0;
  for (int r = 0; r < config_.rows; ++r, ++cycles) write_bit(r, col, word[static_cast<std::size_t>(r)]);
  return cycles;
}

BitWord CellArray::column_word(int col) const {
  check_col(col);
  BitWord w(static_cast<std::size_t>(config_.rows));
  for (int r = 0; r < config_.rows; ++r) w.set(static_cast<std::size_t>(r), bits_[index(r, col)] != 0);
  return w;
}

void CellArray::precharge(int col) {
  check_col(col);
  precharged_[static_cast<std::size_t>(col)] = 1;
}

void CellArray::precharge_all() { precharged_.assign(precharged_.size(), 1); }

bool CellArray::is_precharged(int col) const {
  check_col(col);
  return precharged_[static_cast<std::size_t>(col)] != 0;
}

std::vector<int> CellArray::discharging_rows(const BitWord& rwl, int col) const {
  check_col(col);
  if (rwl.size() != static_cast<std::size_t>(config_.rows))
    throw Error(Errc::WordLengthMismatch, "RWL pattern has " + std::to_string(rwl.size()) +
                                              " bits, array has " + std::to_string(config_.rows) +
                                              " rows");
  std::vector<int> out;
  for (int r = 0; r < config_.rows; ++r)
    if (rwl[static_cast<std::size_t>(r)] && bits_[index(r, col)]) out.push_back(r);
  return out;
}

std::vector<int> CellArray::active_counts(const BitWord& rwl, std::span<const int> columns) {
  if (rwl.size() != static_cast<std::size_t>(config_.rows))
    throw Error(Errc::WordLengthMismatch, "RWL pattern has " + std::to_string(rwl.size()) +
                                              " bits, array has " + std::to_string(config_.rows) +
                                              " rows");
  for (int c : columns) {
    if (!is_precharged(c))
      throw Error(Errc::NotPrecharged, "column " + std::to_string(c) + " evaluated without precharge");
  }
  std::vector<int> counts;
  counts.reserve(columns.size());
  for (int c : columns) {
    int n = 0;
    for (int r = 0; r < config_.rows; ++r)
      n += (rwl[static_cast<std::size_t>(r)] && bits_[index(r, c)]) ? 1 : 0;
    counts.push_back(n);
  }
  for (int c : columns) precharged_[static_cast<std::size_t>(c)] = 0;
  return counts;
}

std::vector<int> CellArray::active_counts(const BitWord& rwl) {
  std::vector<int> all(static_cast<std::size_t>(config_.cols));
  std::iota(all.begin(), all.end(), 0);
  return active_counts(rwl, all);
}

}  // namespace imc
