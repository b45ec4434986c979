// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IMC_METRICS_HPP
#define IMC_METRICS_HPP

#include <string_view>

#include "imc/analog.hpp"

namespace imc {

enum class EnergyMode { Table, Parametric };

std::string_view to_string(EnergyMode mode) noexcept;
/// Accepts "table" or "parametric"; ParseError otherwise.
EnergyMode parse_energy_mode(std::string_view text);

/// Operand load (one write cycle per row), one precharge cycle, and the RWL
/// evaluation window inside the precharge cycle's successor edge.
struct TimingModel {
  double clock_period = 7.0e-9;  // s; 1 / 142.85 MHz rounded to the 7 ns the schedule uses
  int write_cycles = reference::kRows;
  int precharge_cycles = 1;
  double eval_window = reference::kEvalWindow;  // s

  void validate() const;
};

struct EnergyReport {
  double total_fj = 0.0;
  double per_bit_fj = 0.0;
  EnergyMode mode = EnergyMode::Table;
  bool approximate = false;  // set for the closed-form C*V*dV estimate
};

/// C * VDD * (VDD - v_final), in fJ.
double parametric_energy(double v_final, const AnalogParams& params);

/// Table mode: the tabulated energy. Parametric mode: C*VDD*dV at the fitted
/// model voltage for `count`. CountOutOfRange for negative counts and, in
/// table mode, counts past the table.
double energy_of_count(int count, const CalibrationTable& table, EnergyMode mode,
                       const AnalogParams& params = {});

/// Energy of a two-row logic evaluation; CountOutOfRange above 2.
double energy_of_logic(int op_count, const CalibrationTable& table);

double operation_latency(const TimingModel& t);
double throughput(const TimingModel& t);
double energy_per_bit(double total_fj, int bits);

EnergyReport energy_report(int count, int operand_bits, const CalibrationTable& table,
                           EnergyMode mode, const AnalogParams& params = {});

}  // namespace imc

#endif  // IMC_METRICS_HPP
