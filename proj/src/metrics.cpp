// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#include "imc/metrics.hpp"

#include <string>

#include "imc/error.hpp"

namespace imc {

std::string_view to_string(EnergyMode mode) noexcept {
  return mode == EnergyMode::Table ? "table" : "parametric";
}

EnergyMode parse_energy_mode(std::string_view text) {
  if (text == "table") return EnergyMode::Table;
  if (text == "parametric") return EnergyMode::Parametric;
  throw Error(Errc::ParseError, "unknown mode '" + std::string(text) + "' (table|parametric)");
}

void TimingModel::validate() const {
  if (!(clock_period > 0.0)) throw Error(Errc::ConfigInvalid, "clock period must be positive");
  if (write_cycles < 0 || precharge_cycles < 0)
    throw Error(Errc::ConfigInvalid, "cycle counts must be non-negative");
  if (write_cycles + precharge_cycles < 1)
    throw Error(Errc::ConfigInvalid, "schedule needs at least one cycle");
  if (!(eval_window > 0.0 && eval_window < clock_period))
    throw Error(Errc::ConfigInvalid, "evaluation window must be positive and shorter than a clock");
}

double parametric_energy(double v_final, const AnalogParams& params) {
  return params.c_rbl * params.vdd * (params.vdd - v_final) * 1e15;
}

double energy_of_count(int count, const CalibrationTable& table, EnergyMode mode,
                       const AnalogParams& params) {
  if (count < 0) throw Error(Errc::CountOutOfRange, "negative MAC count");
  if (mode == EnergyMode::Parametric) return parametric_energy(model_voltage(count, params), params);
  if (count > table.max_count() ||
      static_cast<std::size_t>(count) >= table.energy_by_count.size())
    throw Error(Errc::CountOutOfRange, "count " + std::to_string(count) + " outside 0.." +
                                           std::to_string(table.max_count()));
  return table.energy_by_count[static_cast<std::size_t>(count)];
}

double energy_of_logic(int op_count, const CalibrationTable& table) {
  if (op_count < 0 || op_count > 2)
    throw Error(Errc::CountOutOfRange,
                "logic evaluation count " + std::to_string(op_count) + " outside 0..2");
  return energy_of_count(op_count, table, EnergyMode::Table);
}

double operation_latency(const TimingModel& t) {
  t.validate();
  return (t.write_cycles + t.precharge_cycles) * t.clock_period;
}

double throughput(const TimingModel& t) { return 1.0 / operation_latency(t); }

double energy_per_bit(double total_fj, int bits) {
  if (bits < 1) throw Error(Errc::ConfigInvalid, "bit width must be at least 1");
  return total_fj / bits;
}

EnergyReport energy_report(int count, int operand_bits, const CalibrationTable& table,
                           EnergyMode mode, const AnalogParams& params) {
  EnergyReport r;
  r.mode = mode;
  r.approximate = mode == EnergyMode::Parametric;
  r.total_fj = energy_of_count(count, table, mode, params);
  r.per_bit_fj = energy_per_bit(r.total_fj, operand_bits);
  return r;
}

}  // namespace imc
