// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IMC_ANALOG_HPP
#define IMC_ANALOG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "imc/reference_data.hpp"

namespace imc {

/// Exponent of the discharge law, V(n) = vdd * exp(-(quad*n^2 + lin*n + constant)).
struct LogPolynomial {
  double quad = 0.0;
  double lin = 0.0;
  double constant = 0.0;

  double operator()(double n) const noexcept { return (quad * n + lin) * n + constant; }
  LogPolynomial scaled(double factor) const noexcept {
    return {quad * factor, lin * factor, constant * factor};
  }
};

struct AnalogParams {
  double vdd = reference::kVdd;                  // V
  double c_rbl = reference::kRblCapacitance;     // F
  double t_eval = reference::kEvalWindow;        // s
  double leak_drop = reference::kVdd - reference::kVoltageLadder[0];  // V, reporting only
  std::optional<LogPolynomial> fit;

  /// Throws ConfigInvalid when a physical field is out of range.
  void validate() const;
  bool fitted() const noexcept { return fit.has_value(); }
};

/// Voltage and energy ladders indexed by MAC count.
struct CalibrationTable {
  std::vector<double> voltage_by_count;  // V
  std::vector<double> energy_by_count;   // fJ

  static CalibrationTable reference();

  /// Highest representable count (ladder length - 1).
  int max_count() const noexcept { return static_cast<int>(voltage_by_count.size()) - 1; }

  /// Voltage strictly decreasing and energy strictly increasing, equal lengths,
  /// at least two levels. Throws NonMonotoneLadder or ConfigInvalid.
  void validate() const;
};

/// RBL load as a fixed wiring share plus per-row drain loading.
struct CapacitanceModel {
  double c_fixed = 40e-15;
  double c_per_row = 20e-15;

  void validate() const;
};

struct FitOptions {
  double max_residual = 0.020;  // V
  int max_rows = reference::kRows;
};

struct FitReport {
  AnalogParams params;
  std::vector<double> residuals;  // V, fitted minus table
  double max_abs_residual = 0.0;
};

double precharge(const AnalogParams& params);

double table_voltage(int count, const CalibrationTable& table);

/// Least-squares fit of -ln(V/vdd) to a quadratic in the count.
/// Throws FitDiverged when the residual bound is missed (or with fewer than
/// four points) and NonMonotoneFit when the curve is not strictly decreasing
/// over 0..max(max_rows, table levels).
FitReport fit_discharge_model_report(const CalibrationTable& table, const AnalogParams& params,
                                     const FitOptions& options = {});
AnalogParams fit_discharge_model(const CalibrationTable& table, const AnalogParams& params,
                                 const FitOptions& options = {});

/// Nominal RBL voltage for `count` active cells, clamped to [0, vdd].
double model_voltage(double count, const AnalogParams& params);
/// Each active cell contributes its strength factor to the effective count.
double model_voltage(std::span<const double> strengths, const AnalogParams& params);

double capacitance_for_rows(int rows, const CapacitanceModel& cap);

/// Re-targets fitted params to a new RBL capacitance; the discharge exponent
/// is inversely proportional to the load.
AnalogParams scale_for_capacitance(const AnalogParams& params, double c_new);

/// Params for a column `rows` cells high, given params fitted on a
/// `reference_rows`-high column: the exponent scales by C(reference_rows)/C(rows).
AnalogParams rescale_params(const AnalogParams& params, int reference_rows, int rows,
                            const CapacitanceModel& cap);

/// Predicted ladder (counts 0..rows) for a column `rows` cells high.
std::vector<double> rescale_ladder(const CalibrationTable& table, int rows,
                                   const CapacitanceModel& cap, const AnalogParams& params);

/// Ladder of the fitted model at the params' own capacitance.
std::vector<double> model_ladder(int rows, const AnalogParams& params);

/// Smallest gap between adjacent levels.
double min_spacing(std::span<const double> ladder);
double max_spacing(std::span<const double> ladder);

}  // namespace imc

#endif  // IMC_ANALOG_HPP
