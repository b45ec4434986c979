// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#include "imc/analog.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "imc/error.hpp"

namespace imc {

namespace {

void require_strictly_decreasing(std::span<const double> ladder, Errc code, const char* what) {
  for (std::size_t i = 1; i < ladder.size(); ++i) {
    if (!(ladder[i] < ladder[i - 1]))
      throw Error(code, std::string(what) + " not strictly decreasing at level " +
                            std::to_string(i));
  }
}

double evaluate(const LogPolynomial& fit, double vdd, double n) {
  return std::clamp(vdd * std::exp(-fit(n)), 0.0, vdd);
}

}  // namespace

void AnalogParams::validate() const {
  if (!(vdd > 0.0)) throw Error(Errc::ConfigInvalid, "vdd must be positive");
  if (!(c_rbl > 0.0)) throw Error(Errc::ConfigInvalid, "c_rbl must be positive");
  if (!(t_eval > 0.0)) throw Error(Errc::ConfigInvalid, "t_eval must be positive");
  if (!(leak_drop >= 0.0 && leak_drop < vdd))
    throw Error(Errc::ConfigInvalid, "leak_drop must lie in [0, vdd)");
}

CalibrationTable CalibrationTable::reference() {
  return {{reference::kVoltageLadder.begin(), reference::kVoltageLadder.end()},
          {reference::kEnergyLadder.begin(), reference::kEnergyLadder.end()}};
}

void CalibrationTable::validate() const {
  if (voltage_by_count.size() < 2)
    throw Error(Errc::ConfigInvalid, "calibration table needs at least two levels");
  if (voltage_by_count.size() != energy_by_count.size())
    throw Error(Errc::ConfigInvalid, "voltage and energy ladders differ in length");
  require_strictly_decreasing(voltage_by_count, Errc::NonMonotoneLadder, "voltage ladder");
  for (std::size_t i = 1; i < energy_by_count.size(); ++i) {
    if (!(energy_by_count[i] > energy_by_count[i - 1]))
      throw Error(Errc::NonMonotoneLadder,
                  "energy ladder not strictly increasing at level " + std::to_string(i));
  }
}

void CapacitanceModel::validate() const {
  if (!(c_fixed >= 0.0) || !(c_per_row >= 0.0))
    throw Error(Errc::ConfigInvalid, "capacitance shares must be non-negative");
  if (!(c_fixed + c_per_row > 0.0))
    throw Error(Errc::ConfigInvalid, "capacitance model is identically zero");
}

double precharge(const AnalogParams& params) { return params.vdd; }

double table_voltage(int count, const CalibrationTable& table) {
  if (count < 0 || count > table.max_count())
    throw Error(Errc::CountOutOfRange, "count " + std::to_string(count) + " outside 0.." +
                                           std::to_string(table.max_count()));
  return table.voltage_by_count[static_cast<std::size_t>(count)];
}

FitReport fit_discharge_model_report(const CalibrationTable& table, const AnalogParams& params,
                                     const FitOptions& options) {
  params.validate();
  const auto& v = table.voltage_by_count;
  if (v.size() < 4)
    throw Error(Errc::FitDiverged,
                "need at least 4 calibration points, got " + std::to_string(v.size()));
  require_strictly_decreasing(v, Errc::NonMonotoneLadder, "voltage ladder");
  for (double x : v) {
    if (!(x > 0.0 && x <= params.vdd))
      throw Error(Errc::FitDiverged, "calibration voltage outside (0, vdd]");
  }

  const auto points = static_cast<Eigen::Index>(v.size());
  Eigen::MatrixXd design(points, 3);
  Eigen::VectorXd target(points);
  for (Eigen::Index i = 0; i < points; ++i) {
    const double n = static_cast<double>(i);
    design(i, 0) = n * n;
    design(i, 1) = n;
    design(i, 2) = 1.0;
    target(i) = -std::log(v[static_cast<std::size_t>(i)] / params.vdd);
  }
  const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(target);
  if (!coef.allFinite()) throw Error(Errc::FitDiverged, "least-squares solve produced non-finite coefficients");

  FitReport report;
  report.params = params;
  report.params.fit = LogPolynomial{coef(0), coef(1), coef(2)};
  const LogPolynomial& fit = *report.params.fit;

  for (std::size_t i = 0; i < v.size(); ++i) {
    const double r = evaluate(fit, params.vdd, static_cast<double>(i)) - v[i];
    report.residuals.push_back(r);
    report.max_abs_residual = std::max(report.max_abs_residual, std::abs(r));
  }
  if (report.max_abs_residual > options.max_residual)
    throw Error(Errc::FitDiverged, "max residual " + std::to_string(report.max_abs_residual * 1e3) +
                                       " mV exceeds " + std::to_string(options.max_residual * 1e3) +
                                       " mV");

  const int span_rows = std::max(options.max_rows, table.max_count());
  require_strictly_decreasing(model_ladder(span_rows, report.params), Errc::NonMonotoneFit,
                              "fitted ladder");
  return report;
}

AnalogParams fit_discharge_model(const CalibrationTable& table, const AnalogParams& params,
                                 const FitOptions& options) {
  return fit_discharge_model_report(table, params, options).params;
}

double model_voltage(double count, const AnalogParams& params) {
  if (!params.fit) throw Error(Errc::ModelUnfitted, "discharge model has no fitted coefficients");
  if (!(count >= 0.0)) throw Error(Errc::CountOutOfRange, "negative active count");
  return evaluate(*params.fit, params.vdd, count);
}

double model_voltage(std::span<const double> strengths, const AnalogParams& params) {
  if (!params.fit) throw Error(Errc::ModelUnfitted, "discharge model has no fitted coefficients");
  double effective = 0.0;
  for (double s : strengths) {
    if (!(s > 0.0)) throw Error(Errc::ConfigInvalid, "cell strength factors must be positive");
    effective += s;
  }
  return evaluate(*params.fit, params.vdd, effective);
}

double capacitance_for_rows(int rows, const CapacitanceModel& cap) {
  if (rows < 1) throw Error(Errc::ConfigInvalid, "rows must be at least 1");
  return cap.c_fixed + rows * cap.c_per_row;
}

AnalogParams scale_for_capacitance(const AnalogParams& params, double c_new) {
  if (!params.fit) throw Error(Errc::ModelUnfitted, "discharge model has no fitted coefficients");
  if (!(c_new > 0.0)) throw Error(Errc::ConfigInvalid, "capacitance must be positive");
  AnalogParams out = params;
  out.fit = params.fit->scaled(params.c_rbl / c_new);
  out.c_rbl = c_new;
  return out;
}

std::vector<double> model_ladder(int rows, const AnalogParams& params) {
  std::vector<double> ladder;
  ladder.reserve(static_cast<std::size_t>(rows) + 1);
  for (int n = 0; n <= rows; ++n) ladder.push_back(model_voltage(n, params));
  return ladder;
}

AnalogParams rescale_params(const AnalogParams& params, int reference_rows, int rows,
                            const CapacitanceModel& cap) {
  if (!params.fit) throw Error(Errc::ModelUnfitted, "discharge model has no fitted coefficients");
  cap.validate();
  const double c_ref = capacitance_for_rows(reference_rows, cap);
  const double c_rows = capacitance_for_rows(rows, cap);
  AnalogParams scaled = params;
  scaled.fit = params.fit->scaled(c_ref / c_rows);
  scaled.c_rbl = params.c_rbl * (c_rows / c_ref);
  return scaled;
}

std::vector<double> rescale_ladder(const CalibrationTable& table, int rows,
                                   const CapacitanceModel& cap, const AnalogParams& params) {
  if (rows < 2) throw Error(Errc::ConfigInvalid, "rescaled ladder needs at least 2 rows");
  auto ladder = model_ladder(rows, rescale_params(params, table.max_count(), rows, cap));
  require_strictly_decreasing(ladder, Errc::NonMonotoneFit, "rescaled ladder");
  return ladder;
}

double min_spacing(std::span<const double> ladder) {
  double m = ladder.size() < 2 ? 0.0 : std::abs(ladder[0] - ladder[1]);
  for (std::size_t i = 1; i + 1 < ladder.size(); ++i)
    m = std::min(m, std::abs(ladder[i] - ladder[i + 1]));
  return m;
}

double max_spacing(std::span<const double> ladder) {
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < ladder.size(); ++i)
    m = std::max(m, std::abs(ladder[i] - ladder[i + 1]));
  return m;
}

}  // namespace imc
