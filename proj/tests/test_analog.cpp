// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "imc/analog.hpp"
#include "imc/error.hpp"

using namespace imc;

namespace {

// Frozen from an independent numpy.linalg.lstsq run on -ln(V/1.8) vs [n^2, n, 1].
constexpr double kQuad = 0.01200638971585564;
constexpr double kLin = 0.1203971699772372;
constexpr double kConst = 0.02738315780873876;
constexpr double kFitted[9] = {1.7513790516078027, 1.5341860002698349, 1.3120405647197866,
                               1.095438226130388,  0.8928939981157616, 0.7105314373049637,
                               0.5519987249721087, 0.4186626649851771, 0.31000005795874214};

AnalogParams fitted() { return fit_discharge_model(CalibrationTable::reference(), AnalogParams{}); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected imc::Error");
  return Errc::IoError;
}

}  // namespace

TEST_CASE("precharge returns the configured rail") {
  CHECK(precharge(AnalogParams{}) == 1.8);
  AnalogParams p;
  p.vdd = 1.0;
  CHECK(precharge(p) == 1.0);
  p.vdd = 0.65;
  CHECK(precharge(p) == 0.65);
}

TEST_CASE("table_voltage reads the reference ladder") {
  const auto t = CalibrationTable::reference();
  CHECK(table_voltage(0, t) == 1.758);
  CHECK(table_voltage(4, t) == 0.895);
  CHECK(table_voltage(8, t) == 0.310);
  CHECK(code_of([&] { table_voltage(9, t); }) == Errc::CountOutOfRange);
  CHECK(code_of([&] { table_voltage(-1, t); }) == Errc::CountOutOfRange);
}

TEST_CASE("calibration table invariants") {
  auto t = CalibrationTable::reference();
  CHECK_NOTHROW(t.validate());
  CHECK(t.max_count() == 8);
  std::swap(t.voltage_by_count[2], t.voltage_by_count[3]);
  CHECK(code_of([&] { t.validate(); }) == Errc::NonMonotoneLadder);
  t = CalibrationTable::reference();
  t.energy_by_count[5] = 1.0;
  CHECK(code_of([&] { t.validate(); }) == Errc::NonMonotoneLadder);
  t = CalibrationTable::reference();
  t.energy_by_count.pop_back();
  CHECK(code_of([&] { t.validate(); }) == Errc::ConfigInvalid);
}

TEST_CASE("fit reproduces the reference ladder") {
  const auto report = fit_discharge_model_report(CalibrationTable::reference(), AnalogParams{});
  const auto& fit = *report.params.fit;
  CHECK(fit.quad == doctest::Approx(kQuad).epsilon(1e-9));
  CHECK(fit.lin == doctest::Approx(kLin).epsilon(1e-9));
  CHECK(fit.constant == doctest::Approx(kConst).epsilon(1e-9));
  CHECK(report.max_abs_residual <= 0.020);
  CHECK(report.max_abs_residual == doctest::Approx(6.62094839219729e-3).epsilon(1e-6));
  for (int n = 0; n <= 8; ++n) {
    CHECK(model_voltage(n, report.params) == doctest::Approx(kFitted[n]).epsilon(1e-9));
    CHECK(std::abs(model_voltage(n, report.params) - CalibrationTable::reference().voltage_by_count[n]) <= 0.020);
  }
}

TEST_CASE("fit of a pure exponential recovers the decay constant") {
  CalibrationTable t;
  for (int n = 0; n <= 8; ++n) {
    t.voltage_by_count.push_back(1.8 * std::pow(0.9, n));
    t.energy_by_count.push_back(10.0 * (n + 1));
  }
  const auto p = fit_discharge_model(t, AnalogParams{});
  CHECK(std::abs(p.fit->quad) < 1e-12);
  CHECK(p.fit->lin == doctest::Approx(-std::log(0.9)).epsilon(1e-12));
  CHECK(std::abs(p.fit->constant) < 1e-12);
}

TEST_CASE("fit rejects degenerate input") {
  CalibrationTable two{{1.7, 1.5}, {1.0, 2.0}};
  CHECK(code_of([&] { fit_discharge_model(two, AnalogParams{}); }) == Errc::FitDiverged);

  // A ladder with a kink no quadratic exponent can follow within 20 mV.
  CalibrationTable kink{{1.75, 1.74, 1.73, 0.6, 0.59, 0.58}, {1, 2, 3, 4, 5, 6}};
  CHECK(code_of([&] { fit_discharge_model(kink, AnalogParams{}); }) == Errc::FitDiverged);

  auto shuffled = CalibrationTable::reference();
  std::swap(shuffled.voltage_by_count[0], shuffled.voltage_by_count[5]);
  CHECK(code_of([&] { fit_discharge_model(shuffled, AnalogParams{}); }) == Errc::NonMonotoneLadder);
}

TEST_CASE("fit flags a curve that turns upward inside the row range") {
  // Concave-up exponent: levels fall then the quadratic turns over past the data.
  CalibrationTable t;
  for (int n = 0; n <= 4; ++n) {
    const double e = 0.6 * n - 0.07 * n * n;
    t.voltage_by_count.push_back(1.8 * std::exp(-e));
    t.energy_by_count.push_back(n + 1.0);
  }
  FitOptions opt;
  opt.max_rows = 8;
  CHECK(code_of([&] { fit_discharge_model(t, AnalogParams{}, opt); }) == Errc::NonMonotoneFit);
}

TEST_CASE("model_voltage contracts") {
  const auto p = fitted();
  CHECK(model_voltage(0, p) == doctest::Approx(1.758).epsilon(0.02 / 1.758));
  const std::vector<double> nominal(8, 1.0);
  CHECK(model_voltage(nominal, p) == model_voltage(8, p));
  const std::vector<double> strong(8, 1.1);
  CHECK(model_voltage(strong, p) < model_voltage(8, p));
  CHECK(model_voltage(strong, p) == doctest::Approx(0.23958035466893246).epsilon(1e-9));

  CHECK(code_of([] { model_voltage(3, AnalogParams{}); }) == Errc::ModelUnfitted);
  const std::vector<double> bad = {1.0, 0.0};
  CHECK(code_of([&] { model_voltage(bad, p); }) == Errc::ConfigInvalid);
}

TEST_CASE("model output is clamped to the rail") {
  auto p = fitted();
  p.fit = LogPolynomial{0.0, -1.0, 0.0};  // rising curve
  CHECK(model_voltage(3, p) == p.vdd);
  p.fit = LogPolynomial{0.0, 1e6, 0.0};
  CHECK(model_voltage(3, p) >= 0.0);
}

TEST_CASE("property: fitted model is strictly decreasing and spacing stays in band") {
  const auto p = fitted();
  for (int i = 0; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) CHECK(model_voltage(i, p) > model_voltage(j, p));
  const auto ladder = model_ladder(8, p);
  CHECK(min_spacing(ladder) >= 0.100);
  CHECK(max_spacing(ladder) <= 0.250);

  const auto& table = CalibrationTable::reference().voltage_by_count;
  CHECK(min_spacing(table) == doctest::Approx(0.108));
  CHECK(max_spacing(table) == doctest::Approx(0.230));
  CHECK(min_spacing(table) >= 0.100);
  CHECK(max_spacing(table) <= 0.250);
}

TEST_CASE("property: random strength vectors stay in [0, vdd] and are monotone in total strength") {
  const auto p = fitted();
  std::mt19937 rng(7);
  std::normal_distribution<double> jitter(1.0, 0.3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> s(static_cast<std::size_t>(rng() % 9));
    for (auto& x : s) x = std::max(1e-3, jitter(rng));
    const double v = model_voltage(s, p);
    CHECK(v >= 0.0);
    CHECK(v <= p.vdd);
    auto stronger = s;
    for (auto& x : stronger) x *= 1.05;
    if (!s.empty()) CHECK(model_voltage(stronger, p) < v);
  }
}

TEST_CASE("capacitance model") {
  const CapacitanceModel def;
  CHECK(capacitance_for_rows(8, def) == doctest::Approx(200e-15).epsilon(1e-12));
  CHECK(capacitance_for_rows(16, {0.0, 25e-15}) == doctest::Approx(400e-15).epsilon(1e-12));
  CHECK(capacitance_for_rows(1, {40e-15, 20e-15}) == doctest::Approx(60e-15).epsilon(1e-12));
  CHECK(code_of([&] { capacitance_for_rows(0, def); }) == Errc::ConfigInvalid);
}

TEST_CASE("rescale_ladder follows capacitance") {
  const auto t = CalibrationTable::reference();
  const auto p = fitted();

  const auto same = rescale_ladder(t, 8, CapacitanceModel{}, p);
  REQUIRE(same.size() == 9);
  for (int n = 0; n <= 8; ++n) CHECK(std::abs(same[n] - t.voltage_by_count[n]) <= 0.020);

  // 16 rows at 25 fF/row doubles the load relative to 8 rows.
  const CapacitanceModel per_row{0.0, 25e-15};
  const auto eight = rescale_ladder(t, 8, per_row, p);
  const auto sixteen = rescale_ladder(t, 16, per_row, p);
  const auto four = rescale_ladder(t, 4, per_row, p);
  REQUIRE(sixteen.size() == 17);
  REQUIRE(four.size() == 5);
  for (int n = 0; n < 3; ++n) {
    CHECK(sixteen[n] - sixteen[n + 1] < eight[n] - eight[n + 1]);
    CHECK(four[n] - four[n + 1] > eight[n] - eight[n + 1]);
  }

  // Frozen from the numpy oracle with the default 40 fF + 20 fF/row split.
  CHECK(min_spacing(rescale_ladder(t, 4, CapacitanceModel{}, p)) == doctest::Approx(0.22715678251692984).epsilon(1e-9));
  CHECK(min_spacing(rescale_ladder(t, 16, CapacitanceModel{}, p)) == doctest::Approx(0.03469699404211583).epsilon(1e-9));
  CHECK(min_spacing(rescale_ladder(t, 32, CapacitanceModel{}, p)) == doctest::Approx(0.004548304923744499).epsilon(1e-9));

  CHECK(code_of([&] { rescale_ladder(t, 1, CapacitanceModel{}, p); }) == Errc::ConfigInvalid);
  CHECK(code_of([&] { rescale_ladder(t, 8, CapacitanceModel{}, AnalogParams{}); }) == Errc::ModelUnfitted);
}

TEST_CASE("analog params validation") {
  AnalogParams p;
  CHECK_NOTHROW(p.validate());
  CHECK(p.leak_drop == doctest::Approx(0.042));
  p.c_rbl = 0.0;
  CHECK(code_of([&] { p.validate(); }) == Errc::ConfigInvalid);
  p = {};
  p.leak_drop = 2.0;
  CHECK(code_of([&] { p.validate(); }) == Errc::ConfigInvalid);
}
