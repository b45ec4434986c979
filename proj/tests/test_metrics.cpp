// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "imc/error.hpp"
#include "imc/metrics.hpp"

using namespace imc;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected imc::Error");
  return Errc::IoError;
}

AnalogParams fitted() { return fit_discharge_model(CalibrationTable::reference(), AnalogParams{}); }

}  // namespace

TEST_CASE("table energies") {
  const auto t = CalibrationTable::reference();
  CHECK(energy_of_count(2, t, EnergyMode::Table) == 212.7);
  CHECK(energy_of_count(0, t, EnergyMode::Table) == 5.369);
  CHECK(energy_of_count(8, t, EnergyMode::Table) == 452.2);
  CHECK(code_of([&] { energy_of_count(9, t, EnergyMode::Table); }) == Errc::CountOutOfRange);
  CHECK(code_of([&] { energy_of_count(-1, t, EnergyMode::Table); }) == Errc::CountOutOfRange);
}

TEST_CASE("parametric energy is C*VDD*dV") {
  const auto t = CalibrationTable::reference();
  AnalogParams p = fitted();
  CHECK(parametric_energy(0.310, p) == doctest::Approx(536.4).epsilon(1e-12));
  CHECK(energy_of_count(8, t, EnergyMode::Parametric, p) == doctest::Approx(536.399979134853).epsilon(1e-9));
  const auto r = energy_report(8, 8, t, EnergyMode::Parametric, p);
  CHECK(r.approximate);
  CHECK_FALSE(energy_report(8, 8, t, EnergyMode::Table).approximate);
  CHECK(code_of([&] { energy_of_count(3, t, EnergyMode::Parametric, AnalogParams{}); }) == Errc::ModelUnfitted);
}

TEST_CASE("property: energy strictly increases with count in both modes") {
  const auto t = CalibrationTable::reference();
  const auto p = fitted();
  for (int n = 1; n <= 8; ++n) {
    CHECK(energy_of_count(n, t, EnergyMode::Table) > energy_of_count(n - 1, t, EnergyMode::Table));
    CHECK(energy_of_count(n, t, EnergyMode::Parametric, p) >
          energy_of_count(n - 1, t, EnergyMode::Parametric, p));
  }
}

TEST_CASE("logic energies equal the MAC energies of the same count") {
  const auto t = CalibrationTable::reference();
  CHECK(energy_of_logic(2, t) == 212.7);
  CHECK(energy_of_logic(0, t) == 5.369);
  CHECK(energy_of_logic(1, t) == 119.3);
  for (int k = 0; k <= 2; ++k) CHECK(energy_of_logic(k, t) == energy_of_count(k, t, EnergyMode::Table));
  CHECK(code_of([&] { energy_of_logic(3, t); }) == Errc::CountOutOfRange);
}

TEST_CASE("latency and throughput") {
  TimingModel t;
  CHECK(operation_latency(t) == doctest::Approx(63e-9).epsilon(1e-15));
  CHECK(throughput(t) == doctest::Approx(15.873015873e6).epsilon(1e-9));
  CHECK(throughput(t) * operation_latency(t) == 1.0);
  CHECK(std::abs(throughput(t) - 15.8e6) / 15.8e6 < 0.01);

  t.clock_period = 10e-9;
  CHECK(operation_latency(t) == doctest::Approx(90e-9));
  CHECK(throughput(t) == doctest::Approx(11.111111e6));

  TimingModel reuse;
  reuse.write_cycles = 0;
  CHECK(operation_latency(reuse) == doctest::Approx(7e-9));
  CHECK(throughput(reuse) == doctest::Approx(142.857142857e6));

  TimingModel bad;
  bad.eval_window = 8e-9;
  CHECK(code_of([&] { bad.validate(); }) == Errc::ConfigInvalid);
}

TEST_CASE("energy per bit") {
  CHECK(energy_per_bit(452.2, 8) == doctest::Approx(56.525).epsilon(1e-12));
  CHECK(energy_per_bit(0.0, 8) == 0.0);
  CHECK(energy_per_bit(119.3, 1) == 119.3);
  CHECK(code_of([] { energy_per_bit(1.0, 0); }) == Errc::ConfigInvalid);
  // Published rounding differs by well under 0.1 %.
  CHECK(std::abs(energy_per_bit(452.2, 8) - 56.56) / 56.56 < 0.001);
}

TEST_CASE("mode names") {
  CHECK(parse_energy_mode("table") == EnergyMode::Table);
  CHECK(parse_energy_mode("parametric") == EnergyMode::Parametric);
  CHECK(code_of([] { parse_energy_mode("spice"); }) == Errc::ParseError);
}
