// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

// Measured characteristics of the reference 8x8 8T-SRAM macro
// (90 nm, 1.8 V, 200 fF RBL load).

#ifndef IMC_REFERENCE_DATA_HPP
#define IMC_REFERENCE_DATA_HPP

#include <array>

namespace imc::reference {

inline constexpr int kRows = 8;
inline constexpr int kCols = 8;
inline constexpr double kVdd = 1.8;
inline constexpr double kRblCapacitance = 200e-15;
inline constexpr double kEvalWindow = 0.7e-9;
inline constexpr double kClockHz = 142.85e6;

// RBL voltage (V) after the evaluation window, indexed by MAC count.
inline constexpr std::array<double, 9> kVoltageLadder = {
    1.758, 1.528, 1.308, 1.096, 0.895, 0.712, 0.552, 0.418, 0.310};

// RBL energy (fJ) per evaluation, indexed by MAC count.
inline constexpr std::array<double, 9> kEnergyLadder = {
    5.369, 119.3, 212.7, 288.5, 347.9, 391.6, 421.5, 440.7, 452.2};

inline constexpr double kLatency = 63e-9;
inline constexpr double kThroughput = 15.8e6;
inline constexpr double kEnergyPerBit = 56.56;  // fJ/bit, as published (452.2 / 8 = 56.525)

// 200-sample Monte Carlo at MAC count 8.
inline constexpr double kMcEnergyMean = 437.0;
inline constexpr double kMcEnergySigma = 48.72;
inline constexpr int kMcSamples = 200;

}  // namespace imc::reference

#endif  // IMC_REFERENCE_DATA_HPP
