// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IMC_MONTECARLO_HPP
#define IMC_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "imc/macro.hpp"

namespace imc {

struct McConfig {
  int n_trials = reference::kMcSamples;
  double sigma_cell = 0.0;    // relative std-dev of per-cell discharge strength
  double sigma_comp = 0.0;    // comparator offset std-dev, V
  double sigma_energy = 0.0;  // relative std-dev of table-mode energy
  std::optional<double> energy_mean_fj;  // table value when absent
  std::uint64_t seed = 1;
  int histogram_bins = 20;
  int threads = 1;

  /// Energy spread centred on the 437 fJ / 48.72 fJ Monte Carlo reference.
  static McConfig reference_calibrated();
  void validate() const;
};

/// Column 0 holds `mac_count` ones in its top rows; RWL is all ones.
struct McScenario {
  int mac_count = reference::kRows;
  MacroConfig macro;
};

struct TrialRecord {
  int trial = 0;
  double v_rbl = 0.0;
  ThermometerCode code;
  std::optional<int> decoded;  // empty on a bubble
  double energy_fj = 0.0;

  bool decode_error(int expected) const noexcept { return !decoded || *decoded != expected; }
};

struct Histogram {
  std::vector<double> edges;  // bins + 1 edges, fJ
  std::vector<int> counts;
};

struct McStats {
  double mean_fj = 0.0;
  double std_fj = 0.0;  // sample std-dev, n-1 denominator
  double decode_error_rate = 0.0;
  int bubble_count = 0;
  Histogram histogram;
};

struct McRun {
  McStats stats;
  std::vector<TrialRecord> trials;
};

/// Each trial draws its own stream from (seed, trial index), so results do
/// not depend on thread count or execution order.
McRun run_trials(const McConfig& config, const McScenario& scenario);

/// Decode-error rate per comparator-offset sigma. Common random numbers:
/// every sweep point reuses the same standard normals.
std::vector<std::pair<double, double>> decode_error_curve(int count, std::span<const double> sigmas,
                                                          const McConfig& base,
                                                          const MacroConfig& macro = {});

Histogram make_histogram(std::span<const double> values, int bins);

}  // namespace imc

#endif  // IMC_MONTECARLO_HPP
