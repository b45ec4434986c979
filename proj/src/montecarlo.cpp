// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#include "imc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <string>
#include <thread>

#include "imc/error.hpp"

namespace imc {

namespace {

constexpr double kMinStrength = 1e-9;

std::mt19937_64 trial_engine(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), 0x8a5cd789U};
  return std::mt19937_64(seq);
}

TrialRecord run_one(const ImcMacro& prototype, const McConfig& config, int trial) {
  auto engine = trial_engine(config.seed, trial);
  std::normal_distribution<double> normal(0.0, 1.0);

  ImcMacro macro = prototype;
  const int rows = macro.array().rows();
  const int cols = macro.array().cols();
  const std::size_t comparators = macro.thresholds().size();

  // Fixed draw order: comparators, cells of column 0, energy.
  Variation variation;
  variation.comparator_offset.assign(comparators * static_cast<std::size_t>(cols), 0.0);
  for (std::size_t i = 0; i < comparators; ++i)
    variation.comparator_offset[i] = config.sigma_comp * normal(engine);
  std::vector<double> cell_z(static_cast<std::size_t>(rows));
  for (auto& z : cell_z) z = normal(engine);
  const double energy_z = normal(engine);

  if (config.sigma_cell > 0.0) {
    variation.cell_strength.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 1.0);
    for (int r = 0; r < rows; ++r)
      variation.cell_strength[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols)] =
          std::max(1.0 + config.sigma_cell * cell_z[static_cast<std::size_t>(r)], kMinStrength);
  }

  macro.array().precharge(0);
  const int col0[] = {0};
  const BitWord rwl(static_cast<std::size_t>(rows), true);
  ColumnSense sensed = macro.sense(rwl, col0, &variation).front();

  TrialRecord rec;
  rec.trial = trial;
  rec.v_rbl = sensed.v_rbl;
  rec.code = std::move(sensed.code);
  if (rec.code.is_valid()) rec.decoded = to_count(rec.code);

  const double base = config.energy_mean_fj.value_or(sensed.energy_fj);
  rec.energy_fj = base + config.sigma_energy * base * energy_z;
  return rec;
}

}  // namespace

McConfig McConfig::reference_calibrated() {
  McConfig c;
  c.energy_mean_fj = reference::kMcEnergyMean;
  c.sigma_energy = reference::kMcEnergySigma / reference::kMcEnergyMean;
  return c;
}

void McConfig::validate() const {
  if (n_trials < 1) throw Error(Errc::ConfigInvalid, "n_trials must be at least 1");
  for (double s : {sigma_cell, sigma_comp, sigma_energy})
    if (!(s >= 0.0) || !std::isfinite(s))
      throw Error(Errc::ConfigInvalid, "sigmas must be finite and non-negative");
  if (energy_mean_fj && !(*energy_mean_fj > 0.0 && std::isfinite(*energy_mean_fj)))
    throw Error(Errc::ConfigInvalid, "energy mean must be positive");
  if (histogram_bins < 1) throw Error(Errc::ConfigInvalid, "histogram needs at least one bin");
  if (threads < 1) throw Error(Errc::ConfigInvalid, "threads must be at least 1");
}

Histogram make_histogram(std::span<const double> values, int bins) {
  if (bins < 1) throw Error(Errc::ConfigInvalid, "histogram needs at least one bin");
  Histogram h;
  if (values.empty()) return h;
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it, hi = *hi_it;
  if (!(hi > lo)) {
    h.edges = {lo, hi};
    h.counts = {static_cast<int>(values.size())};
    return h;
  }
  const double width = (hi - lo) / bins;
  for (int i = 0; i < bins; ++i) h.edges.push_back(lo + i * width);
  h.edges.push_back(hi);
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double v : values) {
    const int idx = std::min(static_cast<int>((v - lo) / width), bins - 1);
    ++h.counts[static_cast<std::size_t>(idx)];
  }
  return h;
}

McRun run_trials(const McConfig& config, const McScenario& scenario) {
  config.validate();
  scenario.macro.array.validate();
  const int rows = scenario.macro.array.rows;
  if (scenario.mac_count < 0 || scenario.mac_count > rows)
    throw Error(Errc::ConfigInvalid, "MAC count " + std::to_string(scenario.mac_count) +
                                         " outside 0.." + std::to_string(rows));

  ImcMacro prototype(scenario.macro);
  prototype.array().load_column_word(
      0, BitWord::prefix_ones(static_cast<std::size_t>(scenario.mac_count), static_cast<std::size_t>(rows)));

  McRun run;
  run.trials.resize(static_cast<std::size_t>(config.n_trials));
  const int workers = std::min(config.threads, config.n_trials);
  if (workers == 1) {
    for (int t = 0; t < config.n_trials; ++t)
      run.trials[static_cast<std::size_t>(t)] = run_one(prototype, config, t);
  } else {
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
    {
      std::vector<std::jthread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (int t = w; t < config.n_trials; t += workers)
              run.trials[static_cast<std::size_t>(t)] = run_one(prototype, config, t);
          } catch (...) {
            failures[static_cast<std::size_t>(w)] = std::current_exception();
          }
        });
      }
    }
    for (auto& f : failures)
      if (f) std::rethrow_exception(f);
  }

  std::vector<double> energies;
  energies.reserve(run.trials.size());
  int errors = 0;
  for (const auto& r : run.trials) {
    energies.push_back(r.energy_fj);
    if (!r.decoded) ++run.stats.bubble_count;
    if (r.decode_error(scenario.mac_count)) ++errors;
  }
  const double n = static_cast<double>(energies.size());
  // Shifted by the first sample: a constant stream yields its value exactly.
  const double pivot = energies.front();
  double shifted = 0.0;
  for (double e : energies) shifted += e - pivot;
  run.stats.mean_fj = pivot + shifted / n;
  double ss = 0.0;
  for (double e : energies) ss += (e - run.stats.mean_fj) * (e - run.stats.mean_fj);
  run.stats.std_fj = energies.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  run.stats.decode_error_rate = errors / n;
  run.stats.histogram = make_histogram(energies, config.histogram_bins);
  return run;
}

std::vector<std::pair<double, double>> decode_error_curve(int count, std::span<const double> sigmas,
                                                          const McConfig& base,
                                                          const MacroConfig& macro) {
  std::vector<std::pair<double, double>> curve;
  for (double sigma : sigmas) {
    McConfig c = base;
    c.sigma_comp = sigma;
    curve.emplace_back(sigma, run_trials(c, McScenario{count, macro}).stats.decode_error_rate);
  }
  return curve;
}

}  // namespace imc
