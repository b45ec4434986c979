// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IMC_CLI_HPP
#define IMC_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "imc/metrics.hpp"

namespace imc::cli {

struct CommonOptions {
  int rows = reference::kRows;
  int cols = reference::kCols;
  std::string mode = "table";
  std::string calib;       // calibration table path; built-in reference when empty
  std::string thresholds;  // threshold bank path; midpoints when empty
};

struct MacOptions {
  CommonOptions common;
  std::string a;
  std::vector<std::string> b;  // one word per column, column 0 first
  std::string load_array;
};

struct LogicOptions {
  CommonOptions common;
  std::string a;
  std::string b;
  std::string op;  // all ops when empty
};

struct AddOptions {
  CommonOptions common;
  int a = 0;
  int b = 0;
};

struct McOptions {
  CommonOptions common;
  int count = reference::kRows;
  int trials = reference::kMcSamples;
  std::uint64_t seed = 1;
  double sigma_cell = 0.0;
  double sigma_comp = 0.0;  // V
  double sigma_energy = 0.0;
  std::optional<double> energy_mean;  // fJ
  bool reference_calibration = false;
  int bins = 20;
  int threads = 1;
  std::string dump_trials;
};

struct SweepOptions {
  CommonOptions common;
  std::vector<int> rows = {4, 8, 16};
  double c_fixed_ff = 40.0;
  double c_per_row_ff = 20.0;
  double floor_mv = 100.0;
};

struct CalibrateOptions {
  CommonOptions common;
  std::string params_out;
  std::string thresholds_out;
};

struct ReportOptions {
  CommonOptions common;
};

// Each command returns its report text; failures throw imc::Error.
std::string cmd_mac(const MacOptions& o);
std::string cmd_logic(const LogicOptions& o);
std::string cmd_add(const AddOptions& o);
std::string cmd_mc(const McOptions& o);
std::string cmd_sweep_rows(const SweepOptions& o);
std::string cmd_calibrate(const CalibrateOptions& o);
std::string cmd_report(const ReportOptions& o);

}  // namespace imc::cli

#endif  // IMC_CLI_HPP
