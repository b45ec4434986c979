// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

// imcsim: command-line front end for the 8T-SRAM compute-in-memory model.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "imc/cli.hpp"
#include "imc/error.hpp"
#include "imc/text_format.hpp"

namespace {

void add_common(CLI::App* cmd, imc::cli::CommonOptions& o, bool with_rows = true) {
  if (with_rows) cmd->add_option("--rows", o.rows, "Array rows")->check(CLI::PositiveNumber);
  cmd->add_option("--cols", o.cols, "Array columns")->check(CLI::PositiveNumber);
  cmd->add_option("--mode", o.mode, "Voltage/energy source")
      ->check(CLI::IsMember({"table", "parametric"}));
  cmd->add_option("--calib", o.calib, "Calibration table file")->check(CLI::ExistingFile);
  cmd->add_option("--thresholds", o.thresholds, "Threshold bank file")->check(CLI::ExistingFile);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Behavioral simulator for an 8T-SRAM charge-domain compute-in-memory array"};
  app.require_subcommand(1);
  std::string out_path;

  imc::cli::MacOptions mac;
  auto* mac_cmd = app.add_subcommand("mac", "Binary MAC: store B per column, apply A on the RWLs");
  add_common(mac_cmd, mac.common);
  mac_cmd->add_option("--a", mac.a, "RWL operand, row 0 first")->required();
  mac_cmd->add_option("--b", mac.b, "Column operand(s), row 0 first; comma separated for several columns")
      ->delimiter(',');
  mac_cmd->add_option("--load-array", mac.load_array, "Array image to evaluate instead of --b")
      ->check(CLI::ExistingFile);
  mac_cmd->add_option("--out", out_path, "Also write the report here");

  imc::cli::LogicOptions logic;
  auto* logic_cmd = app.add_subcommand("logic", "Bitwise AND/NAND/OR/NOR/XOR/XNOR from one MAC evaluation");
  add_common(logic_cmd, logic.common);
  logic_cmd->add_option("--a", logic.a, "First operand word")->required();
  logic_cmd->add_option("--b", logic.b, "Second operand word")->required();
  logic_cmd->add_option("--op", logic.op, "Restrict output to one operation");
  logic_cmd->add_option("--out", out_path, "Also write the report here");

  imc::cli::AddOptions add;
  auto* add_cmd = app.add_subcommand("add", "1-bit addition from one MAC evaluation");
  add_common(add_cmd, add.common);
  add_cmd->add_option("--a", add.a, "Bit A")->required();
  add_cmd->add_option("--b", add.b, "Bit B")->required();
  add_cmd->add_option("--out", out_path, "Also write the report here");

  imc::cli::McOptions mc;
  double sigma_comp_mv = 0.0;
  double energy_mean = 0.0;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo mismatch analysis of one MAC count");
  add_common(mc_cmd, mc.common);
  mc_cmd->add_option("--count", mc.count, "MAC count of the scenario");
  mc_cmd->add_option("--trials", mc.trials, "Number of trials")->check(CLI::PositiveNumber);
  mc_cmd->add_option("--seed", mc.seed, "Random seed");
  mc_cmd->add_option("--sigma-cell", mc.sigma_cell, "Relative std-dev of cell discharge strength");
  mc_cmd->add_option("--sigma-comp", sigma_comp_mv, "Comparator offset std-dev (mV)");
  mc_cmd->add_option("--sigma-energy", mc.sigma_energy, "Relative std-dev of energy");
  auto* mean_opt = mc_cmd->add_option("--energy-mean", energy_mean, "Energy mean (fJ); table value by default");
  mc_cmd->add_flag("--reference-calibration", mc.reference_calibration,
                   "Centre energy on 437 fJ with 48.72 fJ spread");
  mc_cmd->add_option("--bins", mc.bins, "Histogram bins")->check(CLI::PositiveNumber);
  mc_cmd->add_option("--threads", mc.threads, "Worker threads")->check(CLI::PositiveNumber);
  mc_cmd->add_option("--dump-trials", mc.dump_trials, "Write per-trial records here");
  mc_cmd->add_option("--out", out_path, "Also write the report here");

  imc::cli::SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep-rows", "Predicted ladders and spacing versus column height");
  add_common(sweep_cmd, sweep.common, false);
  sweep_cmd->add_option("--rows", sweep.rows, "Column heights, comma separated")
      ->delimiter(',')
      ->check(CLI::Range(2, 4096));
  sweep_cmd->add_option("--c-fixed-fF", sweep.c_fixed_ff, "Fixed RBL capacitance (fF)");
  sweep_cmd->add_option("--c-per-row-fF", sweep.c_per_row_ff, "Per-row RBL capacitance (fF)");
  sweep_cmd->add_option("--floor-mV", sweep.floor_mv, "Flag sizes whose minimum spacing falls below this");
  sweep_cmd->add_option("--out", out_path, "Also write the report here");

  imc::cli::CalibrateOptions calib;
  auto* calib_cmd = app.add_subcommand("calibrate", "Fit the discharge model and derive thresholds");
  calib_cmd->add_option("--calib", calib.common.calib, "Calibration table file");
  calib_cmd->add_option("--mode", calib.common.mode, "Ladder for thresholds")
      ->check(CLI::IsMember({"table", "parametric"}));
  calib_cmd->add_option("--out", calib.params_out, "Write fitted parameters here");
  calib_cmd->add_option("--thresholds", calib.thresholds_out, "Write thresholds here");

  imc::cli::ReportOptions report;
  auto* report_cmd = app.add_subcommand("report", "Energy, latency and throughput summary");
  add_common(report_cmd, report.common);
  report_cmd->add_option("--out", out_path, "Also write the report here");

  CLI11_PARSE(app, argc, argv);

  try {
    std::string text;
    if (*mac_cmd) {
      text = imc::cli::cmd_mac(mac);
    } else if (*logic_cmd) {
      text = imc::cli::cmd_logic(logic);
    } else if (*add_cmd) {
      text = imc::cli::cmd_add(add);
    } else if (*mc_cmd) {
      mc.sigma_comp = sigma_comp_mv * 1e-3;
      if (mean_opt->count() > 0) mc.energy_mean = energy_mean;
      text = imc::cli::cmd_mc(mc);
    } else if (*sweep_cmd) {
      text = imc::cli::cmd_sweep_rows(sweep);
    } else if (*calib_cmd) {
      text = imc::cli::cmd_calibrate(calib);
    } else if (*report_cmd) {
      text = imc::cli::cmd_report(report);
    }
    std::cout << text;
    if (!out_path.empty()) imc::write_file(out_path, text);
  } catch (const imc::Error& e) {
    std::cerr << "imcsim: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "imcsim: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
