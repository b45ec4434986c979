// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#include "imc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "imc/error.hpp"
#include "imc/macro.hpp"
#include "imc/montecarlo.hpp"
#include "imc/text_format.hpp"

namespace imc::cli {

namespace {

std::string fixed(double v, int precision = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

CalibrationTable table_from(const CommonOptions& o) {
  return o.calib.empty() ? CalibrationTable::reference() : load_calibration_table(o.calib);
}

MacroConfig macro_config(const CommonOptions& o, int rows, int cols) {
  MacroConfig cfg;
  cfg.array = {rows, cols};
  cfg.mode = parse_energy_mode(o.mode);
  cfg.table = table_from(o);
  if (!o.thresholds.empty()) cfg.thresholds = load_threshold_bank(o.thresholds);
  cfg.timing.write_cycles = rows;
  return cfg;
}

void header(std::ostream& out, const ImcMacro& m) {
  out << "# mode=" << to_string(m.mode()) << " rows=" << m.array().rows()
      << " cols=" << m.array().cols() << '\n';
  if (m.mode() == EnergyMode::Parametric)
    out << "# energy_fJ is the closed-form C*VDD*dV approximation\n";
}

BitWord operand(const std::string& text, int width, const char* name) {
  BitWord w = BitWord::parse(text);
  if (w.size() != static_cast<std::size_t>(width))
    throw Error(Errc::WordLengthMismatch, std::string(name) + " has " + std::to_string(w.size()) +
                                              " bits, expected " + std::to_string(width));
  return w;
}

}  // namespace

std::string cmd_mac(const MacOptions& o) {
  std::optional<CellArray> image;
  int rows = o.common.rows, cols = o.common.cols;
  if (!o.load_array.empty()) {
    image = load_array_image(o.load_array);
    rows = image->rows();
    cols = image->cols();
  }
  const MacroConfig cfg = macro_config(o.common, rows, cols);
  ImcMacro macro(cfg);
  const BitWord a = operand(o.a, rows, "--a");

  std::vector<MacResult> results;
  if (image) {
    for (int c = 0; c < cols; ++c) macro.array().load_column_word(c, image->column_word(c));
    results = macro.evaluate_resident(a);
  } else {
    if (o.b.empty()) throw Error(Errc::ParseError, "--b or --load-array is required");
    std::vector<BitWord> b_cols;
    for (const auto& w : o.b) b_cols.push_back(operand(w, rows, "--b"));
    results = macro.mac_parallel(a, b_cols);
  }

  const double latency = operation_latency(cfg.timing);
  const double tput = throughput(cfg.timing);
  std::ostringstream out;
  header(out, macro);
  out << "col,count,v_mV,decoded,energy_fJ,latency_ns,throughput_Mops\n";
  for (const auto& r : results) {
    out << r.col << ',' << r.count << ',' << fixed(r.v_rbl * 1e3, 1) << ',' << r.code.to_string()
        << ',' << fixed(r.energy_fj) << ',' << fixed(latency * 1e9, 1) << ','
        << fixed(tput / 1e6) << '\n';
  }
  return out.str();
}

std::string cmd_logic(const LogicOptions& o) {
  ImcMacro macro(macro_config(o.common, o.common.rows, o.common.cols));
  const BitWord a = BitWord::parse(o.a);
  const BitWord b = BitWord::parse(o.b);
  const auto results = macro.logic_columns(a, b);

  std::vector<LogicOp> ops = {LogicOp::And, LogicOp::Nand, LogicOp::Or,
                              LogicOp::Nor, LogicOp::Xor,  LogicOp::Xnor};
  if (!o.op.empty()) ops = {parse_logic_op(o.op)};

  std::ostringstream out;
  header(out, macro);
  out << "col,a,b,count,v_mV,decoded,energy_fJ";
  for (auto op : ops) out << ',' << to_string(op);
  out << '\n';
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    out << r.mac.col << ',' << a[i] << ',' << b[i] << ',' << r.mac.count << ','
        << fixed(r.mac.v_rbl * 1e3, 1) << ',' << r.mac.code.to_string() << ','
        << fixed(r.mac.energy_fj);
    for (auto op : ops) out << ',' << select(r.verdict, op);
    out << '\n';
  }
  for (auto op : ops) {
    out << "# " << to_string(op) << " = ";
    for (const auto& r : results) out << (select(r.verdict, op) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

std::string cmd_add(const AddOptions& o) {
  if ((o.a != 0 && o.a != 1) || (o.b != 0 && o.b != 1))
    throw Error(Errc::ParseError, "add operands must be 0 or 1");
  ImcMacro macro(macro_config(o.common, o.common.rows, o.common.cols));
  const auto r = macro.add_1bit(o.a == 1, o.b == 1);
  std::ostringstream out;
  header(out, macro);
  out << "a,b,count,v_mV,decoded,sum,carry,energy_fJ\n";
  out << o.a << ',' << o.b << ',' << r.mac.count << ',' << fixed(r.mac.v_rbl * 1e3, 1) << ','
      << r.mac.code.to_string() << ',' << r.sum << ',' << r.carry << ',' << fixed(r.mac.energy_fj)
      << '\n';
  return out.str();
}

std::string cmd_mc(const McOptions& o) {
  McConfig cfg = o.reference_calibration ? McConfig::reference_calibrated() : McConfig{};
  cfg.n_trials = o.trials;
  cfg.seed = o.seed;
  cfg.sigma_cell = o.sigma_cell;
  cfg.sigma_comp = o.sigma_comp;
  if (!o.reference_calibration || o.sigma_energy > 0.0) cfg.sigma_energy = o.sigma_energy;
  if (o.energy_mean) cfg.energy_mean_fj = o.energy_mean;
  cfg.histogram_bins = o.bins;
  cfg.threads = o.threads;

  McScenario scenario{o.count, macro_config(o.common, o.common.rows, o.common.cols)};
  const McRun run = run_trials(cfg, scenario);
  const auto& s = run.stats;

  if (!o.dump_trials.empty()) {
    std::ostringstream dump;
    dump << "trial,v_mV,code,decoded,energy_fJ\n";
    for (const auto& t : run.trials) {
      dump << t.trial << ',' << format_number(t.v_rbl * 1e3) << ',' << t.code.to_string() << ','
           << (t.decoded ? std::to_string(*t.decoded) : std::string("bubble")) << ','
           << format_number(t.energy_fj) << '\n';
    }
    write_file(o.dump_trials, dump.str());
  }

  std::ostringstream out;
  out << "# mode=" << o.common.mode << " count=" << o.count << " trials=" << cfg.n_trials
      << " seed=" << cfg.seed << '\n';
  out << "# sigma_cell=" << format_number(cfg.sigma_cell)
      << " sigma_comp_mV=" << format_number(cfg.sigma_comp * 1e3)
      << " sigma_energy=" << format_number(cfg.sigma_energy) << " energy_mean_fJ="
      << (cfg.energy_mean_fj ? format_number(*cfg.energy_mean_fj) : std::string("table")) << '\n';
  out << "# mean_fJ=" << fixed(s.mean_fj) << " std_fJ=" << fixed(s.std_fj)
      << " decode_error_rate=" << fixed(s.decode_error_rate, 4) << " bubbles=" << s.bubble_count
      << '\n';
  out << "bin_low_fJ,bin_high_fJ,count\n";
  for (std::size_t i = 0; i < s.histogram.counts.size(); ++i) {
    out << fixed(s.histogram.edges[i]) << ',' << fixed(s.histogram.edges[i + 1]) << ','
        << s.histogram.counts[i] << '\n';
  }
  return out.str();
}

std::string cmd_sweep_rows(const SweepOptions& o) {
  const CalibrationTable table = table_from(o.common);
  const AnalogParams fitted = fit_discharge_model(table, AnalogParams{});
  CapacitanceModel cap{o.c_fixed_ff * 1e-15, o.c_per_row_ff * 1e-15};
  cap.validate();

  std::ostringstream out;
  out << "# floor_mV=" << fixed(o.floor_mv, 1) << " c_fixed_fF=" << fixed(o.c_fixed_ff, 1)
      << " c_per_row_fF=" << fixed(o.c_per_row_ff, 1) << '\n';
  out << "rows,c_rbl_fF,min_spacing_mV,max_spacing_mV,below_floor,ladder_mV,thresholds_mV\n";
  const bool table_mode = parse_energy_mode(o.common.mode) == EnergyMode::Table;
  for (int rows : o.rows) {
    // At the calibrated height the measured ladder is used as-is in table mode.
    const auto ladder = table_mode && rows == table.max_count() ? table.voltage_by_count
                                                                : rescale_ladder(table, rows, cap, fitted);
    const auto bank = derive_thresholds(ladder);
    const double min_mv = min_spacing(ladder) * 1e3;
    out << rows << ',' << fixed(capacitance_for_rows(rows, cap) * 1e15, 1) << ','
        << fixed(min_mv, 1) << ',' << fixed(max_spacing(ladder) * 1e3, 1) << ','
        << (min_mv < o.floor_mv ? 1 : 0) << ',';
    for (std::size_t i = 0; i < ladder.size(); ++i) out << (i ? ";" : "") << fixed(ladder[i] * 1e3, 1);
    out << ',';
    for (std::size_t i = 0; i < bank.size(); ++i)
      out << (i ? ";" : "") << fixed(bank.thresholds[i] * 1e3, 1);
    out << '\n';
  }
  return out.str();
}

std::string cmd_calibrate(const CalibrateOptions& o) {
  const CalibrationTable table = table_from(o.common);
  const FitReport fit = fit_discharge_model_report(table, AnalogParams{});
  const auto& poly = *fit.params.fit;
  const auto ladder = parse_energy_mode(o.common.mode) == EnergyMode::Table
                          ? table.voltage_by_count
                          : model_ladder(table.max_count(), fit.params);
  const ThresholdBank bank = derive_thresholds(ladder);

  if (!o.params_out.empty()) {
    std::ostringstream p;
    write_analog_params(p, fit.params);
    write_file(o.params_out, p.str());
  }
  if (!o.thresholds_out.empty()) {
    std::ostringstream t;
    write_threshold_bank(t, bank);
    write_file(o.thresholds_out, t.str());
  }

  std::ostringstream out;
  out << "# source=" << (o.common.calib.empty() ? std::string("built-in") : o.common.calib) << '\n';
  out << "# fit_a=" << format_number(poly.quad) << " fit_b=" << format_number(poly.lin)
      << " fit_c=" << format_number(poly.constant) << '\n';
  out << "count,table_mV,fit_mV,residual_mV,threshold_mV\n";
  for (std::size_t n = 0; n < table.voltage_by_count.size(); ++n) {
    out << n << ',' << fixed(table.voltage_by_count[n] * 1e3, 1) << ','
        << fixed(model_voltage(static_cast<double>(n), fit.params) * 1e3) << ','
        << fixed(fit.residuals[n] * 1e3) << ','
        << (n < bank.size() ? fixed(bank.thresholds[n] * 1e3, 1) : std::string("-")) << '\n';
  }
  out << "# max_residual_mV=" << fixed(fit.max_abs_residual * 1e3) << '\n';
  return out.str();
}

std::string cmd_report(const ReportOptions& o) {
  const MacroConfig cfg = macro_config(o.common, o.common.rows, o.common.cols);
  ImcMacro macro(cfg);
  const double latency = operation_latency(cfg.timing);
  const double tput = throughput(cfg.timing);

  std::ostringstream out;
  header(out, macro);
  out << "count,v_mV,energy_fJ,latency_ns,throughput_Mops\n";
  for (int n = 0; n <= macro.array().rows(); ++n) {
    const double e = energy_of_count(n, cfg.table, cfg.mode, macro.analog());
    out << n << ',' << fixed(macro.ladder()[static_cast<std::size_t>(n)] * 1e3, 1) << ','
        << fixed(e) << ',' << fixed(latency * 1e9, 1) << ',' << fixed(tput / 1e6) << '\n';
  }

  const int bits = macro.array().rows();
  const double full = energy_of_count(bits, cfg.table, cfg.mode, macro.analog());
  const double per_bit = energy_per_bit(full, bits);
  out << "# clock_ns=" << fixed(cfg.timing.clock_period * 1e9) << " clock_MHz="
      << fixed(1e-6 / cfg.timing.clock_period) << " eval_window_ns="
      << fixed(cfg.timing.eval_window * 1e9) << '\n';
  out << "# latency_ns=" << fixed(latency * 1e9) << " throughput_Mops=" << fixed(tput / 1e6)
      << " published_Mops=" << fixed(reference::kThroughput / 1e6, 1) << " deviation_pct="
      << fixed(100.0 * (tput - reference::kThroughput) / reference::kThroughput, 3) << '\n';
  out << "# energy_per_bit_fJ=" << fixed(per_bit) << " published_fJ_per_bit="
      << fixed(reference::kEnergyPerBit, 2) << " discrepancy_pct="
      << fixed(100.0 * (per_bit - reference::kEnergyPerBit) / reference::kEnergyPerBit, 3) << '\n';
  if (cfg.mode == EnergyMode::Table && cfg.table.max_count() >= 2) {
    out << "# logic_energy_fJ AND/Carry=" << fixed(energy_of_logic(2, cfg.table))
        << " XOR/Sum=" << fixed(energy_of_logic(1, cfg.table))
        << " NOR=" << fixed(energy_of_logic(0, cfg.table)) << '\n';
  }
  return out.str();
}

}  // namespace imc::cli
