// Copyright 2026 The sram-imc Authors
// SPDX-License-Identifier: Apache-2.0

#include "imc/text_format.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "imc/error.hpp"

namespace imc {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(std::string_view token, const std::string& where) {
  token = trim(token);
  double v = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (token.empty() || ec != std::errc{} || ptr != end)
    throw Error(Errc::ParseError, where + ": bad number '" + std::string(token) + "'");
  return v;
}

void write_array(std::ostream& out, std::string_view key, const std::vector<double>& values,
                 double scale) {
  out << key << " = [";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << format_number(values[i] * scale);
  }
  out << "]\n";
}

std::vector<double> scaled(const std::vector<double>& values, double divisor) {
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(v / divisor);
  return out;
}

}  // namespace

TextDocument TextDocument::parse(std::string_view text, std::string source) {
  TextDocument doc;
  doc.source = std::move(source);
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::string where = doc.source + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(Errc::ParseError, where + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    std::string_view rhs = trim(line.substr(eq + 1));
    if (key.empty()) throw Error(Errc::ParseError, where + ": missing key");
    if (doc.entries.contains(key)) throw Error(Errc::ParseError, where + ": duplicate key '" + key + "'");

    TextEntry entry;
    entry.line = line_no;
    if (!rhs.empty() && rhs.front() == '[') {
      if (rhs.back() != ']') throw Error(Errc::ParseError, where + ": unterminated array");
      entry.is_array = true;
      std::string_view body = trim(rhs.substr(1, rhs.size() - 2));
      while (!body.empty()) {
        const auto comma = body.find(',');
        entry.values.push_back(parse_number(body.substr(0, comma), where));
        if (comma == std::string_view::npos) break;
        body = body.substr(comma + 1);
      }
    } else {
      entry.values.push_back(parse_number(rhs, where));
    }
    doc.entries.emplace(key, std::move(entry));
  }
  return doc;
}

TextDocument TextDocument::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

bool TextDocument::has(std::string_view key) const { return entries.find(key) != entries.end(); }

const TextEntry& TextDocument::at(std::string_view key) const {
  const auto it = entries.find(key);
  if (it == entries.end())
    throw Error(Errc::ParseError, source + ": missing key '" + std::string(key) + "'");
  return it->second;
}

const std::vector<double>& TextDocument::array(std::string_view key) const {
  const auto& e = at(key);
  if (!e.is_array) throw Error(Errc::ParseError, where(key) + ": '" + std::string(key) + "' must be an array");
  return e.values;
}

double TextDocument::scalar(std::string_view key) const {
  const auto& e = at(key);
  if (e.is_array) throw Error(Errc::ParseError, where(key) + ": '" + std::string(key) + "' must be a scalar");
  return e.values.front();
}

std::string TextDocument::where(std::string_view key) const {
  return source + ":" + std::to_string(at(key).line);
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

CalibrationTable parse_calibration_table(const TextDocument& doc) {
  CalibrationTable table;
  table.voltage_by_count = scaled(doc.array("voltage_mV"), 1000.0);
  table.energy_by_count = doc.array("energy_fJ");
  try {
    table.validate();
  } catch (const Error& e) {
    const bool energy = std::string_view(e.what()).find("energy") != std::string_view::npos;
    throw Error(e.code(), doc.where(energy ? "energy_fJ" : "voltage_mV") + ": " + e.what());
  }
  return table;
}

CalibrationTable load_calibration_table(const std::filesystem::path& path) {
  return parse_calibration_table(TextDocument::load(path));
}

void write_calibration_table(std::ostream& out, const CalibrationTable& table) {
  out << "# calibration table: voltage_mV in millivolts, energy_fJ in femtojoules, indexed by MAC count\n";
  write_array(out, "voltage_mV", table.voltage_by_count, 1000.0);
  write_array(out, "energy_fJ", table.energy_by_count, 1.0);
}

ThresholdBank parse_threshold_bank(const TextDocument& doc) {
  ThresholdBank bank;
  bank.thresholds = scaled(doc.array("threshold_mV"), 1000.0);
  bank.offsets = doc.has("offset_mV") ? scaled(doc.array("offset_mV"), 1000.0)
                                      : std::vector<double>(bank.thresholds.size(), 0.0);
  try {
    bank.validate();
  } catch (const Error& e) {
    throw Error(e.code(), doc.where("threshold_mV") + ": " + e.what());
  }
  return bank;
}

ThresholdBank load_threshold_bank(const std::filesystem::path& path) {
  return parse_threshold_bank(TextDocument::load(path));
}

void write_threshold_bank(std::ostream& out, const ThresholdBank& bank) {
  out << "# comparator thresholds: threshold_mV and offset_mV in millivolts, comparator 0 first\n";
  write_array(out, "threshold_mV", bank.thresholds, 1000.0);
  write_array(out, "offset_mV", bank.offsets, 1000.0);
}

AnalogParams parse_analog_params(const TextDocument& doc) {
  AnalogParams p;
  p.vdd = doc.scalar("vdd_V");
  p.c_rbl = doc.scalar("c_rbl_fF") * 1e-15;
  p.t_eval = doc.scalar("t_eval_ns") * 1e-9;
  p.leak_drop = doc.scalar("leak_drop_mV") / 1000.0;
  if (doc.has("fit_a") || doc.has("fit_b") || doc.has("fit_c"))
    p.fit = LogPolynomial{doc.scalar("fit_a"), doc.scalar("fit_b"), doc.scalar("fit_c")};
  p.validate();
  return p;
}

void write_analog_params(std::ostream& out, const AnalogParams& params) {
  out << "# discharge model: V(n) = vdd_V * exp(-(fit_a*n^2 + fit_b*n + fit_c))\n";
  out << "vdd_V = " << format_number(params.vdd) << '\n';
  out << "c_rbl_fF = " << format_number(params.c_rbl * 1e15) << '\n';
  out << "t_eval_ns = " << format_number(params.t_eval * 1e9) << '\n';
  out << "leak_drop_mV = " << format_number(params.leak_drop * 1000.0) << '\n';
  if (params.fit) {
    out << "fit_a = " << format_number(params.fit->quad) << '\n';
    out << "fit_b = " << format_number(params.fit->lin) << '\n';
    out << "fit_c = " << format_number(params.fit->constant) << '\n';
  }
}

CellArray parse_array_image(std::string_view text, const std::string& source) {
  std::vector<BitWord> rows;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty()) continue;
    try {
      rows.push_back(BitWord::parse(t));
    } catch (const Error& e) {
      throw Error(Errc::ParseError, source + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (rows.back().size() != rows.front().size())
      throw Error(Errc::ParseError, source + ":" + std::to_string(line_no) + ": row width " +
                                        std::to_string(rows.back().size()) + " differs from " +
                                        std::to_string(rows.front().size()));
  }
  if (rows.empty()) throw Error(Errc::ParseError, source + ": empty array image");
  CellArray array({static_cast<int>(rows.size()), static_cast<int>(rows.front().size())});
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      array.write_bit(static_cast<int>(r), static_cast<int>(c), rows[r][c]);
  return array;
}

CellArray load_array_image(const std::filesystem::path& path) {
  return parse_array_image(read_file(path), path.string());
}

void write_array_image(std::ostream& out, const CellArray& array) {
  for (int r = 0; r < array.rows(); ++r) {
    for (int c = 0; c < array.cols(); ++c) out << (array.read_bit(r, c) ? '1' : '0');
    out << '\n';
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw Error(Errc::IoError, "write to '" + path.string() + "' failed");
}

}  // namespace imc
