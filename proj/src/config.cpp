// Copyright 2026 The Tetrisim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tetrisim/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tetrisim {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw std::runtime_error("config line " + std::to_string(line) + ": " + what);
}

bool valid_key(const std::string& key) {
  if (key.empty()) return false;
  for (char c : key) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') {
      return false;
    }
  }
  return true;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Removes a trailing comment, respecting quoted strings.
std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '"' && (i == 0 || line[i - 1] != '\\')) {
      in_string = !in_string;
    } else if (c == '#' && !in_string) {
      return line.substr(0, i);
    }
  }
  return line;
}

std::string parse_quoted(const std::string& token, std::size_t line) {
  if (token.size() < 2 || token.front() != '"' || token.back() != '"') {
    parse_fail(line, "expected a quoted string: " + token);
  }
  std::string out;
  for (std::size_t i = 1; i + 1 < token.size(); ++i) {
    if (token[i] == '\\' && i + 2 < token.size() &&
        (token[i + 1] == '"' || token[i + 1] == '\\')) {
      out.push_back(token[i + 1]);
      ++i;
    } else if (token[i] == '"') {
      parse_fail(line, "unescaped quote inside string");
    } else {
      out.push_back(token[i]);
    }
  }
  return out;
}

ConfigTable::Value parse_scalar(const std::string& token, std::size_t line) {
  ConfigTable::Value v;
  if (token == "true" || token == "false") {
    v.kind = ConfigTable::Value::Kind::kBool;
    v.boolean = token == "true";
    return v;
  }
  if (!token.empty() && token.front() == '"') {
    v.kind = ConfigTable::Value::Kind::kString;
    v.text = parse_quoted(token, line);
    return v;
  }
  std::size_t used = 0;
  try {
    if (token.find_first_of(".eEnN") == std::string::npos) {
      v.kind = ConfigTable::Value::Kind::kInteger;
      v.integer = std::stoll(token, &used, 10);
      v.number = static_cast<double>(v.integer);
    } else {
      v.kind = ConfigTable::Value::Kind::kFloat;
      v.number = std::stod(token, &used);
    }
  } catch (const std::exception&) {
    parse_fail(line, "cannot parse value: " + token);
  }
  if (used != token.size()) {
    parse_fail(line, "trailing characters in value: " + token);
  }
  if (v.kind == ConfigTable::Value::Kind::kFloat && !std::isfinite(v.number)) {
    parse_fail(line, "value is not finite: " + token);
  }
  return v;
}

std::vector<std::string> split_array_items(const std::string& body,
                                           std::size_t line) {
  std::vector<std::string> items;
  std::string current;
  bool in_string = false;
  for (char c : body) {
    if (c == '"') in_string = !in_string;
    if (c == ',' && !in_string) {
      items.push_back(trim(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  const std::string tail = trim(current);
  if (!tail.empty()) items.push_back(tail);
  for (const auto& item : items) {
    if (item.empty()) parse_fail(line, "empty array element");
  }
  return items;
}

ConfigTable::Value parse_array(const std::string& body, std::size_t line) {
  ConfigTable::Value v;
  const auto items = split_array_items(body, line);
  bool any_string = false;
  bool any_number = false;
  for (const auto& item : items) {
    const auto scalar = parse_scalar(item, line);
    switch (scalar.kind) {
      case ConfigTable::Value::Kind::kString:
        any_string = true;
        v.strings.push_back(scalar.text);
        break;
      case ConfigTable::Value::Kind::kInteger:
      case ConfigTable::Value::Kind::kFloat:
        any_number = true;
        v.numbers.push_back(scalar.number);
        break;
      default:
        parse_fail(line, "array elements must be numbers or strings");
    }
  }
  if (any_string && any_number) {
    parse_fail(line, "array mixes numbers and strings");
  }
  v.kind = any_string ? ConfigTable::Value::Kind::kStringArray
                      : ConfigTable::Value::Kind::kNumberArray;
  return v;
}

}  // namespace

ConfigTable ConfigTable::parse(std::istream& in) {
  ConfigTable table;
  std::string section;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') parse_fail(line_number, "unterminated section");
      section = trim(body.substr(1, body.size() - 2));
      if (!valid_key(section)) {
        parse_fail(line_number, "invalid section name: " + section);
      }
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      parse_fail(line_number, "expected 'key = value'");
    }
    const std::string key = trim(body.substr(0, eq));
    if (!valid_key(key)) parse_fail(line_number, "invalid key: " + key);
    std::string value_text = trim(body.substr(eq + 1));
    if (value_text.empty()) parse_fail(line_number, "missing value");

    Value value;
    if (value_text.front() == '[') {
      // Arrays may continue over following lines until the closing bracket.
      const std::size_t start_line = line_number;
      while (value_text.find(']') == std::string::npos) {
        std::string next;
        if (!std::getline(in, next)) {
          parse_fail(start_line, "unterminated array");
        }
        ++line_number;
        value_text += " " + trim(strip_comment(next));
      }
      const auto close = value_text.find(']');
      if (trim(value_text.substr(close + 1)).size() > 0) {
        parse_fail(start_line, "trailing characters after array");
      }
      value = parse_array(trim(value_text.substr(1, close - 1)), start_line);
    } else {
      value = parse_scalar(value_text, line_number);
    }
    const std::string full_key = section.empty() ? key : section + "." + key;
    if (!table.entries_.emplace(full_key, std::move(value)).second) {
      parse_fail(line_number, "duplicate key: " + full_key);
    }
  }
  return table;
}

ConfigTable ConfigTable::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path.string());
  }
  return parse(in);
}

bool ConfigTable::has(const std::string& key) const {
  return entries_.count(key) != 0;
}

const ConfigTable::Value* ConfigTable::find(const std::string& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

void ConfigTable::type_error(const std::string& key, const char* want) {
  throw std::runtime_error("config key '" + key + "' must be a " + want);
}

bool ConfigTable::get_bool(const std::string& key, bool fallback) const {
  const Value* v = find(key);
  if (v == nullptr) return fallback;
  if (v->kind != Value::Kind::kBool) type_error(key, "boolean");
  return v->boolean;
}

std::int64_t ConfigTable::get_int(const std::string& key,
                                  std::int64_t fallback) const {
  const Value* v = find(key);
  if (v == nullptr) return fallback;
  if (v->kind != Value::Kind::kInteger) type_error(key, "integer");
  return v->integer;
}

std::uint64_t ConfigTable::get_u64(const std::string& key,
                                   std::uint64_t fallback) const {
  const Value* v = find(key);
  if (v == nullptr) return fallback;
  if (v->kind != Value::Kind::kInteger) type_error(key, "integer");
  return static_cast<std::uint64_t>(v->integer);
}

double ConfigTable::get_double(const std::string& key, double fallback) const {
  const Value* v = find(key);
  if (v == nullptr) return fallback;
  if (v->kind != Value::Kind::kInteger && v->kind != Value::Kind::kFloat) {
    type_error(key, "number");
  }
  return v->number;
}

std::string ConfigTable::get_string(const std::string& key,
                                    const std::string& fallback) const {
  const Value* v = find(key);
  if (v == nullptr) return fallback;
  if (v->kind != Value::Kind::kString) type_error(key, "string");
  return v->text;
}

std::vector<double> ConfigTable::get_number_array(const std::string& key) const {
  const Value* v = find(key);
  if (v == nullptr) return {};
  if (v->kind != Value::Kind::kNumberArray) type_error(key, "number array");
  return v->numbers;
}

std::vector<std::string> ConfigTable::get_string_array(
    const std::string& key) const {
  const Value* v = find(key);
  if (v == nullptr) return {};
  if (v->kind != Value::Kind::kStringArray) type_error(key, "string array");
  return v->strings;
}

std::vector<std::string> ConfigTable::keys() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [key, value] : entries_) {
    out.push_back(key);
  }
  return out;
}

namespace {

[[noreturn]] void config_fail(const std::string& key, const std::string& what) {
  throw std::runtime_error("config field '" + key + "': " + what);
}

void check_known_keys(const ConfigTable& table) {
  static const std::vector<std::string> known = {
      "hamiltonian.source", "hamiltonian.rows",    "hamiltonian.cols",
      "hamiltonian.periodic", "hamiltonian.h",     "hamiltonian.field",
      "hamiltonian.h_f",    "hamiltonian.t_final", "hamiltonian.path",
      "run.initial_state",  "run.observable",      "run.times",
      "run.t_start",        "run.t_stop",          "run.t_count",
      "run.n_samples",      "run.seed",            "run.threads",
      "run.trotter_step",   "run.method",          "run.epsilon",
      "run.trotter_c",      "angles.mode",         "angles.tau",
      "angles.values",      "angles.floor",        "noise.enabled",
      "noise.r",            "noise.rates",         "noise.mode",
      "noise.mitigate",     "background.pattern",  "output.path",
  };
  for (const auto& key : table.keys()) {
    bool found = false;
    for (const auto& k : known) {
      if (k == key) {
        found = true;
        break;
      }
    }
    if (!found) config_fail(key, "unknown field");
  }
}

}  // namespace

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
  const ConfigTable table = ConfigTable::from_file(path);
  check_known_keys(table);
  ExperimentConfig cfg;
  cfg.base_dir = path.has_parent_path() ? path.parent_path()
                                        : std::filesystem::path(".");

  cfg.source = table.get_string("hamiltonian.source", "");
  if (cfg.source != "ising2d" && cfg.source != "pauli" &&
      cfg.source != "fermion") {
    config_fail("hamiltonian.source",
                "must be \"ising2d\", \"pauli\" or \"fermion\"");
  }
  cfg.rows = static_cast<int>(table.get_int("hamiltonian.rows", 1));
  cfg.cols = static_cast<int>(table.get_int("hamiltonian.cols", 1));
  cfg.periodic = table.get_bool("hamiltonian.periodic", false);
  cfg.h = table.get_double("hamiltonian.h", 0.0);
  cfg.field = table.get_string("hamiltonian.field", "constant");
  cfg.h_f = table.get_double("hamiltonian.h_f", 0.0);
  cfg.t_final = table.get_double("hamiltonian.t_final", 0.0);
  cfg.path = table.get_string("hamiltonian.path", "");
  if (cfg.source == "ising2d") {
    if (cfg.rows < 1 || cfg.cols < 1) {
      config_fail("hamiltonian.rows", "lattice dimensions must be >= 1");
    }
    if (cfg.field != "constant" && cfg.field != "adiabatic") {
      config_fail("hamiltonian.field", "must be \"constant\" or \"adiabatic\"");
    }
    if (cfg.field == "adiabatic" && !(cfg.t_final > 0.0)) {
      config_fail("hamiltonian.t_final", "must be positive for adiabatic field");
    }
  } else if (cfg.path.empty()) {
    config_fail("hamiltonian.path", "required for file-based sources");
  }

  cfg.initial_state = table.get_string("run.initial_state", "");
  cfg.observable = table.get_string("run.observable", "site_average_z");
  cfg.times = table.get_number_array("run.times");
  if (cfg.times.empty()) {
    if (table.has("run.t_start") || table.has("run.t_stop") ||
        table.has("run.t_count")) {
      const double t_start = table.get_double("run.t_start", 0.0);
      const double t_stop = table.get_double("run.t_stop", 0.0);
      const auto t_count = table.get_int("run.t_count", 2);
      if (t_count < 1) config_fail("run.t_count", "must be >= 1");
      if (t_stop < t_start) config_fail("run.t_stop", "must be >= t_start");
      for (std::int64_t i = 0; i < t_count; ++i) {
        const double frac =
            t_count == 1 ? 0.0
                         : static_cast<double>(i) / static_cast<double>(t_count - 1);
        cfg.times.push_back(t_start + frac * (t_stop - t_start));
      }
    }
  }
  if (cfg.times.empty()) {
    config_fail("run.times", "a time grid is required (times or t_start/t_stop/t_count)");
  }
  for (double t : cfg.times) {
    if (t < 0.0) config_fail("run.times", "times must be >= 0");
  }
  const auto n_samples = table.get_int("run.n_samples", 1000);
  if (n_samples < 0) config_fail("run.n_samples", "must be >= 0");
  cfg.n_samples = static_cast<std::size_t>(n_samples);
  cfg.seed = table.get_u64("run.seed", 0);
  cfg.threads = static_cast<int>(table.get_int("run.threads", 0));
  if (cfg.threads < 0) config_fail("run.threads", "must be >= 0");
  cfg.trotter_step = table.get_double("run.trotter_step", 0.0);
  cfg.method = table.get_string("run.method", "tetris");
  if (cfg.method != "tetris" && cfg.method != "exact") {
    config_fail("run.method", "must be \"tetris\" or \"exact\"");
  }
  cfg.epsilon = table.get_double("run.epsilon", 0.01);
  cfg.trotter_c = table.get_double("run.trotter_c", 1.0);

  cfg.angle_mode = table.get_string("angles.mode", "uniform");
  if (cfg.angle_mode != "uniform" && cfg.angle_mode != "explicit" &&
      cfg.angle_mode != "optimal") {
    config_fail("angles.mode", "must be \"uniform\", \"explicit\" or \"optimal\"");
  }
  cfg.tau = table.get_double("angles.tau", 0.1);
  cfg.taus = table.get_number_array("angles.values");
  cfg.floor_angle = table.get_double("angles.floor", 1e-4);
  if (cfg.angle_mode == "uniform" &&
      (!(cfg.tau > 0.0) || cfg.tau > std::numbers::pi / 2.0 + 1e-15)) {
    config_fail("angles.tau", "must lie in (0, pi/2]");
  }
  if (cfg.angle_mode == "explicit" && cfg.taus.empty()) {
    config_fail("angles.values", "required for explicit angle mode");
  }

  cfg.noise_enabled = table.get_bool("noise.enabled", false);
  cfg.noise_r = table.get_double("noise.r", 0.0);
  cfg.noise_rates = table.get_number_array("noise.rates");
  cfg.noise_mode = table.get_string("noise.mode", "stochastic");
  cfg.mitigate = table.get_bool("noise.mitigate", false);
  if (cfg.noise_mode != "stochastic" && cfg.noise_mode != "deterministic") {
    config_fail("noise.mode", "must be \"stochastic\" or \"deterministic\"");
  }
  if (cfg.noise_enabled && cfg.noise_rates.empty() && cfg.noise_r < 0.0) {
    config_fail("noise.r", "must be >= 0");
  }

  cfg.background = table.get_string("background.pattern", "none");
  cfg.out_path = table.get_string("output.path", "out.csv");
  return cfg;
}

std::string ExperimentConfig::resolved_text() const {
  std::ostringstream out;
  out.precision(17);
  out << "hamiltonian.source = \"" << source << "\"\n";
  if (source == "ising2d") {
    out << "hamiltonian.rows = " << rows << "\n";
    out << "hamiltonian.cols = " << cols << "\n";
    out << "hamiltonian.periodic = " << (periodic ? "true" : "false") << "\n";
    out << "hamiltonian.field = \"" << field << "\"\n";
    if (field == "constant") {
      out << "hamiltonian.h = " << h << "\n";
    } else {
      out << "hamiltonian.h_f = " << h_f << "\n";
      out << "hamiltonian.t_final = " << t_final << "\n";
    }
  } else {
    out << "hamiltonian.path = \"" << path << "\"\n";
  }
  out << "run.initial_state = \"" << initial_state << "\"\n";
  out << "run.observable = \"" << observable << "\"\n";
  out << "run.times = [";
  for (std::size_t i = 0; i < times.size(); ++i) {
    out << (i == 0 ? "" : ", ") << times[i];
  }
  out << "]\n";
  out << "run.n_samples = " << n_samples << "\n";
  out << "run.seed = " << seed << "\n";
  out << "run.trotter_step = " << trotter_step << "\n";
  out << "run.method = \"" << method << "\"\n";
  out << "run.epsilon = " << epsilon << "\n";
  out << "run.trotter_c = " << trotter_c << "\n";
  out << "angles.mode = \"" << angle_mode << "\"\n";
  out << "angles.tau = " << tau << "\n";
  if (!taus.empty()) {
    out << "angles.values = [";
    for (std::size_t i = 0; i < taus.size(); ++i) {
      out << (i == 0 ? "" : ", ") << taus[i];
    }
    out << "]\n";
  }
  out << "angles.floor = " << floor_angle << "\n";
  out << "noise.enabled = " << (noise_enabled ? "true" : "false") << "\n";
  if (noise_enabled) {
    out << "noise.mode = \"" << noise_mode << "\"\n";
    out << "noise.mitigate = " << (mitigate ? "true" : "false") << "\n";
    if (noise_rates.empty()) {
      out << "noise.r = " << noise_r << "\n";
    } else {
      out << "noise.rates = [";
      for (std::size_t i = 0; i < noise_rates.size(); ++i) {
        out << (i == 0 ? "" : ", ") << noise_rates[i];
      }
      out << "]\n";
    }
  }
  out << "background.pattern = \"" << background << "\"\n";
  return out.str();
}

std::string ExperimentConfig::config_hash() const {
  const std::string text = resolved_text();
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << hash;
  return out.str();
}

}  // namespace tetrisim
