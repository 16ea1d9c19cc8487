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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tetrisim {

/// Minimal TOML-style table: `[section]` headers, `key = value` entries with
/// booleans, integers, floats, quoted strings and one-dimensional arrays of
/// numbers or strings (arrays may span lines). No inline tables, dotted
/// keys, dates or escapes beyond \" and \\. Keys are flattened to
/// "section.key". This covers the experiment-config schema; anything else is
/// rejected with a line number.
class ConfigTable {
 public:
  struct Value {
    enum class Kind { kBool, kInteger, kFloat, kString, kNumberArray, kStringArray };
    Kind kind;
    bool boolean = false;
    std::int64_t integer = 0;
    double number = 0.0;
    std::string text;
    std::vector<double> numbers;
    std::vector<std::string> strings;
  };

  static ConfigTable parse(std::istream& in);
  static ConfigTable from_file(const std::filesystem::path& path);

  bool has(const std::string& key) const;

  bool get_bool(const std::string& key, bool fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  double get_double(const std::string& key, double fallback) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::vector<double> get_number_array(const std::string& key) const;
  std::vector<std::string> get_string_array(const std::string& key) const;

  /// Keys in deterministic (sorted) order, for validation of unknown fields.
  std::vector<std::string> keys() const;

 private:
  const Value* find(const std::string& key) const;
  [[noreturn]] static void type_error(const std::string& key, const char* want);

  std::map<std::string, Value> entries_;
};

/// Fully resolved experiment description. Loading validates every field and
/// reports problems by config path (e.g. "run.n_samples"). The resolved
/// text form is embedded in every output header so a run can be reproduced
/// from its own artifacts.
struct ExperimentConfig {
  // [hamiltonian]
  std::string source;  // "ising2d" | "pauli" | "fermion"
  int rows = 1;
  int cols = 1;
  bool periodic = false;
  double h = 0.0;             // constant transverse field
  std::string field = "constant";  // "constant" | "adiabatic"
  double h_f = 0.0;           // adiabatic amplitude
  double t_final = 0.0;       // adiabatic ramp length
  std::string path;           // pauli/fermion source file

  // [run]
  std::string initial_state;  // empty -> all zeros
  std::string observable = "site_average_z";
  std::vector<double> times;
  std::size_t n_samples = 1000;
  std::uint64_t seed = 0;
  int threads = 0;            // 0 -> hardware concurrency; never affects values
  double trotter_step = 0.0;  // required by the trotter command
  std::string method = "tetris";  // adiabatic command: "tetris" | "exact"
  double epsilon = 0.01;      // analyze
  double trotter_c = 1.0;     // analyze

  // [angles]
  std::string angle_mode = "uniform";  // "uniform" | "explicit" | "optimal"
  double tau = 0.1;
  std::vector<double> taus;
  double floor_angle = 1e-4;

  // [noise]
  bool noise_enabled = false;
  double noise_r = 0.0;
  std::vector<double> noise_rates;
  std::string noise_mode = "stochastic";  // "stochastic" | "deterministic"
  bool mitigate = false;

  // [background]
  std::string background = "none";  // "none" or a letter pattern like "ZZ"

  // [output]
  std::string out_path = "out.csv";

  std::filesystem::path base_dir;  // directory of the config file

  static ExperimentConfig load(const std::filesystem::path& path);

  /// Canonical single-line-per-field rendering (deterministic); hashed into
  /// the provenance header. Excludes `threads`, which must not affect any
  /// output byte.
  std::string resolved_text() const;

  /// FNV-1a 64 hash of resolved_text(), in hex.
  std::string config_hash() const;
};

}  // namespace tetrisim
