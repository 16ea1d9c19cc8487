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

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tetrisim/runner.hpp"
#include "tetrisim/version.hpp"

namespace {

struct SubcommandArgs {
  std::string config;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int threads = -1;
  std::string out;
};

void add_common_options(CLI::App* sub, SubcommandArgs& args) {
  sub->add_option("--config", args.config, "experiment config file (TOML)")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--seed", args.seed, "master seed (overrides the config)")
      ->each([&args](const std::string&) { args.seed_set = true; });
  sub->add_option("--threads", args.threads,
                  "worker threads (0 = hardware; never affects results)");
  sub->add_option("--out", args.out, "output path (overrides the config)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tetrisim - randomized-compilation quantum dynamics simulator"};
  app.set_version_flag("--version", std::string(tetrisim::kVersion));
  app.require_subcommand(1);

  const std::pair<const char*, const char*> commands[] = {
      {"evolve", "randomized estimator time series"},
      {"exact", "exact-evolution reference series"},
      {"trotter", "first-order product-formula baseline series"},
      {"adiabatic", "final energy per site vs ramp length"},
      {"loschmidt", "Loschmidt echo and Im/Re ratio series"},
      {"analyze", "angles, attenuation and shot-count report (JSON)"},
      {"sample", "dump one sampled gate configuration"},
  };

  std::map<std::string, SubcommandArgs> args;
  for (const auto& [name, help] : commands) {
    add_common_options(app.add_subcommand(name, help), args[name]);
  }

  CLI11_PARSE(app, argc, argv);

  const CLI::App* sub = app.get_subcommands().front();
  const SubcommandArgs& a = args[sub->get_name()];
  tetrisim::RunOverrides overrides;
  if (a.seed_set) overrides.seed = a.seed;
  if (a.threads >= 0) overrides.threads = a.threads;
  if (!a.out.empty()) overrides.out_path = a.out;

  try {
    const auto path = tetrisim::run_command(sub->get_name(), a.config, overrides);
    std::cout << "wrote " << path.string() << "\n";
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
