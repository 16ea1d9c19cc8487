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

#include <filesystem>
#include <optional>
#include <string>

#include "tetrisim/config.hpp"

namespace tetrisim {

/// Command-line overrides applied on top of a loaded config.
struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::optional<std::string> out_path;
};

/// Executes one subcommand (evolve | exact | trotter | adiabatic | loschmidt
/// | analyze | sample) against a config file and writes the output
/// atomically (write-then-rename; no partial files on error). Returns the
/// path written.
std::filesystem::path run_command(const std::string& command,
                                  const std::filesystem::path& config_path,
                                  const RunOverrides& overrides = {});

}  // namespace tetrisim
