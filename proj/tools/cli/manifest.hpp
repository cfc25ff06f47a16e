// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qwalk::cli {

/// Fully resolved configuration of one CLI invocation. Everything that
/// affects the numeric output lives here; paths and timestamps do not.
struct RunConfig {
  std::string command;  // "run" | "trace" | "lattice"
  std::string format = "csv";

  // run / trace
  int steps = 0;
  int site = 0;
  std::vector<double> offsets{0.0};
  bool classical = false;
  int half_width = 0;

  // lattice
  double depth = 25.0;
  double secondary_depth = 17.5;
  bool solve = false;
  double target_ratio = 0.0;
  double lattice_offset = 0.0;
  double trap_frequency = 30e3;
  double period = 1.0;
  bool has_readout_site = false;
};

nlohmann::json config_to_json(const RunConfig& config);
/// Throws std::invalid_argument on missing or mistyped keys.
RunConfig config_from_json(const nlohmann::json& j);

struct OutputRecord {
  std::string path;
  std::string sha256;
  std::size_t bytes = 0;
};

std::string sha256_hex(std::string_view payload);

/// { "version", "config", "outputs": { "timestamp", "files": [...] } }
nlohmann::json make_manifest(const RunConfig& config, const std::vector<OutputRecord>& outputs,
                             const std::string& timestamp);

std::string utc_timestamp();

}  // namespace qwalk::cli
