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

#include "cli/manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <stdexcept>

#include "qwalk/version.hpp"

namespace qwalk::cli {

using nlohmann::json;

json config_to_json(const RunConfig& c) {
  json j{{"command", c.command}, {"format", c.format}, {"deterministic", true}};
  if (c.command == "run" || c.command == "trace") {
    j["offsets"] = c.offsets;
    j["classical"] = c.classical;
    j["lattice_halfwidth"] = c.half_width;
    if (c.command == "run") {
      j["steps"] = c.steps;
    } else {
      j["site"] = c.site;
      j["max_steps"] = c.steps;
    }
  } else if (c.command == "lattice") {
    j["v"] = c.depth;
    j["vprime"] = c.secondary_depth;
    if (c.solve) j["solve_ratio"] = c.target_ratio;
    j["dt0"] = c.lattice_offset;
    j["omega_t"] = c.trap_frequency;
    j["lambda"] = c.period;
    if (c.has_readout_site) j["site"] = c.site;
  }
  return j;
}

RunConfig config_from_json(const json& j) {
  try {
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    c.format = j.value("format", std::string("csv"));
    if (c.command == "run" || c.command == "trace") {
      c.offsets = j.at("offsets").get<std::vector<double>>();
      c.classical = j.at("classical").get<bool>();
      c.half_width = j.at("lattice_halfwidth").get<int>();
      if (c.command == "run") {
        c.steps = j.at("steps").get<int>();
      } else {
        c.site = j.at("site").get<int>();
        c.steps = j.at("max_steps").get<int>();
      }
    } else if (c.command == "lattice") {
      c.depth = j.at("v").get<double>();
      c.secondary_depth = j.at("vprime").get<double>();
      if (j.contains("solve_ratio")) {
        c.solve = true;
        c.target_ratio = j.at("solve_ratio").get<double>();
      }
      c.lattice_offset = j.at("dt0").get<double>();
      c.trap_frequency = j.at("omega_t").get<double>();
      c.period = j.at("lambda").get<double>();
      if (j.contains("site")) {
        c.has_readout_site = true;
        c.site = j.at("site").get<int>();
      }
    } else {
      throw std::invalid_argument("unknown command '" + c.command + "' in configuration");
    }
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed configuration: ") + e.what());
  }
}

std::string sha256_hex(std::string_view payload) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(payload.data(), payload.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

json make_manifest(const RunConfig& config, const std::vector<OutputRecord>& outputs,
                   const std::string& timestamp) {
  json files = json::array();
  for (const auto& o : outputs) {
    files.push_back({{"path", o.path}, {"sha256", o.sha256}, {"bytes", o.bytes}});
  }
  return json{{"version", kVersion},
              {"config", config_to_json(config)},
              {"outputs", {{"timestamp", timestamp}, {"files", files}}}};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace qwalk::cli
