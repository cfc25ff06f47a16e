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

#include "cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cli/manifest.hpp"
#include "cli/output.hpp"
#include "qwalk/analysis.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/version.hpp"

namespace qwalk::cli {

namespace {

using nlohmann::json;

// Flags shared by every subcommand.
struct IoFlags {
  std::string out_path;
  std::string manifest_path;
  std::string config_path;
  std::string format = "csv";
};

void add_io_flags(CLI::App& sub, IoFlags& io) {
  sub.add_option("--out", io.out_path, "Write the payload to PATH instead of stdout");
  sub.add_option("--manifest", io.manifest_path,
                 "Manifest path (default: <out>.manifest.json when --out is set)");
  sub.add_option("--format", io.format, "Payload format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--config", io.config_path, "Re-run the configuration stored in a manifest")
      ->check(CLI::ExistingFile);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& payload) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << payload;
  if (!os) throw std::runtime_error("write failed for " + path);
}

RunConfig load_config(const std::string& path, const std::string& command) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config " + path + " is not valid JSON: " + e.what());
  }
  RunConfig config = config_from_json(j.contains("config") ? j.at("config") : j);
  if (config.command != command) {
    throw std::invalid_argument("config " + path + " describes '" + config.command +
                                "', not '" + command + "'");
  }
  return config;
}

// Writes the payload and, when requested, a manifest next to it.
void emit(const RunConfig& config, const IoFlags& io, const std::string& payload,
          std::ostream& out) {
  OutputRecord record{io.out_path.empty() ? "-" : io.out_path, sha256_hex(payload), payload.size()};
  if (io.out_path.empty()) {
    out << payload;
  } else {
    write_file(io.out_path, payload);
  }
  std::string manifest_path = io.manifest_path;
  if (manifest_path.empty() && !io.out_path.empty()) manifest_path = io.out_path + ".manifest.json";
  if (!manifest_path.empty()) {
    write_file(manifest_path, make_manifest(config, {record}, utc_timestamp()).dump(2) + "\n");
  }
}

void check_walk_config(const RunConfig& c) {
  if (c.steps < 0) throw ValidationError("step count must be >= 0");
  if (c.half_width < 0) throw ValidationError("--lattice-halfwidth must be >= 1");
  if (c.offsets.empty()) throw ValidationError("--dt0 needs at least one value");
}

std::string run_payload(RunConfig& c) {
  check_walk_config(c);
  if (c.half_width == 0) c.half_width = c.steps + 1;
  const auto columns =
      error_sweep(c.steps, c.offsets, {.include_classical = c.classical, .half_width = c.half_width});
  if (c.format == "json") {
    return json{{"command", "run"}, {"steps", c.steps}, {"columns", distributions_json(columns)}}
               .dump(2) +
           "\n";
  }
  return distributions_csv(columns);
}

std::string trace_payload(RunConfig& c) {
  check_walk_config(c);
  if (c.half_width == 0) c.half_width = c.steps + 1;
  const auto columns = site_trace(c.site, c.steps, c.offsets,
                                  {.include_classical = c.classical, .half_width = c.half_width});
  if (c.format == "json") {
    return json{{"command", "trace"},
                {"site", c.site},
                {"max_steps", c.steps},
                {"columns", traces_json(columns)}}
               .dump(2) +
           "\n";
  }
  return traces_csv(columns);
}

std::string lattice_payload(RunConfig& c) {
  if (c.solve) c.secondary_depth = lattice::solve_secondary_amplitude(c.depth, c.target_ratio);
  const lattice::LatticeParams params{c.depth, c.secondary_depth, c.period};
  params.validate();

  const double jmax = lattice::tunneling_coupling(params.max_barrier());
  const double jmin = lattice::tunneling_coupling(params.min_barrier());
  const double dt = lattice::pulse_time(jmin);
  // --dt0 is in units of 1/J_min.
  const double theta = lattice::theta_from_timing(jmin, dt + c.lattice_offset / jmin);
  const double adiabatic = lattice::adiabatic_time(c.trap_frequency);

  std::vector<std::pair<std::string, double>> rows{
      {"v", c.depth},
      {"vprime", c.secondary_depth},
      {"v_max", params.max_barrier()},
      {"v_min", params.min_barrier()},
      {"j_max", jmax},
      {"j_min", jmin},
      {"ratio", lattice::coupling_ratio(params)},
      {"pulse_time", dt},
      {"dt0", c.lattice_offset},
      {"theta", theta},
      {"omega_t", c.trap_frequency},
      {"adiabatic_time_s", adiabatic},
      {"adiabatic_time_us", adiabatic * 1e6},
  };
  if (c.solve) rows.insert(rows.begin() + 2, {"target_ratio", c.target_ratio});
  if (c.has_readout_site) {
    rows.emplace_back("site", c.site);
    rows.emplace_back("lambda", c.period);
    rows.emplace_back("measurement_offset", lattice::measurement_offset(c.site, c.period));
  }

  if (c.format == "json") {
    json j = json::object();
    for (const auto& [key, value] : rows) j[key] = value;
    return j.dump(2) + "\n";
  }
  std::string csv = "key,value\n";
  for (const auto& [key, value] : rows) csv += key + "," + format_number(value) + "\n";
  return csv;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete-time quantum walk in alternating optical superlattices"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunConfig flags;
  IoFlags io;
  std::string dt0_text;

  auto* run = app.add_subcommand("run", "Position distributions after N steps");
  run->add_option("--steps", flags.steps, "Number of walk steps")->check(CLI::NonNegativeNumber);
  run->add_option("--dt0", flags.offsets, "Pulse-time offsets J_min*dt0, comma separated")
      ->delimiter(',');
  run->add_flag("--classical", flags.classical, "Append the classical random-walk column");
  run->add_option("--lattice-halfwidth", flags.half_width, "Lattice half-width (default steps+1)")
      ->check(CLI::PositiveNumber);
  add_io_flags(*run, io);

  auto* trace = app.add_subcommand("trace", "Probability at one site versus step");
  trace->add_option("--site", flags.site, "Lattice site N");
  trace->add_option("--max-steps", flags.steps, "Last step")->check(CLI::NonNegativeNumber);
  trace->add_option("--dt0", flags.offsets, "Pulse-time offsets J_min*dt0, comma separated")
      ->delimiter(',');
  trace->add_flag("--classical", flags.classical, "Append the classical random-walk column");
  trace->add_option("--lattice-halfwidth", flags.half_width, "Lattice half-width (default steps+1)")
      ->check(CLI::PositiveNumber);
  add_io_flags(*trace, io);

  auto* lat = app.add_subcommand("lattice", "Couplings and timings for a superlattice design");
  lat->add_option("--v", flags.depth, "Primary lattice depth V [E_R]");
  auto* vprime = lat->add_option("--vprime", flags.secondary_depth, "Secondary depth V' [E_R]");
  auto* solve = lat->add_option("--solve-ratio", flags.target_ratio,
                                "Choose V' so that J_max/J_min equals this ratio");
  solve->excludes(vprime);
  lat->add_option("--dt0", flags.lattice_offset, "Pulse-time offset J_min*dt0");
  lat->add_option("--omega-t", flags.trap_frequency, "Trap frequency for the adiabatic time");
  auto* site = lat->add_option("--site", flags.site, "Readout site N");
  lat->add_option("--lambda", flags.period, "Lattice period for the readout offset");
  add_io_flags(*lat, io);

  for (auto* sub : {run, trace, lat}) {
    for (auto* opt : sub->get_options()) {
      const auto& name = opt->get_name();
      if (name == "--config" || name == "--out" || name == "--manifest" || name == "--format" ||
          name == "--help")
        continue;
      sub->get_option("--config")->excludes(opt);
    }
  }

  std::vector<std::string> argv_storage{"qwalk"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    const std::string command = active->get_name();
    RunConfig config;
    if (!io.config_path.empty()) {
      config = load_config(io.config_path, command);
      if (active->count("--format") == 0) io.format = config.format;
    } else {
      if (command == "run" && active->count("--steps") == 0) {
        throw CLI::RequiredError("--steps");
      }
      if (command == "trace" && (active->count("--site") == 0 || active->count("--max-steps") == 0)) {
        throw CLI::RequiredError("--site and --max-steps");
      }
      config = flags;
      config.command = command;
      config.solve = solve->count() > 0;
      config.has_readout_site = site->count() > 0;
    }
    config.format = io.format;

    std::string payload;
    if (command == "run") {
      payload = run_payload(config);
    } else if (command == "trace") {
      payload = trace_payload(config);
    } else {
      payload = lattice_payload(config);
    }
    emit(config, io, payload, out);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: missing required option " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundaryOverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const NoSolutionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // ValidationError and malformed configs
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace qwalk::cli
