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

#include "qwalk/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <algorithm>
#include <future>

#include "qwalk/classical.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

template <typename Result, typename Job>
std::vector<Result> map_offsets(std::span<const double> offsets, bool parallel, Job job) {
  std::vector<Result> out;
  out.reserve(offsets.size() + 1);
  if (!parallel || offsets.size() < 2) {
    for (double offset : offsets) out.push_back(job(offset));
    return out;
  }
  std::vector<std::future<Result>> pending;
  pending.reserve(offsets.size());
  for (double offset : offsets) pending.push_back(std::async(std::launch::async, job, offset));
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

void check_offsets(std::span<const double> offsets) {
  for (double offset : offsets) {
    if (!std::isfinite(offset)) throw ValidationError("timing offsets must be finite");
  }
}

}  // namespace

std::string offset_label(double jmin_dt0) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "dt0=%.12g", jmin_dt0);
  return buf;
}

std::vector<Distribution> error_sweep(int steps, std::span<const double> offsets,
                                      const SweepOptions& options) {
  if (steps < 0) throw ValidationError("error_sweep: steps must be >= 0");
  check_offsets(offsets);
  auto job = [&](double offset) {
    WalkConfig config;
    config.steps = steps;
    config.timing_offset = offset;
    config.half_width = options.half_width;
    const auto states = run_walk(config);
    Distribution d = position_distribution(states.back()).window(-steps, steps);
    d.label = offset_label(offset);
    return d;
  };
  auto out = map_offsets<Distribution>(offsets, options.parallel, job);
  if (options.include_classical) out.push_back(classical_distribution(steps));
  return out;
}

std::vector<TraceSeries> site_trace(int site, int max_steps, std::span<const double> offsets,
                                    const SweepOptions& options) {
  if (max_steps < 0) throw ValidationError("site_trace: max_steps must be >= 0");
  check_offsets(offsets);
  auto job = [&](double offset) {
    WalkConfig config;
    config.steps = max_steps;
    config.timing_offset = offset;
    config.half_width = options.half_width;
    TraceSeries trace;
    trace.site = site;
    trace.label = offset_label(offset);
    for (const WalkState& state : run_walk(config)) {
      trace.values.push_back(std::norm(state.amplitude(0, site)) +
                             std::norm(state.amplitude(1, site)));
    }
    return trace;
  };
  auto out = map_offsets<TraceSeries>(offsets, options.parallel, job);
  if (options.include_classical) out.push_back(classical_site_trace(site, max_steps));
  return out;
}

double total_variation(const Distribution& p, const Distribution& q) {
  if (p.empty() && q.empty()) return 0.0;
  int lo = p.empty() ? q.first_site : p.first_site;
  int hi = p.empty() ? q.last_site() : p.last_site();
  if (!q.empty()) {
    lo = std::min(lo, q.first_site);
    hi = std::max(hi, q.last_site());
  }
  double sum = 0.0;
  for (int x = lo; x <= hi; ++x) sum += std::abs(p.at(x) - q.at(x));
  return 0.5 * sum;
}

double mean_position(const Distribution& p) {
  double m = 0.0;
  for (int x = p.first_site; x <= p.last_site(); ++x) m += x * p.at(x);
  return m;
}

double std_dev(const Distribution& p) {
  const double m = mean_position(p);
  double second = 0.0;
  for (int x = p.first_site; x <= p.last_site(); ++x) second += double(x) * x * p.at(x);
  // Clamp round-off for point masses.
  return std::sqrt(std::max(0.0, second - m * m));
}

}  // namespace qwalk
