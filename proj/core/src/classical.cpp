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

#include "qwalk/classical.hpp"

#include <algorithm>
#include <cstdlib>

#include "qwalk/errors.hpp"

namespace qwalk {

Distribution classical_distribution(int steps) {
  if (steps < 0) throw DomainError("classical_distribution: steps must be >= 0");
  // Row k holds P_k over sites [-steps, steps]; each step halves mass to
  // both neighbours, so parity and normalization come out exactly.
  const std::size_t width = 2 * static_cast<std::size_t>(steps) + 1;
  std::vector<double> row(width, 0.0);
  std::vector<double> next(width, 0.0);
  row[static_cast<std::size_t>(steps)] = 1.0;
  for (int k = 0; k < steps; ++k) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < width; ++i) {
      if (row[i] == 0.0) continue;
      const double half = 0.5 * row[i];
      next[i - 1] += half;
      next[i + 1] += half;
    }
    row.swap(next);
  }
  Distribution d;
  d.first_site = -steps;
  d.probabilities = std::move(row);
  d.step = steps;
  d.label = "classical";
  return d;
}

TraceSeries classical_site_trace(int site, int max_steps) {
  if (max_steps < 0) throw DomainError("classical_site_trace: max_steps must be >= 0");
  TraceSeries trace;
  trace.site = site;
  trace.label = "classical";
  trace.values.reserve(static_cast<std::size_t>(max_steps) + 1);
  // Same pyramid as classical_distribution, sampled at `site` after each row.
  const std::size_t width = 2 * static_cast<std::size_t>(max_steps) + 3;
  const std::size_t origin = static_cast<std::size_t>(max_steps) + 1;
  std::vector<double> row(width, 0.0);
  std::vector<double> next(width, 0.0);
  row[origin] = 1.0;
  auto sample = [&] {
    if (std::abs(site) > max_steps) return 0.0;
    return row[static_cast<std::size_t>(static_cast<long>(origin) + site)];
  };
  trace.values.push_back(sample());
  for (int k = 0; k < max_steps; ++k) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 1; i + 1 < width; ++i) {
      if (row[i] == 0.0) continue;
      next[i - 1] += 0.5 * row[i];
      next[i + 1] += 0.5 * row[i];
    }
    row.swap(next);
    trace.values.push_back(sample());
  }
  return trace;
}

}  // namespace qwalk
