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

#include <span>
#include <string>
#include <vector>

#include "qwalk/distribution.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

inline constexpr const char* kClassicalLabel = "classical";

/// Column label for a timing offset, e.g. "dt0=0.2".
std::string offset_label(double jmin_dt0);

struct SweepOptions {
  bool include_classical = true;
  /// 0 selects steps + 1.
  int half_width = 0;
  /// Run offsets on separate threads.
  bool parallel = true;
};

/// Quantum distribution at step `steps` for every timing offset (in order),
/// each windowed to [-steps, steps], then the classical baseline if enabled.
std::vector<Distribution> error_sweep(int steps, std::span<const double> offsets,
                                      const SweepOptions& options = {});

/// Probability at `site` after each of 0..max_steps steps, one series per
/// offset, then the classical series if enabled.
std::vector<TraceSeries> site_trace(int site, int max_steps, std::span<const double> offsets,
                                    const SweepOptions& options = {});

/// 1/2 sum_x |p(x) - q(x)|, zero-padding mismatched ranges.
double total_variation(const Distribution& p, const Distribution& q);

double mean_position(const Distribution& p);
double std_dev(const Distribution& p);

}  // namespace qwalk
