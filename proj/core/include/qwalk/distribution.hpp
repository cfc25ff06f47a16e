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
#include <vector>

namespace qwalk {

/// Probability per lattice site at a fixed step.
///
/// Sites are contiguous, starting at `first_site`. Sites outside the stored
/// range have probability zero.
struct Distribution {
  int first_site = 0;
  std::vector<double> probabilities;
  int step = 0;
  std::string label;

  int last_site() const { return first_site + static_cast<int>(probabilities.size()) - 1; }
  bool empty() const { return probabilities.empty(); }
  double at(int site) const;
  double total() const;

  /// Copy restricted (or zero-padded) to the closed site range [lo, hi].
  Distribution window(int lo, int hi) const;
};

/// Probability at a fixed site for steps 0..n_max.
struct TraceSeries {
  int site = 0;
  std::vector<double> values;
  std::string label;

  int max_step() const { return static_cast<int>(values.size()) - 1; }
};

}  // namespace qwalk
