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

#include "qwalk/distribution.hpp"

#include <algorithm>
#include <numeric>

namespace qwalk {

double Distribution::at(int site) const {
  if (site < first_site || site > last_site()) return 0.0;
  return probabilities[static_cast<std::size_t>(site - first_site)];
}

double Distribution::total() const {
  return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

Distribution Distribution::window(int lo, int hi) const {
  Distribution out;
  out.first_site = lo;
  out.step = step;
  out.label = label;
  if (hi < lo) return out;
  out.probabilities.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int x = lo; x <= hi; ++x) out.probabilities.push_back(at(x));
  return out;
}

}  // namespace qwalk
