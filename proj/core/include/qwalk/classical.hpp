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

#include "qwalk/distribution.hpp"

namespace qwalk {

/// Unbiased +-1 random walk from the origin after `steps` steps, over the
/// sites [-steps, steps]. Built by dynamic programming over the binomial
/// pyramid, so every entry is an exact dyadic rational for moderate n.
/// Throws DomainError for steps < 0.
Distribution classical_distribution(int steps);

/// P_n(site) of the classical walk for n = 0..max_steps.
TraceSeries classical_site_trace(int site, int max_steps);

}  // namespace qwalk
