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

#include "json.hpp"
#include "qwalk/distribution.hpp"

namespace qwalk::cli {

/// 12 significant digits; integral values keep a trailing ".0".
std::string format_number(double value);

/// `site,<label>...` with one row per site of the widest distribution.
std::string distributions_csv(const std::vector<Distribution>& columns);
/// `step,<label>...` with one row per step.
std::string traces_csv(const std::vector<TraceSeries>& columns);

nlohmann::json distributions_json(const std::vector<Distribution>& columns);
nlohmann::json traces_json(const std::vector<TraceSeries>& columns);

}  // namespace qwalk::cli
