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

#include "cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qwalk::cli {

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  std::string s(buf);
  if (std::isfinite(value) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string distributions_csv(const std::vector<Distribution>& columns) {
  std::ostringstream os;
  os << "site";
  for (const auto& c : columns) os << ',' << c.label;
  os << '\n';
  if (columns.empty()) return os.str();
  int lo = columns.front().first_site;
  int hi = columns.front().last_site();
  for (const auto& c : columns) {
    lo = std::min(lo, c.first_site);
    hi = std::max(hi, c.last_site());
  }
  for (int x = lo; x <= hi; ++x) {
    os << x;
    for (const auto& c : columns) os << ',' << format_number(c.at(x));
    os << '\n';
  }
  return os.str();
}

std::string traces_csv(const std::vector<TraceSeries>& columns) {
  std::ostringstream os;
  os << "step";
  for (const auto& c : columns) os << ',' << c.label;
  os << '\n';
  std::size_t rows = 0;
  for (const auto& c : columns) rows = std::max(rows, c.values.size());
  for (std::size_t n = 0; n < rows; ++n) {
    os << n;
    for (const auto& c : columns) os << ',' << format_number(n < c.values.size() ? c.values[n] : 0.0);
    os << '\n';
  }
  return os.str();
}

nlohmann::json distributions_json(const std::vector<Distribution>& columns) {
  auto out = nlohmann::json::array();
  for (const auto& c : columns) {
    out.push_back({{"label", c.label},
                   {"step", c.step},
                   {"first_site", c.first_site},
                   {"probabilities", c.probabilities}});
  }
  return out;
}

nlohmann::json traces_json(const std::vector<TraceSeries>& columns) {
  auto out = nlohmann::json::array();
  for (const auto& c : columns) {
    out.push_back({{"label", c.label}, {"site", c.site}, {"values", c.values}});
  }
  return out;
}

}  // namespace qwalk::cli
