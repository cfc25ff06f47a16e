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

#include "qwalk/lattice.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk::lattice {

namespace {

// Lowest low-barrier depth admitted by the inverse solver; J(V) is
// strictly decreasing for V >= 1.
constexpr double kMinLowBarrier = 1.0;
constexpr double kSecondaryTolerance = 1e-6;

}  // namespace

void LatticeParams::validate() const {
  if (!(depth > 0.0) || !std::isfinite(depth)) throw DomainError("lattice depth V must be > 0");
  if (!(secondary_depth >= 0.0) || !(secondary_depth < depth)) {
    throw DomainError("secondary depth V' must satisfy 0 <= V' < V");
  }
  if (!(period > 0.0) || !std::isfinite(period)) throw DomainError("lattice period must be > 0");
}

double tunneling_coupling(double depth) {
  if (!(depth >= 0.0)) throw DomainError("tunneling_coupling: depth must be >= 0");
  const double s = std::sqrt(depth);
  return 0.5 * std::exp(-std::numbers::pi * std::numbers::pi / 4.0 * s) * (s + depth * s);
}

double coupling_ratio(const LatticeParams& params) {
  params.validate();
  return tunneling_coupling(params.max_barrier()) / tunneling_coupling(params.min_barrier());
}

double solve_secondary_amplitude(double depth, double target_ratio) {
  if (!(depth >= 2.0)) throw DomainError("solve_secondary_amplitude: depth must be >= 2 E_R");
  auto ratio = [depth](double secondary) {
    return coupling_ratio({depth, secondary, 1.0});
  };
  double lo = 0.0;
  double hi = depth - kMinLowBarrier;
  const double ratio_hi = ratio(hi);
  if (!std::isfinite(target_ratio) || target_ratio > 1.0 || target_ratio < ratio_hi) {
    throw NoSolutionError("target ratio " + std::to_string(target_ratio) +
                          " is outside the attainable range [" + std::to_string(ratio_hi) +
                          ", 1] for V = " + std::to_string(depth));
  }
  if (target_ratio == 1.0) return 0.0;

  // ratio(lo) >= target >= ratio(hi); ratio is decreasing in V'.
  // Bisect well past the 1e-6 bracket so the forward ratio also lands within
  // 1e-6 relative of the target.
  for (int iter = 0; iter < 200 && hi - lo > kSecondaryTolerance * 1e-4; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (ratio(mid) > target_ratio) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double pulse_time(double jmin) {
  if (!(jmin > 0.0)) throw DomainError("pulse_time: J_min must be > 0");
  return std::numbers::pi / jmin;
}

double theta_from_timing(double jmin, double duration) {
  if (!(jmin > 0.0)) throw DomainError("theta_from_timing: J_min must be > 0");
  if (!(duration >= 0.0)) throw DomainError("theta_from_timing: duration must be >= 0");
  return 0.5 * jmin * duration;
}

double superlattice_potential(double x, const LatticeParams& params, Parity config,
                              int internal) {
  params.validate();
  if (internal != 0 && internal != 1) throw ValidationError("internal state must be 0 or 1");
  const double sign_i = internal == 0 ? 1.0 : -1.0;
  const double sign = config == Parity::odd ? sign_i : -sign_i;
  return params.depth * std::cos(2.0 * std::numbers::pi * x) +
         sign * params.secondary_depth * std::cos(std::numbers::pi * x);
}

double adiabatic_time(double trap_frequency) {
  if (!(trap_frequency > 0.0)) throw DomainError("adiabatic_time: trap frequency must be > 0");
  return 1.0 / trap_frequency;
}

double measurement_offset(int site, double period) {
  if (!(period > 0.0)) throw DomainError("measurement_offset: period must be > 0");
  return site * period;
}

}  // namespace qwalk::lattice
