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

#include "qwalk/walk.hpp"

// Superlattice physics. Units: hbar = 1, energies in recoil energies E_R,
// times in hbar/E_R, positions in lattice periods.
namespace qwalk::lattice {

struct LatticeParams {
  double depth = 25.0;            // V
  double secondary_depth = 17.5;  // V'
  double period = 1.0;            // lambda

  double max_barrier() const { return depth + secondary_depth; }
  double min_barrier() const { return depth - secondary_depth; }

  /// Throws DomainError unless V > 0, 0 <= V' < V and period > 0.
  void validate() const;
};

/// Nearest-neighbour tunneling coupling of a lattice of depth V:
///   J(V) = 1/2 exp(-pi^2/4 sqrt(V)) (sqrt(V) + V^{3/2}).
/// Throws DomainError for V < 0.
double tunneling_coupling(double depth);

/// J(V + V') / J(V - V'), the residual tunneling through the high barrier
/// relative to the intended tunneling through the low one.
double coupling_ratio(const LatticeParams& params);

/// Finds V' such that coupling_ratio({V, V'}) == target_ratio.
///
/// The search runs over V' in [0, V - 1], where the ratio is strictly
/// decreasing, by bisection to 1e-6 E_R or better. Requires V >= 2.
/// Throws NoSolutionError if the target is not attainable there.
double solve_secondary_amplitude(double depth, double target_ratio);

/// Full-transfer pulse duration pi / J_min.
double pulse_time(double jmin);

/// theta = J_min * dt / 2.
double theta_from_timing(double jmin, double duration);

/// V cos(2 pi x) + s V' cos(pi x) seen by internal state `internal`, with
/// s = (-1)^internal in the odd configuration and -(-1)^internal in the even.
double superlattice_potential(double x, const LatticeParams& params, Parity config,
                              int internal);

/// Adiabatic switching time 1 / omega_T.
double adiabatic_time(double trap_frequency);

/// Displacement N * lambda of the readout beam for site N.
double measurement_offset(int site, double period);

}  // namespace qwalk::lattice
