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

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "qwalk/distribution.hpp"

namespace qwalk {

using Complex = std::complex<double>;

/// Amplitude below which a lattice edge counts as empty.
inline constexpr double kBoundaryThreshold = 1e-12;
/// Tolerance for normalization and unitarity checks on inputs.
inline constexpr double kUnitTolerance = 1e-12;

enum class Parity { odd, even };

/// Odd for step 1, even for step 2, and so on.
Parity parity_of_step(int step_index);

/// Internal (coin) state as a two-component vector over |0>, |1>.
struct InternalState {
  Complex zero;
  Complex one;
};

/// The symmetric initial coin state (|0> + i|1>)/sqrt(2).
InternalState symmetric_internal_state();

class CoinOperator {
 public:
  /// Row-major 2x2 entries. Throws ValidationError unless unitary.
  explicit CoinOperator(const std::array<Complex, 4>& entries);

  static CoinOperator hadamard();
  static CoinOperator identity();

  Complex operator()(int row, int col) const { return entries_[2 * row + col]; }
  const std::array<Complex, 4>& entries() const { return entries_; }

  InternalState apply(const InternalState& v) const;

 private:
  std::array<Complex, 4> entries_;
};

/// One tunneling stage: which superlattice configuration is active and the
/// rotation angle theta = J * dt / 2 applied inside every double well.
struct StepSpec {
  Parity parity = Parity::odd;
  double theta = 1.5707963267948966;
};

/// Double-well pairing of the lattice for one internal state under one
/// superlattice configuration. Every site belongs to exactly one pair of
/// adjacent sites {lower, lower + 1}.
class PairPartition {
 public:
  PairPartition(Parity parity, int internal);

  Parity parity() const { return parity_; }
  int internal() const { return internal_; }

  /// True when pairs are {2l, 2l+1}; false when pairs are {2l-1, 2l}.
  bool lower_site_even() const { return lower_even_; }
  int lower_site(int site) const;
  int partner(int site) const;

 private:
  Parity parity_;
  int internal_;
  bool lower_even_;
};

PairPartition pair_partition(Parity parity, int internal);

/// Coin-and-position amplitudes on the sites [-L, L].
class WalkState {
 public:
  /// Localized at site 0 carrying `initial`. Throws ValidationError when
  /// `initial` is not normalized or half_width < 1.
  static WalkState localized(const InternalState& initial, int half_width);

  int half_width() const { return half_width_; }
  int step_count() const { return step_count_; }
  int num_sites() const { return 2 * half_width_ + 1; }

  Complex amplitude(int internal, int site) const;
  std::span<const Complex> amplitudes(int internal) const;
  double norm_squared() const;

  friend WalkState apply_coin(WalkState state, const CoinOperator& coin);
  friend WalkState apply_step(WalkState state, const StepSpec& spec);

 private:
  WalkState(int half_width) : half_width_(half_width) {}
  std::size_t index(int site) const { return static_cast<std::size_t>(site + half_width_); }

  int half_width_ = 0;
  int step_count_ = 0;
  std::array<std::vector<Complex>, 2> amps_;
};

/// Same as WalkState::localized.
WalkState new_state(const InternalState& initial, int half_width);

/// Left-multiplies the internal 2-vector at every site by the coin.
WalkState apply_coin(WalkState state, const CoinOperator& coin);

/// Rotates each double well by [[cos t, i sin t], [i sin t, cos t]].
///
/// At theta = pi/2 this is the ideal conditional shift times a global
/// phase i. Throws BoundaryOverflowError if, after the step, the outermost
/// site at either edge carries amplitude above kBoundaryThreshold.
WalkState apply_step(WalkState state, const StepSpec& spec);

/// Rotation angle for a pulse of duration pi/J_min + dt0, given the
/// dimensionless product J_min * dt0.
double theta_for_offset(double jmin_dt0);

struct WalkConfig {
  int steps = 0;
  InternalState initial = symmetric_internal_state();
  CoinOperator coin = CoinOperator::hadamard();
  /// J_min * dt0; used when `thetas` is empty.
  double timing_offset = 0.0;
  /// Explicit per-step rotation angles; size must equal `steps` if set.
  std::optional<std::vector<double>> thetas;
  /// 0 selects steps + 1.
  int half_width = 0;
};

/// Applies (step . coin) `steps` times with alternating parity starting odd.
/// Returns the states after 0, 1, ..., steps iterations.
std::vector<WalkState> run_walk(const WalkConfig& config);

/// P(x) summed over both internal states, over all sites of the lattice.
Distribution position_distribution(const WalkState& state);

}  // namespace qwalk
