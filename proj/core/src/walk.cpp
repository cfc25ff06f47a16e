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

#include "qwalk/walk.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr Complex kI{0.0, 1.0};

// Floor-mod that is non-negative for negative sites.
int mod2(int site) { return ((site % 2) + 2) % 2; }

// cos(pi/2) and sin(pi) evaluate to ~1e-16; at quarter turns the step must
// be an exact permutation so off-parity sites stay exactly empty.
double snap_to_zero(double v) { return std::abs(v) < 1e-15 ? 0.0 : v; }

}  // namespace

Parity parity_of_step(int step_index) {
  if (step_index < 1) throw ValidationError("step index must be >= 1");
  return step_index % 2 == 1 ? Parity::odd : Parity::even;
}

InternalState symmetric_internal_state() {
  const double r = 1.0 / std::numbers::sqrt2;
  return {Complex{r, 0.0}, Complex{0.0, r}};
}

CoinOperator::CoinOperator(const std::array<Complex, 4>& entries) : entries_(entries) {
  // U^dagger U == 1
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Complex sum = std::conj(entries_[r]) * entries_[c] +
                    std::conj(entries_[2 + r]) * entries_[2 + c];
      const double expected = r == c ? 1.0 : 0.0;
      if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()) ||
          std::abs(sum - expected) > kUnitTolerance) {
        throw ValidationError("coin operator is not unitary");
      }
    }
  }
}

CoinOperator CoinOperator::hadamard() {
  const double r = 1.0 / std::numbers::sqrt2;
  return CoinOperator({Complex{r}, Complex{r}, Complex{r}, Complex{-r}});
}

CoinOperator CoinOperator::identity() {
  return CoinOperator({Complex{1.0}, Complex{0.0}, Complex{0.0}, Complex{1.0}});
}

InternalState CoinOperator::apply(const InternalState& v) const {
  return {entries_[0] * v.zero + entries_[1] * v.one,
          entries_[2] * v.zero + entries_[3] * v.one};
}

PairPartition::PairPartition(Parity parity, int internal)
    : parity_(parity), internal_(internal) {
  if (internal != 0 && internal != 1) throw ValidationError("internal state must be 0 or 1");
  // odd/0 and even/1 pair {2l, 2l+1}; odd/1 and even/0 pair {2l-1, 2l}.
  lower_even_ = (parity == Parity::odd) == (internal == 0);
}

int PairPartition::lower_site(int site) const {
  const bool site_even = mod2(site) == 0;
  return site_even == lower_even_ ? site : site - 1;
}

int PairPartition::partner(int site) const {
  const int lower = lower_site(site);
  return site == lower ? site + 1 : lower;
}

PairPartition pair_partition(Parity parity, int internal) { return PairPartition(parity, internal); }

WalkState WalkState::localized(const InternalState& initial, int half_width) {
  if (half_width < 1) throw ValidationError("lattice half-width must be >= 1");
  const double norm = std::norm(initial.zero) + std::norm(initial.one);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kUnitTolerance) {
    throw ValidationError("initial internal state is not normalized (|v|^2 = " +
                          std::to_string(norm) + ")");
  }
  WalkState state(half_width);
  for (auto& a : state.amps_) a.assign(static_cast<std::size_t>(state.num_sites()), Complex{});
  state.amps_[0][state.index(0)] = initial.zero;
  state.amps_[1][state.index(0)] = initial.one;
  return state;
}

WalkState new_state(const InternalState& initial, int half_width) {
  return WalkState::localized(initial, half_width);
}

Complex WalkState::amplitude(int internal, int site) const {
  if (internal != 0 && internal != 1) throw ValidationError("internal state must be 0 or 1");
  if (site < -half_width_ || site > half_width_) return Complex{};
  return amps_[static_cast<std::size_t>(internal)][index(site)];
}

std::span<const Complex> WalkState::amplitudes(int internal) const {
  return amps_.at(static_cast<std::size_t>(internal));
}

double WalkState::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amps_)
    for (const Complex& z : a) sum += std::norm(z);
  return sum;
}

WalkState apply_coin(WalkState state, const CoinOperator& coin) {
  auto& up = state.amps_[0];
  auto& down = state.amps_[1];
  for (std::size_t k = 0; k < up.size(); ++k) {
    const InternalState v = coin.apply({up[k], down[k]});
    up[k] = v.zero;
    down[k] = v.one;
  }
  return state;
}

WalkState apply_step(WalkState state, const StepSpec& spec) {
  const Complex c{snap_to_zero(std::cos(spec.theta)), 0.0};
  const Complex s = kI * snap_to_zero(std::sin(spec.theta));
  const int L = state.half_width_;

  for (int internal = 0; internal < 2; ++internal) {
    const PairPartition pairs(spec.parity, internal);
    auto& a = state.amps_[static_cast<std::size_t>(internal)];
    int lower = pairs.lower_site(-L);
    if (lower < -L) {
      // Partner lies outside the lattice; the edge site is empty.
      a[state.index(-L)] *= c;
      lower += 2;
    }
    for (; lower <= L; lower += 2) {
      if (lower + 1 > L) {
        a[state.index(lower)] *= c;
        break;
      }
      Complex& left = a[state.index(lower)];
      Complex& right = a[state.index(lower + 1)];
      const Complex l = left;
      const Complex r = right;
      left = c * l + s * r;
      right = s * l + c * r;
    }
  }
  ++state.step_count_;

  for (const auto& a : state.amps_) {
    if (std::abs(a.front()) > kBoundaryThreshold || std::abs(a.back()) > kBoundaryThreshold) {
      throw BoundaryOverflowError("amplitude reached the lattice edge at step " +
                                  std::to_string(state.step_count_) + " (half-width " +
                                  std::to_string(L) + "); increase the lattice half-width");
    }
  }
  return state;
}

double theta_for_offset(double jmin_dt0) { return std::numbers::pi / 2.0 + 0.5 * jmin_dt0; }

std::vector<WalkState> run_walk(const WalkConfig& config) {
  if (config.steps < 0) throw ValidationError("number of steps must be >= 0");
  if (config.thetas && config.thetas->size() != static_cast<std::size_t>(config.steps)) {
    throw ValidationError("per-step theta list must have one entry per step");
  }
  if (!config.thetas && !std::isfinite(config.timing_offset)) {
    throw ValidationError("timing offset must be finite");
  }
  const int half_width = config.half_width > 0 ? config.half_width : config.steps + 1;

  std::vector<WalkState> states;
  states.reserve(static_cast<std::size_t>(config.steps) + 1);
  states.push_back(WalkState::localized(config.initial, half_width));
  const double constant_theta = theta_for_offset(config.timing_offset);
  for (int n = 1; n <= config.steps; ++n) {
    const StepSpec spec{parity_of_step(n),
                        config.thetas ? (*config.thetas)[static_cast<std::size_t>(n - 1)]
                                      : constant_theta};
    states.push_back(apply_step(apply_coin(states.back(), config.coin), spec));
  }
  return states;
}

Distribution position_distribution(const WalkState& state) {
  Distribution d;
  d.first_site = -state.half_width();
  d.step = state.step_count();
  const auto up = state.amplitudes(0);
  const auto down = state.amplitudes(1);
  d.probabilities.resize(up.size());
  for (std::size_t k = 0; k < up.size(); ++k) d.probabilities[k] = std::norm(up[k]) + std::norm(down[k]);
  return d;
}

}  // namespace qwalk
