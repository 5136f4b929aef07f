// Copyright 2026 The dpvqc Authors
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

// Differentially private mini-batch optimization.
//
// A mini-batch of n examples is split into micro-batches of m examples. Each
// micro-batch gradient (the mean of its per-example gradients) is clipped to
// L2 norm S, the clipped gradients are summed, a single Gaussian vector with
// per-coordinate std sigma * S is added, and the result is scaled by m / n.
// The effective gradient then drives an RMSprop-with-momentum step.

#ifndef DPVQC_DP_OPTIM_HPP_
#define DPVQC_DP_OPTIM_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dpvqc/errors.hpp"
#include "dpvqc/example.hpp"
#include "dpvqc/parallel.hpp"

namespace dpvqc {

inline constexpr double kClipFudge = 1e-6;

struct PrivacyConfig {
  double clip_S = 1.0;
  double noise_multiplier = 1.0;
  int microbatch_size = 1;
  double delta = 1e-5;

  void validate() const {
    if (!(clip_S > 0)) throw ConfigError("clip bound S must be positive");
    if (!(noise_multiplier >= 0) || !std::isfinite(noise_multiplier)) {
      throw ConfigError("noise multiplier must be finite and >= 0");
    }
    if (noise_multiplier > 0 && !std::isfinite(clip_S)) {
      throw ConfigError("noise requires a finite clip bound");
    }
    if (microbatch_size < 1) {
      throw ConfigError("micro-batch size must be positive");
    }
    if (!(delta > 0 && delta < 1)) {
      throw ConfigError("delta must lie in (0, 1)");
    }
  }
};

struct OptimizerState {
  std::vector<double> sq_avg;
  std::vector<double> momentum_buf;
  double lr = 0.05;
  double alpha = 0.9;
  double mu = 0.5;
  double eps = 1e-8;
  // sq_avg starts at the first observed g^2; false until the first step.
  bool initialized = false;

  static OptimizerState create(std::size_t n_params, double lr = 0.05,
                               double alpha = 0.9, double mu = 0.5,
                               double eps = 1e-8) {
    OptimizerState s;
    s.sq_avg.assign(n_params, 0.0);
    s.momentum_buf.assign(n_params, 0.0);
    s.lr = lr;
    s.alpha = alpha;
    s.mu = mu;
    s.eps = eps;
    return s;
  }
};

struct StepResult {
  std::vector<double> params;
  OptimizerState state;
};

// Scaled by the largest magnitude so that huge components do not overflow.
inline double l2_norm(std::span<const double> v) {
  double big = 0.0;
  for (double x : v) big = std::max(big, std::abs(x));
  if (big == 0.0 || !std::isfinite(big)) return big;
  double s = 0.0;
  for (double x : v) s += (x / big) * (x / big);
  return big * std::sqrt(s);
}

// g * min(S / (||g|| + 1e-6), 1).
inline std::vector<double> clip_gradient(std::span<const double> g,
                                         double clip_S) {
  std::vector<double> out(g.begin(), g.end());
  if (std::isinf(clip_S)) return out;
  const double coef = std::min(clip_S / (l2_norm(g) + kClipFudge), 1.0);
  for (double& v : out) v *= coef;
  return out;
}

// (m / n) * (sum of clipped micro-batch gradients + N(0, sigma^2 S^2 I)).
// No noise is drawn when sigma is zero.
template <class Engine>
std::vector<double> accumulate_and_noise(
    const std::vector<std::vector<double>>& clipped, const PrivacyConfig& cfg,
    std::size_t minibatch_n, Engine& rng) {
  if (clipped.empty()) {
    throw ArgumentError("no micro-batch gradients to accumulate");
  }
  if (minibatch_n == 0) throw ArgumentError("mini-batch size must be positive");
  std::vector<double> acc = clipped.front();
  for (std::size_t i = 1; i < clipped.size(); ++i) {
    if (clipped[i].size() != acc.size()) {
      throw SizeError("micro-batch gradients differ in length");
    }
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += clipped[i][j];
  }
  if (cfg.noise_multiplier > 0) {
    std::normal_distribution<double> normal(0.0,
                                            cfg.noise_multiplier * cfg.clip_S);
    for (double& v : acc) v += normal(rng);
  }
  const double scale = static_cast<double>(cfg.microbatch_size) /
                       static_cast<double>(minibatch_n);
  for (double& v : acc) v *= scale;
  return acc;
}

// sq_avg <- alpha sq_avg + (1 - alpha) g^2
// buf    <- mu buf + g / (sqrt(sq_avg) + eps)
// theta  <- theta - lr buf
inline StepResult rmsprop_step(OptimizerState state, std::vector<double> theta,
                               std::span<const double> g) {
  if (theta.size() != g.size() || state.sq_avg.size() != g.size() ||
      state.momentum_buf.size() != g.size()) {
    throw ArgumentError("rmsprop_step: parameter, gradient and state lengths "
                        "differ");
  }
  if (!state.initialized) {
    for (std::size_t i = 0; i < g.size(); ++i) state.sq_avg[i] = g[i] * g[i];
    state.initialized = true;
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    state.sq_avg[i] =
        state.alpha * state.sq_avg[i] + (1 - state.alpha) * g[i] * g[i];
    state.momentum_buf[i] = state.mu * state.momentum_buf[i] +
                            g[i] / (std::sqrt(state.sq_avg[i]) + state.eps);
    theta[i] -= state.lr * state.momentum_buf[i];
  }
  return {std::move(theta), std::move(state)};
}

using GradFn = std::function<std::vector<double>(std::span<const double>,
                                                 const LabeledExample&)>;

struct UpdateStats {
  std::size_t clip_count = 0;
  std::size_t noise_draws = 0;
  std::vector<double> effective_gradient;
};

// Per-example gradients, computed concurrently, returned in batch order.
inline std::vector<std::vector<double>> per_example_gradients(
    std::span<const double> params, std::span<const LabeledExample> batch,
    const GradFn& grad_fn, std::size_t workers = 0) {
  std::vector<std::vector<double>> grads(batch.size());
  parallel_for(
      batch.size(), [&](std::size_t i) { grads[i] = grad_fn(params, batch[i]); },
      workers);
  for (const auto& g : grads) {
    if (g.size() != params.size()) {
      throw SizeError("gradient length " + std::to_string(g.size()) +
                      " does not match " + std::to_string(params.size()) +
                      " parameters");
    }
  }
  return grads;
}

namespace detail {

inline std::vector<double> mean_of(
    const std::vector<std::vector<double>>& grads, std::size_t begin,
    std::size_t end) {
  std::vector<double> sum = grads[begin];
  for (std::size_t i = begin + 1; i < end; ++i) {
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += grads[i][j];
  }
  const double n = static_cast<double>(end - begin);
  for (double& v : sum) v /= n;
  return sum;
}

}  // namespace detail

// Non-private step on the mean gradient of the batch.
inline UpdateStats minibatch_update(std::vector<double>& params,
                                    std::span<const LabeledExample> batch,
                                    const GradFn& grad_fn,
                                    OptimizerState& opt,
                                    std::size_t workers = 0) {
  if (batch.empty()) throw ArgumentError("empty mini-batch");
  const auto grads = per_example_gradients(params, batch, grad_fn, workers);
  UpdateStats stats;
  stats.effective_gradient = detail::mean_of(grads, 0, grads.size());
  StepResult r =
      rmsprop_step(std::move(opt), std::move(params), stats.effective_gradient);
  params = std::move(r.params);
  opt = std::move(r.state);
  return stats;
}

// Private step: clip each micro-batch mean gradient, accumulate, add one
// noise vector, rescale, and apply RMSprop.
template <class Engine>
UpdateStats dp_minibatch_update(std::vector<double>& params,
                                std::span<const LabeledExample> batch,
                                const GradFn& grad_fn,
                                const PrivacyConfig& cfg, OptimizerState& opt,
                                Engine& rng, std::size_t workers = 0) {
  cfg.validate();
  if (batch.empty()) throw ArgumentError("empty mini-batch");
  const std::size_t m = static_cast<std::size_t>(cfg.microbatch_size);
  if (batch.size() % m != 0) {
    throw ArgumentError("micro-batch size " + std::to_string(m) +
                        " does not divide mini-batch size " +
                        std::to_string(batch.size()));
  }
  const auto grads = per_example_gradients(params, batch, grad_fn, workers);
  UpdateStats stats;
  std::vector<std::vector<double>> clipped;
  clipped.reserve(batch.size() / m);
  for (std::size_t begin = 0; begin < batch.size(); begin += m) {
    clipped.push_back(
        clip_gradient(detail::mean_of(grads, begin, begin + m), cfg.clip_S));
    ++stats.clip_count;
  }
  stats.effective_gradient =
      accumulate_and_noise(clipped, cfg, batch.size(), rng);
  stats.noise_draws = cfg.noise_multiplier > 0 ? 1 : 0;
  StepResult r =
      rmsprop_step(std::move(opt), std::move(params), stats.effective_gradient);
  params = std::move(r.params);
  opt = std::move(r.state);
  return stats;
}

}  // namespace dpvqc

#endif  // DPVQC_DP_OPTIM_HPP_
