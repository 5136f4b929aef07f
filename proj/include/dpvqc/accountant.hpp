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

// Renyi-DP accounting for the subsampled Gaussian mechanism.
//
// With P = N(0, s^2) and Q = (1 - q) N(0, s^2) + q N(1, s^2), the per-step
// RDP at order a is log(A_a) / (a - 1), where
//   A_a = E_{z ~ P}[(1 - q + q exp((2z - 1) / (2 s^2)))^a].
// Integer orders use the binomial expansion of A_a; other orders integrate
// it numerically. Steps compose additively, and the curve is converted to
// (eps, delta) by minimizing rdp(a) + log(1/delta) / (a - 1).

#ifndef DPVQC_ACCOUNTANT_HPP_
#define DPVQC_ACCOUNTANT_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "dpvqc/errors.hpp"
#include "dpvqc/parallel.hpp"

namespace dpvqc {

struct AccountantQuery {
  double sampling_rate_q = 1.0;
  double sigma = 1.0;
  long long steps = 1;
  double delta = 1e-5;
  std::vector<double> orders;
};

struct AccountantResult {
  double epsilon = 0.0;
  double best_order = 0.0;
  std::vector<double> rdp_curve;
  // True when the grid minimum was negative and epsilon was raised to 0.
  bool clamped = false;
};

// {1.25, 1.5, ..., 64} followed by the integers 65..256.
inline std::vector<double> default_orders() {
  std::vector<double> orders;
  for (int i = 5; i <= 256; ++i) orders.push_back(i * 0.25);
  for (int a = 65; a <= 256; ++a) orders.push_back(a);
  return orders;
}

namespace detail {

inline double log_add_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

inline bool is_integer_order(double alpha) {
  return alpha == std::floor(alpha) && alpha < 1e9;
}

inline void check_order(double alpha) {
  if (!(alpha > 1) || !std::isfinite(alpha)) {
    throw ArgumentError("RDP orders must be finite and > 1, got " +
                        std::to_string(alpha));
  }
}

inline void check_rate(double q) {
  if (!(q > 0 && q <= 1)) {
    throw ArgumentError("sampling rate must lie in (0, 1], got " +
                        std::to_string(q));
  }
}

}  // namespace detail

// log A_a for integer a >= 2 via the binomial expansion, in log space.
inline double log_a_binomial(double q, double sigma, int alpha) {
  detail::check_rate(q);
  if (alpha < 2) throw ArgumentError("binomial expansion needs order >= 2");
  const double log_q = std::log(q);
  const double log_1mq = q == 1.0 ? -std::numeric_limits<double>::infinity()
                                  : std::log1p(-q);
  const double lg_a1 = std::lgamma(alpha + 1.0);
  double acc = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= alpha; ++k) {
    const double log_binom =
        lg_a1 - std::lgamma(k + 1.0) - std::lgamma(alpha - k + 1.0);
    const double log_1mq_term = (alpha - k) == 0 ? 0.0 : (alpha - k) * log_1mq;
    const double term = log_binom + log_1mq_term + k * log_q +
                        static_cast<double>(k) * (k - 1) / (2 * sigma * sigma);
    acc = detail::log_add_exp(acc, term);
  }
  return acc;
}

// log A_a for any order a > 1 by trapezoidal integration of the log
// integrand. All stationary points lie in [0, a] and the log integrand is
// never more concave than the Gaussian, so [-40 s, a + 40 s] holds the mass.
inline double log_a_integral(double q, double sigma, double alpha) {
  detail::check_rate(q);
  detail::check_order(alpha);
  const double s2 = sigma * sigma;
  const double log_q = std::log(q);
  const double log_1mq = q == 1.0 ? -std::numeric_limits<double>::infinity()
                                  : std::log1p(-q);
  const double log_norm = -0.5 * std::log(2 * std::numbers::pi * s2);
  auto log_f = [&](double z) {
    const double log_ratio =
        detail::log_add_exp(log_1mq, log_q + (2 * z - 1) / (2 * s2));
    return log_norm - z * z / (2 * s2) + alpha * log_ratio;
  };

  // Coarse scan at sigma / 4 to find where the integrand is non-negligible.
  // Peaks are at least sigma wide, so none falls between coarse points.
  double lo = -40 * sigma;
  double hi = alpha + 40 * sigma;
  {
    const double coarse = sigma / 4;
    const auto nc = static_cast<std::size_t>(std::ceil((hi - lo) / coarse));
    std::vector<double> v(nc + 1);
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= nc; ++i) {
      v[i] = log_f(lo + coarse * static_cast<double>(i));
      top = std::max(top, v[i]);
    }
    std::size_t first = 0;
    std::size_t last = nc;
    while (v[first] < top - 100) ++first;
    while (v[last] < top - 100) --last;
    const double base = lo;
    lo = base + coarse * (static_cast<double>(first) - 1);
    hi = base + coarse * (static_cast<double>(last) + 1);
  }

  // The mixture ratio changes on a scale of s^2, the Gaussian on s.
  const double h = std::min(sigma, s2) / 50;
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / h));
  const double step = (hi - lo) / static_cast<double>(n);
  double peak = -std::numeric_limits<double>::infinity();
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    values[i] = log_f(lo + step * static_cast<double>(i));
    peak = std::max(peak, values[i]);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    sum += w * std::exp(values[i] - peak);
  }
  return peak + std::log(sum * step);
}

// Per-step RDP of the subsampled Gaussian at one order. Infinite for
// sigma == 0.
inline double rdp_per_step(double q, double sigma, double alpha) {
  detail::check_rate(q);
  detail::check_order(alpha);
  if (!(sigma >= 0) || !std::isfinite(sigma)) {
    throw ArgumentError("noise multiplier must be finite and >= 0");
  }
  if (sigma == 0) return std::numeric_limits<double>::infinity();
  if (q == 1.0) return alpha / (2 * sigma * sigma);
  const double log_a = detail::is_integer_order(alpha)
                           ? log_a_binomial(q, sigma, static_cast<int>(alpha))
                           : log_a_integral(q, sigma, alpha);
  return log_a / (alpha - 1);
}

// steps x per-step RDP at every order.
inline std::vector<double> rdp_sampled_gaussian(double q, double sigma,
                                                long long steps,
                                                const std::vector<double>& orders) {
  detail::check_rate(q);
  if (steps < 1) throw ArgumentError("steps must be positive");
  if (orders.empty()) throw ArgumentError("order grid is empty");
  for (double a : orders) detail::check_order(a);
  std::vector<double> curve(orders.size());
  parallel_for(orders.size(), [&](std::size_t i) {
    curve[i] = static_cast<double>(steps) * rdp_per_step(q, sigma, orders[i]);
  });
  return curve;
}

inline AccountantResult rdp_to_dp(const std::vector<double>& rdp_curve,
                                  const std::vector<double>& orders,
                                  double delta) {
  if (rdp_curve.size() != orders.size() || orders.empty()) {
    throw ArgumentError("RDP curve and order grid must be aligned and nonempty");
  }
  if (!(delta > 0 && delta < 1)) {
    throw ArgumentError("delta must lie in (0, 1)");
  }
  AccountantResult r;
  r.rdp_curve = rdp_curve;
  r.epsilon = std::numeric_limits<double>::infinity();
  r.best_order = orders.front();
  const double log_inv_delta = -std::log(delta);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    detail::check_order(orders[i]);
    const double eps = rdp_curve[i] + log_inv_delta / (orders[i] - 1);
    if (eps < r.epsilon) {
      r.epsilon = eps;
      r.best_order = orders[i];
    }
  }
  if (r.epsilon < 0) {
    r.epsilon = 0;
    r.clamped = true;
  }
  return r;
}

inline AccountantResult compute_epsilon(const AccountantQuery& query) {
  const std::vector<double> orders =
      query.orders.empty() ? default_orders() : query.orders;
  return rdp_to_dp(rdp_sampled_gaussian(query.sampling_rate_q, query.sigma,
                                        query.steps, orders),
                   orders, query.delta);
}

// Smallest delta consistent with a Gaussian mechanism of noise sigma at
// privacy level epsilon: 0.8 exp(-(sigma epsilon)^2 / 2).
inline double gaussian_delta_bound(double sigma, double epsilon) {
  const double t = sigma * epsilon;
  return 0.8 * std::exp(-t * t / 2);
}

inline long long training_steps(long long n_training, long long batch_size,
                                long long epochs) {
  return epochs * (n_training / batch_size);
}

inline AccountantResult training_epsilon(long long n_training,
                                         long long batch_size,
                                         long long epochs, double sigma,
                                         double delta,
                                         const std::vector<double>& orders = {}) {
  if (n_training < 1 || batch_size < 1 || batch_size > n_training) {
    throw ArgumentError("need 1 <= batch size <= training set size");
  }
  if (epochs < 1) throw ArgumentError("epochs must be positive");
  AccountantQuery q;
  q.sampling_rate_q =
      static_cast<double>(batch_size) / static_cast<double>(n_training);
  q.sigma = sigma;
  q.steps = training_steps(n_training, batch_size, epochs);
  q.delta = delta;
  q.orders = orders;
  return compute_epsilon(q);
}

// Noise multiplier whose training epsilon is target_epsilon, found by
// bisection on log(sigma). The returned sigma satisfies eps <= target.
inline double sigma_for_epsilon(long long n_training, long long batch_size,
                                long long epochs, double delta,
                                double target_epsilon,
                                const std::vector<double>& orders = {}) {
  if (!(target_epsilon > 0) || !std::isfinite(target_epsilon)) {
    throw ArgumentError("target epsilon must be positive and finite");
  }
  auto eps_at = [&](double s) {
    return training_epsilon(n_training, batch_size, epochs, s, delta, orders)
        .epsilon;
  };
  double lo = 1e-2;
  double hi = 1.0;
  while (eps_at(hi) > target_epsilon) {
    lo = hi;
    hi *= 2;
    if (hi > 1e6) throw ArgumentError("target epsilon is unreachable");
  }
  if (eps_at(lo) <= target_epsilon) return lo;
  for (int it = 0; it < 60 && hi / lo > 1 + 1e-10; ++it) {
    const double mid = std::sqrt(lo * hi);
    (eps_at(mid) > target_epsilon ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace dpvqc

#endif  // DPVQC_ACCOUNTANT_HPP_
