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

// Small tanh MLPs with a softmax head, used as the classical baseline.
//
// Parameters live in one flat vector. Layer l (fan_in -> fan_out) stores its
// fan_out x fan_in weight matrix row-major, then its fan_out biases; layers
// follow in order. Gradients use the same layout.

#ifndef DPVQC_BASELINE_HPP_
#define DPVQC_BASELINE_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dpvqc/circuits.hpp"
#include "dpvqc/errors.hpp"
#include "dpvqc/rng.hpp"

namespace dpvqc {

struct MlpModel {
  std::vector<int> layer_sizes;
  std::vector<double> params;

  std::size_t n_layers() const { return layer_sizes.size() - 1; }

  std::size_t weight_offset(std::size_t l) const {
    std::size_t off = 0;
    for (std::size_t i = 0; i < l; ++i) {
      off += static_cast<std::size_t>(layer_sizes[i] + 1) * layer_sizes[i + 1];
    }
    return off;
  }

  std::size_t bias_offset(std::size_t l) const {
    return weight_offset(l) +
           static_cast<std::size_t>(layer_sizes[l]) * layer_sizes[l + 1];
  }

  std::size_t param_count() const { return weight_offset(n_layers()); }

  double weight(std::size_t l, int out, int in) const {
    return params[weight_offset(l) +
                  static_cast<std::size_t>(out) * layer_sizes[l] + in];
  }

  double bias(std::size_t l, int out) const {
    return params[bias_offset(l) + out];
  }

  void validate() const {
    if (layer_sizes.size() < 2) {
      throw ArgumentError("an MLP needs at least an input and output layer");
    }
    for (int s : layer_sizes) {
      if (s < 1) throw ArgumentError("layer sizes must be positive");
    }
    if (layer_sizes.back() != kNumClasses) {
      throw ArgumentError("the output layer must have 2 units");
    }
    if (params.size() != param_count()) {
      throw SizeError("MLP expects " + std::to_string(param_count()) +
                      " parameters, has " + std::to_string(params.size()));
    }
  }
};

// Xavier-uniform weights in +-sqrt(6 / (fan_in + fan_out)), zero biases.
template <class Engine>
MlpModel mlp_init(const std::vector<int>& layer_sizes, Engine& rng) {
  MlpModel m{layer_sizes, {}};
  if (layer_sizes.size() < 2) {
    throw ArgumentError("an MLP needs at least an input and output layer");
  }
  m.params.assign(m.param_count(), 0.0);
  for (std::size_t l = 0; l < m.n_layers(); ++l) {
    const int fi = layer_sizes[l];
    const int fo = layer_sizes[l + 1];
    const double bound = std::sqrt(6.0 / (fi + fo));
    std::uniform_real_distribution<double> uniform(-bound, bound);
    const std::size_t off = m.weight_offset(l);
    for (std::size_t i = 0; i < static_cast<std::size_t>(fi) * fo; ++i) {
      m.params[off + i] = uniform(rng);
    }
  }
  m.validate();
  return m;
}

inline MlpModel mlp_init(const std::vector<int>& layer_sizes,
                         std::uint64_t seed) {
  StreamEngine rng = derive_stream(seed, kInitStream);
  return mlp_init(layer_sizes, rng);
}

namespace detail {

// Activations of every layer; the last entry holds the output logits.
inline std::vector<std::vector<double>> mlp_activations(
    const MlpModel& m, std::span<const double> x) {
  m.validate();
  if (x.size() != static_cast<std::size_t>(m.layer_sizes.front())) {
    throw SizeError("MLP expects " + std::to_string(m.layer_sizes.front()) +
                        " inputs, got " + std::to_string(x.size()));
  }
  std::vector<std::vector<double>> acts;
  acts.emplace_back(x.begin(), x.end());
  for (std::size_t l = 0; l < m.n_layers(); ++l) {
    const int fi = m.layer_sizes[l];
    const int fo = m.layer_sizes[l + 1];
    const std::vector<double>& in = acts.back();
    std::vector<double> out(fo);
    const double* w = m.params.data() + m.weight_offset(l);
    const double* b = m.params.data() + m.bias_offset(l);
    const bool hidden = l + 1 < m.n_layers();
    for (int o = 0; o < fo; ++o) {
      double z = b[o];
      for (int i = 0; i < fi; ++i) z += w[o * fi + i] * in[i];
      out[o] = hidden ? std::tanh(z) : z;
    }
    acts.push_back(std::move(out));
  }
  return acts;
}

}  // namespace detail

inline Probabilities mlp_forward(const MlpModel& m, std::span<const double> x) {
  const auto acts = detail::mlp_activations(m, x);
  return predict_proba({acts.back()[0], acts.back()[1]});
}

inline double mlp_loss(const MlpModel& m, std::span<const double> x,
                       int label) {
  return cross_entropy(mlp_forward(m, x), label);
}

// Backpropagated cross-entropy gradient in the flat parameter layout.
inline std::vector<double> mlp_grad(const MlpModel& m,
                                    std::span<const double> x, int label) {
  check_label(label);
  const auto acts = detail::mlp_activations(m, x);
  const Probabilities p = predict_proba({acts.back()[0], acts.back()[1]});
  std::vector<double> grad(m.param_count(), 0.0);
  std::vector<double> delta = {p[0] - (label == 0 ? 1.0 : 0.0),
                               p[1] - (label == 1 ? 1.0 : 0.0)};
  for (std::size_t l = m.n_layers(); l-- > 0;) {
    const int fi = m.layer_sizes[l];
    const int fo = m.layer_sizes[l + 1];
    const std::vector<double>& in = acts[l];
    double* gw = grad.data() + m.weight_offset(l);
    double* gb = grad.data() + m.bias_offset(l);
    for (int o = 0; o < fo; ++o) {
      for (int i = 0; i < fi; ++i) gw[o * fi + i] = delta[o] * in[i];
      gb[o] = delta[o];
    }
    if (l == 0) break;
    const double* w = m.params.data() + m.weight_offset(l);
    std::vector<double> prev(fi, 0.0);
    for (int i = 0; i < fi; ++i) {
      double s = 0.0;
      for (int o = 0; o < fo; ++o) s += w[o * fi + i] * delta[o];
      prev[i] = s * (1 - in[i] * in[i]);
    }
    delta = std::move(prev);
  }
  return grad;
}

}  // namespace dpvqc

#endif  // DPVQC_BASELINE_HPP_
