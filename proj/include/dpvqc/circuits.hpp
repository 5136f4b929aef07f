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

// Variational quantum classifiers built from chained circuit blocks.
//
// A block prepares its input (variational or amplitude encoding), then
// repeats n_layers times: the entangling CNOTs in listed order, followed by a
// general rotation R(phi, theta, omega) on every wire. Its outputs are the Z
// expectations of the measured wires. The outputs of block k are the
// variational inputs of block k + 1; the last block yields two logits.
//
// Parameters are one flat vector, block-major, then layer-major, then
// wire-major, then (phi, theta, omega).

#ifndef DPVQC_CIRCUITS_HPP_
#define DPVQC_CIRCUITS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dpvqc/encoding.hpp"
#include "dpvqc/errors.hpp"
#include "dpvqc/simulator.hpp"

namespace dpvqc {

inline constexpr int kNumClasses = 2;
inline constexpr double kShift = std::numbers::pi / 2;
inline constexpr double kShiftScale = 0.5;
inline constexpr double kProbabilityFloor = 1e-12;
inline constexpr double kInitScale = 0.01;

using Logits = std::array<double, kNumClasses>;
using Probabilities = std::array<double, kNumClasses>;

struct BlockSpec {
  int n_qubits = 0;
  int n_layers = 0;
  std::vector<std::pair<int, int>> entangler;
  std::vector<int> measured_wires;
  InputMode input_mode = InputMode::kVariational;

  std::size_t param_count() const {
    return static_cast<std::size_t>(n_layers) * n_qubits * 3;
  }

  void validate() const {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
      throw ArgumentError("block qubit count " + std::to_string(n_qubits) +
                          " out of range");
    }
    if (n_layers < 1) throw ArgumentError("block needs at least one layer");
    for (const auto& [c, t] : entangler) {
      if (c == t || c < 0 || t < 0 || c >= n_qubits || t >= n_qubits) {
        throw ArgumentError("invalid entangler pair (" + std::to_string(c) +
                            ", " + std::to_string(t) + ")");
      }
    }
    if (measured_wires.empty()) {
      throw ArgumentError("block must measure at least one wire");
    }
    std::set<int> seen;
    for (int w : measured_wires) {
      if (w < 0 || w >= n_qubits || !seen.insert(w).second) {
        throw ArgumentError("measured wires must be distinct and < " +
                            std::to_string(n_qubits));
      }
    }
  }
};

// CNOT ring (0,1), (1,2), ..., (n-1, 0).
inline std::vector<std::pair<int, int>> ring_entangler(int n_qubits) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n_qubits; ++i) pairs.emplace_back(i, (i + 1) % n_qubits);
  return pairs;
}

struct VqcModel {
  std::string architecture;
  std::vector<BlockSpec> blocks;
  std::vector<double> params;

  std::size_t param_count() const {
    std::size_t n = 0;
    for (const BlockSpec& b : blocks) n += b.param_count();
    return n;
  }

  std::size_t block_offset(std::size_t k) const {
    std::size_t off = 0;
    for (std::size_t i = 0; i < k; ++i) off += blocks[i].param_count();
    return off;
  }

  std::span<const double> block_params(std::size_t k) const {
    return std::span<const double>(params).subspan(block_offset(k),
                                                   blocks[k].param_count());
  }

  void validate() const {
    if (blocks.empty()) throw ArgumentError("model has no blocks");
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      blocks[k].validate();
      if (k > 0) {
        if (blocks[k].input_mode != InputMode::kVariational) {
          throw ArgumentError("only the first block may use amplitude input");
        }
        if (blocks[k - 1].measured_wires.size() !=
            static_cast<std::size_t>(blocks[k].n_qubits)) {
          throw ArgumentError("block " + std::to_string(k - 1) + " emits " +
                              std::to_string(blocks[k - 1].measured_wires.size()) +
                              " values but block " + std::to_string(k) +
                              " has " + std::to_string(blocks[k].n_qubits) +
                              " qubits");
        }
      }
    }
    if (blocks.back().measured_wires.size() != kNumClasses) {
      throw ArgumentError("final block must measure exactly 2 wires");
    }
    if (params.size() != param_count()) {
      throw SizeError("model expects " + std::to_string(param_count()) +
                      " parameters, has " + std::to_string(params.size()));
    }
  }
};

// Two 2-qubit blocks, two layers each, CNOT(0,1) then CNOT(1,0) per layer.
inline VqcModel build_2d_model() {
  BlockSpec block{2, 2, {{0, 1}, {1, 0}}, {0, 1}, InputMode::kVariational};
  VqcModel m{"vqc-2d", {block, block}, {}};
  m.params.assign(m.param_count(), 0.0);
  return m;
}

// Ten amplitude-encoded qubits with eight ring-entangled layers measured on
// four wires, feeding a four-qubit block with four layers and two outputs.
inline VqcModel build_mnist_model() {
  BlockSpec first{10, 8, ring_entangler(10), {0, 1, 2, 3},
                  InputMode::kAmplitude};
  BlockSpec second{4, 4, ring_entangler(4), {0, 1}, InputMode::kVariational};
  VqcModel m{"vqc-mnist", {first, second}, {}};
  m.params.assign(m.param_count(), 0.0);
  return m;
}

// Reduced variant for 8x8 images: the first block holds 64 amplitudes on six
// qubits. The second block is identical to the full model's.
inline VqcModel build_mnist_8x8_model() {
  BlockSpec first{6, 8, ring_entangler(6), {0, 1, 2, 3}, InputMode::kAmplitude};
  BlockSpec second{4, 4, ring_entangler(4), {0, 1}, InputMode::kVariational};
  VqcModel m{"vqc-mnist-8x8", {first, second}, {}};
  m.params.assign(m.param_count(), 0.0);
  return m;
}

inline VqcModel build_vqc(const std::string& architecture) {
  if (architecture == "vqc-2d") return build_2d_model();
  if (architecture == "vqc-mnist") return build_mnist_model();
  if (architecture == "vqc-mnist-8x8") return build_mnist_8x8_model();
  throw ArgumentError("unknown VQC architecture '" + architecture + "'");
}

// Standard normal draws scaled by 0.01.
template <class Engine>
void init_vqc_params(VqcModel& model, Engine& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  model.params.resize(model.param_count());
  for (double& p : model.params) p = kInitScale * normal(rng);
}

namespace detail {

enum class OpKind { kRy, kRz, kRot, kCnot };

struct GateOp {
  OpKind kind;
  int wire;
  int target;         // CNOT only
  std::size_t angle;  // first angle index; rotations only
};

inline std::size_t angle_arity(OpKind k) {
  switch (k) {
    case OpKind::kRy:
    case OpKind::kRz:
      return 1;
    case OpKind::kRot:
      return 3;
    case OpKind::kCnot:
      return 0;
  }
  return 0;
}

// Flattened gate list of one block plus its angle vector. Encoding angles
// (variational input only) come first as (arctan x_i, arctan x_i^2) pairs,
// followed by the trainable parameters.
struct CompiledBlock {
  std::vector<GateOp> ops;
  std::vector<double> angles;
  std::size_t n_encoding_angles = 0;
};

inline CompiledBlock compile_block(const BlockSpec& spec,
                                   std::span<const double> params,
                                   const EncodedInput& input) {
  if (params.size() != spec.param_count()) {
    throw ArgumentError("block expects " + std::to_string(spec.param_count()) +
                        " parameters, got " + std::to_string(params.size()));
  }
  if (input.mode != spec.input_mode) {
    throw ArgumentError(std::string("block expects ") +
                        to_string(spec.input_mode) + " input, got " +
                        to_string(input.mode));
  }
  CompiledBlock c;
  const int nq = spec.n_qubits;
  if (input.mode == InputMode::kVariational) {
    if (input.values.size() != static_cast<std::size_t>(nq)) {
      throw ArgumentError("block expects " + std::to_string(nq) +
                          " variational inputs, got " +
                          std::to_string(input.values.size()));
    }
    for (int i = 0; i < nq; ++i) {
      c.ops.push_back({OpKind::kRy, i, 0, c.angles.size()});
      c.angles.push_back(encoding_y_angle(input.values[i]));
      c.ops.push_back({OpKind::kRz, i, 0, c.angles.size()});
      c.angles.push_back(encoding_z_angle(input.values[i]));
    }
  }
  c.n_encoding_angles = c.angles.size();
  c.angles.insert(c.angles.end(), params.begin(), params.end());
  for (int layer = 0; layer < spec.n_layers; ++layer) {
    for (const auto& [ctl, tgt] : spec.entangler) {
      c.ops.push_back({OpKind::kCnot, ctl, tgt, 0});
    }
    for (int w = 0; w < nq; ++w) {
      const std::size_t idx =
          c.n_encoding_angles + (static_cast<std::size_t>(layer) * nq + w) * 3;
      c.ops.push_back({OpKind::kRot, w, 0, idx});
    }
  }
  return c;
}

inline QuantumState initial_state(const BlockSpec& spec,
                                  const EncodedInput& input) {
  if (input.mode == InputMode::kVariational) {
    return new_zero_state(spec.n_qubits);
  }
  if (input.values.size() != (std::size_t{1} << spec.n_qubits)) {
    throw ArgumentError("block expects " +
                        std::to_string(std::size_t{1} << spec.n_qubits) +
                        " amplitudes, got " +
                        std::to_string(input.values.size()));
  }
  return amplitude_encode(input.values, spec.n_qubits);
}

// Applies op, with angle `shifted` (if it belongs to op) offset by `delta`.
inline void apply_op(QuantumState& s, const GateOp& op,
                     std::span<const double> angles, std::size_t shifted,
                     double delta) {
  auto angle = [&](std::size_t i) {
    return i == shifted ? angles[i] + delta : angles[i];
  };
  switch (op.kind) {
    case OpKind::kRy:
      s.apply_ry_inplace(op.wire, angle(op.angle));
      break;
    case OpKind::kRz:
      s.apply_rz_inplace(op.wire, angle(op.angle));
      break;
    case OpKind::kRot:
      s.apply_rot_inplace(op.wire, {angle(op.angle), angle(op.angle + 1),
                                    angle(op.angle + 2)});
      break;
    case OpKind::kCnot:
      s.apply_cnot_inplace(op.wire, op.target);
      break;
  }
}

inline constexpr std::size_t kNoShift = static_cast<std::size_t>(-1);

}  // namespace detail

// d(outputs)/d(angle), row-major: rows are measured wires, columns angles.
struct BlockJacobian {
  std::size_t n_outputs = 0;
  std::size_t n_columns = 0;
  std::vector<double> values;

  double operator()(std::size_t out, std::size_t col) const {
    return values[out * n_columns + col];
  }
};

inline std::vector<double> block_forward(const BlockSpec& spec,
                                         std::span<const double> params,
                                         const EncodedInput& input) {
  const detail::CompiledBlock c = detail::compile_block(spec, params, input);
  QuantumState s = detail::initial_state(spec, input);
  for (const detail::GateOp& op : c.ops) {
    detail::apply_op(s, op, c.angles, detail::kNoShift, 0.0);
  }
  return s.expectations_z(spec.measured_wires);
}

// Parameter-shift Jacobian of one block's outputs. Columns cover the
// trainable parameters, preceded by the 2 * n_qubits encoding angles when
// include_encoding is set (variational input only). Each derivative is
// (f(angle + pi/2) - f(angle - pi/2)) / 2; the state before the shifted gate
// is shared by both evaluations and all later gates are re-simulated.
inline BlockJacobian block_jacobian(const BlockSpec& spec,
                                    std::span<const double> params,
                                    const EncodedInput& input,
                                    bool include_encoding) {
  const detail::CompiledBlock c = detail::compile_block(spec, params, input);
  const std::size_t first_col = include_encoding ? 0 : c.n_encoding_angles;
  BlockJacobian jac;
  jac.n_outputs = spec.measured_wires.size();
  jac.n_columns = c.angles.size() - first_col;
  jac.values.assign(jac.n_outputs * jac.n_columns, 0.0);

  QuantumState prefix = detail::initial_state(spec, input);
  for (std::size_t g = 0; g < c.ops.size(); ++g) {
    const detail::GateOp& op = c.ops[g];
    const std::size_t arity = detail::angle_arity(op.kind);
    for (std::size_t a = op.angle; a < op.angle + arity; ++a) {
      if (a < first_col) continue;
      std::vector<double> plus_minus[2];
      for (int side = 0; side < 2; ++side) {
        QuantumState s = prefix;
        detail::apply_op(s, op, c.angles, a, side == 0 ? kShift : -kShift);
        for (std::size_t h = g + 1; h < c.ops.size(); ++h) {
          detail::apply_op(s, c.ops[h], c.angles, detail::kNoShift, 0.0);
        }
        plus_minus[side] = s.expectations_z(spec.measured_wires);
      }
      const std::size_t col = a - first_col;
      for (std::size_t o = 0; o < jac.n_outputs; ++o) {
        jac.values[o * jac.n_columns + col] =
            kShiftScale * (plus_minus[0][o] - plus_minus[1][o]);
      }
    }
    detail::apply_op(prefix, op, c.angles, detail::kNoShift, 0.0);
  }
  return jac;
}

// Encoded input of the first block for raw features x.
inline EncodedInput first_block_input(const VqcModel& model,
                                      std::span<const double> x) {
  const BlockSpec& spec = model.blocks.front();
  if (spec.input_mode == InputMode::kAmplitude) {
    return {InputMode::kAmplitude, amplitude_prepare(x, spec.n_qubits)};
  }
  if (x.size() != static_cast<std::size_t>(spec.n_qubits)) {
    throw SizeError("model expects " + std::to_string(spec.n_qubits) +
                    " features, got " + std::to_string(x.size()));
  }
  return {InputMode::kVariational, std::vector<double>(x.begin(), x.end())};
}

namespace detail {

struct ForwardTrace {
  std::vector<EncodedInput> inputs;  // per block
  std::vector<double> output;        // last block
};

inline ForwardTrace forward_trace(const VqcModel& model,
                                  std::span<const double> x) {
  model.validate();
  ForwardTrace t;
  EncodedInput in = first_block_input(model, x);
  for (std::size_t k = 0; k < model.blocks.size(); ++k) {
    std::vector<double> out =
        block_forward(model.blocks[k], model.block_params(k), in);
    t.inputs.push_back(std::move(in));
    in = EncodedInput{InputMode::kVariational, out};
    if (k + 1 == model.blocks.size()) t.output = std::move(out);
  }
  return t;
}

}  // namespace detail

inline Logits model_forward(const VqcModel& model, std::span<const double> x) {
  const detail::ForwardTrace t = detail::forward_trace(model, x);
  return {t.output[0], t.output[1]};
}

inline Probabilities predict_proba(const Logits& z) {
  const double m = std::max(z[0], z[1]);
  const double e0 = std::exp(z[0] - m);
  const double e1 = std::exp(z[1] - m);
  const double s = e0 + e1;
  return {e0 / s, e1 / s};
}

inline void check_label(int label) {
  if (label < 0 || label >= kNumClasses) {
    throw ArgumentError("label " + std::to_string(label) +
                        " is not a binary class");
  }
}

// -log p[label], with p clamped to [1e-12, 1].
inline double cross_entropy(const Probabilities& probs, int label) {
  check_label(label);
  return -std::log(std::clamp(probs[label], kProbabilityFloor, 1.0));
}

inline double example_loss(const VqcModel& model, std::span<const double> x,
                           int label) {
  return cross_entropy(predict_proba(model_forward(model, x)), label);
}

// Analytic gradient of the cross-entropy loss. Every angle derivative comes
// from the parameter-shift rule; blocks are joined by the chain rule through
// the variational encoding, d arctan(u)/du = 1/(1+u^2) and
// d arctan(u^2)/du = 2u/(1+u^4).
inline std::vector<double> param_shift_grad(const VqcModel& model,
                                            std::span<const double> x,
                                            int label) {
  check_label(label);
  const detail::ForwardTrace t = detail::forward_trace(model, x);
  const Probabilities p = predict_proba({t.output[0], t.output[1]});
  std::vector<double> upstream = {p[0] - (label == 0 ? 1.0 : 0.0),
                                  p[1] - (label == 1 ? 1.0 : 0.0)};
  std::vector<double> grad(model.param_count(), 0.0);

  for (std::size_t k = model.blocks.size(); k-- > 0;) {
    const BlockSpec& spec = model.blocks[k];
    const bool chain = k > 0;
    const BlockJacobian jac =
        block_jacobian(spec, model.block_params(k), t.inputs[k], chain);
    const std::size_t enc_cols = chain ? 2 * spec.n_qubits : 0;
    const std::size_t off = model.block_offset(k);
    for (std::size_t j = 0; j < spec.param_count(); ++j) {
      double g = 0.0;
      for (std::size_t o = 0; o < jac.n_outputs; ++o) {
        g += jac(o, enc_cols + j) * upstream[o];
      }
      grad[off + j] = g;
    }
    if (chain) {
      const std::vector<double>& xin = t.inputs[k].values;
      std::vector<double> next(xin.size(), 0.0);
      for (std::size_t i = 0; i < xin.size(); ++i) {
        const double u = xin[i];
        const double dy = 1.0 / (1.0 + u * u);
        const double dz = 2.0 * u / (1.0 + u * u * u * u);
        double g = 0.0;
        for (std::size_t o = 0; o < jac.n_outputs; ++o) {
          g += upstream[o] * (jac(o, 2 * i) * dy + jac(o, 2 * i + 1) * dz);
        }
        next[i] = g;
      }
      upstream = std::move(next);
    }
  }
  return grad;
}

inline constexpr double kMinFiniteDiffStep = 1e-8;
inline constexpr double kMaxFiniteDiffStep = 1e-3;

// Central differences (L(theta + h e_j) - L(theta - h e_j)) / 2h.
inline std::vector<double> finite_diff_grad(
    const std::function<double(std::span<const double>)>& loss,
    std::span<const double> params, double h) {
  if (!(h >= kMinFiniteDiffStep && h <= kMaxFiniteDiffStep)) {
    throw ArgumentError("finite-difference step must lie in [1e-8, 1e-3]");
  }
  std::vector<double> theta(params.begin(), params.end());
  std::vector<double> grad(theta.size());
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const double saved = theta[j];
    theta[j] = saved + h;
    const double up = loss(theta);
    theta[j] = saved - h;
    const double down = loss(theta);
    theta[j] = saved;
    grad[j] = (up - down) / (2 * h);
  }
  return grad;
}

inline std::vector<double> finite_diff_grad(const VqcModel& model,
                                            std::span<const double> x,
                                            int label, double h) {
  VqcModel probe = model;
  return finite_diff_grad(
      [&](std::span<const double> theta) {
        probe.params.assign(theta.begin(), theta.end());
        return example_loss(probe, x, label);
      },
      model.params, h);
}

}  // namespace dpvqc

#endif  // DPVQC_CIRCUITS_HPP_
