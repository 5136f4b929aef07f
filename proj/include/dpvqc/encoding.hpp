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

#ifndef DPVQC_ENCODING_HPP_
#define DPVQC_ENCODING_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dpvqc/errors.hpp"
#include "dpvqc/simulator.hpp"

namespace dpvqc {

enum class InputMode { kVariational, kAmplitude };

inline const char* to_string(InputMode m) {
  return m == InputMode::kVariational ? "variational" : "amplitude";
}

// Classical values ready to be loaded into a circuit block. Variational
// inputs carry one feature per qubit; amplitude inputs carry 2^n unit-norm
// amplitudes.
struct EncodedInput {
  InputMode mode = InputMode::kVariational;
  std::vector<double> values;
};

// Rotation angles used by variational encoding of feature x.
inline double encoding_y_angle(double x) { return std::atan(x); }
inline double encoding_z_angle(double x) { return std::atan(x * x); }

// Applies R_y(arctan x_i) followed by R_z(arctan x_i^2) on every wire i of a
// freshly prepared |0...0>.
inline QuantumState variational_encode(QuantumState state,
                                       std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(state.n_qubits())) {
    throw SizeError("variational encoding expects " +
                    std::to_string(state.n_qubits()) + " features, got " +
                    std::to_string(x.size()));
  }
  if (state[0] != Complex(1.0, 0.0)) {
    throw ArgumentError("variational encoding requires the |0...0> state");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int wire = static_cast<int>(i);
    state.apply_ry_inplace(wire, encoding_y_angle(x[i]));
    state.apply_rz_inplace(wire, encoding_z_angle(x[i]));
  }
  return state;
}

// Zero-pads x_raw to 2^n_qubits entries and scales it to unit L2 norm.
inline std::vector<double> amplitude_prepare(std::span<const double> x_raw,
                                             int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw SizeError("qubit count " + std::to_string(n_qubits) +
                    " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (x_raw.size() > dim) {
    throw SizeError("input of length " + std::to_string(x_raw.size()) +
                    " does not fit in " + std::to_string(n_qubits) +
                    " qubits");
  }
  double norm2 = 0.0;
  for (double v : x_raw) norm2 += v * v;
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw DegenerateInputError(
        "amplitude encoding needs a finite, nonzero input vector");
  }
  const double norm = std::sqrt(norm2);
  std::vector<double> out(dim, 0.0);
  for (std::size_t i = 0; i < x_raw.size(); ++i) out[i] = x_raw[i] / norm;
  return out;
}

// Loads unit-norm real amplitudes as the circuit's initial state.
inline QuantumState amplitude_encode(std::span<const double> amplitudes,
                                     int n_qubits) {
  return set_amplitudes(
      n_qubits, std::vector<Complex>(amplitudes.begin(), amplitudes.end()));
}

// Builds the initial state of a block from its encoded input.
inline QuantumState prepare_state(const EncodedInput& input, int n_qubits) {
  if (input.mode == InputMode::kVariational) {
    return variational_encode(new_zero_state(n_qubits), input.values);
  }
  return amplitude_encode(input.values, n_qubits);
}

}  // namespace dpvqc

#endif  // DPVQC_ENCODING_HPP_
