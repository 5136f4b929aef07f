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

// State-vector simulation of small qubit registers.
//
// Amplitude index i encodes a computational basis state with qubit 0 as the
// most significant bit, so wire w corresponds to bit (n_qubits - 1 - w). This
// keeps wire numbers identical to the top-to-bottom order of circuit diagrams.
//
// The free functions take a state by value and return the transformed state.
// QuantumState also exposes in-place variants for hot loops.

#ifndef DPVQC_SIMULATOR_HPP_
#define DPVQC_SIMULATOR_HPP_

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dpvqc/errors.hpp"

namespace dpvqc {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 24;

// Tolerance on the squared norm accepted by set_amplitudes.
inline constexpr double kAmplitudeNormTolerance = 1e-9;

// Row-major 2x2 complex matrix [[m00, m01], [m10, m11]].
struct Mat2 {
  Complex m00, m01, m10, m11;

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
  }
};

// R(phi, theta, omega) = R_z(omega) R_y(theta) R_z(phi).
struct EulerRotation {
  double phi = 0.0;
  double theta = 0.0;
  double omega = 0.0;
};

inline Mat2 ry_matrix(double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  return {c, -s, s, c};
}

inline Mat2 rz_matrix(double angle) {
  return {std::polar(1.0, -angle / 2), 0.0, 0.0, std::polar(1.0, angle / 2)};
}

// Closed form of R_z(omega) R_y(theta) R_z(phi).
inline Mat2 rot_matrix(const EulerRotation& r) {
  const double c = std::cos(r.theta / 2);
  const double s = std::sin(r.theta / 2);
  const double sum = (r.phi + r.omega) / 2;
  const double diff = (r.phi - r.omega) / 2;
  return {std::polar(c, -sum), -std::polar(s, diff), std::polar(s, -diff),
          std::polar(c, sum)};
}

class QuantumState {
 public:
  // |0...0> on n_qubits wires.
  static QuantumState zero(int n_qubits) {
    check_qubit_count(n_qubits);
    QuantumState s(n_qubits);
    s.amps_[0] = 1.0;
    return s;
  }

  static QuantumState from_amplitudes(int n_qubits, std::vector<Complex> amps) {
    check_qubit_count(n_qubits);
    if (amps.size() != (std::size_t{1} << n_qubits)) {
      throw SizeError("expected " + std::to_string(std::size_t{1} << n_qubits) +
                      " amplitudes for " + std::to_string(n_qubits) +
                      " qubits, got " + std::to_string(amps.size()));
    }
    double norm2 = 0.0;
    for (const Complex& a : amps) norm2 += std::norm(a);
    if (!(std::abs(std::sqrt(norm2) - 1.0) <= kAmplitudeNormTolerance)) {
      throw NormalizationError("amplitude vector has L2 norm " +
                               std::to_string(std::sqrt(norm2)) +
                               ", expected 1");
    }
    QuantumState s;
    s.n_qubits_ = n_qubits;
    s.amps_ = std::move(amps);
    return s;
  }

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const {
    double n = 0.0;
    for (const Complex& a : amps_) n += std::norm(a);
    return n;
  }

  void apply_matrix(int wire, const Mat2& m) {
    const std::size_t stride = stride_of(wire);
    const std::size_t d = amps_.size();
    // Complex products are spelled out: std::complex multiplication carries
    // NaN/inf recovery that dominates the cost of this loop.
    const double ar = m.m00.real(), ai = m.m00.imag();
    const double br = m.m01.real(), bi = m.m01.imag();
    const double cr = m.m10.real(), ci = m.m10.imag();
    const double dr = m.m11.real(), di = m.m11.imag();
    double* a = reinterpret_cast<double*>(amps_.data());
    for (std::size_t base = 0; base < d; base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; ++i) {
        double* lo = a + 2 * i;
        double* hi = a + 2 * (i + stride);
        const double lr = lo[0], li = lo[1];
        const double hr = hi[0], hm = hi[1];
        lo[0] = ar * lr - ai * li + br * hr - bi * hm;
        lo[1] = ar * li + ai * lr + br * hm + bi * hr;
        hi[0] = cr * lr - ci * li + dr * hr - di * hm;
        hi[1] = cr * li + ci * lr + dr * hm + di * hr;
      }
    }
  }

  void apply_ry_inplace(int wire, double angle) {
    apply_matrix(wire, ry_matrix(angle));
  }
  void apply_rz_inplace(int wire, double angle) {
    apply_matrix(wire, rz_matrix(angle));
  }
  void apply_rot_inplace(int wire, const EulerRotation& r) {
    apply_matrix(wire, rot_matrix(r));
  }

  void apply_cnot_inplace(int control, int target) {
    if (control == target) {
      throw ArgumentError("CNOT control and target must differ (both " +
                          std::to_string(control) + ")");
    }
    if (control < 0 || control >= n_qubits_ || target < 0 ||
        target >= n_qubits_) {
      throw ArgumentError("CNOT wires (" + std::to_string(control) + ", " +
                          std::to_string(target) + ") out of range for " +
                          std::to_string(n_qubits_) + " qubits");
    }
    const std::size_t cbit = std::size_t{1} << (n_qubits_ - 1 - control);
    const std::size_t tbit = std::size_t{1} << (n_qubits_ - 1 - target);
    // Visit indices with the control bit set and the target bit clear.
    for (std::size_t i = cbit; i < amps_.size(); i = (i + 1) | cbit) {
      if (!(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
    }
  }

  double expectation_z(int wire) const {
    const std::size_t bit = stride_of(wire);
    double e = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      const double p = std::norm(amps_[i]);
      e += (i & bit) ? -p : p;
    }
    return e;
  }

  // <Z> on each listed wire, in order, from a single pass over the amplitudes.
  std::vector<double> expectations_z(std::span<const int> wires) const {
    std::vector<std::size_t> bits;
    bits.reserve(wires.size());
    for (int w : wires) bits.push_back(stride_of(w));
    std::vector<double> out(wires.size(), 0.0);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      const double p = std::norm(amps_[i]);
      for (std::size_t k = 0; k < bits.size(); ++k) {
        out[k] += (i & bits[k]) ? -p : p;
      }
    }
    return out;
  }

 private:
  QuantumState() = default;
  explicit QuantumState(int n_qubits)
      : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits) {}

  static void check_qubit_count(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
      throw SizeError("qubit count " + std::to_string(n_qubits) +
                      " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
  }

  std::size_t stride_of(int wire) const {
    if (wire < 0 || wire >= n_qubits_) {
      throw IndexError("wire " + std::to_string(wire) + " out of range for " +
                       std::to_string(n_qubits_) + " qubits");
    }
    return std::size_t{1} << (n_qubits_ - 1 - wire);
  }

  int n_qubits_ = 0;
  std::vector<Complex> amps_;
};

inline QuantumState new_zero_state(int n_qubits) {
  return QuantumState::zero(n_qubits);
}

inline QuantumState set_amplitudes(int n_qubits, std::vector<Complex> amps) {
  return QuantumState::from_amplitudes(n_qubits, std::move(amps));
}

inline QuantumState apply_ry(QuantumState state, int wire, double angle) {
  state.apply_ry_inplace(wire, angle);
  return state;
}

inline QuantumState apply_rz(QuantumState state, int wire, double angle) {
  state.apply_rz_inplace(wire, angle);
  return state;
}

inline QuantumState apply_rot(QuantumState state, int wire,
                              const EulerRotation& rot) {
  state.apply_rot_inplace(wire, rot);
  return state;
}

inline QuantumState apply_cnot(QuantumState state, int control, int target) {
  state.apply_cnot_inplace(control, target);
  return state;
}

inline double expectation_z(const QuantumState& state, int wire) {
  return state.expectation_z(wire);
}

}  // namespace dpvqc

#endif  // DPVQC_SIMULATOR_HPP_
