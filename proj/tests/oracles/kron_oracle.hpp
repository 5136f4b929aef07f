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

// Reference simulator for small registers: every gate becomes a dense
// 2^n x 2^n matrix assembled from Kronecker products and applied by plain
// matrix-vector multiplication. Qubit 0 is the leftmost tensor factor.

#ifndef DPVQC_TESTS_ORACLES_KRON_ORACLE_HPP_
#define DPVQC_TESTS_ORACLES_KRON_ORACLE_HPP_

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using C = std::complex<double>;

struct Matrix {
  std::size_t n = 0;  // square dimension
  std::vector<C> v;   // row-major

  static Matrix identity(std::size_t n) {
    Matrix m{n, std::vector<C>(n * n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) m.v[i * n + i] = 1.0;
    return m;
  }
  C& at(std::size_t r, std::size_t c) { return v[r * n + c]; }
  C at(std::size_t r, std::size_t c) const { return v[r * n + c]; }
};

inline Matrix make2(C a, C b, C c, C d) { return {2, {a, b, c, d}}; }

inline Matrix mul(const Matrix& a, const Matrix& b) {
  Matrix out{a.n, std::vector<C>(a.n * a.n, 0.0)};
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t k = 0; k < a.n; ++k)
      for (std::size_t j = 0; j < a.n; ++j)
        out.at(i, j) += a.at(i, k) * b.at(k, j);
  return out;
}

inline Matrix add(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] += b.v[i];
  return out;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out{a.n * b.n, std::vector<C>(a.n * b.n * a.n * b.n, 0.0)};
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j)
      for (std::size_t k = 0; k < b.n; ++k)
        for (std::size_t l = 0; l < b.n; ++l)
          out.at(i * b.n + k, j * b.n + l) = a.at(i, j) * b.at(k, l);
  return out;
}

inline Matrix pauli_x() { return make2(0, 1, 1, 0); }
inline Matrix pauli_z() { return make2(1, 0, 0, -1); }
inline Matrix proj0() { return make2(1, 0, 0, 0); }
inline Matrix proj1() { return make2(0, 0, 0, 1); }

// exp(-i a Y / 2) and exp(-i a Z / 2).
inline Matrix ry(double a) {
  return make2(std::cos(a / 2), -std::sin(a / 2), std::sin(a / 2),
               std::cos(a / 2));
}
inline Matrix rz(double a) {
  return make2(std::exp(C(0, -a / 2)), 0, 0, std::exp(C(0, a / 2)));
}
inline Matrix rot(double phi, double theta, double omega) {
  return mul(rz(omega), mul(ry(theta), rz(phi)));
}

// Places one-qubit operators on the listed wires, identity elsewhere.
inline Matrix embed(int n_qubits, const std::vector<std::pair<int, Matrix>>& ops) {
  Matrix out = Matrix::identity(1);
  for (int w = 0; w < n_qubits; ++w) {
    Matrix f = Matrix::identity(2);
    for (const auto& [wire, m] : ops)
      if (wire == w) f = m;
    out = kron(out, f);
  }
  return out;
}

inline Matrix single(int n_qubits, int wire, const Matrix& g) {
  return embed(n_qubits, {{wire, g}});
}

// |0><0|_c (x) I + |1><1|_c (x) X_t
inline Matrix cnot(int n_qubits, int control, int target) {
  return add(embed(n_qubits, {{control, proj0()}}),
             embed(n_qubits, {{control, proj1()}, {target, pauli_x()}}));
}

inline std::vector<C> apply(const Matrix& m, const std::vector<C>& psi) {
  std::vector<C> out(m.n, 0.0);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) out[i] += m.at(i, j) * psi[j];
  return out;
}

inline double expect_z(int n_qubits, int wire, const std::vector<C>& psi) {
  const std::vector<C> zpsi = oracle::apply(single(n_qubits, wire, pauli_z()), psi);
  C e = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) e += std::conj(psi[i]) * zpsi[i];
  return e.real();
}

inline std::vector<C> zero_state(int n_qubits) {
  std::vector<C> psi(std::size_t{1} << n_qubits, 0.0);
  psi[0] = 1.0;
  return psi;
}

}  // namespace oracle

#endif  // DPVQC_TESTS_ORACLES_KRON_ORACLE_HPP_
