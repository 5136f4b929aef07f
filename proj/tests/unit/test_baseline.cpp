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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "dpvqc/baseline.hpp"
#include "dpvqc/circuits.hpp"
#include "dpvqc/errors.hpp"
#include "test_util.hpp"

namespace dpvqc {
namespace {

TEST(Mlp, ParameterCounts) {
  EXPECT_EQ(mlp_init({1024, 1, 2}, 1).param_count(), 1029u);
  EXPECT_EQ(mlp_init({2, 7, 2}, 1).param_count(), 37u);
  EXPECT_EQ(mlp_init({64, 1, 2}, 1).param_count(), 69u);
}

TEST(Mlp, XavierBoundsAndZeroBias) {
  const MlpModel m = mlp_init({2, 7, 2}, 3);
  for (std::size_t l = 0; l < m.n_layers(); ++l) {
    const int fi = m.layer_sizes[l];
    const int fo = m.layer_sizes[l + 1];
    const double bound = std::sqrt(6.0 / (fi + fo));
    for (int o = 0; o < fo; ++o) {
      EXPECT_EQ(m.bias(l, o), 0.0);
      for (int i = 0; i < fi; ++i) {
        EXPECT_LE(std::abs(m.weight(l, o, i)), bound);
      }
    }
  }
  EXPECT_EQ(mlp_init({2, 7, 2}, 3).params, m.params);
  EXPECT_NE(mlp_init({2, 7, 2}, 4).params, m.params);
}

TEST(Mlp, ZeroParametersGiveHalf) {
  MlpModel m = mlp_init({2, 7, 2}, 1);
  std::fill(m.params.begin(), m.params.end(), 0.0);
  const Probabilities p = mlp_forward(m, std::vector<double>{3.0, -1.0});
  EXPECT_EQ(p[0], 0.5);
  EXPECT_EQ(p[1], 0.5);
}

TEST(Mlp, HandComputedTinyNetwork) {
  // 2 -> 1 -> 2. Layout: W1 (1x2), b1, W2 (2x1), b2.
  MlpModel m{{2, 1, 2}, {0.3, -0.7, 0.1, 1.5, -2.0, 0.25, 0.5}};
  const double x1 = 0.8, x2 = -0.4;
  const double h = std::tanh(0.3 * x1 - 0.7 * x2 + 0.1);
  const double z0 = 1.5 * h + 0.25;
  const double z1 = -2.0 * h + 0.5;
  const double p1 = 1.0 / (1.0 + std::exp(z0 - z1));
  const Probabilities p = mlp_forward(m, std::vector<double>{x1, x2});
  EXPECT_NEAR(p[1], p1, 1e-15);
  EXPECT_NEAR(p[0], 1 - p1, 1e-15);
  EXPECT_NEAR(mlp_loss(m, std::vector<double>{x1, x2}, 1), -std::log(p1),
              1e-14);
}

TEST(Mlp, BackpropMatchesFiniteDifference) {
  testutil::Gen g(61);
  for (const std::vector<int>& sizes :
       {std::vector<int>{2, 7, 2}, std::vector<int>{64, 1, 2},
        std::vector<int>{3, 4, 5, 2}}) {
    for (int trial = 0; trial < 5; ++trial) {
      MlpModel m = mlp_init(sizes, 100 + trial);
      for (double& p : m.params) p += g.uniform(-0.5, 0.5);
      const std::vector<double> x = g.vec(sizes.front(), -2, 2);
      const int label = trial % 2;
      const auto grad = mlp_grad(m, x, label);
      MlpModel probe = m;
      const auto fd = finite_diff_grad(
          [&](std::span<const double> th) {
            probe.params.assign(th.begin(), th.end());
            return mlp_loss(probe, x, label);
          },
          m.params, 1e-6);
      for (std::size_t j = 0; j < grad.size(); ++j) {
        EXPECT_TRUE(testutil::close(grad[j], fd[j], 1e-7, 1e-5))
            << "param " << j << " backprop " << grad[j] << " fd " << fd[j];
      }
    }
  }
}

TEST(Mlp, OutputBiasGradientIsResidual) {
  const MlpModel m = mlp_init({2, 7, 2}, 9);
  const std::vector<double> x = {0.4, -1.3};
  const Probabilities p = mlp_forward(m, x);
  for (int label : {0, 1}) {
    const auto g = mlp_grad(m, x, label);
    const std::size_t off = m.bias_offset(1);
    EXPECT_NEAR(g[off], p[0] - (label == 0), 1e-15);
    EXPECT_NEAR(g[off + 1], p[1] - (label == 1), 1e-15);
  }
}

TEST(Mlp, Errors) {
  EXPECT_THROW(mlp_init({2, 3, 3}, 1), ArgumentError);
  EXPECT_THROW(mlp_init({2}, 1), ArgumentError);
  const MlpModel m = mlp_init({2, 7, 2}, 1);
  EXPECT_THROW(mlp_forward(m, std::vector<double>{1.0}), SizeError);
  EXPECT_THROW(mlp_grad(m, std::vector<double>{1.0, 2.0}, 2), ArgumentError);
  MlpModel bad = m;
  bad.params.pop_back();
  EXPECT_THROW(bad.validate(), SizeError);
}

}  // namespace
}  // namespace dpvqc
