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

// Prints the privacy spent by a training run for a range of noise
// multipliers, and the multiplier needed for a given budget.

#include <cstdio>

#include "dpvqc/accountant.hpp"

int main() {
  const long long n = 60000;
  const long long batch = 256;
  const long long epochs = 15;
  const double delta = 1e-5;
  for (double sigma : {0.8, 1.0, 1.5, 2.0, 4.0}) {
    const dpvqc::AccountantResult r =
        dpvqc::training_epsilon(n, batch, epochs, sigma, delta);
    std::printf("sigma %.2f  epsilon %8.4f  (best order %.2f)\n", sigma,
                r.epsilon, r.best_order);
  }
  std::printf("sigma for epsilon 1.0: %.4f\n",
              dpvqc::sigma_for_epsilon(n, batch, epochs, delta, 1.0));
  return 0;
}
