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

// Trains the 2D quantum classifier on blobs, once without privacy and once
// with a DP optimizer, and prints the test accuracy of each.

#include <cstdio>

#include "dpvqc/dpvqc.hpp"

int main() {
  dpvqc::TrainConfig cfg;
  cfg.task = dpvqc::Task::kBlobs;
  cfg.model = dpvqc::ModelKind::kVqc;
  cfg.seed = 7;

  const dpvqc::TaskData data = dpvqc::load_task_data(cfg);
  const dpvqc::TrainResult plain = dpvqc::train_on(cfg, data);
  std::printf("non-private  test acc %.3f\n", plain.report.final_test_acc);

  cfg.privacy = dpvqc::PrivacyConfig{};  // S = 1, sigma = 1, per-example clip
  const dpvqc::TrainResult priv = dpvqc::train_on(cfg, data);
  std::printf("private      test acc %.3f  epsilon %.3f\n",
              priv.report.final_test_acc, *priv.report.epsilon);
  return 0;
}
