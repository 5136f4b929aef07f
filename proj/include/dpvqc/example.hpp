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

#ifndef DPVQC_EXAMPLE_HPP_
#define DPVQC_EXAMPLE_HPP_

#include <vector>

namespace dpvqc {

struct LabeledExample {
  std::vector<double> features;
  int label = 0;

  friend bool operator==(const LabeledExample&,
                         const LabeledExample&) = default;
};

using Dataset = std::vector<LabeledExample>;

}  // namespace dpvqc

#endif  // DPVQC_EXAMPLE_HPP_
