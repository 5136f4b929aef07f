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

#ifndef DPVQC_DPVQC_HPP_
#define DPVQC_DPVQC_HPP_

#include "dpvqc/accountant.hpp"
#include "dpvqc/baseline.hpp"
#include "dpvqc/circuits.hpp"
#include "dpvqc/data.hpp"
#include "dpvqc/dp_optim.hpp"
#include "dpvqc/encoding.hpp"
#include "dpvqc/errors.hpp"
#include "dpvqc/example.hpp"
#include "dpvqc/harness.hpp"
#include "dpvqc/parallel.hpp"
#include "dpvqc/rng.hpp"
#include "dpvqc/simulator.hpp"

#endif  // DPVQC_DPVQC_HPP_
