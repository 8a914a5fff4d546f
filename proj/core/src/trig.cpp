// Copyright 2026 The fftwm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fftwm/trig.hpp"

#include "fftwm/error.hpp"

namespace fftwm {

TrigTable::TrigTable(const GaussianInt& zeta) : zeta_(zeta) {
  if (!is_unimodular(zeta)) {
    throw Error(ErrorCode::kNotUnimodular,
                "zeta = " + to_string(zeta) + " has norm " +
                    std::to_string(gi_norm(zeta)) + ", expected 1");
  }
  const PrimeField& f = zeta.field();
  const std::uint64_t n = multiplicative_order(zeta);
  cos_.reserve(n);
  sin_.reserve(n);
  cas_.reserve(n);
  GaussianInt power = GaussianInt::one(f);
  for (std::uint64_t i = 0; i < n; ++i) {
    cos_.push_back(power.re());
    sin_.push_back(power.im());
    cas_.push_back(f.add(power.re(), power.im()));
    power = gi_mul(power, zeta);
  }
}

}  // namespace fftwm
