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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fftwm/gf.hpp"

namespace fftwm {

struct TrigValues {
  Elem cos;
  Elem sin;
  Elem cas;

  friend bool operator==(const TrigValues&, const TrigValues&) = default;
};

// Finite-field cos, sin and cas generated by a unimodular zeta, one entry per
// exponent 0..order-1.
//
// For unimodular zeta, zeta^-i is the conjugate of zeta^i, so
// cos(i) = (zeta^i + zeta^-i) / 2 collapses to re(zeta^i) and
// sin(i) = (zeta^i - zeta^-i) / 2j to im(zeta^i). Every entry is therefore a
// GF(p) element and the table is filled from successive powers alone.
class TrigTable {
 public:
  // Throws Error{kNotUnimodular} when n(zeta) != 1.
  explicit TrigTable(const GaussianInt& zeta);

  const GaussianInt& zeta() const noexcept { return zeta_; }
  std::size_t order() const noexcept { return cos_.size(); }

  std::span<const Elem> cos_values() const noexcept { return cos_; }
  std::span<const Elem> sin_values() const noexcept { return sin_; }
  std::span<const Elem> cas_values() const noexcept { return cas_; }

  // Any integer index; reduced into [0, order).
  TrigValues at(std::int64_t index) const noexcept {
    const std::size_t i = reduce_index(index);
    return {cos_[i], sin_[i], cas_[i]};
  }
  Elem cos(std::int64_t index) const noexcept { return cos_[reduce_index(index)]; }
  Elem sin(std::int64_t index) const noexcept { return sin_[reduce_index(index)]; }
  Elem cas(std::int64_t index) const noexcept { return cas_[reduce_index(index)]; }

 private:
  std::size_t reduce_index(std::int64_t index) const noexcept {
    const auto n = static_cast<std::int64_t>(cos_.size());
    std::int64_t r = index % n;
    return static_cast<std::size_t>(r < 0 ? r + n : r);
  }

  GaussianInt zeta_;
  std::vector<Elem> cos_;
  std::vector<Elem> sin_;
  std::vector<Elem> cas_;
};

inline TrigTable build_trig_table(const GaussianInt& zeta) {
  return TrigTable(zeta);
}

inline TrigValues trig_at(const TrigTable& table, std::int64_t index) {
  return table.at(index);
}

}  // namespace fftwm
