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

// Prime field GF(p) and the Gaussian integers GI(p) = GF(p)[j]/(j^2 + 1).
//
// Only p = 3 (mod 4) is accepted: that is exactly when x^2 + 1 has no root in
// GF(p), so GI(p) is a field isomorphic to GF(p^2). Moduli are capped at
// 2^15 so every product of two reduced elements (and the sum of two such
// products) fits in 32 bits, and all intermediate arithmetic here runs in
// 64 bits without per-call overflow reasoning.

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fftwm {

// A reduced residue in [0, p). Plain integer; the owning PrimeField supplies
// the arithmetic.
using Elem = std::uint32_t;

class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 15;

  // Throws Error{kNotPrime}, Error{kUnsupportedModulus} (p == 2 or
  // p == 1 mod 4) or Error{kModulusTooLarge}.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Elem reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem pow(Elem base, std::uint64_t exp) const noexcept;

  // Throws Error{kZeroInverse} for a == 0.
  Elem inv(Elem a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

// Deterministic trial division; adequate for the moduli and group orders
// handled here (at most 2^30).
bool is_prime(std::uint64_t n) noexcept;

// Distinct prime factors of n in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Multiplicative inverse of a in GF(p), in (0, p). Throws Error{kZeroInverse}
// when a == 0 (mod p).
Elem mod_inverse(std::int64_t a, const PrimeField& f);

// a + jb with a, b canonical residues in [0, p).
class GaussianInt {
 public:
  GaussianInt(const PrimeField& f, std::int64_t re, std::int64_t im = 0)
      : field_(f), re_(f.reduce(re)), im_(f.reduce(im)) {}

  static GaussianInt zero(const PrimeField& f) { return {f, 0, 0}; }
  static GaussianInt one(const PrimeField& f) { return {f, 1, 0}; }

  const PrimeField& field() const noexcept { return field_; }
  Elem re() const noexcept { return re_; }
  Elem im() const noexcept { return im_; }
  bool is_zero() const noexcept { return re_ == 0 && im_ == 0; }
  bool is_one() const noexcept { return re_ == 1 && im_ == 0; }
  bool is_real() const noexcept { return im_ == 0; }

  GaussianInt conj() const { return {field_, re_, field_.neg(im_)}; }

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
  // Lexicographic on (re, im); only meaningful within one field.
  friend std::strong_ordering operator<=>(const GaussianInt& a,
                                          const GaussianInt& b) {
    if (auto c = a.re_ <=> b.re_; c != 0) return c;
    return a.im_ <=> b.im_;
  }

 private:
  PrimeField field_;
  Elem re_;
  Elem im_;
};

// All binary operations throw Error{kFieldMismatch} when the moduli differ.
GaussianInt gi_add(const GaussianInt& x, const GaussianInt& y);
GaussianInt gi_sub(const GaussianInt& x, const GaussianInt& y);
GaussianInt gi_mul(const GaussianInt& x, const GaussianInt& y);
GaussianInt gi_scale(const GaussianInt& x, Elem s);

inline GaussianInt operator+(const GaussianInt& x, const GaussianInt& y) {
  return gi_add(x, y);
}
inline GaussianInt operator-(const GaussianInt& x, const GaussianInt& y) {
  return gi_sub(x, y);
}
inline GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
  return gi_mul(x, y);
}

// n(a + jb) = a^2 + b^2 (mod p).
Elem gi_norm(const GaussianInt& x);
bool is_unimodular(const GaussianInt& x);

// conj(x) / n(x). Throws Error{kZeroElement} for x == 0.
GaussianInt gi_inverse(const GaussianInt& x);

// x^e for any integer e; negative exponents go through gi_inverse.
GaussianInt gi_pow(const GaussianInt& x, std::int64_t e);

// Smallest k >= 1 with x^k == 1. Throws Error{kZeroElement} for x == 0.
std::uint64_t multiplicative_order(const GaussianInt& x);

// Every x in GI(p) with n(x) == 1 and multiplicative order `order`, in
// lexicographic (re, im) order. Empty when none exist.
std::vector<GaussianInt> find_unimodular_zeta(const PrimeField& f,
                                              std::uint64_t order);

// Every nonzero x of the given order regardless of norm, lexicographic.
std::vector<GaussianInt> find_elements_of_order(const PrimeField& f,
                                                std::uint64_t order);

// Formats as the tables do: "2+2j", "j", "2j", "6", "3+j".
std::string to_string(const GaussianInt& x);
std::ostream& operator<<(std::ostream& os, const GaussianInt& x);

// Accepts "a+bj", "a-bj", "a", "bj", "j", "-j", with optional whitespace;
// components are reduced mod p. Throws Error{kParse}.
GaussianInt parse_gaussian(std::string_view text, const PrimeField& f);

}  // namespace fftwm
