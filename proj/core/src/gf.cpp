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

#include "fftwm/gf.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <tuple>
#include <utility>

#include "fftwm/error.hpp"

namespace fftwm {

namespace {

// Below this group order the order is found by walking powers; the factored
// route is used everywhere else.
constexpr std::uint64_t kLinearOrderLimit = 64;

void require_same_field(const GaussianInt& x, const GaussianInt& y) {
  if (x.field() != y.field()) {
    std::ostringstream os;
    os << "Gaussian integers over different fields: GF("
       << x.field().modulus() << ") vs GF(" << y.field().modulus() << ")";
    throw Error(ErrorCode::kFieldMismatch, os.str());
  }
}

std::uint64_t group_order(const PrimeField& f) {
  const std::uint64_t p = f.modulus();
  return p * p - 1;
}

std::uint64_t order_by_factors(const GaussianInt& x, std::uint64_t n,
                               const std::vector<std::uint64_t>& factors) {
  for (std::uint64_t q : factors) {
    while (n % q == 0 &&
           gi_pow(x, static_cast<std::int64_t>(n / q)).is_one()) {
      n /= q;
    }
  }
  return n;
}

std::uint64_t order_by_walk(const GaussianInt& x) {
  GaussianInt y = x;
  std::uint64_t k = 1;
  while (!y.is_one()) {
    y = gi_mul(y, x);
    ++k;
  }
  return k;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > kMaxModulus) {
    std::ostringstream os;
    os << "modulus " << p << " exceeds the supported maximum " << kMaxModulus;
    throw Error(ErrorCode::kModulusTooLarge, os.str());
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  if (p % 4 != 3) {
    throw Error(ErrorCode::kUnsupportedModulus,
                "GI(" + std::to_string(p) +
                    ") is not a field: the modulus must satisfy p = 3 (mod 4)");
  }
}

Elem PrimeField::pow(Elem base, std::uint64_t exp) const noexcept {
  std::uint64_t result = 1 % p_;
  std::uint64_t b = base % p_;
  while (exp != 0) {
    if (exp & 1) result = result * b % p_;
    b = b * b % p_;
    exp >>= 1;
  }
  return static_cast<Elem>(result);
}

Elem PrimeField::inv(Elem a) const { return mod_inverse(a, *this); }

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Elem mod_inverse(std::int64_t a, const PrimeField& f) {
  const std::int64_t p = f.modulus();
  std::int64_t r0 = p, r1 = f.reduce(a);
  if (r1 == 0) {
    throw Error(ErrorCode::kZeroInverse,
                std::to_string(a) + " has no inverse modulo " +
                    std::to_string(p));
  }
  // Extended Euclid, tracking only the coefficient of a.
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return f.reduce(s0);
}

GaussianInt gi_add(const GaussianInt& x, const GaussianInt& y) {
  require_same_field(x, y);
  const PrimeField& f = x.field();
  return {f, f.add(x.re(), y.re()), f.add(x.im(), y.im())};
}

GaussianInt gi_sub(const GaussianInt& x, const GaussianInt& y) {
  require_same_field(x, y);
  const PrimeField& f = x.field();
  return {f, f.sub(x.re(), y.re()), f.sub(x.im(), y.im())};
}

GaussianInt gi_mul(const GaussianInt& x, const GaussianInt& y) {
  require_same_field(x, y);
  const PrimeField& f = x.field();
  // (a + jb)(c + jd) = (ac - bd) + j(ad + bc)
  return {f, f.sub(f.mul(x.re(), y.re()), f.mul(x.im(), y.im())),
          f.add(f.mul(x.re(), y.im()), f.mul(x.im(), y.re()))};
}

GaussianInt gi_scale(const GaussianInt& x, Elem s) {
  const PrimeField& f = x.field();
  return {f, f.mul(x.re(), s), f.mul(x.im(), s)};
}

Elem gi_norm(const GaussianInt& x) {
  const PrimeField& f = x.field();
  return f.add(f.mul(x.re(), x.re()), f.mul(x.im(), x.im()));
}

bool is_unimodular(const GaussianInt& x) { return gi_norm(x) == 1; }

GaussianInt gi_inverse(const GaussianInt& x) {
  if (x.is_zero()) {
    throw Error(ErrorCode::kZeroElement, "zero has no multiplicative inverse");
  }
  // n(x) != 0 for x != 0 because x^2 + 1 is irreducible.
  return gi_scale(x.conj(), x.field().inv(gi_norm(x)));
}

GaussianInt gi_pow(const GaussianInt& x, std::int64_t e) {
  GaussianInt base = e < 0 ? gi_inverse(x) : x;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                          : static_cast<std::uint64_t>(e);
  GaussianInt result = GaussianInt::one(x.field());
  while (k != 0) {
    if (k & 1) result = gi_mul(result, base);
    base = gi_mul(base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t multiplicative_order(const GaussianInt& x) {
  if (x.is_zero()) {
    throw Error(ErrorCode::kZeroElement, "zero has no multiplicative order");
  }
  const std::uint64_t n = group_order(x.field());
  if (n <= kLinearOrderLimit) return order_by_walk(x);
  return order_by_factors(x, n, prime_factors(n));
}

std::vector<GaussianInt> find_unimodular_zeta(const PrimeField& f,
                                              std::uint64_t order) {
  std::vector<GaussianInt> out;
  const std::uint32_t p = f.modulus();
  // The norm-1 elements form the kernel of the (surjective) norm map onto
  // GF(p)*, a cyclic subgroup of order p + 1.
  if (order == 0 || (std::uint64_t{p} + 1) % order != 0) return out;

  // root[s] = smallest r with r^2 == s, or p when s is a non-residue.
  std::vector<Elem> root(p, p);
  for (Elem r = 0; r <= p / 2; ++r) {
    Elem s = f.mul(r, r);
    if (root[s] == p) root[s] = r;
  }

  const std::uint64_t n = group_order(f);
  const auto factors = prime_factors(n);
  auto has_order = [&](const GaussianInt& z) {
    return (n <= kLinearOrderLimit ? order_by_walk(z)
                                   : order_by_factors(z, n, factors)) == order;
  };

  for (Elem re = 0; re < p; ++re) {
    const Elem target = f.sub(1, f.mul(re, re));
    const Elem r = root[target];
    if (r == p) continue;
    GaussianInt lo(f, re, r);
    if (has_order(lo)) out.push_back(lo);
    if (r != 0) {
      GaussianInt hi(f, re, p - r);
      if (has_order(hi)) out.push_back(hi);
    }
  }
  return out;
}

std::vector<GaussianInt> find_elements_of_order(const PrimeField& f,
                                                std::uint64_t order) {
  std::vector<GaussianInt> out;
  const std::uint64_t n = group_order(f);
  if (order == 0 || n % order != 0) return out;

  // GF(p^2)* is cyclic: locate a generator g, then the elements of order d
  // are exactly g^(k n/d) with gcd(k, d) == 1.
  const auto factors = prime_factors(n);
  const std::uint32_t p = f.modulus();
  std::optional<GaussianInt> generator;
  for (Elem a = 0; a < p && !generator; ++a) {
    for (Elem b = 0; b < p && !generator; ++b) {
      GaussianInt z(f, a, b);
      if (z.is_zero()) continue;
      bool ok = std::none_of(factors.begin(), factors.end(), [&](auto q) {
        return gi_pow(z, static_cast<std::int64_t>(n / q)).is_one();
      });
      if (ok) generator = z;
    }
  }
  const GaussianInt step = gi_pow(*generator, static_cast<std::int64_t>(n / order));
  GaussianInt acc = GaussianInt::one(f);
  for (std::uint64_t k = 1; k <= order; ++k) {
    acc = gi_mul(acc, step);
    if (std::gcd(k, order) == 1) out.push_back(acc);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const GaussianInt& x) {
  std::string out;
  if (x.re() != 0 || x.im() == 0) out += std::to_string(x.re());
  if (x.im() != 0) {
    if (!out.empty()) out += '+';
    if (x.im() != 1) out += std::to_string(x.im());
    out += 'j';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& x) {
  return os << to_string(x);
}

GaussianInt parse_gaussian(std::string_view text, const PrimeField& f) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto fail = [&]() -> GaussianInt {
    throw Error(ErrorCode::kParse,
                "cannot parse Gaussian integer '" + std::string(text) + "'");
  };
  if (s.empty()) return fail();

  std::int64_t re = 0, im = 0;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      return fail();
    }
    first = false;
    std::size_t start = i;
    std::int64_t value = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      value = value * 10 + (s[i] - '0');
      if (value > (std::int64_t{1} << 40)) return fail();
      ++i;
    }
    const bool has_digits = i > start;
    if (i < s.size() && (s[i] == 'j' || s[i] == 'J')) {
      ++i;
      im += sign * (has_digits ? value : 1);
    } else if (has_digits) {
      re += sign * value;
    } else {
      return fail();
    }
  }
  return {f, re, im};
}

}  // namespace fftwm
