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

// Number-theoretic cosine (FFCT), Hartley (FFHT) and Fourier (FFFT)
// transforms over GF(p), in vector, matrix and two-dimensional form.
//
// Every transform is a pair of N x N matrices (forward kernel and its
// inverse) evaluated by plain O(N^2) products. Row k of the forward matrix
// holds the kernel values producing output coefficient k, so V = M * v and
// the separable 2-D transforms are M * D * M^T.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fftwm/gf.hpp"
#include "fftwm/trig.hpp"

namespace fftwm {

enum class TransformKind { kFfct, kFfht, kFfft };

std::string_view to_string(TransformKind kind);
// "ffct" / "ffht" / "ffft", case-insensitive. Throws Error{kParse}.
TransformKind parse_transform_kind(std::string_view text);

// Dense row-major N x N matrix of GF(p) residues.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, Elem fill = 0) : n_(n), data_(n * n, fill) {}
  SquareMatrix(std::size_t n, std::vector<Elem> data);

  static SquareMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Elem& operator()(std::size_t row, std::size_t col) noexcept {
    return data_[row * n_ + col];
  }
  Elem operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * n_ + col];
  }
  std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * n_, n_}; }
  std::span<const Elem> row(std::size_t r) const noexcept {
    return {data_.data() + r * n_, n_};
  }
  std::span<const Elem> data() const noexcept { return data_; }
  std::span<Elem> data() noexcept { return data_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> data_;
};

SquareMatrix transpose(const SquareMatrix& m);
// Throws Error{kShapeMismatch} on differing sizes.
SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b,
                      const PrimeField& f);

struct TransformMatrix {
  SquareMatrix entries;
  SquareMatrix inverse_entries;
};

class ZetaConfig;

// Builds forward and inverse kernels for cfg and checks that their product
// is the identity. Throws Error{kSingularMatrix} if it is not.
TransformMatrix build_matrices(const ZetaConfig& cfg);

// A validated (p, zeta, kind, N) tuple together with everything the
// transforms need precomputed: the trig table (cosine and Hartley kinds),
// the FFCT auxiliary sequence, N^-1 and the verified kernel matrices.
//
// Requirements enforced at construction:
//   FFCT  zeta unimodular with multiplicative order 4N
//   FFHT  zeta unimodular with multiplicative order N
//   FFFT  zeta in GF(p) (im == 0) with multiplicative order N
// plus N >= 2 and N != 0 (mod p).
class ZetaConfig {
 public:
  // Throws Error{kInvalidZeta}, Error{kNotUnimodular} or
  // Error{kDegenerateBlocklength}.
  ZetaConfig(const PrimeField& field, const GaussianInt& zeta,
             TransformKind kind, std::size_t blocklength);

  // Blocklength implied by zeta's order (order / 4 for FFCT).
  static ZetaConfig from_zeta(const PrimeField& field, const GaussianInt& zeta,
                              TransformKind kind);

  // Blocklength that zeta induces for the given kind, or nullopt when the
  // order is not compatible (FFCT needs 4 | order).
  static std::optional<std::size_t> implied_blocklength(const GaussianInt& zeta,
                                                        TransformKind kind);

  const PrimeField& field() const noexcept { return field_; }
  const GaussianInt& zeta() const noexcept { return zeta_; }
  TransformKind kind() const noexcept { return kind_; }
  std::size_t blocklength() const noexcept { return n_; }

  // Present for FFCT (length 4N) and FFHT (length N).
  const std::optional<TrigTable>& trig() const noexcept { return trig_; }
  // a_0 = 2^-1, a_i = 1; empty unless kind is FFCT.
  std::span<const Elem> aux() const noexcept { return aux_; }
  // zeta^i for i in [0, N); FFFT only.
  std::span<const Elem> powers() const noexcept { return powers_; }
  Elem n_inverse() const noexcept { return n_inv_; }

  const TransformMatrix& matrices() const noexcept { return matrices_; }

 private:
  PrimeField field_;
  GaussianInt zeta_;
  TransformKind kind_;
  std::size_t n_;
  std::optional<TrigTable> trig_;
  std::vector<Elem> aux_;
  std::vector<Elem> powers_;
  Elem n_inv_ = 0;
  TransformMatrix matrices_;
};

// 1-D transforms. Input length must be N (Error{kLengthMismatch}) and every
// component below p (Error{kPixelOutOfField}).
std::vector<Elem> forward(std::span<const Elem> v, const ZetaConfig& cfg);
std::vector<Elem> inverse(std::span<const Elem> v, const ZetaConfig& cfg);

// Kind-checked spellings; Error{kKindMismatch} on the wrong config.
std::vector<Elem> ffct_forward(std::span<const Elem> v, const ZetaConfig& cfg);
std::vector<Elem> ffct_inverse(std::span<const Elem> v, const ZetaConfig& cfg);
std::vector<Elem> ffht_forward(std::span<const Elem> v, const ZetaConfig& cfg);
std::vector<Elem> ffht_inverse(std::span<const Elem> v, const ZetaConfig& cfg);
std::vector<Elem> ffft_forward(std::span<const Elem> v, const ZetaConfig& cfg);
std::vector<Elem> ffft_inverse(std::span<const Elem> v, const ZetaConfig& cfg);

// 2-D transforms of an N x N block (Error{kShapeMismatch} otherwise).
//
// FFCT and FFFT have separable kernels: M * D * M^T. The Hartley kernel
// cas(ik + jl) is not separable; it is assembled from T = H * D * H and its
// index reflections as (T + T^(c) + T^(r) - T^(c,r)) / 2.
SquareMatrix forward_2d(const SquareMatrix& block, const ZetaConfig& cfg);
SquareMatrix inverse_2d(const SquareMatrix& spectrum, const ZetaConfig& cfg);

SquareMatrix ffct_2d(const SquareMatrix& block, const ZetaConfig& cfg);
SquareMatrix ffct_2d_inverse(const SquareMatrix& spectrum, const ZetaConfig& cfg);
SquareMatrix ffht_2d(const SquareMatrix& block, const ZetaConfig& cfg);
SquareMatrix ffht_2d_inverse(const SquareMatrix& spectrum, const ZetaConfig& cfg);
SquareMatrix ffft_2d(const SquareMatrix& block, const ZetaConfig& cfg);
SquareMatrix ffft_2d_inverse(const SquareMatrix& spectrum, const ZetaConfig& cfg);

}  // namespace fftwm
