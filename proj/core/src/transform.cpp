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

#include "fftwm/transform.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>

#include "fftwm/error.hpp"

namespace fftwm {

namespace {

std::string describe(const ZetaConfig& cfg) {
  std::ostringstream os;
  os << to_string(cfg.kind()) << " over GF(" << cfg.field().modulus()
     << ") with zeta = " << to_string(cfg.zeta()) << ", N = "
     << cfg.blocklength();
  return os.str();
}

void require_kind(const ZetaConfig& cfg, TransformKind kind) {
  if (cfg.kind() != kind) {
    throw Error(ErrorCode::kKindMismatch,
                std::string("expected a ") + std::string(to_string(kind)) +
                    " configuration, got " + describe(cfg));
  }
}

void require_vector(std::span<const Elem> v, const ZetaConfig& cfg) {
  if (v.size() != cfg.blocklength()) {
    throw Error(ErrorCode::kLengthMismatch,
                "vector of length " + std::to_string(v.size()) +
                    " does not match blocklength " +
                    std::to_string(cfg.blocklength()));
  }
  const Elem p = cfg.field().modulus();
  if (std::any_of(v.begin(), v.end(), [p](Elem x) { return x >= p; })) {
    throw Error(ErrorCode::kPixelOutOfField,
                "vector component outside [0, " + std::to_string(p - 1) + "]");
  }
}

void require_block(const SquareMatrix& m, const ZetaConfig& cfg) {
  if (m.size() != cfg.blocklength()) {
    throw Error(ErrorCode::kShapeMismatch,
                "block of size " + std::to_string(m.size()) +
                    " does not match blocklength " +
                    std::to_string(cfg.blocklength()));
  }
  const Elem p = cfg.field().modulus();
  const auto d = m.data();
  if (std::any_of(d.begin(), d.end(), [p](Elem x) { return x >= p; })) {
    throw Error(ErrorCode::kPixelOutOfField,
                "block entry outside [0, " + std::to_string(p - 1) + "]");
  }
}

std::vector<Elem> apply(const SquareMatrix& m, std::span<const Elem> v,
                        const PrimeField& f) {
  const std::size_t n = m.size();
  std::vector<Elem> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::uint64_t acc = 0;
    const auto row = m.row(r);
    for (std::size_t c = 0; c < n; ++c) acc += std::uint64_t{row[c]} * v[c];
    out[r] = static_cast<Elem>(acc % f.modulus());
  }
  return out;
}

// M * D * M^T.
SquareMatrix sandwich(const SquareMatrix& m, const SquareMatrix& d,
                      const PrimeField& f) {
  return multiply(multiply(m, d, f), transpose(m), f);
}

SquareMatrix hartley_2d(const SquareMatrix& d, const ZetaConfig& cfg) {
  const PrimeField& f = cfg.field();
  const SquareMatrix& h = cfg.matrices().entries;
  const SquareMatrix t = multiply(multiply(h, d, f), h, f);
  const std::size_t n = t.size();
  const Elem half = f.inv(2);
  SquareMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ri = (n - i) % n;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t rj = (n - j) % n;
      Elem s = f.add(t(i, j), t(i, rj));
      s = f.add(s, t(ri, j));
      s = f.sub(s, t(ri, rj));
      out(i, j) = f.mul(s, half);
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::kFfct: return "FFCT";
    case TransformKind::kFfht: return "FFHT";
    case TransformKind::kFfft: return "FFFT";
  }
  return "?";
}

TransformKind parse_transform_kind(std::string_view text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "ffct") return TransformKind::kFfct;
  if (lower == "ffht") return TransformKind::kFfht;
  if (lower == "ffft") return TransformKind::kFfft;
  throw Error(ErrorCode::kParse, "unknown transform kind '" + std::string(text) +
                                     "' (expected ffct, ffht or ffft)");
}

SquareMatrix::SquareMatrix(std::size_t n, std::vector<Elem> data)
    : n_(n), data_(std::move(data)) {
  if (data_.size() != n * n) {
    throw Error(ErrorCode::kShapeMismatch,
                "matrix data of " + std::to_string(data_.size()) +
                    " entries is not " + std::to_string(n) + "x" +
                    std::to_string(n));
  }
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

SquareMatrix transpose(const SquareMatrix& m) {
  const std::size_t n = m.size();
  SquareMatrix t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(j, i) = m(i, j);
  return t;
}

SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b,
                      const PrimeField& f) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "cannot multiply " + std::to_string(a.size()) + "x" +
                    std::to_string(a.size()) + " by " +
                    std::to_string(b.size()) + "x" + std::to_string(b.size()));
  }
  const std::size_t n = a.size();
  const std::uint64_t p = f.modulus();
  SquareMatrix out(n);
  std::vector<std::uint64_t> acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      const auto brow = b.row(k);
      for (std::size_t j = 0; j < n; ++j) acc[j] += aik * brow[j];
    }
    for (std::size_t j = 0; j < n; ++j) out(i, j) = static_cast<Elem>(acc[j] % p);
  }
  return out;
}

TransformMatrix build_matrices(const ZetaConfig& cfg) {
  const PrimeField& f = cfg.field();
  const std::size_t n = cfg.blocklength();
  const Elem n_inv = cfg.n_inverse();
  TransformMatrix out{SquareMatrix(n), SquareMatrix(n)};
  auto& fwd = out.entries;
  auto& inv = out.inverse_entries;

  switch (cfg.kind()) {
    case TransformKind::kFfct: {
      // c_{k,i} = 2 cos((2i+1)k), c'_{i,k} = N^-1 a_k cos((2i+1)k);
      // the trig table has length 4N so the index reduces mod 4N.
      const TrigTable& t = *cfg.trig();
      const auto aux = cfg.aux();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          const Elem c = t.cos(static_cast<std::int64_t>((2 * i + 1) * k));
          fwd(k, i) = f.add(c, c);
          inv(i, k) = f.mul(f.mul(n_inv, aux[k]), c);
        }
      }
      break;
    }
    case TransformKind::kFfht: {
      const TrigTable& t = *cfg.trig();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          const Elem c = t.cas(static_cast<std::int64_t>(i * k));
          fwd(k, i) = c;
          inv(i, k) = f.mul(n_inv, c);
        }
      }
      break;
    }
    case TransformKind::kFfft: {
      const auto pw = cfg.powers();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          fwd(k, i) = pw[(i * k) % n];
          inv(i, k) = f.mul(n_inv, pw[(n - (i * k) % n) % n]);
        }
      }
      break;
    }
  }

  if (multiply(fwd, inv, f) != SquareMatrix::identity(n)) {
    throw Error(ErrorCode::kSingularMatrix,
                "forward and inverse kernels do not compose to the identity for " +
                    describe(cfg));
  }
  return out;
}

std::optional<std::size_t> ZetaConfig::implied_blocklength(const GaussianInt& zeta,
                                                           TransformKind kind) {
  if (zeta.is_zero()) return std::nullopt;
  const std::uint64_t order = multiplicative_order(zeta);
  if (kind == TransformKind::kFfct) {
    if (order % 4 != 0) return std::nullopt;
    return order / 4;
  }
  return order;
}

ZetaConfig ZetaConfig::from_zeta(const PrimeField& field, const GaussianInt& zeta,
                                 TransformKind kind) {
  const auto n = implied_blocklength(zeta, kind);
  if (!n) {
    throw Error(ErrorCode::kInvalidZeta,
                "zeta = " + to_string(zeta) + " does not induce a " +
                    std::string(to_string(kind)) + " (order must be a multiple of 4)");
  }
  return ZetaConfig(field, zeta, kind, *n);
}

ZetaConfig::ZetaConfig(const PrimeField& field, const GaussianInt& zeta,
                       TransformKind kind, std::size_t blocklength)
    : field_(field), zeta_(zeta), kind_(kind), n_(blocklength) {
  if (zeta.field() != field) {
    throw Error(ErrorCode::kFieldMismatch,
                "zeta belongs to GF(" + std::to_string(zeta.field().modulus()) +
                    "), config is over GF(" + std::to_string(field.modulus()) + ")");
  }
  if (n_ < 2) {
    throw Error(ErrorCode::kDegenerateBlocklength,
                "blocklength must be at least 2, got " + std::to_string(n_));
  }
  if (n_ % field.modulus() == 0) {
    throw Error(ErrorCode::kDegenerateBlocklength,
                "blocklength " + std::to_string(n_) + " has no inverse modulo " +
                    std::to_string(field.modulus()));
  }
  if (zeta.is_zero()) {
    throw Error(ErrorCode::kInvalidZeta, "zeta must be nonzero");
  }

  const std::uint64_t order = multiplicative_order(zeta);
  const std::uint64_t required = kind == TransformKind::kFfct ? 4 * n_ : n_;
  if (kind == TransformKind::kFfft) {
    if (!zeta.is_real()) {
      throw Error(ErrorCode::kInvalidZeta,
                  "FFFT requires zeta in GF(p), got " + to_string(zeta));
    }
  } else if (!is_unimodular(zeta)) {
    throw Error(ErrorCode::kNotUnimodular,
                std::string(to_string(kind)) + " requires a unimodular zeta; n(" +
                    to_string(zeta) + ") = " + std::to_string(gi_norm(zeta)));
  }
  if (order != required) {
    throw Error(ErrorCode::kInvalidZeta,
                "zeta = " + to_string(zeta) + " has order " + std::to_string(order) +
                    "; " + std::string(to_string(kind)) + " with N = " +
                    std::to_string(n_) + " needs order " + std::to_string(required));
  }

  n_inv_ = field.inv(static_cast<Elem>(n_ % field.modulus()));
  if (kind == TransformKind::kFfft) {
    powers_.reserve(n_);
    Elem x = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      powers_.push_back(x);
      x = field.mul(x, zeta.re());
    }
  } else {
    trig_.emplace(zeta);
  }
  if (kind == TransformKind::kFfct) {
    aux_.assign(n_, 1);
    aux_[0] = field.inv(2);
  }
  matrices_ = build_matrices(*this);
}

std::vector<Elem> forward(std::span<const Elem> v, const ZetaConfig& cfg) {
  require_vector(v, cfg);
  return apply(cfg.matrices().entries, v, cfg.field());
}

std::vector<Elem> inverse(std::span<const Elem> v, const ZetaConfig& cfg) {
  require_vector(v, cfg);
  return apply(cfg.matrices().inverse_entries, v, cfg.field());
}

std::vector<Elem> ffct_forward(std::span<const Elem> v, const ZetaConfig& cfg) {
  require_kind(cfg, TransformKind::kFfct);
  return forward(v, cfg);
}
std::vector<Elem> ffct_inverse(std::span<const Elem> v, const ZetaConfig& cfg) {
  require_kind(cfg, TransformKind::kFfct);
  return inverse(v, cfg);
}
std::vector<Elem> ffht_forward(std::span<const Elem> v, const ZetaConfig& cfg) {
  require_kind(cfg, TransformKind::kFfht);
  return forward(v, cfg);
}
std::vector<Elem> ffht_inverse(std::span<const Elem> v, const ZetaConfig& cfg) {
  require_kind(cfg, TransformKind::kFfht);
  return inverse(v, cfg);
}
std::vector<Elem> ffft_forward(std::span<const Elem> v, const ZetaConfig& cfg) {
  require_kind(cfg, TransformKind::kFfft);
  return forward(v, cfg);
}
std::vector<Elem> ffft_inverse(std::span<const Elem> v, const ZetaConfig& cfg) {
  require_kind(cfg, TransformKind::kFfft);
  return inverse(v, cfg);
}

SquareMatrix forward_2d(const SquareMatrix& block, const ZetaConfig& cfg) {
  require_block(block, cfg);
  if (cfg.kind() == TransformKind::kFfht) return hartley_2d(block, cfg);
  return sandwich(cfg.matrices().entries, block, cfg.field());
}

SquareMatrix inverse_2d(const SquareMatrix& spectrum, const ZetaConfig& cfg) {
  require_block(spectrum, cfg);
  const PrimeField& f = cfg.field();
  if (cfg.kind() == TransformKind::kFfht) {
    // The 2-D cas kernel is its own inverse up to N^-2.
    SquareMatrix out = hartley_2d(spectrum, cfg);
    const Elem scale = f.mul(cfg.n_inverse(), cfg.n_inverse());
    for (Elem& x : out.data()) x = f.mul(x, scale);
    return out;
  }
  return sandwich(cfg.matrices().inverse_entries, spectrum, f);
}

SquareMatrix ffct_2d(const SquareMatrix& block, const ZetaConfig& cfg) {
  require_kind(cfg, TransformKind::kFfct);
  return forward_2d(block, cfg);
}
SquareMatrix ffct_2d_inverse(const SquareMatrix& spectrum, const ZetaConfig& cfg) {
  require_kind(cfg, TransformKind::kFfct);
  return inverse_2d(spectrum, cfg);
}
SquareMatrix ffht_2d(const SquareMatrix& block, const ZetaConfig& cfg) {
  require_kind(cfg, TransformKind::kFfht);
  return forward_2d(block, cfg);
}
SquareMatrix ffht_2d_inverse(const SquareMatrix& spectrum, const ZetaConfig& cfg) {
  require_kind(cfg, TransformKind::kFfht);
  return inverse_2d(spectrum, cfg);
}
SquareMatrix ffft_2d(const SquareMatrix& block, const ZetaConfig& cfg) {
  require_kind(cfg, TransformKind::kFfft);
  return forward_2d(block, cfg);
}
SquareMatrix ffft_2d_inverse(const SquareMatrix& spectrum, const ZetaConfig& cfg) {
  require_kind(cfg, TransformKind::kFfft);
  return inverse_2d(spectrum, cfg);
}

}  // namespace fftwm
