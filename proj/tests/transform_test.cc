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

#include <random>
#include <vector>

#include "fftwm/error.hpp"
#include "fftwm/gf.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"
#include "test_util.hpp"

namespace fftwm {
namespace {

using ::testing::ElementsAre;
using testing_util::from_oracle;
using testing_util::random_block;
using testing_util::random_vector;
using testing_util::to_oracle;
using V = std::vector<Elem>;

ZetaConfig ffct7() {
  const PrimeField f(7);
  return ZetaConfig(f, GaussianInt(f, 2, 2), TransformKind::kFfct, 2);
}
ZetaConfig ffht3() {
  const PrimeField f(3);
  return ZetaConfig(f, GaussianInt(f, 0, 1), TransformKind::kFfht, 4);
}
ZetaConfig ffft(std::uint32_t p, std::int64_t zeta, std::size_t n) {
  const PrimeField f(p);
  return ZetaConfig(f, GaussianInt(f, zeta), TransformKind::kFfft, n);
}

oracle::Vec to_ovec(const V& v) { return {v.begin(), v.end()}; }

TEST(FfctTest, ForwardExamples) {
  const auto cfg = ffct7();
  EXPECT_THAT(ffct_forward(V{0, 0}, cfg), ElementsAre(0, 0));
  EXPECT_THAT(ffct_forward(V{1, 2}, cfg), ElementsAre(6, 3));
  EXPECT_THAT(ffct_forward(V{1, 0}, cfg), ElementsAre(2, 4));
}

TEST(FfctTest, InverseExamples) {
  const auto cfg = ffct7();
  EXPECT_THAT(ffct_inverse(V{6, 3}, cfg), ElementsAre(1, 2));
  EXPECT_THAT(ffct_inverse(V{0, 0}, cfg), ElementsAre(0, 0));
  EXPECT_THAT(ffct_inverse(V{2, 4}, cfg), ElementsAre(1, 0));
}

TEST(FfctTest, MatrixAndAuxSequence) {
  const auto cfg = ffct7();
  EXPECT_EQ(cfg.matrices().entries, SquareMatrix(2, V{2, 2, 4, 3}));
  // a_0 = 1/2, a_k = 1.
  EXPECT_THAT(V(cfg.aux().begin(), cfg.aux().end()), ElementsAre(4, 1));
  EXPECT_EQ(cfg.trig()->order(), 8u);
}

TEST(FfctTest, InverseMatrixMatchesGaussJordan) {
  const PrimeField f(31);
  for (std::size_t n : {2u, 4u, 8u}) {
    for (const auto& z : find_unimodular_zeta(f, 4 * n)) {
      const ZetaConfig cfg(f, z, TransformKind::kFfct, n);
      const auto want = oracle::invert(to_oracle(cfg.matrices().entries), 31);
      ASSERT_TRUE(want.has_value());
      EXPECT_EQ(cfg.matrices().inverse_entries, from_oracle(*want)) << to_string(z);
    }
  }
}

TEST(FfctTest, MatchesOracleSum) {
  std::mt19937_64 rng(11);
  const PrimeField f(47);
  for (std::size_t n : {2u, 3u, 4u, 6u, 12u}) {
    for (const auto& z : find_unimodular_zeta(f, 4 * n)) {
      const ZetaConfig cfg(f, z, TransformKind::kFfct, n);
      for (int t = 0; t < 5; ++t) {
        const V v = random_vector(n, 47, rng);
        EXPECT_EQ(to_ovec(ffct_forward(v, cfg)),
                  oracle::ffct(to_ovec(v), {z.re(), z.im()}, 47));
      }
    }
  }
}

TEST(FfctTest, TwoDimensionalExamples) {
  const auto cfg = ffct7();
  EXPECT_EQ(ffct_2d(SquareMatrix(2, 1), cfg), SquareMatrix(2, V{2, 0, 0, 0}));
  EXPECT_EQ(ffct_2d(SquareMatrix(2), cfg), SquareMatrix(2));
  EXPECT_EQ(ffct_2d_inverse(SquareMatrix(2, V{2, 0, 0, 0}), cfg), SquareMatrix(2, 1));
}

TEST(FfhtTest, Examples) {
  const auto cfg = ffht3();
  EXPECT_THAT(ffht_forward(V{1, 0, 0, 0}, cfg), ElementsAre(1, 1, 1, 1));
  EXPECT_THAT(ffht_forward(V{1, 1, 1, 1}, cfg), ElementsAre(1, 0, 0, 0));
  EXPECT_THAT(ffht_forward(V{0, 0, 0, 0}, cfg), ElementsAre(0, 0, 0, 0));
  EXPECT_THAT(ffht_inverse(V{1, 1, 1, 1}, cfg), ElementsAre(1, 0, 0, 0));
  EXPECT_THAT(ffht_inverse(V{0, 0, 0, 0}, cfg), ElementsAre(0, 0, 0, 0));
  EXPECT_THAT(ffht_inverse(ffht_forward(V{2, 1, 0, 2}, cfg), cfg), ElementsAre(2, 1, 0, 2));
}

TEST(FfhtTest, Matrix) {
  const auto cfg = ffht3();
  EXPECT_EQ(cfg.matrices().entries,
            SquareMatrix(4, V{1, 1, 1, 1, 1, 1, 2, 2, 1, 2, 1, 2, 1, 2, 2, 1}));
}

TEST(FfhtTest, QuasiInvolutionAndScaledInverse) {
  for (std::uint32_t p : {3u, 7u, 11u, 19u, 23u, 31u, 43u, 47u}) {
    const PrimeField f(p);
    for (std::uint64_t n = 2; n <= p + 1; ++n) {
      if ((p + 1) % n != 0 || n % p == 0) continue;
      for (const auto& z : find_unimodular_zeta(f, n)) {
        const ZetaConfig cfg(f, z, TransformKind::kFfht, n);
        const auto& h = cfg.matrices().entries;
        SquareMatrix scaled = SquareMatrix::identity(n);
        for (auto& x : scaled.data()) x = f.mul(x, static_cast<Elem>(n % p));
        EXPECT_EQ(multiply(h, h, f), scaled) << "p=" << p << " zeta=" << z;
        SquareMatrix inv = h;
        for (auto& x : inv.data()) x = f.mul(x, cfg.n_inverse());
        EXPECT_EQ(cfg.matrices().inverse_entries, inv);
      }
    }
  }
}

TEST(FfhtTest, TwoDimensionalImpulses) {
  const auto cfg = ffht3();
  SquareMatrix d(4);
  d(0, 0) = 1;
  EXPECT_EQ(ffht_2d(d, cfg), SquareMatrix(4, 1));
  SquareMatrix e(4);
  e(1, 0) = 1;
  EXPECT_EQ(ffht_2d(e, cfg),
            SquareMatrix(4, V{1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2}));
}

TEST(FfhtTest, CombinationMatchesDoubleSum) {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {3u, 7u, 11u, 31u}) {
    const PrimeField f(p);
    for (std::uint64_t n : {2u, 4u, 8u, 12u}) {
      if ((p + 1) % n != 0) continue;
      for (const auto& z : find_unimodular_zeta(f, n)) {
        const ZetaConfig cfg(f, z, TransformKind::kFfht, n);
        for (int t = 0; t < 50; ++t) {
          const auto d = random_block(n, p, rng);
          const auto got = ffht_2d(d, cfg);
          ASSERT_EQ(to_oracle(got), oracle::hartley_2d(to_oracle(d), {z.re(), z.im()}, p));
          ASSERT_EQ(ffht_2d_inverse(got, cfg), d);
        }
      }
    }
  }
}

TEST(FfftTest, FourPointValuesInGF5AgainstOracle) {
  // 4-point real-zeta examples need 4 | p-1, i.e. a field such as GF(5) that
  // the library rejects; the values are pinned against the oracle only.
  EXPECT_EQ(oracle::ffft({1, 0, 0, 0}, 2, 5), (oracle::Vec{1, 1, 1, 1}));
  EXPECT_EQ(oracle::ffft({0, 1, 0, 0}, 2, 5), (oracle::Vec{1, 2, 4, 3}));
  EXPECT_EQ(oracle::ffft({1, 1, 1, 1}, 2, 5), (oracle::Vec{4, 0, 0, 0}));
}

TEST(FfftTest, ImpulseShiftAndGeometricSum) {
  // zeta = 3 has order 6 in GF(7).
  const auto cfg = ffft(7, 3, 6);
  EXPECT_THAT(ffft_forward(V{1, 0, 0, 0, 0, 0}, cfg), ElementsAre(1, 1, 1, 1, 1, 1));
  EXPECT_THAT(ffft_forward(V{0, 1, 0, 0, 0, 0}, cfg), ElementsAre(1, 3, 2, 6, 4, 5));
  EXPECT_THAT(ffft_forward(V{1, 1, 1, 1, 1, 1}, cfg), ElementsAre(6, 0, 0, 0, 0, 0));
  EXPECT_THAT(ffft_inverse(V{1, 1, 1, 1, 1, 1}, cfg), ElementsAre(1, 0, 0, 0, 0, 0));
  EXPECT_THAT(ffft_inverse(V{1, 3, 2, 6, 4, 5}, cfg), ElementsAre(0, 1, 0, 0, 0, 0));
  EXPECT_THAT(ffft_inverse(V(6, 0), cfg), ElementsAre(0, 0, 0, 0, 0, 0));
}

TEST(FfftTest, MatrixEntries) {
  const auto cfg = ffft(11, 3, 5);
  const PrimeField f(11);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t k = 0; k < 5; ++k) {
      EXPECT_EQ(cfg.matrices().entries(k, i), f.pow(3, i * k));
      EXPECT_EQ(cfg.matrices().inverse_entries(i, k),
                f.mul(cfg.n_inverse(), f.inv(f.pow(3, i * k))));
    }
}

TEST(FfftTest, TwoDimensionalMatchesDoubleSum) {
  std::mt19937_64 rng(5);
  struct C { std::uint32_t p; std::int64_t z; std::size_t n; };
  for (const C c : {C{7, 3, 6}, C{11, 3, 5}, C{7, 6, 2}, C{31, 2, 5}}) {
    const auto cfg = ffft(c.p, c.z, c.n);
    SquareMatrix imp(c.n);
    imp(0, 0) = 1;
    EXPECT_EQ(ffft_2d(imp, cfg), SquareMatrix(c.n, 1));
    EXPECT_EQ(ffft_2d(SquareMatrix(c.n), cfg), SquareMatrix(c.n));
    for (int t = 0; t < 50; ++t) {
      const auto d = random_block(c.n, c.p, rng);
      const auto got = ffft_2d(d, cfg);
      ASSERT_EQ(to_oracle(got), oracle::fourier_2d(to_oracle(d), c.z, c.p));
      ASSERT_EQ(ffft_2d_inverse(got, cfg), d);
    }
  }
}

TEST(TransformPropertyTest, LinearityAndRoundTrip) {
  std::mt19937_64 rng(17);
  const PrimeField f(47);
  std::vector<ZetaConfig> cfgs;
  for (const auto& z : find_unimodular_zeta(f, 48))
    cfgs.emplace_back(f, z, TransformKind::kFfct, 12);
  for (const auto& z : find_unimodular_zeta(f, 16))
    cfgs.emplace_back(f, z, TransformKind::kFfht, 16);
  cfgs.emplace_back(f, GaussianInt(f, 2), TransformKind::kFfft, 23);
  std::uniform_int_distribution<Elem> d(0, 46);
  for (const auto& cfg : cfgs) {
    const std::size_t n = cfg.blocklength();
    for (int t = 0; t < 20; ++t) {
      const V u = random_vector(n, 47, rng), v = random_vector(n, 47, rng);
      const Elem a = d(rng), b = d(rng);
      V mix(n);
      for (std::size_t i = 0; i < n; ++i) mix[i] = f.add(f.mul(a, u[i]), f.mul(b, v[i]));
      const V fu = forward(u, cfg), fv = forward(v, cfg), fm = forward(mix, cfg);
      for (std::size_t i = 0; i < n; ++i)
        ASSERT_EQ(fm[i], f.add(f.mul(a, fu[i]), f.mul(b, fv[i])));
      ASSERT_EQ(inverse(fu, cfg), u);
      const auto blk = random_block(n, 47, rng);
      ASSERT_EQ(inverse_2d(forward_2d(blk, cfg), cfg), blk);
    }
    EXPECT_EQ(multiply(cfg.matrices().entries, cfg.matrices().inverse_entries, f),
              SquareMatrix::identity(n));
  }
}

TEST(TransformErrorTest, Codes) {
  const auto c = ffct7();
  EXPECT_ERROR_CODE(ffct_forward(V{1, 2, 3}, c), ErrorCode::kLengthMismatch);
  EXPECT_ERROR_CODE(ffht_forward(V{1, 2}, c), ErrorCode::kKindMismatch);
  EXPECT_ERROR_CODE(ffft_inverse(V{1, 2}, c), ErrorCode::kKindMismatch);
  EXPECT_ERROR_CODE(ffct_2d(SquareMatrix(3), c), ErrorCode::kShapeMismatch);
  EXPECT_ERROR_CODE(ffht_2d(SquareMatrix(2), c), ErrorCode::kKindMismatch);
  EXPECT_ERROR_CODE(ffct_forward(V{7, 0}, c), ErrorCode::kPixelOutOfField);

  const PrimeField f(7);
  EXPECT_ERROR_CODE(ZetaConfig(f, GaussianInt(f, 6), TransformKind::kFfft, 1),
                    ErrorCode::kDegenerateBlocklength);
  EXPECT_ERROR_CODE(ZetaConfig(f, GaussianInt(f, 2, 2), TransformKind::kFfct, 3),
                    ErrorCode::kInvalidZeta);
  EXPECT_ERROR_CODE(ZetaConfig(f, GaussianInt(f, 2, 2), TransformKind::kFfft, 8),
                    ErrorCode::kInvalidZeta);
  EXPECT_ERROR_CODE(ZetaConfig(f, GaussianInt(f, 1, 1), TransformKind::kFfht, 8),
                    ErrorCode::kNotUnimodular);
  EXPECT_ERROR_CODE(ZetaConfig(f, GaussianInt::zero(f), TransformKind::kFfht, 2),
                    ErrorCode::kInvalidZeta);
  EXPECT_ERROR_CODE(ZetaConfig(f, GaussianInt(PrimeField(3), 0, 1), TransformKind::kFfht, 4),
                    ErrorCode::kFieldMismatch);
}

TEST(TransformKindTest, ParseAndFormat) {
  EXPECT_EQ(parse_transform_kind("ffct"), TransformKind::kFfct);
  EXPECT_EQ(parse_transform_kind("FFHT"), TransformKind::kFfht);
  EXPECT_EQ(to_string(TransformKind::kFfft), "FFFT");
  EXPECT_ERROR_CODE(parse_transform_kind("dct"), ErrorCode::kParse);
  EXPECT_EQ(ZetaConfig::implied_blocklength(GaussianInt(PrimeField(7), 2, 2),
                                            TransformKind::kFfct),
            2u);
}

}  // namespace
}  // namespace fftwm
