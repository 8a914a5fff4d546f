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

#include "fftwm/blockwise.hpp"

#include <atomic>
#include <random>
#include <stdexcept>

#include "fftwm/error.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace fftwm {
namespace {

using testing_util::random_image;

ZetaConfig ffct7() {
  const PrimeField f(7);
  return ZetaConfig(f, GaussianInt(f, 2, 2), TransformKind::kFfct, 2);
}

TEST(SplitBlocksTest, Structure) {
  std::mt19937_64 rng(1);
  const auto img = random_image(4, 4, 255, rng);
  const auto grid = split_blocks(img, 2);
  EXPECT_EQ(grid.blocks_x, 2u);
  EXPECT_EQ(grid.blocks_y, 2u);
  ASSERT_EQ(grid.blocks.size(), 4u);
  EXPECT_EQ(grid.block(1, 0)(0, 1), img.at(1, 2));
  EXPECT_EQ(grid.block(0, 1)(1, 0), img.at(2, 1));
}

TEST(SplitBlocksTest, LargeImage) {
  const GrayImage img(512, 512, 255, 9);
  const auto grid = split_blocks(img, 2);
  EXPECT_EQ(grid.blocks_x, 256u);
  EXPECT_EQ(grid.blocks_y, 256u);
}

TEST(SplitBlocksTest, IndivisibleCarriesDimensions) {
  const GrayImage img(5, 4, 255);
  try {
    split_blocks(img, 2);
    FAIL() << "expected IndivisibleDimensionsError";
  } catch (const IndivisibleDimensionsError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndivisibleDimensions);
    EXPECT_EQ(e.width(), 5u);
    EXPECT_EQ(e.height(), 4u);
    EXPECT_EQ(e.block(), 2u);
  }
}

TEST(SplitBlocksTest, ReassembleIsIdentity) {
  std::mt19937_64 rng(2);
  for (auto [w, h, n] : {std::tuple{4u, 4u, 2u}, {12u, 6u, 3u}, {32u, 64u, 8u}, {7u, 7u, 7u}}) {
    const auto img = random_image(w, h, 1000, rng);
    EXPECT_EQ(reassemble(split_blocks(img, n), img.maxval()), img);
  }
}

TEST(BlockwiseTransformTest, ZeroImage) {
  const GrayImage zero(8, 8, 6);
  EXPECT_TRUE(same_pixels(blockwise_transform(zero, ffct7(), Direction::kForward), zero));
}

TEST(BlockwiseTransformTest, RoundTripAndMaxval) {
  std::mt19937_64 rng(3);
  const auto img = random_image(8, 8, 6, rng);
  const auto cfg = ffct7();
  const auto spectrum = blockwise_transform(img, cfg, Direction::kForward);
  EXPECT_EQ(spectrum.maxval(), 6u);
  EXPECT_EQ(blockwise_transform(spectrum, cfg, Direction::kInverse), img);
}

TEST(BlockwiseTransformTest, ConstantImageHasDcOnlySpectrum) {
  struct C { std::uint32_t p; std::int64_t z; std::size_t n; };
  for (const C c : {C{7, 3, 6}, C{11, 3, 5}, C{7, 6, 2}}) {
    const PrimeField f(c.p);
    const ZetaConfig cfg(f, GaussianInt(f, c.z), TransformKind::kFfft, c.n);
    for (Pixel v = 0; v < c.p; ++v) {
      const GrayImage img(c.n * 2, c.n * 3, c.p - 1, v);
      const auto spectrum = blockwise_transform(img, cfg, Direction::kForward);
      const Elem dc = f.mul(static_cast<Elem>(c.n * c.n % c.p), v);
      for (std::size_t y = 0; y < spectrum.height(); ++y)
        for (std::size_t x = 0; x < spectrum.width(); ++x)
          ASSERT_EQ(spectrum.at(x, y), (x % c.n == 0 && y % c.n == 0) ? dc : 0u);
    }
  }
}

TEST(BlockwiseTransformTest, RejectsOutOfFieldPixels) {
  const GrayImage img(4, 4, 255, 7);
  EXPECT_ERROR_CODE(blockwise_transform(img, ffct7(), Direction::kForward),
                    ErrorCode::kPixelOutOfField);
  EXPECT_ERROR_CODE(blockwise_transform(GrayImage(6, 5, 6), ffct7(), Direction::kForward),
                    ErrorCode::kIndivisibleDimensions);
}

TEST(BlockwiseTransformTest, BlockIndependence) {
  std::mt19937_64 rng(4);
  const PrimeField f(31);
  const ZetaConfig cfg(f, GaussianInt(f, 4, 4), TransformKind::kFfht, 8);
  const auto img = random_image(32, 24, 30, rng);
  const auto base = split_blocks(blockwise_transform(img, cfg, Direction::kForward), 8);
  std::uniform_int_distribution<std::size_t> dx(0, 31), dy(0, 23);
  for (int t = 0; t < 20; ++t) {
    auto mod = img;
    const std::size_t x = dx(rng), y = dy(rng);
    mod.set(x, y, (mod.at(x, y) + 1) % 31);
    const auto got = split_blocks(blockwise_transform(mod, cfg, Direction::kForward), 8);
    for (std::size_t by = 0; by < 3; ++by)
      for (std::size_t bx = 0; bx < 4; ++bx) {
        const bool touched = by == y / 8 && bx == x / 8;
        EXPECT_EQ(got.block(by, bx) == base.block(by, bx), !touched);
      }
  }
}

TEST(BlockwiseTransformTest, DeterministicAcrossThreadCounts) {
  std::mt19937_64 rng(5);
  const auto img = random_image(64, 64, 6, rng);
  const auto cfg = ffct7();
  const auto one = blockwise_transform(img, cfg, Direction::kForward, {.threads = 1});
  for (unsigned t : {2u, 3u, 4u, 8u}) {
    EXPECT_EQ(blockwise_transform(img, cfg, Direction::kForward, {.threads = t}), one);
  }
}

TEST(BlockwiseTransformTest, ZeroPaddingRecordsExtent) {
  std::mt19937_64 rng(6);
  const auto img = random_image(5, 3, 6, rng);
  const auto cfg = ffct7();
  const auto spectrum =
      blockwise_transform(img, cfg, Direction::kForward, {.zero_pad = true});
  EXPECT_EQ(spectrum.width(), 6u);
  EXPECT_EQ(spectrum.height(), 4u);
  ASSERT_TRUE(spectrum.original_extent().has_value());
  EXPECT_EQ(*spectrum.original_extent(), (Extent{5, 3}));
  const auto back = blockwise_transform(spectrum, cfg, Direction::kInverse);
  EXPECT_TRUE(same_pixels(crop(back, 5, 3), img));
}

TEST(ParallelForTest, VisitsEachIndexOnceAndPropagates) {
  std::vector<std::atomic<int>> hits(1000);
  detail::parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(detail::parallel_for(100, 4,
                                    [](std::size_t i) {
                                      if (i == 57) throw std::runtime_error("boom");
                                    }),
               std::runtime_error);
}

}  // namespace
}  // namespace fftwm
