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

#include "fftwm/pgm.hpp"

#include <filesystem>
#include <random>
#include <sstream>

#include "fftwm/error.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace fftwm {
namespace {

GrayImage round_trip(const GrayImage& img, PgmEncoding enc) {
  std::stringstream ss;
  write_pgm(ss, img, enc);
  return read_pgm(ss);
}

TEST(PgmTest, RoundTripBothEncodingsAndDepths) {
  std::mt19937_64 rng(1);
  for (Pixel maxval : {1u, 6u, 255u, 256u, 1000u, 65535u}) {
    const auto img = testing_util::random_image(13, 7, maxval, rng);
    EXPECT_EQ(round_trip(img, PgmEncoding::kAscii), img) << maxval;
    EXPECT_EQ(round_trip(img, PgmEncoding::kBinary), img) << maxval;
  }
}

TEST(PgmTest, SixteenBitIsBigEndian) {
  const GrayImage img(2, 1, 65535, std::vector<Pixel>{0x0102, 0xA0B0});
  std::stringstream ss;
  write_pgm(ss, img, PgmEncoding::kBinary);
  const std::string bytes = ss.str();
  ASSERT_GE(bytes.size(), 4u);
  EXPECT_EQ(bytes.substr(bytes.size() - 4), std::string("\x01\x02\xA0\xB0", 4));
}

TEST(PgmTest, ReadsCommentsAndOriginalSize) {
  std::stringstream ss("P2\n# a comment\n# fftwm-original-size 3 1\n4 2\n# more\n9\n"
                       "0 1 2 3\n4 5 6 9\n");
  const auto img = read_pgm(ss);
  EXPECT_EQ(img.width(), 4u);
  EXPECT_EQ(img.height(), 2u);
  EXPECT_EQ(img.at(3, 1), 9u);
  ASSERT_TRUE(img.original_extent().has_value());
  EXPECT_EQ(*img.original_extent(), (Extent{3, 1}));

  auto padded = img;
  padded.set_original_extent(Extent{3, 1});
  EXPECT_EQ(round_trip(padded, PgmEncoding::kBinary).original_extent(), padded.original_extent());
}

TEST(PgmTest, RejectsMalformed) {
  for (const char* bad : {"", "P3\n1 1\n255\n0\n", "P2\n2 2\n255\n1 2 3\n",
                          "P2\n1 1\n7\n8\n", "P5\n2 2\n255\n\x01", "P2\n0 1\n255\n",
                          "P2\n1 1\n70000\n1\n", "P2\nx 1\n255\n1\n"}) {
    std::stringstream ss(bad);
    EXPECT_ERROR_CODE(read_pgm(ss), ErrorCode::kParse) << bad;
  }
  EXPECT_ERROR_CODE(read_pgm(std::filesystem::path("/nonexistent/x.pgm")), ErrorCode::kIo);
  std::stringstream out;
  EXPECT_ERROR_CODE(write_pgm(out, GrayImage(1, 1, 70000)), ErrorCode::kInvalidImage);
}

TEST(PgmTest, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "fftwm_pgm_test";
  std::filesystem::create_directories(dir);
  std::mt19937_64 rng(2);
  const auto img = testing_util::random_image(8, 8, 300, rng);
  write_pgm(dir / "a.pgm", img);
  EXPECT_EQ(read_pgm(dir / "a.pgm"), img);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace fftwm
