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

#include "fftwm/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace fftwm {

GrayImage synthetic_portrait(std::size_t width, std::size_t height, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> grain(-6, 6);
  std::vector<Pixel> px(width * height);
  const double cx = 0.55 * static_cast<double>(width);
  const double cy = 0.45 * static_cast<double>(height);
  const double r0 = 0.3 * static_cast<double>(std::min(width, height));
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double fx = static_cast<double>(x), fy = static_cast<double>(y);
      double v = 90.0 + 70.0 * fx / static_cast<double>(width);
      v += 25.0 * std::sin(fx / 19.0) * std::cos(fy / 27.0);
      const double r = std::hypot(fx - cx, fy - cy);
      if (r < r0) v += 60.0 * (1.0 - r / r0);
      if ((x / 37 + y / 53) % 5 == 0) v -= 35.0;
      v += grain(rng);
      px[y * width + x] = static_cast<Pixel>(std::clamp(std::lround(v), 0L, 255L));
    }
  }
  return GrayImage(width, height, 255, std::move(px));
}

GrayImage wavy_pattern(std::size_t width, std::size_t height) {
  std::vector<Pixel> px(width * height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double phase = 2.0 * std::numbers::pi * static_cast<double>(x + 2 * y) / 16.0;
      px[y * width + x] = static_cast<Pixel>(std::lround(127.5 + 127.5 * std::sin(phase)));
    }
  }
  return GrayImage(width, height, 255, std::move(px));
}

GrayImage uniform_noise(std::size_t width, std::size_t height, Pixel maxval,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Pixel> dist(0, maxval);
  std::vector<Pixel> px(width * height);
  for (Pixel& v : px) v = dist(rng);
  return GrayImage(width, height, maxval, std::move(px));
}

}  // namespace fftwm
