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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fftwm {

using Pixel = std::uint32_t;

struct Extent {
  std::size_t width = 0;
  std::size_t height = 0;

  friend bool operator==(const Extent&, const Extent&) = default;
};

// Row-major grayscale raster with an explicit maximum value.
// Invariants: width, height >= 1 and every pixel <= maxval.
class GrayImage {
 public:
  // Throws Error{kInvalidImage} when the invariants do not hold.
  GrayImage(std::size_t width, std::size_t height, Pixel maxval,
            std::vector<Pixel> pixels);
  GrayImage(std::size_t width, std::size_t height, Pixel maxval, Pixel fill = 0);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  Extent extent() const noexcept { return {width_, height_}; }
  Pixel maxval() const noexcept { return maxval_; }

  Pixel at(std::size_t x, std::size_t y) const noexcept { return pixels_[y * width_ + x]; }
  // Throws Error{kInvalidImage} if value > maxval.
  void set(std::size_t x, std::size_t y, Pixel value);
  // Throws Error{kInvalidImage} if some pixel exceeds the new maxval.
  void set_maxval(Pixel maxval);

  std::span<const Pixel> pixels() const noexcept { return pixels_; }
  Pixel max_pixel() const noexcept;

  // Size of the image before zero padding, when it was padded.
  const std::optional<Extent>& original_extent() const noexcept { return original_; }
  void set_original_extent(std::optional<Extent> e) { original_ = e; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  Pixel maxval_;
  std::vector<Pixel> pixels_;
  std::optional<Extent> original_;
};

// Same pixels; only dimensions and pixel values are compared.
bool same_pixels(const GrayImage& a, const GrayImage& b) noexcept;

}  // namespace fftwm
