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

#include "fftwm/image.hpp"

#include <algorithm>
#include <string>

#include "fftwm/error.hpp"

namespace fftwm {

GrayImage::GrayImage(std::size_t width, std::size_t height, Pixel maxval,
                     std::vector<Pixel> pixels)
    : width_(width), height_(height), maxval_(maxval), pixels_(std::move(pixels)) {
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::kInvalidImage, "image dimensions must be positive");
  }
  if (pixels_.size() != width * height) {
    throw Error(ErrorCode::kInvalidImage,
                "expected " + std::to_string(width * height) + " pixels, got " +
                    std::to_string(pixels_.size()));
  }
  if (max_pixel() > maxval) {
    throw Error(ErrorCode::kInvalidImage,
                "pixel value " + std::to_string(max_pixel()) + " exceeds maxval " +
                    std::to_string(maxval));
  }
}

GrayImage::GrayImage(std::size_t width, std::size_t height, Pixel maxval, Pixel fill)
    : GrayImage(width, height, maxval, std::vector<Pixel>(width * height, fill)) {}

void GrayImage::set(std::size_t x, std::size_t y, Pixel value) {
  if (value > maxval_) {
    throw Error(ErrorCode::kInvalidImage,
                "pixel value " + std::to_string(value) + " exceeds maxval " +
                    std::to_string(maxval_));
  }
  pixels_[y * width_ + x] = value;
}

void GrayImage::set_maxval(Pixel maxval) {
  if (max_pixel() > maxval) {
    throw Error(ErrorCode::kInvalidImage,
                "maxval " + std::to_string(maxval) + " is below existing pixel " +
                    std::to_string(max_pixel()));
  }
  maxval_ = maxval;
}

Pixel GrayImage::max_pixel() const noexcept {
  return pixels_.empty() ? 0 : *std::max_element(pixels_.begin(), pixels_.end());
}

bool same_pixels(const GrayImage& a, const GrayImage& b) noexcept {
  return a.width() == b.width() && a.height() == b.height() &&
         std::equal(a.pixels().begin(), a.pixels().end(), b.pixels().begin());
}

}  // namespace fftwm
