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

#include "fftwm/watermark.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fftwm/error.hpp"

namespace fftwm {

namespace {

constexpr double kPsnrPeak = 255.0;

std::string dims(std::size_t w, std::size_t h) {
  return std::to_string(w) + "x" + std::to_string(h);
}

void require_same_shape(const GrayImage& a, const GrayImage& b) {
  if (a.extent() != b.extent()) {
    throw Error(ErrorCode::kShapeMismatch, "image shapes differ: " +
                                               dims(a.width(), a.height()) + " vs " +
                                               dims(b.width(), b.height()));
  }
}

void require_mark_fits(const GrayImage& img, const WatermarkImage& wm,
                       const ZetaConfig& cfg) {
  if (wm.width() != img.width() || wm.height() != img.height()) {
    throw Error(ErrorCode::kShapeMismatch, "watermark " + dims(wm.width(), wm.height()) +
                                               " does not cover image " +
                                               dims(img.width(), img.height()));
  }
  if (wm.field() != cfg.field()) {
    throw Error(ErrorCode::kWatermarkOutOfField,
                "watermark is over GF(" + std::to_string(wm.field().modulus()) +
                    "), transform is over GF(" +
                    std::to_string(cfg.field().modulus()) + ")");
  }
}

BlockGrid residue_spectrum(const GrayImage& img, const ZetaConfig& cfg, unsigned threads) {
  const GrayImage residue = residue_decompose(img, cfg.field()).residue;
  return transform_blocks(split_blocks(residue, cfg.blocklength()), cfg,
                          Direction::kForward, threads);
}

}  // namespace

ResidueDecomposition residue_decompose(const GrayImage& img, const PrimeField& f) {
  const Pixel p = f.modulus();
  std::vector<Pixel> residue(img.pixels().size());
  std::vector<Pixel> multiples(img.pixels().size());
  const auto src = img.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) {
    residue[i] = src[i] % p;
    multiples[i] = src[i] - residue[i];
  }
  return {GrayImage(img.width(), img.height(), p - 1, std::move(residue)),
          GrayImage(img.width(), img.height(), img.maxval(), std::move(multiples))};
}

WatermarkImage::WatermarkImage(std::size_t width, std::size_t height, const PrimeField& f,
                               std::vector<Elem> values)
    : width_(width), height_(height), field_(f), values_(std::move(values)) {
  if (values_.size() != width * height) {
    throw Error(ErrorCode::kInvalidImage, "watermark " + dims(width, height) +
                                              " given " + std::to_string(values_.size()) +
                                              " values");
  }
  const Elem p = f.modulus();
  if (std::any_of(values_.begin(), values_.end(), [p](Elem v) { return v >= p; })) {
    throw Error(ErrorCode::kWatermarkOutOfField,
                "watermark value outside [0, " + std::to_string(p - 1) + "]");
  }
}

WatermarkImage WatermarkImage::zeros(std::size_t width, std::size_t height,
                                     const PrimeField& f) {
  return WatermarkImage(width, height, f, std::vector<Elem>(width * height, 0));
}

GrayImage WatermarkImage::to_image() const {
  return GrayImage(width_, height_, field_.modulus() - 1,
                   std::vector<Pixel>(values_.begin(), values_.end()));
}

WatermarkImage prepare_watermark(const GrayImage& mark, const PrimeField& f,
                                 Extent target, const WatermarkOptions& options) {
  const Pixel p = f.modulus();
  if (!options.reduce && mark.max_pixel() >= p) {
    throw Error(ErrorCode::kWatermarkOutOfField,
                "watermark pixel " + std::to_string(mark.max_pixel()) +
                    " is not below p = " + std::to_string(p) +
                    " (enable reduction to take it mod p)");
  }
  std::vector<Elem> values(target.width * target.height, 0);
  for (std::size_t y = 0; y < target.height; ++y) {
    for (std::size_t x = 0; x < target.width; ++x) {
      Pixel v = 0;
      if (options.placement == Placement::kTile) {
        v = mark.at(x % mark.width(), y % mark.height());
      } else if (x < mark.width() && y < mark.height()) {
        v = mark.at(x, y);
      }
      values[y * target.width + x] = v % p;
    }
  }
  return WatermarkImage(target.width, target.height, f, std::move(values));
}

TamperMap::TamperMap(std::size_t block_size, std::size_t blocks_x, std::size_t blocks_y)
    : block_size_(block_size),
      blocks_x_(blocks_x),
      blocks_y_(blocks_y),
      flags_(blocks_x * blocks_y, 0) {}

bool TamperMap::any_tampered() const noexcept {
  return std::any_of(flags_.begin(), flags_.end(), [](std::uint8_t f) { return f != 0; });
}

std::size_t TamperMap::count() const noexcept {
  return static_cast<std::size_t>(std::count(flags_.begin(), flags_.end(), 1));
}

GrayImage TamperMap::to_mask(Pixel maxval) const {
  const std::size_t n = block_size_;
  GrayImage mask(blocks_x_ * n, blocks_y_ * n, maxval);
  for (std::size_t by = 0; by < blocks_y_; ++by)
    for (std::size_t bx = 0; bx < blocks_x_; ++bx)
      if (flagged(by, bx))
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t x = 0; x < n; ++x) mask.set(bx * n + x, by * n + y, maxval);
  return mask;
}

GrayImage embed(const GrayImage& img, const WatermarkImage& wm, const ZetaConfig& cfg,
                unsigned threads) {
  const std::size_t n = cfg.blocklength();
  if (img.width() % n != 0 || img.height() % n != 0) {
    throw IndivisibleDimensionsError(img.width(), img.height(), n);
  }
  require_mark_fits(img, wm, cfg);

  const PrimeField& f = cfg.field();
  const auto [residue, multiples] = residue_decompose(img, f);
  BlockGrid spectrum = transform_blocks(split_blocks(residue, n), cfg,
                                        Direction::kForward, threads);
  for (std::size_t by = 0; by < spectrum.blocks_y; ++by) {
    for (std::size_t bx = 0; bx < spectrum.blocks_x; ++bx) {
      SquareMatrix& b = spectrum.block(by, bx);
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
          b(y, x) = f.add(b(y, x), wm.at(bx * n + x, by * n + y));
    }
  }
  const GrayImage marked_residue = reassemble(
      transform_blocks(spectrum, cfg, Direction::kInverse, threads), f.modulus() - 1);

  std::vector<Pixel> out(img.pixels().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = marked_residue.pixels()[i] + multiples.pixels()[i];
  }
  const Pixel peak = out.empty() ? 0 : *std::max_element(out.begin(), out.end());
  GrayImage result(img.width(), img.height(), std::max(img.maxval(), peak), std::move(out));
  result.set_original_extent(img.original_extent());
  return result;
}

GrayImage sign(const GrayImage& img, const WatermarkImage& wm, const ZetaConfig& cfg,
               unsigned threads) {
  return embed(img, wm, cfg, threads);
}

WatermarkImage extract(const GrayImage& original, const GrayImage& marked,
                       const ZetaConfig& cfg, unsigned threads) {
  require_same_shape(original, marked);
  const BlockGrid base = residue_spectrum(original, cfg, threads);
  const BlockGrid mark = residue_spectrum(marked, cfg, threads);
  const PrimeField& f = cfg.field();
  const std::size_t n = cfg.blocklength();
  const std::size_t width = original.width();
  std::vector<Elem> values(width * original.height());
  for (std::size_t by = 0; by < base.blocks_y; ++by) {
    for (std::size_t bx = 0; bx < base.blocks_x; ++bx) {
      const SquareMatrix& b0 = base.block(by, bx);
      const SquareMatrix& b1 = mark.block(by, bx);
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
          values[(by * n + y) * width + bx * n + x] = f.sub(b1(y, x), b0(y, x));
    }
  }
  return WatermarkImage(width, original.height(), f, std::move(values));
}

TamperMap compare_blockwise(const WatermarkImage& a, const WatermarkImage& b,
                            std::size_t block_size) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw Error(ErrorCode::kShapeMismatch, "watermark shapes differ: " +
                                               dims(a.width(), a.height()) + " vs " +
                                               dims(b.width(), b.height()));
  }
  if (block_size == 0 || a.width() % block_size != 0 || a.height() % block_size != 0) {
    throw IndivisibleDimensionsError(a.width(), a.height(), block_size);
  }
  TamperMap map(block_size, a.width() / block_size, a.height() / block_size);
  for (std::size_t y = 0; y < a.height(); ++y)
    for (std::size_t x = 0; x < a.width(); ++x)
      if (a.at(x, y) != b.at(x, y)) map.flag(y / block_size, x / block_size);
  return map;
}

Authentication authenticate(const GrayImage& data, const GrayImage& signature,
                            const WatermarkImage& wm_ref, const ZetaConfig& cfg,
                            unsigned threads) {
  require_same_shape(data, signature);
  require_mark_fits(data, wm_ref, cfg);
  WatermarkImage extracted = extract(data, signature, cfg, threads);
  TamperMap tamper = compare_blockwise(extracted, wm_ref, cfg.blocklength());
  return {std::move(extracted), std::move(tamper)};
}

double psnr(const GrayImage& a, const GrayImage& b) {
  require_same_shape(a, b);
  std::uint64_t sse = 0;
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const std::int64_t d = static_cast<std::int64_t>(pa[i]) - static_cast<std::int64_t>(pb[i]);
    sse += static_cast<std::uint64_t>(d * d);
  }
  if (sse == 0) return std::numeric_limits<double>::infinity();
  const double mse = static_cast<double>(sse) / static_cast<double>(pa.size());
  return 10.0 * std::log10(kPsnrPeak * kPsnrPeak / mse);
}

}  // namespace fftwm
