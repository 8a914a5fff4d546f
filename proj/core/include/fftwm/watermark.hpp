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

// Fragile spectral watermarking over GF(p) and its signature mode.
//
// An image D splits into a residue D_R = D mod p and multiples D_M = D - D_R.
// Embedding adds the watermark W to the blockwise 2-D spectrum of D_R,
// transforms back to D'_R and returns D' = D'_R + D_M. Extraction recovers
// W as the spectral difference of the two residues, so it is exact, and any
// change to a pixel perturbs the recovered mark inside that pixel's block
// only. In signature mode the marked image S = D' is published and the
// extraction becomes an authentication of the raw data.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fftwm/blockwise.hpp"
#include "fftwm/gf.hpp"
#include "fftwm/image.hpp"
#include "fftwm/transform.hpp"

namespace fftwm {

struct ResidueDecomposition {
  GrayImage residue;    // maxval p - 1
  GrayImage multiples;  // every pixel a multiple of p
};

ResidueDecomposition residue_decompose(const GrayImage& img, const PrimeField& f);

// Spectral-domain watermark: one GF(p) value per pixel of the host.
class WatermarkImage {
 public:
  // Throws Error{kWatermarkOutOfField} if any value >= p, or
  // Error{kInvalidImage} on a size mismatch.
  WatermarkImage(std::size_t width, std::size_t height, const PrimeField& f,
                 std::vector<Elem> values);

  static WatermarkImage zeros(std::size_t width, std::size_t height,
                              const PrimeField& f);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  const PrimeField& field() const noexcept { return field_; }
  Elem at(std::size_t x, std::size_t y) const noexcept { return values_[y * width_ + x]; }
  std::span<const Elem> values() const noexcept { return values_; }

  // maxval p - 1.
  GrayImage to_image() const;

  friend bool operator==(const WatermarkImage&, const WatermarkImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  PrimeField field_;
  std::vector<Elem> values_;
};

enum class Placement {
  kTile,     // repeat the mark periodically over the whole host
  kTopLeft,  // single copy at the origin, zeros elsewhere
};

struct WatermarkOptions {
  Placement placement = Placement::kTile;
  // Reduce mark pixels mod p; when false a pixel >= p is an error.
  bool reduce = true;
};

// Fits an arbitrary grayscale mark to the host extent.
WatermarkImage prepare_watermark(const GrayImage& mark, const PrimeField& f,
                                 Extent target, const WatermarkOptions& options = {});

// Per-block tamper flags, row-major over (by, bx).
class TamperMap {
 public:
  TamperMap(std::size_t block_size, std::size_t blocks_x, std::size_t blocks_y);

  std::size_t block_size() const noexcept { return block_size_; }
  std::size_t blocks_x() const noexcept { return blocks_x_; }
  std::size_t blocks_y() const noexcept { return blocks_y_; }

  bool flagged(std::size_t by, std::size_t bx) const noexcept {
    return flags_[by * blocks_x_ + bx] != 0;
  }
  void flag(std::size_t by, std::size_t bx) noexcept { flags_[by * blocks_x_ + bx] = 1; }

  bool any_tampered() const noexcept;
  std::size_t count() const noexcept;

  // Full-resolution mask: flagged blocks at maxval, clean blocks 0.
  GrayImage to_mask(Pixel maxval = 255) const;

  friend bool operator==(const TamperMap&, const TamperMap&) = default;

 private:
  std::size_t block_size_;
  std::size_t blocks_x_;
  std::size_t blocks_y_;
  std::vector<std::uint8_t> flags_;
};

// D' = IT(T(D_R) + W) + D_M. Output maxval is max(img.maxval, max pixel).
// Throws IndivisibleDimensionsError, Error{kShapeMismatch} when the mark
// does not cover the host exactly, Error{kWatermarkOutOfField} when the mark
// lives in another field.
GrayImage embed(const GrayImage& img, const WatermarkImage& wm, const ZetaConfig& cfg,
                unsigned threads = 1);

// W = T(marked mod p) - T(original mod p).
WatermarkImage extract(const GrayImage& original, const GrayImage& marked,
                       const ZetaConfig& cfg, unsigned threads = 1);

// Signature generation: the same computation as embed; the result is meant
// to be published rather than to look like the input.
GrayImage sign(const GrayImage& img, const WatermarkImage& wm, const ZetaConfig& cfg,
               unsigned threads = 1);

struct Authentication {
  WatermarkImage extracted;
  TamperMap tamper;
};

// Extracts from (data, signature) and flags every block where the result
// differs from wm_ref.
Authentication authenticate(const GrayImage& data, const GrayImage& signature,
                            const WatermarkImage& wm_ref, const ZetaConfig& cfg,
                            unsigned threads = 1);

// Blocks (by, bx) where a and b differ in at least one value.
TamperMap compare_blockwise(const WatermarkImage& a, const WatermarkImage& b,
                            std::size_t block_size);

// 10 log10(255^2 / MSE); +infinity when the images are identical.
// Throws Error{kShapeMismatch}.
double psnr(const GrayImage& a, const GrayImage& b);

}  // namespace fftwm
