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

// Tiling of images into adjacent, non-overlapping N x N blocks and per-block
// application of the 2-D transforms.
//
// Blocks are stored row-major and addressed as (by, bx); block (by, bx)
// covers pixels x in [bx*N, (bx+1)*N), y in [by*N, (by+1)*N).

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fftwm/image.hpp"
#include "fftwm/transform.hpp"

namespace fftwm {

struct BlockGrid {
  std::size_t block_size = 0;
  std::size_t blocks_x = 0;
  std::size_t blocks_y = 0;
  std::vector<SquareMatrix> blocks;

  SquareMatrix& block(std::size_t by, std::size_t bx) { return blocks[by * blocks_x + bx]; }
  const SquareMatrix& block(std::size_t by, std::size_t bx) const {
    return blocks[by * blocks_x + bx];
  }
};

enum class Direction { kForward, kInverse };

struct BlockwiseOptions {
  // Pad to the next multiple of N with zeros instead of failing; the output
  // records the original extent.
  bool zero_pad = false;
  // Worker threads; 0 picks the hardware concurrency. Output never depends
  // on this value.
  unsigned threads = 1;
};

// Throws IndivisibleDimensionsError unless n divides both dimensions.
BlockGrid split_blocks(const GrayImage& img, std::size_t n);
GrayImage reassemble(const BlockGrid& grid, Pixel maxval);

// Zero-extends to multiples of n; records the source extent on the result
// (no-op copy when already divisible).
GrayImage pad_to_multiple(const GrayImage& img, std::size_t n);
// Top-left width x height window. Throws Error{kShapeMismatch} when larger
// than the image.
GrayImage crop(const GrayImage& img, std::size_t width, std::size_t height);

// Applies forward_2d / inverse_2d to every block of the grid.
BlockGrid transform_blocks(const BlockGrid& grid, const ZetaConfig& cfg,
                           Direction direction, unsigned threads = 1);

// Blockwise 2-D transform of an image whose pixels are already residues.
// Output maxval is p - 1. Throws IndivisibleDimensionsError or
// Error{kPixelOutOfField}.
GrayImage blockwise_transform(const GrayImage& img, const ZetaConfig& cfg,
                              Direction direction,
                              const BlockwiseOptions& options = {});

namespace detail {

// Runs body(i) for i in [0, count) across `threads` workers.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace detail

}  // namespace fftwm
