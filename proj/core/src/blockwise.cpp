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

#include <algorithm>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "fftwm/error.hpp"

namespace fftwm {

namespace detail {

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(count, begin + chunk);
      pool.emplace_back([&, begin, end] {
        try {
          for (std::size_t i = begin; i < end; ++i) body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

BlockGrid split_blocks(const GrayImage& img, std::size_t n) {
  if (n == 0 || img.width() % n != 0 || img.height() % n != 0) {
    throw IndivisibleDimensionsError(img.width(), img.height(), n);
  }
  BlockGrid grid;
  grid.block_size = n;
  grid.blocks_x = img.width() / n;
  grid.blocks_y = img.height() / n;
  grid.blocks.reserve(grid.blocks_x * grid.blocks_y);
  for (std::size_t by = 0; by < grid.blocks_y; ++by) {
    for (std::size_t bx = 0; bx < grid.blocks_x; ++bx) {
      SquareMatrix& b = grid.blocks.emplace_back(n);
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) b(y, x) = img.at(bx * n + x, by * n + y);
    }
  }
  return grid;
}

GrayImage reassemble(const BlockGrid& grid, Pixel maxval) {
  const std::size_t n = grid.block_size;
  const std::size_t width = grid.blocks_x * n;
  std::vector<Pixel> pixels(width * grid.blocks_y * n);
  for (std::size_t by = 0; by < grid.blocks_y; ++by) {
    for (std::size_t bx = 0; bx < grid.blocks_x; ++bx) {
      const SquareMatrix& b = grid.block(by, bx);
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
          pixels[(by * n + y) * width + bx * n + x] = b(y, x);
    }
  }
  return GrayImage(width, grid.blocks_y * n, maxval, std::move(pixels));
}

GrayImage pad_to_multiple(const GrayImage& img, std::size_t n) {
  if (n == 0) throw IndivisibleDimensionsError(img.width(), img.height(), n);
  const std::size_t w = (img.width() + n - 1) / n * n;
  const std::size_t h = (img.height() + n - 1) / n * n;
  if (w == img.width() && h == img.height()) return img;
  std::vector<Pixel> pixels(w * h, 0);
  for (std::size_t y = 0; y < img.height(); ++y)
    for (std::size_t x = 0; x < img.width(); ++x) pixels[y * w + x] = img.at(x, y);
  GrayImage out(w, h, img.maxval(), std::move(pixels));
  out.set_original_extent(img.original_extent().value_or(img.extent()));
  return out;
}

GrayImage crop(const GrayImage& img, std::size_t width, std::size_t height) {
  if (width > img.width() || height > img.height()) {
    throw Error(ErrorCode::kShapeMismatch,
                "crop " + std::to_string(width) + "x" + std::to_string(height) +
                    " exceeds image " + std::to_string(img.width()) + "x" +
                    std::to_string(img.height()));
  }
  std::vector<Pixel> pixels(width * height);
  for (std::size_t y = 0; y < height; ++y)
    for (std::size_t x = 0; x < width; ++x) pixels[y * width + x] = img.at(x, y);
  return GrayImage(width, height, img.maxval(), std::move(pixels));
}

BlockGrid transform_blocks(const BlockGrid& grid, const ZetaConfig& cfg,
                           Direction direction, unsigned threads) {
  BlockGrid out{grid.block_size, grid.blocks_x, grid.blocks_y,
                std::vector<SquareMatrix>(grid.blocks.size())};
  detail::parallel_for(grid.blocks.size(), threads, [&](std::size_t i) {
    out.blocks[i] = direction == Direction::kForward ? forward_2d(grid.blocks[i], cfg)
                                                     : inverse_2d(grid.blocks[i], cfg);
  });
  return out;
}

GrayImage blockwise_transform(const GrayImage& img, const ZetaConfig& cfg,
                              Direction direction, const BlockwiseOptions& options) {
  const Pixel p = cfg.field().modulus();
  if (img.max_pixel() >= p) {
    throw Error(ErrorCode::kPixelOutOfField,
                "pixel value " + std::to_string(img.max_pixel()) +
                    " is not a residue modulo " + std::to_string(p));
  }
  const std::size_t n = cfg.blocklength();
  const GrayImage source = options.zero_pad ? pad_to_multiple(img, n) : img;
  GrayImage out = reassemble(
      transform_blocks(split_blocks(source, n), cfg, direction, options.threads), p - 1);
  out.set_original_extent(source.original_extent());
  return out;
}

}  // namespace fftwm
