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

#include <stdexcept>
#include <string>
#include <string_view>

namespace fftwm {

enum class ErrorCode {
  kNotPrime,
  kUnsupportedModulus,  // p == 2 or p == 1 (mod 4)
  kModulusTooLarge,
  kZeroInverse,
  kFieldMismatch,
  kZeroElement,
  kNotUnimodular,
  kInvalidZeta,
  kDegenerateBlocklength,
  kLengthMismatch,
  kKindMismatch,
  kShapeMismatch,
  kSingularMatrix,
  kIndivisibleDimensions,
  kPixelOutOfField,
  kWatermarkOutOfField,
  kInvalidImage,
  kParse,
  kIo,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above, so
// callers (the CLI in particular) can map failures without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by split_blocks and friends; keeps the offending geometry around.
class IndivisibleDimensionsError : public Error {
 public:
  IndivisibleDimensionsError(std::size_t width, std::size_t height,
                             std::size_t block);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t block() const noexcept { return block_; }

 private:
  std::size_t width_;
  std::size_t height_;
  std::size_t block_;
};

}  // namespace fftwm
