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

#include "fftwm/error.hpp"

#include <sstream>

namespace fftwm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kUnsupportedModulus: return "UnsupportedModulus";
    case ErrorCode::kModulusTooLarge: return "ModulusTooLarge";
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kZeroElement: return "ZeroElement";
    case ErrorCode::kNotUnimodular: return "NotUnimodular";
    case ErrorCode::kInvalidZeta: return "InvalidZeta";
    case ErrorCode::kDegenerateBlocklength: return "DegenerateBlocklength";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kKindMismatch: return "KindMismatch";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kIndivisibleDimensions: return "IndivisibleDimensions";
    case ErrorCode::kPixelOutOfField: return "PixelOutOfField";
    case ErrorCode::kWatermarkOutOfField: return "WatermarkOutOfField";
    case ErrorCode::kInvalidImage: return "InvalidImage";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

namespace {

std::string indivisible_message(std::size_t w, std::size_t h, std::size_t n) {
  std::ostringstream os;
  os << "image " << w << "x" << h << " is not divisible into " << n << "x"
     << n << " blocks";
  return os.str();
}

}  // namespace

IndivisibleDimensionsError::IndivisibleDimensionsError(std::size_t width,
                                                       std::size_t height,
                                                       std::size_t block)
    : Error(ErrorCode::kIndivisibleDimensions,
            indivisible_message(width, height, block)),
      width_(width),
      height_(height),
      block_(block) {}

}  // namespace fftwm
