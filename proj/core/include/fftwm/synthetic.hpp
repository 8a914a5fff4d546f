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

// Deterministic 8-bit images for experiments and tests.

#pragma once

#include <cstdint>

#include "fftwm/image.hpp"

namespace fftwm {

// Smooth portrait-like content (low-frequency shading, a few edges and mild
// texture). Same seed, same pixels.
GrayImage synthetic_portrait(std::size_t width, std::size_t height,
                             std::uint64_t seed = 1);

// Diagonal sinusoidal ripple in [0, 255].
GrayImage wavy_pattern(std::size_t width, std::size_t height);

// Independent uniform pixels in [0, maxval].
GrayImage uniform_noise(std::size_t width, std::size_t height, Pixel maxval,
                        std::uint64_t seed);

}  // namespace fftwm
