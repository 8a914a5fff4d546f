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

// Netpbm graymap reader/writer: P2 (ASCII) and P5 (binary, 8- or 16-bit
// big-endian samples), maxval up to 65535.
//
// A zero-padded image carries its pre-padding size in a header comment of
// the form "# fftwm-original-size W H", which read_pgm restores.

#pragma once

#include <filesystem>
#include <iosfwd>

#include "fftwm/image.hpp"

namespace fftwm {

enum class PgmEncoding { kAscii, kBinary };

// Throws Error{kParse} on malformed input.
GrayImage read_pgm(std::istream& in);
// Throws Error{kIo} when the file cannot be opened.
GrayImage read_pgm(const std::filesystem::path& path);

// Throws Error{kInvalidImage} when maxval exceeds 65535.
void write_pgm(std::ostream& out, const GrayImage& img,
               PgmEncoding encoding = PgmEncoding::kBinary);
void write_pgm(const std::filesystem::path& path, const GrayImage& img,
               PgmEncoding encoding = PgmEncoding::kBinary);

}  // namespace fftwm
