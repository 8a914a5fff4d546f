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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fftwm/transform.hpp"
#include "fftwm/watermark.hpp"

namespace fftwm::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;        // success, or verification CLEAN
inline constexpr int kExitTampered = 1;  // verification found tampering
inline constexpr int kExitError = 2;     // usage, precondition or I/O error

// Options shared by the transform and watermark commands.
struct CliConfig {
  std::uint32_t p = 0;
  std::string zeta;
  std::string kind = "ffct";
  std::optional<std::size_t> block;

  std::string in;
  std::string out;
  std::string watermark;
  std::string signature;
  std::string reference;
  std::string mask;

  bool pad = false;
  bool reduce = false;
  bool ascii = false;
  std::string placement = "tile";
  unsigned threads = 1;
};

// Parses p, zeta and kind and validates zeta's order against the kind (4N
// for FFCT, N otherwise) and against --block when given. Throws fftwm::Error.
ZetaConfig make_zeta_config(const CliConfig& config);

// Entry point behind main(); args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fftwm::cli
