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

#include "fftwm/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fftwm/error.hpp"

namespace fftwm {

namespace {

constexpr Pixel kMaxPgmValue = 65535;
constexpr std::string_view kOriginalSizeTag = "fftwm-original-size";

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::kParse, "PGM: " + what);
}

// Header tokenizer: skips whitespace and '#' comments, remembering any
// original-size annotation it passes.
class HeaderReader {
 public:
  explicit HeaderReader(std::istream& in) : in_(in) {}

  std::uint64_t number(const char* what) {
    skip_space_and_comments();
    std::uint64_t value = 0;
    int digits = 0;
    while (std::isdigit(in_.peek())) {
      value = value * 10 + static_cast<std::uint64_t>(in_.get() - '0');
      if (++digits > 9) parse_error(std::string(what) + " is too large");
    }
    if (digits == 0) parse_error(std::string("expected ") + what);
    return value;
  }

  const std::optional<Extent>& original() const { return original_; }

 private:
  void skip_space_and_comments() {
    for (;;) {
      int c = in_.peek();
      if (c == '#') {
        std::string line;
        std::getline(in_, line);
        std::istringstream ls(line.substr(1));
        std::string tag;
        Extent e;
        if (ls >> tag && tag == kOriginalSizeTag && ls >> e.width >> e.height) {
          original_ = e;
        }
      } else if (c != EOF && std::isspace(c)) {
        in_.get();
      } else {
        return;
      }
    }
  }

  std::istream& in_;
  std::optional<Extent> original_;
};

}  // namespace

GrayImage read_pgm(std::istream& in) {
  char magic[2] = {0, 0};
  if (!in.read(magic, 2) || magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5')) {
    parse_error("missing P2/P5 magic number");
  }
  const bool binary = magic[1] == '5';
  HeaderReader header(in);
  const auto width = header.number("width");
  const auto height = header.number("height");
  const auto maxval = header.number("maxval");
  if (width == 0 || height == 0) parse_error("zero image dimension");
  if (maxval == 0 || maxval > kMaxPgmValue) parse_error("maxval must be in [1, 65535]");

  std::vector<Pixel> pixels(width * height);
  if (binary) {
    // Exactly one whitespace byte separates the header from the raster.
    if (!std::isspace(in.get())) parse_error("missing whitespace before raster");
    const bool wide = maxval > 255;
    std::vector<unsigned char> raw(pixels.size() * (wide ? 2 : 1));
    if (!in.read(reinterpret_cast<char*>(raw.data()),
                 static_cast<std::streamsize>(raw.size()))) {
      parse_error("truncated raster");
    }
    for (std::size_t i = 0; i < pixels.size(); ++i) {
      pixels[i] = wide ? (Pixel{raw[2 * i]} << 8) | raw[2 * i + 1] : raw[i];
    }
  } else {
    for (Pixel& px : pixels) {
      std::uint64_t v = 0;
      if (!(in >> v)) parse_error("truncated raster");
      if (v > maxval) parse_error("sample exceeds maxval");
      px = static_cast<Pixel>(v);
    }
  }
  for (Pixel px : pixels) {
    if (px > maxval) parse_error("sample exceeds maxval");
  }
  GrayImage img(width, height, static_cast<Pixel>(maxval), std::move(pixels));
  img.set_original_extent(header.original());
  return img;
}

GrayImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for reading");
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const GrayImage& img, PgmEncoding encoding) {
  if (img.maxval() > kMaxPgmValue) {
    throw Error(ErrorCode::kInvalidImage,
                "maxval " + std::to_string(img.maxval()) + " cannot be stored in PGM");
  }
  out << (encoding == PgmEncoding::kBinary ? "P5" : "P2") << '\n';
  if (const auto& e = img.original_extent()) {
    out << "# " << kOriginalSizeTag << ' ' << e->width << ' ' << e->height << '\n';
  }
  out << img.width() << ' ' << img.height() << '\n' << img.maxval() << '\n';

  const auto px = img.pixels();
  if (encoding == PgmEncoding::kBinary) {
    const bool wide = img.maxval() > 255;
    std::vector<unsigned char> raw;
    raw.reserve(px.size() * (wide ? 2 : 1));
    for (Pixel v : px) {
      if (wide) raw.push_back(static_cast<unsigned char>(v >> 8));
      raw.push_back(static_cast<unsigned char>(v & 0xff));
    }
    out.write(reinterpret_cast<const char*>(raw.data()),
              static_cast<std::streamsize>(raw.size()));
  } else {
    for (std::size_t y = 0; y < img.height(); ++y) {
      for (std::size_t x = 0; x < img.width(); ++x) {
        if (x != 0) out << ' ';
        out << img.at(x, y);
      }
      out << '\n';
    }
  }
}

void write_pgm(const std::filesystem::path& path, const GrayImage& img,
               PgmEncoding encoding) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  write_pgm(out, img, encoding);
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

}  // namespace fftwm
