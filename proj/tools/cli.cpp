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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>

#include "fftwm/blockwise.hpp"
#include "fftwm/error.hpp"
#include "fftwm/gf.hpp"
#include "fftwm/pgm.hpp"
#include "fftwm/synthetic.hpp"

namespace fftwm::cli {

namespace {

constexpr Pixel k8BitMax = 255;
constexpr Pixel k16BitMax = 65535;

PgmEncoding encoding(const CliConfig& c) {
  return c.ascii ? PgmEncoding::kAscii : PgmEncoding::kBinary;
}

// Values above 255 are written as 16-bit samples; never clamped.
GrayImage for_output(GrayImage img) {
  const Pixel peak = img.max_pixel();
  if (peak > k16BitMax) {
    throw Error(ErrorCode::kInvalidImage,
                "pixel value " + std::to_string(peak) + " does not fit a 16-bit PGM");
  }
  if (peak > k8BitMax && img.maxval() != k16BitMax) img.set_maxval(k16BitMax);
  return img;
}

GrayImage load(const std::string& path, const CliConfig& c, std::size_t n) {
  GrayImage img = read_pgm(path);
  return c.pad ? pad_to_multiple(img, n) : img;
}

Placement parse_placement(const std::string& s) {
  if (s == "tile") return Placement::kTile;
  if (s == "top-left") return Placement::kTopLeft;
  throw Error(ErrorCode::kParse, "unknown placement '" + s + "' (tile or top-left)");
}

WatermarkImage load_mark(const std::string& path, const CliConfig& c,
                         const ZetaConfig& cfg, Extent extent) {
  return prepare_watermark(read_pgm(path), cfg.field(), extent,
                           {parse_placement(c.placement), c.reduce});
}

std::string default_mask_path(const std::string& out) {
  const std::string suffix = ".pgm";
  if (out.size() > suffix.size() && out.ends_with(suffix)) {
    return out.substr(0, out.size() - suffix.size()) + ".mask.pgm";
  }
  return out + ".mask.pgm";
}

void add_zeta_options(CLI::App* sub, CliConfig& c) {
  sub->add_option("--p", c.p, "Prime modulus, p = 3 (mod 4)")->required();
  sub->add_option("--zeta", c.zeta, "Transform generator, e.g. 2+2j")->required();
  sub->add_option("--kind", c.kind, "Transform kind: ffct, ffht or ffft")
      ->capture_default_str();
  sub->add_option("--block", c.block, "Blocklength N (checked against zeta)");
  sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  sub->add_flag("--pad", c.pad, "Zero-pad images to a multiple of N");
  sub->add_flag("--ascii", c.ascii, "Write P2 instead of P5");
}

int cmd_find_zeta(std::uint32_t p, std::uint64_t order, bool all_norms,
                  std::ostream& out) {
  const PrimeField f(p);
  const auto found = all_norms ? find_elements_of_order(f, order)
                               : find_unimodular_zeta(f, order);
  for (const auto& z : found) out << to_string(z) << '\n';
  return kExitOk;
}

int cmd_transform(const CliConfig& c, const std::string& direction) {
  const ZetaConfig cfg = make_zeta_config(c);
  GrayImage img = read_pgm(c.in);
  if (c.reduce) img = residue_decompose(img, cfg.field()).residue;
  Direction dir;
  if (direction == "forward") {
    dir = Direction::kForward;
  } else if (direction == "inverse") {
    dir = Direction::kInverse;
  } else {
    throw Error(ErrorCode::kParse, "direction must be forward or inverse");
  }
  write_pgm(c.out, blockwise_transform(img, cfg, dir, {c.pad, c.threads}), encoding(c));
  return kExitOk;
}

int cmd_embed(const CliConfig& c) {
  const ZetaConfig cfg = make_zeta_config(c);
  const GrayImage img = load(c.in, c, cfg.blocklength());
  const WatermarkImage wm = load_mark(c.watermark, c, cfg, img.extent());
  write_pgm(c.out, for_output(embed(img, wm, cfg, c.threads)), encoding(c));
  return kExitOk;
}

int cmd_extract(const CliConfig& c) {
  const ZetaConfig cfg = make_zeta_config(c);
  const GrayImage original = load(c.in, c, cfg.blocklength());
  const GrayImage marked = load(c.signature, c, cfg.blocklength());
  write_pgm(c.out, extract(original, marked, cfg, c.threads).to_image(), encoding(c));
  return kExitOk;
}

int cmd_verify(const CliConfig& c, std::ostream& out) {
  const ZetaConfig cfg = make_zeta_config(c);
  const GrayImage data = load(c.in, c, cfg.blocklength());
  const GrayImage signature = load(c.signature, c, cfg.blocklength());
  const WatermarkImage ref = load_mark(c.reference, c, cfg, data.extent());
  const Authentication auth = authenticate(data, signature, ref, cfg, c.threads);

  if (!c.out.empty()) {
    write_pgm(c.out, auth.extracted.to_image(), encoding(c));
    const std::string mask_path = c.mask.empty() ? default_mask_path(c.out) : c.mask;
    write_pgm(mask_path, auth.tamper.to_mask(k8BitMax), encoding(c));
  } else if (!c.mask.empty()) {
    write_pgm(c.mask, auth.tamper.to_mask(k8BitMax), encoding(c));
  }

  if (!auth.tamper.any_tampered()) {
    out << "CLEAN\n";
    return kExitOk;
  }
  out << "TAMPERED: " << auth.tamper.count() << " block(s)\n";
  return kExitTampered;
}

int cmd_psnr(const std::string& a, const std::string& b, std::ostream& out) {
  const double db = psnr(read_pgm(a), read_pgm(b));
  if (std::isinf(db)) {
    out << "inf\n";
  } else {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", db);
    out << buf << '\n';
  }
  return kExitOk;
}

struct TamperOptions {
  std::string in;
  std::string out;
  std::optional<double> bernoulli;
  std::optional<std::uint64_t> seed;
  std::vector<std::size_t> at;
  Pixel amount = 1;
  bool ascii = false;
};

int cmd_tamper(const TamperOptions& t, std::ostream& out) {
  if (t.bernoulli.has_value() == !t.at.empty()) {
    throw Error(ErrorCode::kParse, "tamper needs exactly one of --bernoulli or --at");
  }
  if (t.bernoulli && !t.seed) {
    throw Error(ErrorCode::kParse, "--bernoulli requires --seed");
  }
  GrayImage img = read_pgm(t.in);
  std::vector<std::pair<std::size_t, std::size_t>> targets;
  if (t.bernoulli) {
    if (*t.bernoulli < 0.0 || *t.bernoulli > 1.0) {
      throw Error(ErrorCode::kParse, "--bernoulli must be a probability");
    }
    std::mt19937_64 rng(*t.seed);
    std::bernoulli_distribution hit(*t.bernoulli);
    for (std::size_t y = 0; y < img.height(); ++y)
      for (std::size_t x = 0; x < img.width(); ++x)
        if (hit(rng)) targets.emplace_back(x, y);
  } else {
    if (t.at.size() != 2 || t.at[0] >= img.width() || t.at[1] >= img.height()) {
      throw Error(ErrorCode::kParse, "--at expects X,Y inside the image");
    }
    targets.emplace_back(t.at[0], t.at[1]);
  }
  for (const auto& [x, y] : targets) {
    const Pixel v = img.at(x, y) + t.amount;
    if (v > img.maxval()) img.set_maxval(std::max(v, k16BitMax));
    img.set(x, y, v);
  }
  write_pgm(t.out, img, t.ascii ? PgmEncoding::kAscii : PgmEncoding::kBinary);
  out << "tampered " << targets.size() << " pixel(s)\n";
  return kExitOk;
}

int cmd_synth(const std::string& pattern, std::size_t w, std::size_t h,
              std::uint64_t seed, const std::string& path, bool ascii) {
  GrayImage img = pattern == "portrait" ? synthetic_portrait(w, h, seed)
                  : pattern == "wavy"   ? wavy_pattern(w, h)
                  : pattern == "noise"  ? uniform_noise(w, h, k8BitMax, seed)
                                        : throw Error(ErrorCode::kParse,
                                                      "unknown pattern '" + pattern + "'");
  write_pgm(path, img, ascii ? PgmEncoding::kAscii : PgmEncoding::kBinary);
  return kExitOk;
}

}  // namespace

ZetaConfig make_zeta_config(const CliConfig& config) {
  const PrimeField f(config.p);
  const GaussianInt zeta = parse_gaussian(config.zeta, f);
  const TransformKind kind = parse_transform_kind(config.kind);
  if (config.block) return ZetaConfig(f, zeta, kind, *config.block);
  return ZetaConfig::from_zeta(f, zeta, kind);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-field transforms and fragile watermarking", "fftwm"};
  app.require_subcommand(1);

  std::uint32_t fz_p = 0;
  std::uint64_t fz_order = 0;
  bool fz_all = false;
  auto* find = app.add_subcommand("find-zeta", "List zeta of a given multiplicative order");
  find->add_option("--p", fz_p, "Prime modulus")->required();
  find->add_option("--order", fz_order, "Multiplicative order")->required();
  find->add_flag("--all-norms", fz_all, "Include non-unimodular elements");

  CliConfig c;
  std::string direction = "forward";
  auto* transform = app.add_subcommand("transform", "Blockwise 2-D transform of a PGM");
  add_zeta_options(transform, c);
  transform->add_option("--in", c.in)->required();
  transform->add_option("--out", c.out)->required();
  transform->add_option("--direction", direction, "forward or inverse")->capture_default_str();
  transform->add_flag("--reduce", c.reduce, "Reduce input pixels mod p first");

  auto add_mark_options = [&c](CLI::App* sub) {
    sub->add_flag("--reduce", c.reduce, "Reduce watermark pixels mod p");
    sub->add_option("--placement", c.placement, "tile or top-left")->capture_default_str();
  };

  auto* embed_cmd = app.add_subcommand("embed", "Embed a fragile watermark");
  auto* sign_cmd = app.add_subcommand("sign", "Generate signature data");
  for (auto* sub : {embed_cmd, sign_cmd}) {
    add_zeta_options(sub, c);
    sub->add_option("--in", c.in, "Host image")->required();
    sub->add_option("--watermark", c.watermark, "Watermark image")->required();
    sub->add_option("--out", c.out, "Marked / signature image")->required();
    add_mark_options(sub);
  }

  auto* extract_cmd = app.add_subcommand("extract", "Recover a watermark");
  add_zeta_options(extract_cmd, c);
  extract_cmd->add_option("--in", c.in, "Original image")->required();
  extract_cmd->add_option("--signature,--marked", c.signature, "Marked image")->required();
  extract_cmd->add_option("--out", c.out, "Recovered watermark")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Authenticate data against a signature");
  add_zeta_options(verify_cmd, c);
  verify_cmd->add_option("--in", c.in, "Data to authenticate")->required();
  verify_cmd->add_option("--signature", c.signature, "Signature image")->required();
  verify_cmd->add_option("--reference,--watermark", c.reference, "Watermark used to sign")
      ->required();
  verify_cmd->add_option("--out", c.out, "Where to write the extracted watermark");
  verify_cmd->add_option("--mask", c.mask, "Where to write the tamper mask");
  add_mark_options(verify_cmd);

  std::string psnr_a, psnr_b;
  auto* psnr_cmd = app.add_subcommand("psnr", "PSNR between two images (peak 255)");
  psnr_cmd->add_option("a", psnr_a)->required();
  psnr_cmd->add_option("b", psnr_b)->required();

  TamperOptions t;
  auto* tamper_cmd = app.add_subcommand("tamper", "Simulate pixel tampering");
  tamper_cmd->add_option("--in", t.in)->required();
  tamper_cmd->add_option("--out", t.out)->required();
  tamper_cmd->add_option("--bernoulli", t.bernoulli, "Per-pixel increment probability");
  tamper_cmd->add_option("--seed", t.seed, "RNG seed (required with --bernoulli)");
  tamper_cmd->add_option("--at", t.at, "Single pixel X,Y")->delimiter(',')->expected(2);
  tamper_cmd->add_option("--amount", t.amount, "Increment")->capture_default_str();
  tamper_cmd->add_flag("--ascii", t.ascii);

  std::string synth_pattern = "portrait", synth_out;
  std::size_t synth_w = 256, synth_h = 256;
  std::uint64_t synth_seed = 1;
  bool synth_ascii = false;
  auto* synth_cmd = app.add_subcommand("synth", "Write a deterministic test image");
  synth_cmd->add_option("--pattern", synth_pattern, "portrait, wavy or noise")
      ->capture_default_str();
  synth_cmd->add_option("--width", synth_w)->capture_default_str();
  synth_cmd->add_option("--height", synth_h)->capture_default_str();
  synth_cmd->add_option("--seed", synth_seed)->capture_default_str();
  synth_cmd->add_option("--out", synth_out)->required();
  synth_cmd->add_flag("--ascii", synth_ascii);

  std::vector<const char*> argv{"fftwm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*find) return cmd_find_zeta(fz_p, fz_order, fz_all, out);
    if (*transform) return cmd_transform(c, direction);
    if (*embed_cmd || *sign_cmd) return cmd_embed(c);
    if (*extract_cmd) return cmd_extract(c);
    if (*verify_cmd) return cmd_verify(c, out);
    if (*psnr_cmd) return cmd_psnr(psnr_a, psnr_b, out);
    if (*tamper_cmd) return cmd_tamper(t, out);
    if (*synth_cmd) {
      return cmd_synth(synth_pattern, synth_w, synth_h, synth_seed, synth_out, synth_ascii);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace fftwm::cli
