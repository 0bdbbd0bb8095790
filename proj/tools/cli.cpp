// Copyright 2026 The mafrft Authors.
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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mafrft/mafrft.h"

namespace mafrft::cli {

namespace {

using cplx = std::complex<double>;

struct BasisDeleter {
  void operator()(mafrft_basis* b) const { mafrft_basis_destroy(b); }
};
struct ResultDeleter {
  void operator()(mafrft_result* r) const { mafrft_result_destroy(r); }
};
using BasisHandle = std::unique_ptr<mafrft_basis, BasisDeleter>;
using ResultHandle = std::unique_ptr<mafrft_result, ResultDeleter>;

[[noreturn]] void throw_status(mafrft_status st, const std::string& context) {
  throw CliError(kExitParse, context + ": " + mafrft_status_string(st) + " (" +
                                 mafrft_last_error() + ")");
}

BasisHandle make_basis(std::size_t n, mafrft_variant variant,
                       const std::string& cache_path) {
  mafrft_basis* raw = nullptr;
  if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
    if (mafrft_basis_load(cache_path.c_str(), &raw) != MAFRFT_OK) {
      throw CliError(kExitParse,
                     "cannot load basis cache " + cache_path + ": " + mafrft_last_error());
    }
    BasisHandle cached(raw);
    if (mafrft_basis_size(raw) == n && mafrft_basis_variant(raw) == variant) return cached;
    raw = nullptr;
  }
  const mafrft_status st = mafrft_basis_create(static_cast<uint32_t>(n), variant, &raw);
  if (st != MAFRFT_OK) throw_status(st, "building eigenbasis");
  BasisHandle basis(raw);
  if (!cache_path.empty() && mafrft_basis_save(raw, cache_path.c_str()) != MAFRFT_OK) {
    throw CliError(kExitParse, std::string("cannot write basis cache: ") + mafrft_last_error());
  }
  return basis;
}

ResultHandle compute(const mafrft_basis* basis, std::span<const cplx> x,
                     mafrft_path path, bool pad_odd) {
  mafrft_result* raw = nullptr;
  const mafrft_status st =
      mafrft_compute(basis, reinterpret_cast<const mafrft_complex*>(x.data()), x.size(),
                     path, pad_odd ? 1 : 0, &raw);
  if (st != MAFRFT_OK) throw_status(st, "multiangle transform");
  return ResultHandle(raw);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& field, const std::filesystem::path& path,
                    std::size_t line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  // Skip trailing whitespace / CR.
  while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used]))) ++used;
  if (field.empty() || used != field.size() || !std::isfinite(v)) {
    throw CliError(kExitParse, path.string() + ":" + std::to_string(line) +
                                   ": cannot parse number '" + field + "'");
  }
  return v;
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

void write_bytes(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CliError(kExitParse, "cannot open " + path.string() + " for writing");
  f << bytes;
  if (!f) throw CliError(kExitParse, "write failed: " + path.string());
}

const std::map<std::string, mafrft_variant> kVariants{
    {"standard", MAFRFT_STANDARD}, {"centered", MAFRFT_CENTERED}};
const std::map<std::string, mafrft_path> kPaths{
    {"naive", MAFRFT_PATH_NAIVE}, {"full", MAFRFT_PATH_FULL}, {"half", MAFRFT_PATH_HALF}};
const std::map<std::string, SignalKind> kKinds{{"chirp", SignalKind::Chirp},
                                               {"tone", SignalKind::Tone},
                                               {"delta", SignalKind::Delta},
                                               {"noise", SignalKind::Noise}};

// ---- verbs ---------------------------------------------------------------

struct ComputeArgs {
  std::string in;
  std::string variant = "standard";
  std::string path = "full";
  bool pad_odd = false;
  std::string out_prefix;
  std::string basis_cache;
};

int cmd_compute(const ComputeArgs& args, std::ostream& out) {
  const std::vector<cplx> x = read_signal_csv(args.in);
  const std::size_t n = x.size();
  const mafrft_path path = kPaths.at(args.path);
  if (args.pad_odd && path != MAFRFT_PATH_HALF) {
    throw CliError(kExitFlagConflict, "--pad-odd only applies to --path half");
  }
  if (path == MAFRFT_PATH_HALF && n % 2 == 1 && !args.pad_odd) {
    throw CliError(kExitFlagConflict,
                   "--path half with odd N = " + std::to_string(n) +
                       " requires --pad-odd (the order grid must have even length)");
  }
  if (n < 4) {
    throw CliError(kExitParse, "signal length must be >= 4, got " + std::to_string(n));
  }
  const BasisHandle basis = make_basis(n, kVariants.at(args.variant), args.basis_cache);
  const ResultHandle res = compute(basis.get(), x, path, args.pad_odd);

  const std::size_t rows = mafrft_result_rows(res.get());
  const std::size_t cols = mafrft_result_cols(res.get());
  std::vector<cplx> m(rows * cols);
  mafrft_result_matrix(res.get(), reinterpret_cast<mafrft_complex*>(m.data()), m.size());
  RealTable re{rows, cols, std::vector<double>(rows * cols)};
  RealTable im{rows, cols, std::vector<double>(rows * cols)};
  for (std::size_t i = 0; i < m.size(); ++i) {
    re.values[i] = m[i].real();
    im.values[i] = m[i].imag();
  }
  RealTable orders{1, cols, std::vector<double>(cols)};
  mafrft_result_orders(res.get(), orders.values.data(), cols);

  write_table_csv(args.out_prefix + "_re.csv", re);
  write_table_csv(args.out_prefix + "_im.csv", im);
  write_table_csv(args.out_prefix + "_orders.csv", orders);
  out << "wrote " << args.out_prefix << "_{re,im,orders}.csv (" << rows << " x " << cols
      << ", " << mafrft_result_fft_count(res.get()) << " FFTs)\n";
  return kExitOk;
}

int cmd_validate(std::size_t n, const std::string& variant, std::ostream& out) {
  if (n < 4) throw CliError(kExitParse, "--n must be >= 4, got " + std::to_string(n));
  mafrft_basis* raw = nullptr;
  const mafrft_status st =
      mafrft_basis_create(static_cast<uint32_t>(n), kVariants.at(variant), &raw);
  if (st == MAFRFT_ERR_DEGENERATE_BASIS || st == MAFRFT_ERR_EIGEN_MISMATCH) {
    nlohmann::json j{{"n", n}, {"variant", variant}, {"pass", false},
                     {"error", mafrft_last_error()}};
    out << j.dump(2) << "\n";
    return kExitValidation;
  }
  if (st != MAFRFT_OK) throw_status(st, "building eigenbasis");
  const BasisHandle basis(raw);
  mafrft_validation_report rep{};
  if (mafrft_basis_validate(basis.get(), &rep) != MAFRFT_OK) {
    throw CliError(kExitParse, mafrft_last_error());
  }
  nlohmann::json j;
  j["n"] = n;
  j["variant"] = variant;
  j["orthonormality_residual"] = rep.orthonormality_residual;
  j["eigen_residual"] = rep.eigen_residual;
  j["symmetry_residual"] = rep.symmetry_residual;
  j["multiplicities"] = std::vector<uint32_t>(rep.multiplicities, rep.multiplicities + 4);
  j["expected"] = std::vector<uint32_t>(rep.expected, rep.expected + 4);
  j["orthonormality_ok"] = rep.orthonormality_ok != 0;
  j["eigen_ok"] = rep.eigen_ok != 0;
  j["symmetry_ok"] = rep.symmetry_ok != 0;
  j["multiplicities_ok"] = rep.multiplicities_ok != 0;
  j["pass"] = rep.pass != 0;
  out << j.dump(2) << "\n";
  return rep.pass ? kExitOk : kExitValidation;
}

int cmd_bench(const std::vector<std::size_t>& sizes, const std::string& variant,
              int reps, std::ostream& out, std::ostream& err) {
  if (reps < 1) throw CliError(kExitParse, "--reps must be >= 1");
  for (std::size_t n : sizes) {
    if (n < 4 || (n & (n - 1)) != 0) {
      throw CliError(kExitParse, "bench sizes must be powers of two >= 4, got " +
                                     std::to_string(n));
    }
  }
  out << "n,path,wall_ns_median,fft_count\n";
  for (std::size_t n : sizes) {
    const BasisHandle basis = make_basis(n, kVariants.at(variant), "");
    SignalSpec spec;
    spec.n = n;
    spec.f0 = -(static_cast<double>(n) - 1.0) / 2.0;
    spec.noise_std = 0.1;
    spec.seed = n;
    const std::vector<cplx> x = synthesize(spec);

    std::map<mafrft_path, double> medians;
    for (mafrft_path path : {MAFRFT_PATH_NAIVE, MAFRFT_PATH_FULL, MAFRFT_PATH_HALF}) {
      std::vector<double> times;
      std::size_t ffts = 0;
      for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        const ResultHandle res = compute(basis.get(), x, path, false);
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(
            static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
        ffts = mafrft_result_fft_count(res.get());
      }
      std::sort(times.begin(), times.end());
      const std::size_t mid = times.size() / 2;
      const double median =
          times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
      medians[path] = median;
      const char* name = path == MAFRFT_PATH_NAIVE ? "naive"
                         : path == MAFRFT_PATH_FULL ? "full"
                                                    : "half";
      out << n << "," << name << "," << static_cast<long long>(median) << "," << ffts
          << "\n";
    }
    if (n >= 1024 && medians[MAFRFT_PATH_HALF] >= medians[MAFRFT_PATH_FULL]) {
      err << "warning: half path (" << medians[MAFRFT_PATH_HALF]
          << " ns) not faster than full path (" << medians[MAFRFT_PATH_FULL]
          << " ns) at n = " << n << "\n";
    }
  }
  return kExitOk;
}

int cmd_render(const std::string& prefix, const std::string& out_path, std::ostream& out) {
  const RealTable re = read_table_csv(prefix + "_re.csv");
  const RealTable im = read_table_csv(prefix + "_im.csv");
  const std::vector<std::uint8_t> pgm = render_magnitude(re, im);
  write_bytes(out_path, std::string(pgm.begin(), pgm.end()));
  out << "wrote " << out_path << " (" << re.cols << " x " << re.rows << ")\n";
  return kExitOk;
}

}  // namespace

std::vector<cplx> synthesize(const SignalSpec& spec) {
  if (spec.n < 4) throw CliError(kExitParse, "--n must be >= 4");
  if (!(spec.amplitude >= 0.0) || !(spec.noise_std >= 0.0)) {
    throw CliError(kExitParse, "--amplitude and --noise-std must be >= 0");
  }
  const std::size_t n = spec.n;
  const double nn = static_cast<double>(n);
  std::vector<cplx> x(n);
  switch (spec.kind) {
    case SignalKind::Chirp:
    case SignalKind::Tone: {
      const double rate = spec.kind == SignalKind::Tone ? 0.0 : spec.rate;
      for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i);
        const double phase = std::numbers::pi * rate * t * t / nn +
                             2.0 * std::numbers::pi * spec.f0 * t / nn;
        x[i] = std::polar(spec.amplitude, phase);
      }
      break;
    }
    case SignalKind::Delta:
      x[0] = spec.amplitude;
      break;
    case SignalKind::Noise:
      break;
  }
  if (spec.noise_std > 0.0) {
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, spec.noise_std / std::numbers::sqrt2);
    for (cplx& v : x) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      v += cplx(re, im);
    }
  }
  return x;
}

void write_signal_csv(const std::filesystem::path& path, std::span<const cplx> x) {
  std::string text;
  for (const cplx& v : x) text += format_double(v.real()) + "," + format_double(v.imag()) + "\n";
  write_bytes(path, text);
}

std::vector<cplx> read_signal_csv(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw CliError(kExitParse, "cannot open " + path.string());
  std::vector<cplx> x;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (blank(line)) continue;
    const std::vector<std::string> fields = split_commas(line);
    if (fields.size() != 2) {
      throw CliError(kExitParse, path.string() + ":" + std::to_string(lineno) +
                                     ": expected 're,im'");
    }
    x.emplace_back(parse_double(fields[0], path, lineno),
                   parse_double(fields[1], path, lineno));
  }
  if (x.empty()) throw CliError(kExitParse, path.string() + ": no samples");
  return x;
}

void write_table_csv(const std::filesystem::path& path, const RealTable& table) {
  std::string text;
  for (std::size_t r = 0; r < table.rows; ++r) {
    for (std::size_t c = 0; c < table.cols; ++c) {
      if (c) text += ',';
      text += format_double(table.values[r * table.cols + c]);
    }
    text += '\n';
  }
  write_bytes(path, text);
}

RealTable read_table_csv(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw CliError(kExitParse, "cannot open " + path.string());
  RealTable t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (blank(line)) continue;
    const std::vector<std::string> fields = split_commas(line);
    if (t.rows == 0) t.cols = fields.size();
    if (fields.size() != t.cols) {
      throw CliError(kExitParse, path.string() + ":" + std::to_string(lineno) +
                                     ": ragged row");
    }
    for (const std::string& s : fields) t.values.push_back(parse_double(s, path, lineno));
    ++t.rows;
  }
  if (t.rows == 0) throw CliError(kExitParse, path.string() + ": empty table");
  return t;
}

std::vector<std::uint8_t> render_magnitude(const RealTable& re, const RealTable& im) {
  if (re.rows != im.rows || re.cols != im.cols) {
    throw CliError(kExitParse, "real and imaginary tables differ in shape");
  }
  std::vector<double> mag(re.values.size());
  double peak = 0.0;
  for (std::size_t i = 0; i < mag.size(); ++i) {
    mag[i] = std::hypot(re.values[i], im.values[i]);
    peak = std::max(peak, mag[i]);
  }
  if (peak == 0.0) {
    throw CliError(kExitParse, "ZeroSignal: matrix is identically zero, nothing to render");
  }
  const std::string header =
      "P5\n" + std::to_string(re.cols) + " " + std::to_string(re.rows) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (double m : mag)
    out.push_back(static_cast<std::uint8_t>(std::lround(255.0 * m / peak)));
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiangle discrete fractional Fourier transform tools", "mafrft"};
  app.require_subcommand(1);

  SignalSpec spec;
  std::string kind = "chirp";
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Synthesize a test signal as CSV");
  gen->add_option("--n", spec.n, "Signal length (>= 4)")->required();
  gen->add_option("--kind", kind, "chirp | tone | delta | noise")
      ->check(CLI::IsMember({"chirp", "tone", "delta", "noise"}));
  gen->add_option("--rate", spec.rate, "Chirp rate (frequency bins per sample)");
  gen->add_option("--f0", spec.f0, "Start frequency (cycles per frame)");
  gen->add_option("--amplitude", spec.amplitude, "Amplitude");
  gen->add_option("--noise-std", spec.noise_std, "Complex noise standard deviation");
  gen->add_option("--seed", spec.seed, "Noise seed");
  gen->add_option("--out", gen_out, "Output CSV path")->required();

  ComputeArgs cargs;
  auto* comp = app.add_subcommand("compute", "Multiangle transform of a signal CSV");
  comp->add_option("--in", cargs.in, "Input signal CSV")->required();
  comp->add_option("--variant", cargs.variant, "standard | centered")
      ->check(CLI::IsMember({"standard", "centered"}));
  comp->add_option("--path", cargs.path, "naive | full | half")
      ->check(CLI::IsMember({"naive", "full", "half"}));
  comp->add_flag("--pad-odd", cargs.pad_odd, "Zero-pad odd N to N+1 orders (half path)");
  comp->add_option("--out-prefix", cargs.out_prefix, "Output prefix")->required();
  comp->add_option("--basis-cache", cargs.basis_cache, "Eigenbasis cache file");

  std::size_t vn = 0;
  std::string vvariant = "standard";
  auto* val = app.add_subcommand("validate", "Build and check an eigenbasis (JSON)");
  val->add_option("--n", vn, "Basis size")->required();
  val->add_option("--variant", vvariant, "standard | centered")
      ->check(CLI::IsMember({"standard", "centered"}));

  std::vector<std::size_t> bn;
  std::string bvariant = "standard";
  int reps = 5;
  auto* bench = app.add_subcommand("bench", "Time the naive/full/half paths (CSV)");
  bench->add_option("--n", bn, "Sizes (powers of two)")->required()->delimiter(',');
  bench->add_option("--variant", bvariant, "standard | centered")
      ->check(CLI::IsMember({"standard", "centered"}));
  bench->add_option("--reps", reps, "Repetitions per path");

  std::string rprefix, rout;
  auto* render = app.add_subcommand("render", "Render |X| from compute output as PGM");
  render->add_option("--in-prefix", rprefix, "Prefix given to compute")->required();
  render->add_option("--out", rout, "Output PGM path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*gen) {
      spec.kind = kKinds.at(kind);
      write_signal_csv(gen_out, synthesize(spec));
      return kExitOk;
    }
    if (*comp) return cmd_compute(cargs, out);
    if (*val) return cmd_validate(vn, vvariant, out);
    if (*bench) return cmd_bench(bn, bvariant, reps, out, err);
    if (*render) return cmd_render(rprefix, rout, out);
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  }
  return kExitParse;
}

}  // namespace mafrft::cli
