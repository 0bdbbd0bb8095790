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

#ifndef MAFRFT_TOOLS_CLI_HPP_
#define MAFRFT_TOOLS_CLI_HPP_

#include <complex>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mafrft::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitParse = 2,
  kExitFlagConflict = 3,
};

/// Raised by the command handlers; carries the process exit code.
class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

enum class SignalKind { Chirp, Tone, Delta, Noise };

struct SignalSpec {
  std::size_t n = 8;
  SignalKind kind = SignalKind::Chirp;
  double rate = 1.0;       // chirp: x[n] = A exp(j (pi rate n^2 / N + 2 pi f0 n / N))
  double f0 = 0.0;         // start frequency, cycles per frame
  double amplitude = 1.0;
  double noise_std = 0.0;  // complex Gaussian, E|noise|^2 = noise_std^2
  std::uint64_t seed = 0;
};

std::vector<std::complex<double>> synthesize(const SignalSpec& spec);

/// One "re,im" line per sample, 17 significant digits.
void write_signal_csv(const std::filesystem::path& path,
                      std::span<const std::complex<double>> x);
std::vector<std::complex<double>> read_signal_csv(const std::filesystem::path& path);

struct RealTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major
};

void write_table_csv(const std::filesystem::path& path, const RealTable& table);
RealTable read_table_csv(const std::filesystem::path& path);

/// Binary P5 PGM of |X| / max|X| scaled to 0..255, width = cols, height = rows.
std::vector<std::uint8_t> render_magnitude(const RealTable& re, const RealTable& im);

/// Dispatches the gen / compute / validate / bench / render verbs.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mafrft::cli

#endif  // MAFRFT_TOOLS_CLI_HPP_
