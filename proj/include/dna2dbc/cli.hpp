// Copyright 2026 The DNA2DBC Authors
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

#ifndef DNA2DBC_CLI_HPP
#define DNA2DBC_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "dna2dbc/symbology.hpp"

namespace dna2dbc::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kParseFailure = 1;     // malformed input
inline constexpr int kCapacityFailure = 2;  // capacity, flags, budgets
inline constexpr int kVerifyFailure = 3;    // correction mismatch
inline constexpr int kAmbiguous = 4;        // several recoveries verify

struct EncodeOptions {
  std::string input;
  std::optional<std::string> output;  // stdout when absent
  std::optional<int> level;           // recommended level when absent
  Mode start_mode = Mode::Dna;
};

struct DecodeOptions {
  std::string input;
  std::optional<std::string> output;  // stdout when absent
  std::size_t max_erasures = 4;
};

struct Pdf417Options {
  std::optional<std::string> text;
  std::optional<std::string> byte_hex;
};

struct DamageOptions {
  std::string input;
  std::optional<std::string> output;  // damaged PBM, skipped when absent
  std::uint64_t seed = 0;
  std::size_t erase = 0;
  std::optional<int> level;  // restrict recovery to one level
};

int cmd_encode(const EncodeOptions& options, std::ostream& out,
               std::ostream& err);
int cmd_decode(const DecodeOptions& options, std::ostream& out,
               std::ostream& err);
int cmd_pdf417(const Pdf417Options& options, std::ostream& out,
               std::ostream& err);
int cmd_damage(const DamageOptions& options, std::ostream& out,
               std::ostream& err);
int cmd_selftest(std::ostream& out, std::ostream& err);

// Full argv interface; diagnostics go to err, data to out or files.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace dna2dbc::cli

#endif  // DNA2DBC_CLI_HPP
