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

#ifndef DNA2DBC_DAMAGE_HPP
#define DNA2DBC_DAMAGE_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dna2dbc/ecc.hpp"
#include "dna2dbc/fasta.hpp"
#include "dna2dbc/layout.hpp"

namespace dna2dbc {

// 64-bit linear congruential generator with Knuth's MMIX constants
// (multiplier 6364136223846793005, increment 1442695040888963407). Draws
// use the high 31 bits.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  // Uniform-ish value in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return (next() >> 33) % bound; }

 private:
  std::uint64_t state_;
};

// Rectangle of modules, absolute grid coordinates.
struct ModuleRect {
  std::size_t row;
  std::size_t col;
  std::size_t height;
  std::size_t width;
};

struct DamagedSymbol {
  ModuleGrid grid;                    // unknown modules written as 0
  std::vector<std::uint8_t> unknown;  // per-module flags, row-major
  std::vector<std::size_t> erased_cws;  // cells owning an unknown module
};

// Marks `count` seed-chosen distinct modules inside the rectangle as
// unknown. The rectangle must lie inside the data region (the frame has its
// own error path).
DamagedSymbol erase_modules(const ModuleGrid& grid, const ModuleRect& region,
                            std::uint64_t seed, std::size_t count);

// Same, drawing from an explicit module list.
DamagedSymbol erase_modules(
    const ModuleGrid& grid,
    std::span<const std::pair<std::size_t, std::size_t>> modules,
    std::uint64_t seed, std::size_t count);

struct DamageReport {
  std::size_t erased_cw_count = 0;
  Recovery outcome = Recovery::Unrecoverable;
  bool decoded_equals_original = false;
  int level = -1;         // correction level the symbol was encoded at
  std::uint64_t seed = 0;
};

// Encodes one record, erases `erase_cws` seed-chosen whole codeword cells,
// attempts recovery, and compares the decode against the input. Never
// reports Recovered with a decode that differs from the original.
DamageReport run_trial(const DnaRecord& record, const EccConfig& config,
                       std::uint64_t seed, std::size_t erase_cws);

}  // namespace dna2dbc

#endif  // DNA2DBC_DAMAGE_HPP
