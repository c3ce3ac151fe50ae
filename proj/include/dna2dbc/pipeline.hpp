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

#ifndef DNA2DBC_PIPELINE_HPP
#define DNA2DBC_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dna2dbc/ecc.hpp"
#include "dna2dbc/fasta.hpp"
#include "dna2dbc/layout.hpp"
#include "dna2dbc/symbology.hpp"

namespace dna2dbc {

// Records to a complete symbol payload.
Payload encode_records(std::span<const DnaRecord> records,
                       const EccConfig& config, Mode start = Mode::Dna);

// Payload data back to records.
std::vector<DnaRecord> payload_to_records(const Payload& payload,
                                          Mode start = Mode::Dna);

struct RecoveredSymbol {
  Recovery outcome;
  Payload payload;  // meaningful when outcome is Recovered
  int level = -1;   // level that verified, when outcome is Recovered
};

// Reconstructs a payload from raw symbol cells with known erased positions.
// The correction level is inferred: candidate levels are tried from the
// highest down, enumerating every fill of the erased cells, and the first
// level with verifying fills decides the outcome (one fill recovers, more
// are ambiguous). only_level restricts the search to a single level.
// Throws BudgetError when a level would need more than max_fills fills.
RecoveredSymbol recover_symbol(std::span<const std::uint8_t> cells,
                               std::span<const std::size_t> erased_cells,
                               std::uint64_t max_fills,
                               std::optional<int> only_level = std::nullopt);

// Convenience: default fill budget for command-line decoding (8^6 fills).
inline constexpr std::uint64_t kDefaultFillBudget = 262144;

}  // namespace dna2dbc

#endif  // DNA2DBC_PIPELINE_HPP
