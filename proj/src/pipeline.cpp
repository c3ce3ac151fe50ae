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

#include "dna2dbc/pipeline.hpp"

#include <algorithm>
#include <string>

#include "dna2dbc/errors.hpp"

namespace dna2dbc {

namespace {

std::uint64_t checked_pow8(std::size_t exp, std::uint64_t cap) {
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (value > cap / 8) return cap + 1;
    value *= 8;
  }
  return value;
}

// Structural and parity check of one candidate fill at one level. Returns
// false without throwing when the candidate is not a valid symbol.
bool candidate_verifies(std::span<const std::uint8_t> cells, int level) {
  EccConfig config(level, Ring::Mod8);
  const std::size_t k = static_cast<std::size_t>(config.parity_count());
  unsigned v = (static_cast<unsigned>(cells[0]) << 9) |
               (static_cast<unsigned>(cells[1]) << 6) |
               (static_cast<unsigned>(cells[2]) << 3) | cells[3];
  if (v < 4 + k || v > cells.size()) return false;
  for (std::size_t i = v; i < cells.size(); ++i) {
    if (cells[i] != 0) return false;
  }
  std::vector<unsigned> stream(cells.begin(),
                               cells.begin() + static_cast<std::ptrdiff_t>(v - k));
  std::vector<unsigned> parity(cells.begin() + static_cast<std::ptrdiff_t>(v - k),
                               cells.begin() + static_cast<std::ptrdiff_t>(v));
  return verify(stream, parity, config);
}

}  // namespace

Payload encode_records(std::span<const DnaRecord> records,
                       const EccConfig& config, Mode start) {
  if (records.empty()) throw DomainError("no records to encode");
  std::vector<Token> tokens = tokenize(records);
  std::vector<std::uint8_t> cws = encode_tokens(tokens, start);
  return build_payload(cws, config);
}

std::vector<DnaRecord> payload_to_records(const Payload& payload, Mode start) {
  std::vector<Token> tokens = decode_tokens(payload.data, start);
  return detokenize(tokens);
}

RecoveredSymbol recover_symbol(std::span<const std::uint8_t> cells,
                               std::span<const std::size_t> erased_cells,
                               std::uint64_t max_fills,
                               std::optional<int> only_level) {
  if (cells.size() < 4) {
    throw ParseError("symbol too small for a length descriptor");
  }
  std::vector<std::size_t> erased(erased_cells.begin(), erased_cells.end());
  std::sort(erased.begin(), erased.end());
  erased.erase(std::unique(erased.begin(), erased.end()), erased.end());
  for (std::size_t pos : erased) {
    if (pos >= cells.size()) {
      throw DomainError("erased cell " + std::to_string(pos) +
                        " outside the " + std::to_string(cells.size()) +
                        "-cell symbol");
    }
  }

  std::uint64_t fills = checked_pow8(erased.size(), max_fills);
  if (fills > max_fills) {
    throw BudgetError("search budget exceeded: 8^" +
                      std::to_string(erased.size()) + " fills exceed " +
                      std::to_string(max_fills));
  }

  const int top = only_level ? *only_level : 4;
  const int bottom = only_level ? *only_level : 0;
  if (top < 0 || top > 4) {
    throw DomainError("correction level " + std::to_string(top) +
                      " outside 0..4");
  }

  std::vector<std::uint8_t> work(cells.begin(), cells.end());
  for (int level = top; level >= bottom; --level) {
    std::vector<std::uint8_t> fill(erased.size(), 0);
    std::vector<std::uint8_t> solution;
    int solutions = 0;
    for (std::uint64_t n = 0; n < fills && solutions < 2; ++n) {
      for (std::size_t i = 0; i < erased.size(); ++i) work[erased[i]] = fill[i];
      if (candidate_verifies(work, level)) {
        if (++solutions == 1) solution = work;
      }
      for (std::size_t i = 0; i < fill.size(); ++i) {
        if (++fill[i] < 8) break;
        fill[i] = 0;
      }
    }
    if (solutions == 1) {
      return {Recovery::Recovered, payload_from_cells(solution, level), level};
    }
    if (solutions > 1) return {Recovery::Ambiguous, {}, -1};
  }
  return {Recovery::Unrecoverable, {}, -1};
}

}  // namespace dna2dbc
