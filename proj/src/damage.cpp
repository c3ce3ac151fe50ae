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

#include "dna2dbc/damage.hpp"

#include <algorithm>
#include <string>

#include "dna2dbc/errors.hpp"
#include "dna2dbc/pipeline.hpp"

namespace dna2dbc {

namespace {

// Fill budget for trials: erasing up to eight codeword cells stays
// enumerable.
constexpr std::uint64_t kTrialFillBudget = 1ULL << 24;

void require_interior(const ModuleGrid& grid, std::size_t r, std::size_t c) {
  if (r == 0 || r + 1 >= grid.height || c == 0 || c + 1 >= grid.width) {
    throw DomainError("module (" + std::to_string(r) + ", " +
                      std::to_string(c) +
                      ") lies on the positioning frame, not the data region");
  }
}

DamagedSymbol erase_chosen(
    const ModuleGrid& grid,
    const std::vector<std::pair<std::size_t, std::size_t>>& chosen) {
  DamagedSymbol damaged{grid, std::vector<std::uint8_t>(grid.bits.size(), 0), {}};
  const std::size_t ncol = grid.height - 2;
  for (auto [r, c] : chosen) {
    damaged.grid.set(r, c, 0);
    damaged.unknown[r * grid.width + c] = 1;
    damaged.erased_cws.push_back((r - 1) * ncol + (c - 1) / 3);
  }
  std::sort(damaged.erased_cws.begin(), damaged.erased_cws.end());
  damaged.erased_cws.erase(
      std::unique(damaged.erased_cws.begin(), damaged.erased_cws.end()),
      damaged.erased_cws.end());
  return damaged;
}

std::vector<std::pair<std::size_t, std::size_t>> sample(
    std::vector<std::pair<std::size_t, std::size_t>> pool, std::uint64_t seed,
    std::size_t count) {
  if (count > pool.size()) {
    throw DomainError("cannot erase " + std::to_string(count) + " of " +
                      std::to_string(pool.size()) + " modules");
  }
  Lcg rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace

DamagedSymbol erase_modules(const ModuleGrid& grid, const ModuleRect& region,
                            std::uint64_t seed, std::size_t count) {
  if (region.height == 0 || region.width == 0) {
    throw DomainError("empty damage region");
  }
  require_interior(grid, region.row, region.col);
  require_interior(grid, region.row + region.height - 1,
                   region.col + region.width - 1);
  std::vector<std::pair<std::size_t, std::size_t>> pool;
  pool.reserve(region.height * region.width);
  for (std::size_t r = region.row; r < region.row + region.height; ++r) {
    for (std::size_t c = region.col; c < region.col + region.width; ++c) {
      pool.emplace_back(r, c);
    }
  }
  return erase_chosen(grid, sample(std::move(pool), seed, count));
}

DamagedSymbol erase_modules(
    const ModuleGrid& grid,
    std::span<const std::pair<std::size_t, std::size_t>> modules,
    std::uint64_t seed, std::size_t count) {
  for (auto [r, c] : modules) require_interior(grid, r, c);
  std::vector<std::pair<std::size_t, std::size_t>> pool(modules.begin(),
                                                        modules.end());
  return erase_chosen(grid, sample(std::move(pool), seed, count));
}

DamageReport run_trial(const DnaRecord& record, const EccConfig& config,
                       std::uint64_t seed, std::size_t erase_cws) {
  const DnaRecord originals[] = {record};
  Payload payload = encode_records(originals, config);
  ModuleGrid grid = to_grid(payload);
  const std::size_t ncol = payload.ncol();

  // Choose whole codeword cells, then erase all three of their modules.
  std::vector<std::pair<std::size_t, std::size_t>> modules;
  if (erase_cws > 0) {
    std::vector<std::size_t> cell_pool(ncol * ncol);
    for (std::size_t i = 0; i < cell_pool.size(); ++i) cell_pool[i] = i;
    if (erase_cws > cell_pool.size()) {
      throw DomainError("cannot erase " + std::to_string(erase_cws) + " of " +
                        std::to_string(cell_pool.size()) + " codeword cells");
    }
    Lcg rng(seed);
    for (std::size_t i = 0; i < erase_cws; ++i) {
      std::size_t j =
          i + static_cast<std::size_t>(rng.below(cell_pool.size() - i));
      std::swap(cell_pool[i], cell_pool[j]);
    }
    for (std::size_t i = 0; i < erase_cws; ++i) {
      std::size_t r = 1 + cell_pool[i] / ncol;
      std::size_t c = 1 + (cell_pool[i] % ncol) * 3;
      modules.emplace_back(r, c);
      modules.emplace_back(r, c + 1);
      modules.emplace_back(r, c + 2);
    }
  }
  DamagedSymbol damaged = erase_modules(grid, modules, seed, modules.size());

  DamageReport report;
  report.erased_cw_count = damaged.erased_cws.size();
  report.level = config.level();
  report.seed = seed;

  std::vector<std::uint8_t> cells = grid_to_cells(damaged.grid);
  RecoveredSymbol result =
      recover_symbol(cells, damaged.erased_cws, kTrialFillBudget);
  report.outcome = result.outcome;
  if (result.outcome == Recovery::Recovered) {
    // A spurious fill can verify at the wrong level yet decode to no valid
    // record stream; that is a miss, not a trial failure.
    try {
      std::vector<DnaRecord> decoded = payload_to_records(result.payload);
      report.decoded_equals_original =
          decoded.size() == 1 && decoded[0] == record;
    } catch (const Error&) {
      report.decoded_equals_original = false;
    }
  }
  return report;
}

}  // namespace dna2dbc
