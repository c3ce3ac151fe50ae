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

#ifndef DNA2DBC_LAYOUT_HPP
#define DNA2DBC_LAYOUT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dna2dbc/ecc.hpp"

namespace dna2dbc {

// Binary module raster, row-major.
struct ModuleGrid {
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<std::uint8_t> bits;  // 0 or 1, height * width entries

  ModuleGrid() = default;
  ModuleGrid(std::size_t h, std::size_t w) : height(h), width(w), bits(h * w) {}

  std::uint8_t at(std::size_t r, std::size_t c) const {
    return bits[r * width + c];
  }
  void set(std::size_t r, std::size_t c, std::uint8_t v) {
    bits[r * width + c] = v;
  }

  bool operator==(const ModuleGrid&) const = default;
};

// One symbol's codeword content. Wire order is descriptor, data, parity,
// then zero pads to a full ncol x ncol cell square.
struct Payload {
  std::array<std::uint8_t, 4> descriptor{};  // base-8 digits, most significant first
  std::vector<std::uint8_t> data;
  std::vector<std::uint8_t> parity;
  std::size_t pad_count = 0;

  unsigned descriptor_value() const;
  int level() const;                    // derived from the parity size
  std::size_t total_cells() const;      // including pads
  std::size_t ncol() const;
  std::vector<std::uint8_t> cells() const;

  bool operator==(const Payload&) const = default;
};

// Smallest square side that fits the meaningful codewords.
std::size_t compute_ncol(std::size_t meaningful_cws);

// 4-digit base-8 descriptor of a codeword count, most significant first.
// The count covers descriptor, data and parity but not pads; 4095 is the
// ceiling.
std::array<std::uint8_t, 4> encode_descriptor(unsigned count);
unsigned decode_descriptor(std::span<const std::uint8_t> digits);

// Computes parity over descriptor digits followed by data, then pads the
// square. The configuration ring must be Mod8.
Payload build_payload(std::span<const std::uint8_t> data,
                      const EccConfig& config);

// Projects cells into a framed module grid: height ncol+2, width 3*ncol+2.
// Top border is dotted (1 on even columns), bottom and left are solid, the
// right border is dotted (1 on even rows); corners follow the top and
// bottom rules. Interior cells run row-major, three bits each, most
// significant first.
ModuleGrid cells_to_grid(std::span<const std::uint8_t> cells,
                         std::size_t ncol);
ModuleGrid to_grid(const Payload& payload);

// Validates the frame (FrameError names the module) and grid shape, then
// returns the interior cells in wire order.
std::vector<std::uint8_t> grid_to_cells(const ModuleGrid& grid);

// Splits raw cells into a payload at a known level, checking descriptor
// bounds and zero padding but not parity.
Payload payload_from_cells(std::span<const std::uint8_t> cells, int level);

// Parses a grid back into a payload. With a level hint the descriptor and
// padding are checked structurally and the split is exact; without one the
// highest level whose structure and parity both verify is chosen.
Payload from_grid(const ModuleGrid& grid,
                  std::optional<int> level_hint = std::nullopt);

}  // namespace dna2dbc

#endif  // DNA2DBC_LAYOUT_HPP
