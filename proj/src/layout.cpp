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

#include "dna2dbc/layout.hpp"

#include <cmath>
#include <string>

#include "dna2dbc/errors.hpp"

namespace dna2dbc {

namespace {

constexpr unsigned kDescriptorMax = 4095;

int level_for_parity_count(std::size_t k) {
  for (int level = 0; level <= 4; ++level) {
    if (static_cast<std::size_t>(1) << (level + 1) == k) return level;
  }
  throw DomainError("parity size " + std::to_string(k) +
                    " matches no correction level");
}

std::uint8_t frame_bit(std::size_t r, std::size_t c, std::size_t height) {
  if (r == 0) return c % 2 == 0 ? 1 : 0;  // dotted top
  if (r == height - 1) return 1;          // solid bottom
  if (c == 0) return 1;                   // solid left
  return r % 2 == 0 ? 1 : 0;              // dotted right
}

std::vector<unsigned> widen(std::span<const std::uint8_t> cells) {
  return {cells.begin(), cells.end()};
}

}  // namespace

Payload payload_from_cells(std::span<const std::uint8_t> cells, int level) {
  EccConfig config(level, Ring::Mod8);
  const std::size_t k = static_cast<std::size_t>(config.parity_count());
  unsigned v = decode_descriptor(cells.subspan(0, 4));
  if (v < 4 + k || v > cells.size()) {
    throw ParseError("descriptor count " + std::to_string(v) +
                     " out of range for a " + std::to_string(cells.size()) +
                     "-cell symbol at level " + std::to_string(level));
  }
  for (std::size_t i = v; i < cells.size(); ++i) {
    if (cells[i] != 0) {
      throw ParseError("trailing garbage: nonzero codeword in padding at cell " +
                       std::to_string(i));
    }
  }
  Payload payload;
  std::copy(cells.begin(), cells.begin() + 4, payload.descriptor.begin());
  payload.data.assign(cells.begin() + 4,
                      cells.begin() + static_cast<std::ptrdiff_t>(v - k));
  payload.parity.assign(cells.begin() + static_cast<std::ptrdiff_t>(v - k),
                        cells.begin() + static_cast<std::ptrdiff_t>(v));
  payload.pad_count = cells.size() - v;
  return payload;
}

unsigned Payload::descriptor_value() const {
  return decode_descriptor(descriptor);
}

int Payload::level() const { return level_for_parity_count(parity.size()); }

std::size_t Payload::total_cells() const {
  return 4 + data.size() + parity.size() + pad_count;
}

std::size_t Payload::ncol() const { return compute_ncol(total_cells()); }

std::vector<std::uint8_t> Payload::cells() const {
  std::vector<std::uint8_t> out;
  out.reserve(total_cells());
  out.insert(out.end(), descriptor.begin(), descriptor.end());
  out.insert(out.end(), data.begin(), data.end());
  out.insert(out.end(), parity.begin(), parity.end());
  out.insert(out.end(), pad_count, 0);
  return out;
}

std::size_t compute_ncol(std::size_t meaningful_cws) {
  std::size_t side = static_cast<std::size_t>(
      std::sqrt(static_cast<double>(meaningful_cws)));
  while (side * side < meaningful_cws) ++side;
  return side;
}

std::array<std::uint8_t, 4> encode_descriptor(unsigned count) {
  if (count > kDescriptorMax) {
    throw CapacityError("codeword count " + std::to_string(count) +
                        " above the descriptor ceiling " +
                        std::to_string(kDescriptorMax));
  }
  return {static_cast<std::uint8_t>((count >> 9) & 7),
          static_cast<std::uint8_t>((count >> 6) & 7),
          static_cast<std::uint8_t>((count >> 3) & 7),
          static_cast<std::uint8_t>(count & 7)};
}

unsigned decode_descriptor(std::span<const std::uint8_t> digits) {
  if (digits.size() != 4) {
    throw DomainError("descriptor holds " + std::to_string(digits.size()) +
                      " digits, expected 4");
  }
  unsigned value = 0;
  for (std::uint8_t d : digits) {
    if (d > 7) {
      throw DomainError("descriptor digit " + std::to_string(d) +
                        " outside 0..7");
    }
    value = (value << 3) | d;
  }
  return value;
}

Payload build_payload(std::span<const std::uint8_t> data,
                      const EccConfig& config) {
  if (config.ring() != Ring::Mod8) {
    throw DomainError("payload correction uses the mod-8 ring");
  }
  for (std::uint8_t cw : data) {
    if (cw > 7) {
      throw DomainError("data codeword " + std::to_string(cw) +
                        " outside 0..7");
    }
  }
  const std::size_t k = static_cast<std::size_t>(config.parity_count());
  std::size_t count = 4 + data.size() + k;
  if (count > kDescriptorMax) {
    throw CapacityError("symbol needs " + std::to_string(count) +
                        " codewords, above the descriptor ceiling " +
                        std::to_string(kDescriptorMax));
  }

  Payload payload;
  payload.descriptor = encode_descriptor(static_cast<unsigned>(count));
  payload.data.assign(data.begin(), data.end());

  std::vector<unsigned> stream;
  stream.reserve(4 + data.size());
  for (std::uint8_t d : payload.descriptor) stream.push_back(d);
  for (std::uint8_t d : data) stream.push_back(d);
  for (unsigned cw : correction_codewords(stream, config)) {
    payload.parity.push_back(static_cast<std::uint8_t>(cw));
  }

  std::size_t side = compute_ncol(count);
  payload.pad_count = side * side - count;
  return payload;
}

ModuleGrid cells_to_grid(std::span<const std::uint8_t> cells,
                         std::size_t ncol) {
  if (ncol == 0 || cells.size() != ncol * ncol) {
    throw DomainError("cell count " + std::to_string(cells.size()) +
                      " does not fill a " + std::to_string(ncol) + "x" +
                      std::to_string(ncol) + " square");
  }
  ModuleGrid grid(ncol + 2, 3 * ncol + 2);
  for (std::size_t c = 0; c < grid.width; ++c) {
    grid.set(0, c, frame_bit(0, c, grid.height));
    grid.set(grid.height - 1, c, 1);
  }
  for (std::size_t r = 1; r + 1 < grid.height; ++r) {
    grid.set(r, 0, 1);
    grid.set(r, grid.width - 1, frame_bit(r, grid.width - 1, grid.height));
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] > 7) {
      throw DomainError("cell value " + std::to_string(cells[i]) +
                        " outside 0..7");
    }
    std::size_t r = 1 + i / ncol;
    std::size_t c = 1 + (i % ncol) * 3;
    grid.set(r, c, (cells[i] >> 2) & 1);
    grid.set(r, c + 1, (cells[i] >> 1) & 1);
    grid.set(r, c + 2, cells[i] & 1);
  }
  return grid;
}

ModuleGrid to_grid(const Payload& payload) {
  return cells_to_grid(payload.cells(), payload.ncol());
}

std::vector<std::uint8_t> grid_to_cells(const ModuleGrid& grid) {
  if (grid.height < 3 || grid.width != 3 * (grid.height - 2) + 2) {
    throw ParseError("not a DNA2DBC module grid: " +
                     std::to_string(grid.height) + "x" +
                     std::to_string(grid.width));
  }
  const std::size_t ncol = grid.height - 2;
  for (std::size_t c = 0; c < grid.width; ++c) {
    if (grid.at(0, c) != frame_bit(0, c, grid.height)) {
      throw FrameError("positioning pattern violation at row 0, column " +
                           std::to_string(c),
                       0, c);
    }
    if (grid.at(grid.height - 1, c) != 1) {
      throw FrameError("positioning pattern violation at row " +
                           std::to_string(grid.height - 1) + ", column " +
                           std::to_string(c),
                       grid.height - 1, c);
    }
  }
  for (std::size_t r = 1; r + 1 < grid.height; ++r) {
    if (grid.at(r, 0) != 1) {
      throw FrameError("positioning pattern violation at row " +
                           std::to_string(r) + ", column 0",
                       r, 0);
    }
    std::uint8_t want = frame_bit(r, grid.width - 1, grid.height);
    if (grid.at(r, grid.width - 1) != want) {
      throw FrameError("positioning pattern violation at row " +
                           std::to_string(r) + ", column " +
                           std::to_string(grid.width - 1),
                       r, grid.width - 1);
    }
  }

  std::vector<std::uint8_t> cells(ncol * ncol);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::size_t r = 1 + i / ncol;
    std::size_t c = 1 + (i % ncol) * 3;
    cells[i] = static_cast<std::uint8_t>((grid.at(r, c) << 2) |
                                         (grid.at(r, c + 1) << 1) |
                                         grid.at(r, c + 2));
  }
  return cells;
}

Payload from_grid(const ModuleGrid& grid, std::optional<int> level_hint) {
  std::vector<std::uint8_t> cells = grid_to_cells(grid);
  if (cells.size() < 4) {
    throw ParseError("symbol too small for a length descriptor");
  }
  if (level_hint) return payload_from_cells(cells, *level_hint);

  for (int level = 4; level >= 0; --level) {
    Payload payload;
    try {
      payload = payload_from_cells(cells, level);
    } catch (const ParseError&) {
      continue;
    }
    EccConfig config(level, Ring::Mod8);
    std::vector<unsigned> stream = widen(cells);
    stream.resize(4 + payload.data.size());
    std::vector<unsigned> parity = widen(payload.parity);
    if (verify(stream, parity, config)) return payload;
  }
  throw VerifyError("correction codewords do not verify at any level");
}

}  // namespace dna2dbc
