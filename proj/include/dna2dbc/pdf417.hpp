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

#ifndef DNA2DBC_PDF417_HPP
#define DNA2DBC_PDF417_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace dna2dbc::pdf417 {

inline constexpr unsigned kPadCodeword = 900;
inline constexpr unsigned kByteSwitch = 901;
inline constexpr unsigned kByteSwitchSixPack = 924;
inline constexpr unsigned kMaxCodewords = 928;

// Text compaction: four sub-modes (upper, lower, mixed, punctuation) of 30
// values each; characters pair into codewords C1*30 + C2 with a trailing
// value-29 pad when the count is odd. Throws for characters the tables
// cannot represent.
std::vector<unsigned> text_high_level(std::string_view text);

// Byte compaction: a leading 924 switch when the length is a positive
// multiple of six, 901 otherwise; each six-byte group becomes five base-900
// digits of its 48-bit value; remainder bytes follow verbatim.
std::vector<unsigned> byte_high_level(std::span<const std::uint8_t> bytes);

// 48-bit value of one six-byte group, most significant byte first.
std::uint64_t byte_group_value(std::span<const std::uint8_t> group);

enum class Side { Left, Right };

// Row indicator codeword. Rows cycle through three cluster tables that
// rotate the row-count, level and column-count fields between sides.
unsigned row_indicator(unsigned row, unsigned total_rows,
                       unsigned data_columns, unsigned level, Side side);

struct Symbol {
  std::vector<std::vector<unsigned>> rows;  // data region, row indicators excluded
  unsigned data_columns;
  unsigned level;
  unsigned descriptor;  // first codeword: count of itself, data and pads
  std::size_t pad_count;
};

// Lays out data codewords in a symbol: length descriptor, data, 900-pads to
// fill whole rows (at least three), then correction codewords.
Symbol assemble(std::span<const unsigned> data, unsigned data_columns,
                unsigned level);

}  // namespace dna2dbc::pdf417

#endif  // DNA2DBC_PDF417_HPP
