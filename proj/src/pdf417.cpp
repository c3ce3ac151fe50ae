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

#include "dna2dbc/pdf417.hpp"

#include <array>
#include <cstdio>
#include <string>

#include "dna2dbc/ecc.hpp"
#include "dna2dbc/errors.hpp"

namespace dna2dbc::pdf417 {

namespace {

enum SubMode { kUpper = 0, kLower = 1, kMixed = 2, kPunct = 3 };

// Non-character table entries.
enum : int {
  kSwitchLower = -1,   // persistent switch to lower
  kSwitchMixed = -2,   // persistent switch to mixed
  kSwitchUpper = -3,   // persistent switch to upper
  kSwitchPunct = -4,   // persistent switch to punctuation
  kShiftUpper = -5,    // one-character shift to upper
  kShiftPunct = -6,    // one-character shift to punctuation
  kUnassigned = -7,
};

constexpr std::array<int, 30> kUpperTable{
    'A', 'B', 'C', 'D', 'E', 'F', 'G', 'H', 'I', 'J',
    'K', 'L', 'M', 'N', 'O', 'P', 'Q', 'R', 'S', 'T',
    'U', 'V', 'W', 'X', 'Y', 'Z', ' ', kSwitchLower, kSwitchMixed,
    kShiftPunct};

constexpr std::array<int, 30> kLowerTable{
    'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i', 'j',
    'k', 'l', 'm', 'n', 'o', 'p', 'q', 'r', 's', 't',
    'u', 'v', 'w', 'x', 'y', 'z', ' ', kShiftUpper, kSwitchMixed,
    kShiftPunct};

// Value 13 and 19 both print as '/'; lookups resolve to 13.
constexpr std::array<int, 30> kMixedTable{
    '0', '1', '2',  '3', '4', '5', '6', '7', '8', '9',
    '&', '\r', '\t', '/', ':', '#', '-', '.', '$', '/',
    '+', '%', '*',  '=', '^', kSwitchPunct, ' ', kSwitchLower, kSwitchUpper,
    kShiftPunct};

// Value 21 is unassigned (illegible in the source table).
constexpr std::array<int, 30> kPunctTable{
    ';', '<', '>',  '@', '[', '\\', ']', '_', '`', '~',
    '!', '\r', '\t', '/', ':', '\n', '-', '.', '$', '/',
    '^', kUnassigned, '*', '(', ')', '?', '{', '}', '\'', kSwitchUpper};

const std::array<int, 30>& table_for(int mode) {
  switch (mode) {
    case kUpper: return kUpperTable;
    case kLower: return kLowerTable;
    case kMixed: return kMixedTable;
    default: return kPunctTable;
  }
}

// First table slot holding the character, or -1.
int value_in(int mode, char c) {
  const std::array<int, 30>& table = table_for(mode);
  for (int v = 0; v < 30; ++v) {
    if (table[v] == static_cast<unsigned char>(c)) return v;
  }
  return -1;
}

// Persistent switch value sequences between sub-modes. Each entry is read
// in the sub-mode reached by the previous hop.
const std::vector<unsigned>& switch_path(int from, int to) {
  static const std::vector<unsigned> kPaths[4][4] = {
      /* upper -> */ {{}, {27}, {28}, {28, 25}},
      /* lower -> */ {{28, 28}, {}, {28}, {28, 25}},
      /* mixed -> */ {{28}, {27}, {}, {25}},
      /* punct -> */ {{29}, {29, 27}, {29, 28}, {}},
  };
  return kPaths[from][to];
}

std::string describe_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  if (u >= 0x21 && u < 0x7F) return std::string("'") + c + "'";
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%02X", u);
  return buf;
}

}  // namespace

std::vector<unsigned> text_high_level(std::string_view text) {
  std::vector<unsigned> values;
  int mode = kUpper;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    int v = value_in(mode, c);
    if (v >= 0) {
      values.push_back(static_cast<unsigned>(v));
      continue;
    }
    bool single = i + 1 == text.size() || value_in(mode, text[i + 1]) >= 0;
    if (single) {
      if (mode == kLower) {
        int up = value_in(kUpper, c);
        if (up >= 0) {
          values.push_back(27);  // shift to upper for one character
          values.push_back(static_cast<unsigned>(up));
          continue;
        }
      }
      if (mode != kPunct) {
        int pu = value_in(kPunct, c);
        if (pu >= 0) {
          values.push_back(29);  // shift to punctuation for one character
          values.push_back(static_cast<unsigned>(pu));
          continue;
        }
      }
    }
    int target = -1;
    for (int m = 0; m < 4; ++m) {
      if (value_in(m, c) < 0) continue;
      if (target < 0 ||
          switch_path(mode, m).size() < switch_path(mode, target).size()) {
        target = m;
      }
    }
    if (target < 0) {
      throw DomainError("character " + describe_char(c) +
                        " is not representable in text compaction");
    }
    for (unsigned s : switch_path(mode, target)) values.push_back(s);
    mode = target;
    values.push_back(static_cast<unsigned>(value_in(mode, c)));
  }
  if (values.size() % 2 != 0) values.push_back(29);

  std::vector<unsigned> cws;
  cws.reserve(values.size() / 2);
  for (std::size_t i = 0; i < values.size(); i += 2) {
    cws.push_back(values[i] * 30 + values[i + 1]);
  }
  return cws;
}

std::uint64_t byte_group_value(std::span<const std::uint8_t> group) {
  if (group.size() != 6) {
    throw DomainError("byte group holds " + std::to_string(group.size()) +
                      " bytes, expected 6");
  }
  std::uint64_t value = 0;
  for (std::uint8_t b : group) value = (value << 8) | b;
  return value;
}

std::vector<unsigned> byte_high_level(std::span<const std::uint8_t> bytes) {
  std::vector<unsigned> cws;
  bool six_pack = !bytes.empty() && bytes.size() % 6 == 0;
  cws.push_back(six_pack ? kByteSwitchSixPack : kByteSwitch);
  std::size_t full = bytes.size() / 6 * 6;
  for (std::size_t i = 0; i < full; i += 6) {
    std::uint64_t value = byte_group_value(bytes.subspan(i, 6));
    std::array<unsigned, 5> digits{};
    for (int j = 4; j >= 0; --j) {
      digits[static_cast<std::size_t>(j)] = static_cast<unsigned>(value % 900);
      value /= 900;
    }
    cws.insert(cws.end(), digits.begin(), digits.end());
  }
  for (std::size_t i = full; i < bytes.size(); ++i) cws.push_back(bytes[i]);
  return cws;
}

unsigned row_indicator(unsigned row, unsigned total_rows,
                       unsigned data_columns, unsigned level, Side side) {
  if (total_rows < 3 || total_rows > 90) {
    throw DomainError("row count " + std::to_string(total_rows) +
                      " outside 3..90");
  }
  if (data_columns < 1 || data_columns > 30) {
    throw DomainError("column count " + std::to_string(data_columns) +
                      " outside 1..30");
  }
  if (row >= total_rows) {
    throw DomainError("row " + std::to_string(row) + " outside the symbol");
  }
  if (level > 8) {
    throw DomainError("correction level " + std::to_string(level) +
                      " outside 0..8");
  }
  unsigned rows_info = (total_rows - 1) / 3;
  unsigned level_info = level * 3 + (total_rows - 1) % 3;
  unsigned cols_info = data_columns - 1;
  unsigned field;
  switch (row % 3) {
    case 0: field = side == Side::Left ? rows_info : cols_info; break;
    case 1: field = side == Side::Left ? level_info : rows_info; break;
    default: field = side == Side::Left ? cols_info : level_info; break;
  }
  return (row / 3) * 30 + field;
}

Symbol assemble(std::span<const unsigned> data, unsigned data_columns,
                unsigned level) {
  if (data_columns < 1 || data_columns > 30) {
    throw DomainError("column count " + std::to_string(data_columns) +
                      " outside 1..30");
  }
  for (unsigned cw : data) {
    if (cw > kMaxCodewords) {
      throw DomainError("codeword " + std::to_string(cw) + " outside 0..928");
    }
  }
  EccConfig config(static_cast<int>(level), Ring::Mod929);
  const std::size_t k = static_cast<std::size_t>(config.parity_count());
  std::size_t base = 1 + data.size();

  std::size_t pads = 0;
  while ((base + pads + k) % data_columns != 0 ||
         (base + pads + k) / data_columns < 3) {
    ++pads;
  }
  std::size_t total = base + pads + k;
  if (total > kMaxCodewords) {
    throw CapacityError("symbol needs " + std::to_string(total) +
                        " codewords, above the 928 limit");
  }
  if (total / data_columns > 90) {
    throw CapacityError("symbol needs " + std::to_string(total / data_columns) +
                        " rows, above the 90 limit");
  }

  std::vector<unsigned> stream;
  stream.reserve(total);
  stream.push_back(static_cast<unsigned>(base + pads));  // length descriptor
  stream.insert(stream.end(), data.begin(), data.end());
  stream.insert(stream.end(), pads, kPadCodeword);
  std::vector<unsigned> parity = correction_codewords(stream, config);
  stream.insert(stream.end(), parity.begin(), parity.end());

  Symbol symbol;
  symbol.data_columns = data_columns;
  symbol.level = level;
  symbol.descriptor = static_cast<unsigned>(base + pads);
  symbol.pad_count = pads;
  for (std::size_t i = 0; i < stream.size(); i += data_columns) {
    symbol.rows.emplace_back(stream.begin() + static_cast<std::ptrdiff_t>(i),
                             stream.begin() +
                                 static_cast<std::ptrdiff_t>(i + data_columns));
  }
  return symbol;
}

}  // namespace dna2dbc::pdf417
