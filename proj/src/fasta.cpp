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

#include "dna2dbc/fasta.hpp"

#include <cctype>
#include <sstream>

#include "dna2dbc/errors.hpp"

namespace dna2dbc {

namespace {

bool is_blank(std::string_view line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string printable_byte(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  if (std::isprint(u)) return std::string("'") + c + "'";
  char buf[16];
  std::snprintf(buf, sizeof buf, "byte 0x%02X", u);
  return buf;
}

}  // namespace

char to_char(Nucleotide n) {
  static constexpr char kLetters[] = {'A', 'C', 'G', 'T', 'U'};
  return kLetters[static_cast<std::size_t>(n)];
}

std::optional<Nucleotide> nucleotide_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Nucleotide::A;
    case 'C': return Nucleotide::C;
    case 'G': return Nucleotide::G;
    case 'T': return Nucleotide::T;
    case 'U': return Nucleotide::U;
    default: return std::nullopt;
  }
}

std::vector<DnaRecord> parse_fasta(std::string_view document) {
  std::vector<DnaRecord> records;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  bool in_record = false;

  while (pos <= document.size()) {
    if (pos == document.size() && line_no > 0) break;
    std::size_t eol = document.find('\n', pos);
    if (eol == std::string_view::npos) eol = document.size();
    std::string_view line = document.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.empty() || is_blank(line)) continue;

    if (line.front() == '>') {
      records.push_back(DnaRecord{std::string(line.substr(1)), {}});
      in_record = true;
      continue;
    }

    if (!in_record) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": sequence data before the first '>' header");
    }
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      std::optional<Nucleotide> n = nucleotide_from_char(c);
      if (!n) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": invalid sequence character " + printable_byte(c));
      }
      records.back().sequence.push_back(*n);
    }
  }
  return records;
}

std::string serialize_fasta(std::span<const DnaRecord> records,
                            std::size_t line_width) {
  if (line_width == 0) throw DomainError("line width must be at least 1");
  std::string out;
  for (const DnaRecord& r : records) {
    out += '>';
    out += r.header;
    out += '\n';
    for (std::size_t i = 0; i < r.sequence.size(); ++i) {
      out += to_char(r.sequence[i]);
      if ((i + 1) % line_width == 0 || i + 1 == r.sequence.size()) out += '\n';
    }
  }
  return out;
}

}  // namespace dna2dbc
