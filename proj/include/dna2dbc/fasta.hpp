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

#ifndef DNA2DBC_FASTA_HPP
#define DNA2DBC_FASTA_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dna2dbc {

// The five-letter nucleotide alphabet (DNA plus RNA uracil).
enum class Nucleotide : std::uint8_t { A, C, G, T, U };

char to_char(Nucleotide n);

// Case-insensitive; nullopt for characters outside the alphabet.
std::optional<Nucleotide> nucleotide_from_char(char c);

struct DnaRecord {
  std::string header;  // text after '>', verbatim, without the newline
  std::vector<Nucleotide> sequence;

  bool operator==(const DnaRecord&) const = default;
};

// Parses a FASTA document. Sequence lines may use any case; blank lines are
// ignored; CRLF line endings are tolerated. Errors name the line number and
// the offending byte.
std::vector<DnaRecord> parse_fasta(std::string_view document);

// Serializes records with sequence lines wrapped at line_width characters.
std::string serialize_fasta(std::span<const DnaRecord> records,
                            std::size_t line_width = 60);

}  // namespace dna2dbc

#endif  // DNA2DBC_FASTA_HPP
