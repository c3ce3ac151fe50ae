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

#ifndef DNA2DBC_SYMBOLOGY_HPP
#define DNA2DBC_SYMBOLOGY_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "dna2dbc/fasta.hpp"

namespace dna2dbc {

// One 8-bit text character. Value 255 is reserved as the switch-to-DNA
// marker and never appears as a token.
struct TextChar {
  std::uint8_t value;

  bool operator==(const TextChar&) const = default;
};

using Token = std::variant<Nucleotide, TextChar>;

enum class Mode { Dna, Text };

// 3-bit codeword that switches a DNA-mode stream into text mode.
inline constexpr std::uint8_t kSwitchToText = 6;

// Text-mode byte that switches back into DNA mode.
inline constexpr std::uint8_t kSwitchToDna = 255;

// Nucleotide codewords: A=1, C=2, G=3, T=4, U=5. Values 0 and 7 are
// reserved; 6 is the mode switch.
std::uint8_t dna_codeword(Nucleotide n);
Nucleotide nucleotide_from_codeword(std::uint8_t cw);

// A record becomes '>', the header bytes, '\n', then its nucleotides.
// Header bytes equal to 255 are rejected.
std::vector<Token> tokenize(const DnaRecord& record);
std::vector<Token> tokenize(std::span<const DnaRecord> records);

// Inverse of tokenize. Space padding that encode_tokens inserted at the end
// of a text run is absorbed, so records round-trip exactly.
std::vector<DnaRecord> detokenize(std::span<const Token> tokens);

// Tokens to 3-bit codewords. Text runs are packed three bytes into eight
// codewords; runs are padded with spaces to a byte count divisible by three,
// with the padding placed before the switch-to-DNA byte when the stream
// continues with nucleotides.
std::vector<std::uint8_t> encode_tokens(std::span<const Token> tokens,
                                        Mode start = Mode::Dna);

// Inverse of encode_tokens up to the inserted space padding, which decodes
// into ordinary space tokens.
std::vector<Token> decode_tokens(std::span<const std::uint8_t> cws,
                                 Mode start = Mode::Dna);

}  // namespace dna2dbc

#endif  // DNA2DBC_SYMBOLOGY_HPP
