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

#include "dna2dbc/symbology.hpp"

#include <string>

#include "dna2dbc/errors.hpp"

namespace dna2dbc {

namespace {

constexpr std::uint8_t kPadByte = 0x20;  // space

// Appends the eight 3-bit codewords of a three-byte group, most significant
// bit first.
void pack_group(const std::uint8_t bytes[3], std::vector<std::uint8_t>& out) {
  std::uint32_t word = (static_cast<std::uint32_t>(bytes[0]) << 16) |
                       (static_cast<std::uint32_t>(bytes[1]) << 8) |
                       static_cast<std::uint32_t>(bytes[2]);
  for (int shift = 21; shift >= 0; shift -= 3) {
    out.push_back(static_cast<std::uint8_t>((word >> shift) & 7u));
  }
}

// Emits one text run: the run bytes, space padding to a multiple of three,
// and (when the stream continues in DNA mode) the switch byte placed after
// the padding.
void emit_text_run(std::vector<std::uint8_t> bytes, bool resume_dna,
                   std::vector<std::uint8_t>& out) {
  std::size_t len = bytes.size() + (resume_dna ? 1 : 0);
  while (len % 3 != 0) {
    bytes.push_back(kPadByte);
    ++len;
  }
  if (resume_dna) bytes.push_back(kSwitchToDna);
  for (std::size_t i = 0; i < bytes.size(); i += 3) {
    pack_group(&bytes[i], out);
  }
}

}  // namespace

std::uint8_t dna_codeword(Nucleotide n) {
  return static_cast<std::uint8_t>(n) + 1;
}

Nucleotide nucleotide_from_codeword(std::uint8_t cw) {
  if (cw < 1 || cw > 5) {
    throw DomainError("codeword " + std::to_string(cw) +
                      " is not a nucleotide");
  }
  return static_cast<Nucleotide>(cw - 1);
}

std::vector<Token> tokenize(const DnaRecord& record) {
  std::vector<Token> tokens;
  tokens.reserve(record.header.size() + record.sequence.size() + 2);
  tokens.push_back(TextChar{'>'});
  for (char c : record.header) {
    std::uint8_t b = static_cast<std::uint8_t>(c);
    if (b == kSwitchToDna) {
      throw DomainError("header byte 255 is reserved for the mode switch");
    }
    tokens.push_back(TextChar{b});
  }
  tokens.push_back(TextChar{'\n'});
  for (Nucleotide n : record.sequence) tokens.push_back(n);
  return tokens;
}

std::vector<Token> tokenize(std::span<const DnaRecord> records) {
  std::vector<Token> tokens;
  for (const DnaRecord& r : records) {
    std::vector<Token> t = tokenize(r);
    tokens.insert(tokens.end(), t.begin(), t.end());
  }
  return tokens;
}

std::vector<DnaRecord> detokenize(std::span<const Token> tokens) {
  std::vector<DnaRecord> records;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const TextChar* tc = std::get_if<TextChar>(&tokens[i]);
    if (!tc || tc->value != '>') {
      throw StreamError("record " + std::to_string(records.size() + 1) +
                        " does not begin with '>'");
    }
    ++i;
    DnaRecord record;
    for (;; ++i) {
      if (i == tokens.size()) throw StreamError("unterminated record header");
      const TextChar* c = std::get_if<TextChar>(&tokens[i]);
      if (!c) throw StreamError("nucleotide inside a record header");
      if (c->value == '\n') break;
      record.header += static_cast<char>(c->value);
    }
    ++i;
    // Space padding from the encoder lands directly after the newline.
    while (i < tokens.size()) {
      const TextChar* c = std::get_if<TextChar>(&tokens[i]);
      if (c && c->value == kPadByte) ++i;
      else break;
    }
    while (i < tokens.size()) {
      const Nucleotide* n = std::get_if<Nucleotide>(&tokens[i]);
      if (!n) break;
      record.sequence.push_back(*n);
      ++i;
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<std::uint8_t> encode_tokens(std::span<const Token> tokens,
                                        Mode start) {
  std::vector<std::uint8_t> out;
  Mode mode = start;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (const Nucleotide* n = std::get_if<Nucleotide>(&tokens[i])) {
      if (mode == Mode::Text) {
        // An empty text run whose only content is the switch byte.
        emit_text_run({}, true, out);
        mode = Mode::Dna;
        continue;
      }
      out.push_back(dna_codeword(*n));
      ++i;
      continue;
    }
    std::vector<std::uint8_t> bytes;
    while (i < tokens.size()) {
      const TextChar* c = std::get_if<TextChar>(&tokens[i]);
      if (!c) break;
      bytes.push_back(c->value);
      ++i;
    }
    if (mode == Mode::Dna) out.push_back(kSwitchToText);
    bool resume_dna = i < tokens.size();
    emit_text_run(std::move(bytes), resume_dna, out);
    mode = resume_dna ? Mode::Dna : Mode::Text;
  }
  return out;
}

std::vector<Token> decode_tokens(std::span<const std::uint8_t> cws,
                                 Mode start) {
  std::vector<Token> tokens;
  Mode mode = start;
  std::size_t i = 0;
  while (i < cws.size()) {
    if (mode == Mode::Dna) {
      std::uint8_t cw = cws[i++];
      if (cw == kSwitchToText) {
        mode = Mode::Text;
        continue;
      }
      if (cw < 1 || cw > 5) {
        throw StreamError("reserved codeword " + std::to_string(cw) +
                          " in DNA mode at position " + std::to_string(i - 1));
      }
      tokens.push_back(static_cast<Nucleotide>(cw - 1));
      continue;
    }
    if (cws.size() - i < 8) {
      throw StreamError("truncated text group: need 8 codewords, have " +
                        std::to_string(cws.size() - i));
    }
    std::uint32_t word = 0;
    for (int j = 0; j < 8; ++j) {
      std::uint8_t cw = cws[i + j];
      if (cw > 7) {
        throw StreamError("codeword " + std::to_string(cw) +
                          " out of range at position " + std::to_string(i + j));
      }
      word = (word << 3) | cw;
    }
    i += 8;
    for (int shift = 16; shift >= 0; shift -= 8) {
      std::uint8_t byte = static_cast<std::uint8_t>((word >> shift) & 0xFF);
      if (byte == kSwitchToDna) {
        mode = Mode::Dna;
        break;  // bytes after the switch within this group are padding slots
      }
      tokens.push_back(TextChar{byte});
    }
  }
  return tokens;
}

}  // namespace dna2dbc
