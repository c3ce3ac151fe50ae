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

#include "dna2dbc/render.hpp"

#include <cctype>

#include "dna2dbc/errors.hpp"

namespace dna2dbc {

namespace {

constexpr std::size_t kMaxDimension = 1 << 20;

class PbmScanner {
 public:
  explicit PbmScanner(std::string_view text) : text_(text) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  // Skips whitespace and comments; comments are collected.
  void skip(std::vector<std::string>* comments) {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        std::size_t eol = text_.find('\n', pos_);
        if (eol == std::string_view::npos) eol = text_.size();
        std::string_view body = text_.substr(pos_ + 1, eol - pos_ - 1);
        while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
        if (comments) comments->emplace_back(body);
        advance_to(eol);
        continue;
      }
      if (!std::isspace(static_cast<unsigned char>(c))) break;
      advance();
    }
  }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  char take() {
    char c = text_[pos_];
    advance();
    return c;
  }

  std::size_t take_number() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected a decimal dimension");
    }
    std::size_t value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::size_t>(take() - '0');
      if (value > kMaxDimension) fail("dimension too large");
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_) + ", column " +
                     std::to_string(column_) + ": " + what);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void advance_to(std::size_t target) {
    while (pos_ < target) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

std::string grid_to_pbm(const ModuleGrid& grid) {
  return write_pbm(grid, {});
}

std::string write_pbm(const ModuleGrid& grid,
                      std::span<const std::string> comments) {
  std::string out = "P1\n";
  for (const std::string& comment : comments) {
    out += "# ";
    out += comment;
    out += '\n';
  }
  out += std::to_string(grid.width);
  out += ' ';
  out += std::to_string(grid.height);
  out += '\n';
  for (std::size_t r = 0; r < grid.height; ++r) {
    for (std::size_t c = 0; c < grid.width; ++c) {
      if (c > 0) out += ' ';
      out += static_cast<char>('0' + grid.at(r, c));
    }
    out += '\n';
  }
  return out;
}

PbmFile parse_pbm(std::string_view text) {
  PbmScanner scanner(text);
  PbmFile file;

  scanner.skip(nullptr);
  if (scanner.done() || scanner.take() != 'P') {
    throw ParseError("not a portable bitmap: missing magic");
  }
  if (scanner.done()) throw ParseError("not a portable bitmap: missing magic");
  char variant = scanner.take();
  if (variant != '1') {
    throw ParseError(std::string("unsupported portable bitmap variant 'P") +
                     variant + "': only plain P1 is handled");
  }

  scanner.skip(&file.comments);
  std::size_t width = scanner.take_number();
  scanner.skip(&file.comments);
  std::size_t height = scanner.take_number();
  if (width == 0 || height == 0) {
    throw ParseError("degenerate bitmap dimensions " + std::to_string(width) +
                     "x" + std::to_string(height));
  }

  file.grid = ModuleGrid(height, width);
  std::size_t need = width * height;
  for (std::size_t i = 0; i < need; ++i) {
    scanner.skip(&file.comments);
    if (scanner.done()) {
      throw ParseError("picture ends after " + std::to_string(i) +
                       " digits, expected " + std::to_string(need));
    }
    char c = scanner.peek();
    if (c != '0' && c != '1') {
      scanner.fail(std::string("expected 0 or 1, got '") + c + "'");
    }
    scanner.take();
    file.grid.bits[i] = static_cast<std::uint8_t>(c - '0');
  }
  scanner.skip(&file.comments);
  if (!scanner.done()) {
    scanner.fail("trailing content after the picture");
  }
  return file;
}

ModuleGrid pbm_to_grid(std::string_view text) {
  return parse_pbm(text).grid;
}

std::string grid_to_ascii(const ModuleGrid& grid) {
  std::string out;
  out.reserve((grid.width + 1) * grid.height);
  for (std::size_t r = 0; r < grid.height; ++r) {
    for (std::size_t c = 0; c < grid.width; ++c) {
      out += grid.at(r, c) ? '#' : '.';
    }
    out += '\n';
  }
  return out;
}

}  // namespace dna2dbc
