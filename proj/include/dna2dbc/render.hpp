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

#ifndef DNA2DBC_RENDER_HPP
#define DNA2DBC_RENDER_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dna2dbc/layout.hpp"

namespace dna2dbc {

// Plain (P1) portable bitmap: "P1\n<width> <height>\n" then one line of
// space-separated digits per row.
std::string grid_to_pbm(const ModuleGrid& grid);

// Parses a plain portable bitmap. '#' comments are tolerated; digits may be
// packed or separated; errors name the line and column.
ModuleGrid pbm_to_grid(std::string_view text);

// '#' for set modules, '.' for clear ones.
std::string grid_to_ascii(const ModuleGrid& grid);

struct PbmFile {
  ModuleGrid grid;
  std::vector<std::string> comments;  // '#' lines, marker and padding stripped
};

// Comment-preserving variants used to carry sidecar metadata such as
// erasure masks.
PbmFile parse_pbm(std::string_view text);
std::string write_pbm(const ModuleGrid& grid,
                      std::span<const std::string> comments);

}  // namespace dna2dbc

#endif  // DNA2DBC_RENDER_HPP
