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

// Reconciles our PDF417 encoder against the published "Super!" worked
// example: a two-column symbol whose printed grid ends with the correction
// values 364, 620, 420, 729, captioned as security level 1. This searches
// pad counts 0 through 5 at levels 0 through 4 and reports where, if
// anywhere, those values appear. Its findings are committed in
// docs/pdf417_reference_check.md.

#include <cstdio>
#include <vector>

#include "dna2dbc/ecc.hpp"

namespace {

// High-level codewords of "Super!" in byte compaction.
const std::vector<unsigned> kSuperCws{924, 139, 776, 318, 439, 485};

const std::vector<unsigned> kExpectedTail{364, 620, 420, 729};

std::vector<unsigned> parity_with_pads(std::size_t pads, int level) {
  std::vector<unsigned> stream;
  stream.push_back(static_cast<unsigned>(1 + kSuperCws.size() + pads));
  stream.insert(stream.end(), kSuperCws.begin(), kSuperCws.end());
  stream.insert(stream.end(), pads, 900);
  return dna2dbc::correction_codewords(
      stream, dna2dbc::EccConfig(level, dna2dbc::Ring::Mod929));
}

bool ends_with_expected(const std::vector<unsigned>& parity) {
  if (parity.size() < kExpectedTail.size()) return false;
  for (std::size_t i = 0; i < kExpectedTail.size(); ++i) {
    if (parity[parity.size() - kExpectedTail.size() + i] !=
        kExpectedTail[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::printf("reference check: \"Super!\" two-column symbol, expected "
              "correction tail 364 620 420 729\n\n");
  bool found = false;
  for (int level = 0; level <= 4; ++level) {
    for (std::size_t pads = 0; pads <= 5; ++pads) {
      std::vector<unsigned> parity = parity_with_pads(pads, level);
      std::printf("level %d, %zu pad(s), descriptor %zu: parity", level, pads,
                  1 + kSuperCws.size() + pads);
      for (unsigned cw : parity) std::printf(" %u", cw);
      if (ends_with_expected(parity)) {
        std::printf("   <-- tail matches");
        found = true;
      }
      std::printf("\n");
    }
  }
  std::printf("\n%s\n",
              found ? "the expected tail is reproduced (see rows above)"
                    : "the expected tail is not reproduced anywhere");
  return found ? 0 : 1;
}
