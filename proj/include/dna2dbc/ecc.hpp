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

#ifndef DNA2DBC_ECC_HPP
#define DNA2DBC_ECC_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dna2dbc {

// Arithmetic ring for the correction codewords. PDF417 symbols work modulo
// 929; DNA2DBC symbols reuse the same generator coefficients reduced
// modulo 8.
enum class Ring { Mod929, Mod8 };

// Correction level s produces 2^(s+1) correction codewords. Generator
// coefficients are defined for levels 0 through 4.
class EccConfig {
 public:
  EccConfig(int level, Ring ring);

  int level() const { return level_; }
  Ring ring() const { return ring_; }
  int parity_count() const { return 1 << (level_ + 1); }
  unsigned modulus() const { return ring_ == Ring::Mod929 ? 929u : 8u; }

  // Low-order generator coefficients a[0..k-1] of the monic polynomial
  // g(x) = x^k + a[k-1]x^(k-1) + ... + a[0], as values modulo 929.
  std::span<const unsigned> coefficients() const;

 private:
  int level_;
  Ring ring_;
};

// Computes the k correction codewords of a data stream, returned in
// transmission order (the order they are appended to the data). Each data
// value must be below the ring modulus.
std::vector<unsigned> correction_codewords(std::span<const unsigned> data,
                                           const EccConfig& config);

// True when parity equals the recomputed correction codewords of data.
// parity must hold exactly parity_count() values.
bool verify(std::span<const unsigned> data, std::span<const unsigned> parity,
            const EccConfig& config);

enum class Recovery { Recovered, Ambiguous, Unrecoverable };

struct RecoveryResult {
  Recovery outcome;
  // Complete payload (data then parity) when outcome is Recovered.
  std::vector<unsigned> payload;
};

// Exhaustive erasure recovery over a payload laid out as data followed by
// parity_count() correction codewords. Erased positions are nullopt. Every
// fill of the erased positions is tried; exactly one verifying fill is a
// recovery, several are an ambiguity. Throws when modulus^erasures exceeds
// max_search.
RecoveryResult recover_erasures(
    std::span<const std::optional<unsigned>> payload, const EccConfig& config,
    std::uint64_t max_search);

// Suggested correction level for a data codeword count (minimum 2; capped
// at 5 for large payloads).
int recommended_level(std::size_t data_cws);

// Capacity ceiling on data codewords for a level (0..8). The MOD8 ring is
// additionally bounded by the 4-codeword base-8 length descriptor.
std::size_t max_data_cws(int level, Ring ring);

}  // namespace dna2dbc

#endif  // DNA2DBC_ECC_HPP
