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

#include "dna2dbc/ecc.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "dna2dbc/errors.hpp"

namespace dna2dbc {

namespace {

// Low-order coefficients a[0..k-1] of the monic generator polynomial for
// each correction level, modulo 929.
constexpr std::array<unsigned, 2> kCoeffLevel0{27, 917};
constexpr std::array<unsigned, 4> kCoeffLevel1{522, 568, 723, 809};
constexpr std::array<unsigned, 8> kCoeffLevel2{237, 308, 436, 284,
                                               646, 653, 428, 379};
constexpr std::array<unsigned, 16> kCoeffLevel3{
    274, 562, 232, 755, 599, 524, 801, 132,
    295, 116, 442, 428, 295, 42,  176, 65};
constexpr std::array<unsigned, 32> kCoeffLevel4{
    361, 575, 922, 525, 176, 586, 640, 321, 536, 742, 677,
    742, 687, 284, 193, 517, 273, 494, 263, 147, 593, 800,
    571, 320, 803, 133, 231, 390, 685, 330, 63,  410};

constexpr std::array<std::size_t, 9> kMaxDataCws{925, 923, 919, 911, 895,
                                                 863, 799, 671, 415};

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp,
                          std::uint64_t cap) {
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (value > cap / base) return cap + 1;
    value *= base;
  }
  return value;
}

}  // namespace

EccConfig::EccConfig(int level, Ring ring) : level_(level), ring_(ring) {
  if (level < 0 || level > 4) {
    throw DomainError("correction level " + std::to_string(level) +
                      " unsupported: generator coefficients are defined for "
                      "levels 0 through 4");
  }
}

std::span<const unsigned> EccConfig::coefficients() const {
  switch (level_) {
    case 0: return kCoeffLevel0;
    case 1: return kCoeffLevel1;
    case 2: return kCoeffLevel2;
    case 3: return kCoeffLevel3;
    default: return kCoeffLevel4;
  }
}

std::vector<unsigned> correction_codewords(std::span<const unsigned> data,
                                           const EccConfig& config) {
  const unsigned m = config.modulus();
  const int k = config.parity_count();
  std::span<const unsigned> table = config.coefficients();

  std::vector<unsigned> a(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) a[i] = table[i] % m;

  std::vector<unsigned> c(k, 0);
  for (unsigned d : data) {
    if (d >= m) {
      throw DomainError("data value " + std::to_string(d) +
                        " out of range for modulus " + std::to_string(m));
    }
    unsigned t = (d + c[k - 1]) % m;
    for (int j = k - 1; j >= 0; --j) {
      unsigned sub = (t * a[j]) % m;
      unsigned prev = j > 0 ? c[j - 1] : 0;
      c[j] = (prev + m - sub) % m;
    }
  }
  for (unsigned& x : c) {
    if (x != 0) x = m - x;
  }
  std::reverse(c.begin(), c.end());
  return c;
}

bool verify(std::span<const unsigned> data, std::span<const unsigned> parity,
            const EccConfig& config) {
  if (parity.size() != static_cast<std::size_t>(config.parity_count())) {
    throw DomainError("parity holds " + std::to_string(parity.size()) +
                      " codewords, expected " +
                      std::to_string(config.parity_count()));
  }
  std::vector<unsigned> expected = correction_codewords(data, config);
  return std::equal(expected.begin(), expected.end(), parity.begin());
}

RecoveryResult recover_erasures(
    std::span<const std::optional<unsigned>> payload, const EccConfig& config,
    std::uint64_t max_search) {
  const unsigned m = config.modulus();
  const std::size_t k = static_cast<std::size_t>(config.parity_count());
  if (payload.size() < k) {
    throw DomainError("payload holds " + std::to_string(payload.size()) +
                      " codewords, fewer than the " + std::to_string(k) +
                      " correction codewords");
  }

  std::vector<std::size_t> erased;
  std::vector<unsigned> values(payload.size(), 0);
  for (std::size_t i = 0; i < payload.size(); ++i) {
    if (payload[i]) values[i] = *payload[i];
    else erased.push_back(i);
  }

  std::uint64_t fills = checked_pow(m, erased.size(), max_search);
  if (fills > max_search) {
    throw BudgetError("search budget exceeded: " + std::to_string(m) + "^" +
                      std::to_string(erased.size()) + " fills exceed " +
                      std::to_string(max_search));
  }

  const std::size_t data_len = payload.size() - k;
  std::vector<unsigned> fill(erased.size(), 0);
  std::vector<unsigned> solution;
  int solutions = 0;
  for (std::uint64_t n = 0; n < fills; ++n) {
    for (std::size_t i = 0; i < erased.size(); ++i) values[erased[i]] = fill[i];
    std::span<const unsigned> data(values.data(), data_len);
    std::span<const unsigned> parity(values.data() + data_len, k);
    if (verify(data, parity, config)) {
      if (++solutions == 1) solution = values;
      else break;
    }
    for (std::size_t i = 0; i < fill.size(); ++i) {
      if (++fill[i] < m) break;
      fill[i] = 0;
    }
  }

  if (solutions == 0) return {Recovery::Unrecoverable, {}};
  if (solutions > 1) return {Recovery::Ambiguous, {}};
  return {Recovery::Recovered, std::move(solution)};
}

int recommended_level(std::size_t data_cws) {
  if (data_cws == 0) throw DomainError("no data codewords");
  if (data_cws <= 40) return 2;
  if (data_cws <= 160) return 3;
  if (data_cws <= 320) return 4;
  return 5;
}

std::size_t max_data_cws(int level, Ring ring) {
  if (level < 0 || level > 8) {
    throw DomainError("correction level " + std::to_string(level) +
                      " outside 0..8");
  }
  std::size_t cap = kMaxDataCws[static_cast<std::size_t>(level)];
  if (ring == Ring::Mod8) {
    std::size_t descriptor_cap =
        4095 - 4 - (static_cast<std::size_t>(1) << (level + 1));
    cap = std::min(cap, descriptor_cap);
  }
  return cap;
}

}  // namespace dna2dbc
