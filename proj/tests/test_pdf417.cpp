#include <array>
#include <random>

#include "doctest.h"
#include "dna2dbc/errors.hpp"
#include "dna2dbc/pdf417.hpp"

using namespace dna2dbc;
using namespace dna2dbc::pdf417;

namespace {

std::vector<std::uint8_t> bytes_of(std::string_view s) {
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("text compaction reference vectors") {
  CHECK(text_high_level("") == std::vector<unsigned>{});
  CHECK(text_high_level("AB") == std::vector<unsigned>{1});
  CHECK(text_high_level("A") == std::vector<unsigned>{29});
  CHECK(text_high_level("Super !") ==
        std::vector<unsigned>{567, 615, 137, 809, 329});
}

TEST_CASE("single out-of-mode characters use one-character shifts") {
  // Trailing '!' from lower sub-mode: shift to punctuation, not a switch.
  CHECK(text_high_level("a!") == std::vector<unsigned>{810, 880});
  // 'A' sandwiched between lowers: shift to upper.
  CHECK(text_high_level("aAa") == std::vector<unsigned>{810, 810, 29});
  // ';' sandwiched between digits: shift to punctuation from mixed.
  CHECK(text_high_level("1;1") == std::vector<unsigned>{841, 870, 59});
  // A digit has no one-character shift; the switch to mixed persists.
  CHECK(text_high_level("A1B") == std::vector<unsigned>{28, 58, 59});
}

TEST_CASE("runs of out-of-mode characters use persistent switches") {
  CHECK(text_high_level("aBC") == std::vector<unsigned>{810, 868, 32});
  CHECK(text_high_level("A!!") == std::vector<unsigned>{28, 760, 329});
  CHECK(text_high_level("1;;") == std::vector<unsigned>{841, 750, 29});
  // Exits from punctuation sub-mode toward each destination.
  CHECK(text_high_level("A!!B") == std::vector<unsigned>{28, 760, 329, 59});
  CHECK(text_high_level("A!!a") == std::vector<unsigned>{28, 760, 329, 810});
  CHECK(text_high_level("A!!1") == std::vector<unsigned>{28, 760, 329, 841});
  CHECK(text_high_level("1a") == std::vector<unsigned>{841, 810});
}

TEST_CASE("unrepresentable characters are rejected") {
  CHECK_THROWS_AS(text_high_level("\x01"), DomainError);
  CHECK_THROWS_AS(text_high_level("caf\xC3\xA9"), DomainError);
}

TEST_CASE("six-byte groups become five base-900 digits") {
  std::vector<std::uint8_t> super = bytes_of("Super!");
  CHECK(byte_group_value(super) == 91763861975585ull);
  CHECK(byte_high_level(super) ==
        std::vector<unsigned>{924, 139, 776, 318, 439, 485});
  CHECK_THROWS_AS(byte_group_value(bytes_of("Super")), DomainError);
}

TEST_CASE("byte streams off the six-byte grid switch with 901") {
  CHECK(byte_high_level(bytes_of("Super!!")) ==
        std::vector<unsigned>{901, 139, 776, 318, 439, 485, 33});
  CHECK(byte_high_level({}) == std::vector<unsigned>{901});
  CHECK(byte_high_level(bytes_of("ab")) ==
        std::vector<unsigned>{901, 'a', 'b'});
}

TEST_CASE("base-900 digits invert back to the group value") {
  std::mt19937 rng(417417);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<std::uint8_t, 6> group;
    for (std::uint8_t& b : group) b = static_cast<std::uint8_t>(byte(rng));
    std::vector<unsigned> cws = byte_high_level(group);
    REQUIRE(cws.size() == 6);
    CHECK(cws[0] == kByteSwitchSixPack);
    std::uint64_t value = 0;
    for (std::size_t i = 1; i < 6; ++i) value = value * 900 + cws[i];
    CHECK(value == byte_group_value(group));
  }
}

TEST_CASE("row indicators rotate three cluster layouts") {
  // 30 rows, 4 data columns, level 3.
  CHECK(row_indicator(0, 30, 4, 3, Side::Left) == 9);
  CHECK(row_indicator(0, 30, 4, 3, Side::Right) == 3);
  CHECK(row_indicator(1, 30, 4, 3, Side::Left) == 3 * 3 + 29 % 3);
  CHECK(row_indicator(1, 30, 4, 3, Side::Right) == 9);
  CHECK(row_indicator(2, 30, 4, 3, Side::Left) == 3);
  CHECK(row_indicator(2, 30, 4, 3, Side::Right) == 3 * 3 + 29 % 3);
  // The row number scales the codeword in steps of 30 every third row.
  CHECK(row_indicator(3, 30, 4, 3, Side::Left) == 30 + 9);
  CHECK(row_indicator(29, 30, 4, 3, Side::Right) == 9 * 30 + 11);
}

TEST_CASE("row indicator inputs are validated") {
  CHECK_THROWS_AS(row_indicator(0, 2, 4, 3, Side::Left), DomainError);
  CHECK_THROWS_AS(row_indicator(0, 91, 4, 3, Side::Left), DomainError);
  CHECK_THROWS_AS(row_indicator(0, 30, 0, 3, Side::Left), DomainError);
  CHECK_THROWS_AS(row_indicator(0, 30, 31, 3, Side::Left), DomainError);
  CHECK_THROWS_AS(row_indicator(30, 30, 4, 3, Side::Left), DomainError);
  CHECK_THROWS_AS(row_indicator(0, 30, 4, 9, Side::Left), DomainError);
}

TEST_CASE("assembly of a six-codeword stream in two columns") {
  std::vector<unsigned> data{924, 139, 776, 318, 439, 485};
  Symbol symbol = assemble(data, 2, 2);
  CHECK(symbol.descriptor == 8);
  CHECK(symbol.pad_count == 1);
  CHECK(symbol.data_columns == 2);
  REQUIRE(symbol.rows.size() == 8);
  std::vector<unsigned> stream;
  for (const std::vector<unsigned>& row : symbol.rows) {
    REQUIRE(row.size() == 2);
    stream.insert(stream.end(), row.begin(), row.end());
  }
  CHECK(stream == std::vector<unsigned>{8, 924, 139, 776, 318, 439, 485, 900,
                                        65, 482, 393, 214, 364, 620, 420, 729});
}

TEST_CASE("assembly pads to the three-row minimum") {
  Symbol one = assemble({}, 1, 0);
  CHECK(one.descriptor == 1);
  CHECK(one.pad_count == 0);
  CHECK(one.rows == std::vector<std::vector<unsigned>>{{1}, {917}, {27}});

  Symbol two = assemble({}, 2, 0);
  CHECK(two.descriptor == 4);
  CHECK(two.pad_count == 3);
  CHECK(two.rows.size() == 3);
  CHECK(two.rows[0] == std::vector<unsigned>{4, 900});
}

TEST_CASE("the length descriptor excludes correction codewords") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<unsigned> cw(0, 928);
  std::uniform_int_distribution<std::size_t> len(0, 60);
  std::uniform_int_distribution<unsigned> cols(1, 8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<unsigned> data(len(rng));
    for (unsigned& d : data) d = cw(rng);
    unsigned level = static_cast<unsigned>(trial % 5);
    unsigned columns = cols(rng);
    Symbol symbol = assemble(data, columns, level);
    std::size_t k = static_cast<std::size_t>(2) << level;
    std::size_t total = symbol.rows.size() * columns;
    CHECK(symbol.descriptor == 1 + data.size() + symbol.pad_count);
    CHECK(symbol.descriptor + k == total);
    CHECK(total % columns == 0);
    CHECK(symbol.rows.size() >= 3);
    // Minimality: removing one pad breaks divisibility or the row minimum.
    if (symbol.pad_count > 0) {
      std::size_t less = total - 1;
      CHECK((less % columns != 0 || less / columns < 3));
    }
  }
}

TEST_CASE("assembly rejects streams beyond the symbol limits") {
  std::vector<unsigned> big(920, 0);
  CHECK_THROWS_AS(assemble(big, 30, 4), CapacityError);
  std::vector<unsigned> tall(100, 0);
  CHECK_THROWS_AS(assemble(tall, 1, 0), CapacityError);
  CHECK_THROWS_AS(assemble({}, 0, 0), DomainError);
  CHECK_THROWS_AS(assemble({}, 31, 0), DomainError);
  CHECK_THROWS_AS(assemble(std::vector<unsigned>{929}, 2, 0), DomainError);
}
