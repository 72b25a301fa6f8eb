#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "qcat/objects.hpp"

using namespace qcat;

TEST_CASE("r-ballot words: membership and enumeration") {
  CHECK(is_r_dyck(parse_word("0011"), 1));
  CHECK_FALSE(is_r_dyck(parse_word("0110"), 1));
  CHECK_FALSE(is_r_dyck(parse_word("001"), 1));
  CHECK(is_r_dyck(parse_word("001111"), 2));
  CHECK_FALSE(is_r_dyck(parse_word("011111"), 2));

  const auto d3 = enumerate_r_dyck(3, 1);
  REQUIRE(d3.size() == 5);
  CHECK(format_word(d3[0]) == "000111");
  CHECK(format_word(d3[1]) == "001011");
  CHECK(format_word(d3[2]) == "001101");
  CHECK(format_word(d3[3]) == "010011");
  CHECK(format_word(d3[4]) == "010101");

  const auto d22 = enumerate_r_dyck(2, 2);
  REQUIRE(d22.size() == 3);
  CHECK(format_word(d22[0]) == "001111");
  CHECK(format_word(d22[1]) == "010111");
  CHECK(format_word(d22[2]) == "011011");

  CHECK(enumerate_r_dyck(0, 1).size() == 1);  // the empty word
  for (int n = 1; n <= 7; ++n) {
    CHECK(static_cast<long long>(enumerate_r_dyck(n, 1).size()) == catalan_number(n));
  }
  CHECK(static_cast<long long>(enumerate_r_dyck(4, 2).size()) == fuss_catalan_number(4, 2));
  CHECK(static_cast<long long>(enumerate_r_dyck(3, 3).size()) == fuss_catalan_number(3, 3));
}

TEST_CASE("prime paths touch the boundary only at the ends") {
  CHECK(is_prime_r_dyck(parse_word("0011"), 1));
  CHECK_FALSE(is_prime_r_dyck(parse_word("0101"), 1));
  CHECK(is_prime_r_dyck(parse_word("001011"), 1));
  CHECK_FALSE(is_prime_r_dyck(parse_word("001101"), 1));  // returns to the line after 0011
  CHECK(is_prime_r_dyck(parse_word("010111"), 2));
}

TEST_CASE("coarea of a path") {
  CHECK(dyck_coarea(parse_word("000111")) == 0);
  CHECK(dyck_coarea(parse_word("010101")) == 3);
  const auto d22 = enumerate_r_dyck(2, 2);
  CHECK(dyck_coarea(d22[0]) == 0);
  CHECK(dyck_coarea(d22[1]) == 1);
  CHECK(dyck_coarea(d22[2]) == 2);
}

TEST_CASE("multi-set permutations with the between-repeats restriction") {
  CHECK(is_stirling(parse_multiword("1122"), 2));
  CHECK_FALSE(is_stirling(parse_multiword("1212"), 2));
  CHECK(is_stirling(parse_multiword("2211"), 2));
  CHECK_FALSE(is_stirling(parse_multiword("221331"), 2));  // 3,3 sit between the two 1s
  const auto s32 = enumerate_r_stirling(3, 2);
  REQUIRE(s32.size() == 15);
  CHECK(format_multiword(s32.front()) == "112233");
  CHECK(format_multiword(s32.back()) == "332211");
  CHECK(std::is_sorted(s32.begin(), s32.end()));
  CHECK(stirling_word_count(3, 2) == 15);
  CHECK(stirling_word_count(4, 2) == 105);
  CHECK(stirling_word_count(3, 3) == 28);
  CHECK(enumerate_r_stirling(4, 2).size() == 105);
  CHECK(enumerate_r_stirling(1, 3).size() == 1);
}

TEST_CASE("231-avoidance filter") {
  CHECK(is_231_avoiding(parse_multiword("312")));
  CHECK_FALSE(is_231_avoiding(parse_multiword("231")));
  const auto perms = enumerate_permutations(3);
  REQUIRE(perms.size() == 6);
  CHECK(format_multiword(perms[0]) == "123");
  CHECK(format_multiword(perms[5]) == "321");
  CHECK(enumerate_avoiding(4, "231").size() == 14);
  CHECK(enumerate_avoiding(4, "312").size() == 14);
  CHECK(enumerate_avoiding(4, "132").size() == 14);
  CHECK(enumerate_avoiding(5, "231").size() == 42);
}

TEST_CASE("non-crossing partitions: parse, format, enumerate") {
  const NonCrossingPartition p = parse_nc("158/24/3/67");
  CHECK(p.n == 8);
  CHECK(p.blocks.size() == 4);
  CHECK(p.rank() == 4);
  CHECK(format_nc(p) == "158/24/3/67");

  CHECK_THROWS_AS(parse_nc("13/24"), ParseError);
  try {
    parse_nc("13/24");
    CHECK(false);
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("cross") != std::string::npos);
    CHECK(msg.find("(1,2,3,4)") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_nc("11/2"), ParseError);   // duplicate element
  CHECK_THROWS_AS(parse_nc("13"), ParseError);     // missing element 2

  const auto nc3 = enumerate_nc(3);
  REQUIRE(nc3.size() == 5);
  CHECK(format_nc(nc3[0]) == "123");
  CHECK(format_nc(nc3[1]) == "12/3");
  CHECK(format_nc(nc3[2]) == "13/2");
  CHECK(format_nc(nc3[3]) == "1/23");
  CHECK(format_nc(nc3[4]) == "1/2/3");
  for (int n = 1; n <= 8; ++n) {
    CHECK(static_cast<long long>(enumerate_nc(n).size()) == catalan_number(n));
  }
  // comma form for n > 9
  const NonCrossingPartition big = parse_nc("1,10/2,3,4,5,6,7,8,9");
  CHECK(big.n == 10);
  CHECK(format_nc(big).find(',') != std::string::npos);
}

TEST_CASE("symmetric prefixes: membership, arches, enumeration") {
  CHECK(is_symmetric_half(parse_word("0100"), 3));
  CHECK_FALSE(is_symmetric_half(parse_word("1000"), 3));
  CHECK_FALSE(is_symmetric_half(parse_word("0100"), 2));  // wrong number of zeros

  const SymmetricPath sp = make_symmetric(parse_word("0100"));
  CHECK(sp.n == 3);
  CHECK(format_word(symmetric_full_word(sp)) == "01001101");

  const ArchDecomposition ad = arch_decompose(parse_word("0100"));
  REQUIRE(ad.arches.size() == 1);
  CHECK(ad.arches[0] == std::pair<int, int>(1, 2));
  CHECK(ad.half_arches == std::vector<int>({3, 4}));

  const ArchDecomposition ad2 = arch_decompose(parse_word("0011"));
  CHECK(ad2.arches.size() == 2);
  CHECK(ad2.half_arches.empty());
  CHECK(ad2.arches[0] == std::pair<int, int>(1, 4));
  CHECK(ad2.arches[1] == std::pair<int, int>(2, 3));

  const auto q2 = enumerate_symmetric(2);
  REQUIRE(q2.size() == 5);
  CHECK(format_word(q2[0].half) == "00");
  CHECK(format_word(q2[1].half) == "001");
  CHECK(format_word(q2[2].half) == "010");
  CHECK(format_word(q2[3].half) == "0011");
  CHECK(format_word(q2[4].half) == "0101");
  for (int n = 1; n <= 7; ++n) {
    CHECK(static_cast<long long>(enumerate_symmetric(n).size()) == catalan_number(n + 1));
  }
}

TEST_CASE("counting helpers") {
  CHECK(catalan_number(0) == 1);
  CHECK(catalan_number(5) == 42);
  CHECK(catalan_number(10) == 16796);
  CHECK(fuss_catalan_number(3, 1) == catalan_number(3));
  CHECK(fuss_catalan_number(2, 2) == 3);
  CHECK(fuss_catalan_number(3, 2) == 12);
  CHECK(fuss_catalan_number(4, 2) == 55);
  CHECK(stirling_word_count(1, 5) == 1);
  CHECK(stirling_word_count(2, 3) == 4);
}
