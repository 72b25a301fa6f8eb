#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcat/families.hpp"
#include "qcat/objects.hpp"
#include "qcat/statistics.hpp"

using namespace qcat;

TEST_CASE("descent conventions on 01-words") {
  const Word01 w = parse_word("0101");
  CHECK(descent_set_with(w, DescentConvention::kStandard) == std::set<int>({2}));
  CHECK(descent_set_with(w, DescentConvention::kAugmented) == std::set<int>({2, 4}));
  CHECK(maj_with(w, DescentConvention::kStandard) == 2);
  CHECK(maj_with(w, DescentConvention::kAugmented) == 6);
  // symmetric convention counts 10-factors plus a final 1
  const Word01 h = parse_word("0011");
  CHECK(descent_set_with(h, DescentConvention::kSymmetric) == std::set<int>({4}));
  CHECK(maj_with(h, DescentConvention::kSymmetric) == 4);
  const Word01 h2 = parse_word("0100");
  CHECK(descent_set_with(h2, DescentConvention::kSymmetric) == std::set<int>({2}));
  CHECK(maj_with(h2, DescentConvention::kSymmetric) == 2);
}

TEST_CASE("descent conventions on permutations") {
  const MultiWord p = parse_multiword("2143");
  CHECK(descent_set_with(p, DescentConvention::kStandard) == std::set<int>({1, 3}));
  CHECK(descent_set_with(p, DescentConvention::kAugmented) == std::set<int>({1, 3, 4}));
  CHECK(maj_with(p, DescentConvention::kAugmented) == 8);
}

TEST_CASE("path inversion statistics") {
  const Word01 w = parse_word("010101");
  CHECK(r_dyck_iinv(w) == 3);
  CHECK(r_dyck_inv(w, 1) == 0);
  const Word01 low = parse_word("000111");
  CHECK(r_dyck_iinv(low) == 0);
  CHECK(r_dyck_inv(low, 1) == 3);  // 1*3*2/2
  // complementary pair sums to r*n(n-1)/2 across a sample
  for (const auto& d : enumerate_r_dyck(4, 2)) {
    CHECK(r_dyck_inv(d, 2) + r_dyck_iinv(d) == 2 * 4 * 3 / 2);
  }
}

TEST_CASE("statistics on multi-set words match the worked table") {
  // Pairs (word, INV, MAJ) for all 15 words with each of 1,2,3 twice.
  const std::vector<std::tuple<std::string, long, long>> rows = {
      {"112233", 0, 0}, {"211233", 1, 1}, {"221133", 2, 2}, {"113223", 1, 3},
      {"311223", 2, 1}, {"321123", 3, 2}, {"322113", 4, 4}, {"113322", 2, 4},
      {"311322", 3, 5}, {"331122", 4, 2}, {"332112", 5, 3}, {"332211", 6, 6},
      {"223113", 3, 3}, {"223311", 4, 4}, {"322311", 5, 5},
  };
  for (const auto& [s, expect_inv, expect_maj] : rows) {
    const MultiWord w = parse_multiword(s);
    CHECK(stirling_INV(w, 2) == expect_inv);
    CHECK(stirling_MAJ(w, 2) == expect_maj);
  }
}

TEST_CASE("descent-top positions of a multi-set word") {
  const MultiWord w = parse_multiword("2255431134");
  CHECK(stirling_J(w, 2) == std::set<int>({6}));
  CHECK(stirling_MAJ(w, 2) == 6);
  CHECK(stirling_INV(w, 2) == 11);
  CHECK(stirling_J(parse_multiword("112233"), 2).empty());
  CHECK(stirling_J(parse_multiword("332211"), 2) == std::set<int>({2, 4}));
}

TEST_CASE("block weights of non-crossing partitions") {
  CHECK(nc_block_wt({1, 5, 8}) == 17);
  CHECK(nc_block_wt({2, 4}) == 5);
  CHECK(nc_block_wt({3}) == 0);
  CHECK(nc_block_wt({6, 7}) == 12);
  CHECK(nc_maj(parse_nc("158/24/3/67")) == 34);
  CHECK(nc_block_wtprime({1, 5, 8}) == 11);
  CHECK(nc_block_wtprime({2, 4}) == 2);
  CHECK(nc_block_wtprime({6, 7}) == 1);
  CHECK(nc_wtprime(parse_nc("158/24/3/67")) == 14);
  // worked values for the five partitions of [3]
  CHECK(nc_maj(parse_nc("1/2/3")) == 0);
  CHECK(nc_maj(parse_nc("12/3")) == 2);
  CHECK(nc_maj(parse_nc("13/2")) == 3);
  CHECK(nc_maj(parse_nc("1/23")) == 4);
  CHECK(nc_maj(parse_nc("123")) == 6);
}

TEST_CASE("statistics on symmetric paths") {
  const SymmetricPath p = make_symmetric(parse_word("0100"));
  CHECK(sym_maj(p) == 2);
  const SymInv si = sym_inv(p);
  CHECK(si.inv1 == 3);
  CHECK(si.inv2 == 2);
  CHECK(si.total == 5);
  // a fully arched half has no half-arch contribution
  const SymInv si2 = sym_inv(make_symmetric(parse_word("0011")));
  CHECK(si2.inv1 == 0);
  CHECK(si2.inv2 == 0);
  CHECK(si2.total == 0);
  // inv generating function over all symmetric paths of size n
  LaurentPoly sum;
  for (const auto& sp : enumerate_symmetric(3)) {
    sum += LaurentPoly::monomial(Var::q, static_cast<int>(sym_inv(sp).total));
  }
  CHECK(sum == catalan_poly(4));
}
