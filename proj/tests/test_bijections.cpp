#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "qcat/bijections.hpp"
#include "qcat/objects.hpp"
#include "qcat/statistics.hpp"

using namespace qcat;

TEST_CASE("kappa: worked example") {
  const MultiWord v = parse_multiword("42112334");
  CHECK(kappa_alpha(v, 2) == std::vector<int>({2, 1, 1, 0}));
  CHECK(format_word(kappa(v, 2)) == "010110101111");
  CHECK(kappa_inv(kappa(v, 2), 2) == v);
}

TEST_CASE("kappa: exhaustive round trip on small sizes") {
  for (int r = 1; r <= 2; ++r) {
    for (int n = 1; n <= 4; ++n) {
      std::set<Word01> images;
      long long count = 0;
      for (const auto& v : enumerate_r_stirling(n, r)) {
        if (!is_231_avoiding(v)) continue;
        ++count;
        const Word01 w = kappa(v, r);
        CHECK(is_r_dyck(w, r));
        CHECK(kappa_inv(w, r) == v);
        images.insert(w);
      }
      CHECK(count == fuss_catalan_number(n, r));
      CHECK(static_cast<long long>(images.size()) == fuss_catalan_number(n, r));  // injective and onto
    }
  }
}

TEST_CASE("kappa rejects words containing the forbidden pattern") {
  CHECK_THROWS_AS(kappa(parse_multiword("223113"), 2), std::invalid_argument);
  CHECK_THROWS_AS(kappa(parse_multiword("1212"), 2), std::invalid_argument);  // not valid input at all
}

TEST_CASE("phi: worked example with trace") {
  const MultiWord v = parse_multiword("2255431134");
  PhiTrace trace;
  const MultiWord out = phi(v, 2, &trace);
  CHECK(format_multiword(out) == "5113223544");
  CHECK(stirling_MAJ(v, 2) == 6);
  CHECK(stirling_INV(out, 2) == 6);

  REQUIRE(trace.maj_chain.size() == 5);
  CHECK(format_multiword(trace.maj_chain[0]) == "55");
  CHECK(format_multiword(trace.maj_chain[1]) == "5544");
  CHECK(format_multiword(trace.maj_chain[2]) == "554334");
  CHECK(format_multiword(trace.maj_chain[3]) == "22554334");
  CHECK(format_multiword(trace.maj_chain[4]) == "2255431134");
  REQUIRE(trace.inv_chain.size() == 5);
  CHECK(format_multiword(trace.inv_chain[0]) == "55");
  CHECK(format_multiword(trace.inv_chain[1]) == "5544");
  CHECK(format_multiword(trace.inv_chain[2]) == "533544");
  CHECK(format_multiword(trace.inv_chain[3]) == "53223544");
  CHECK(format_multiword(trace.inv_chain[4]) == "5113223544");
  CHECK(trace.gaps == std::vector<int>({2, 1, 2, 1}));

  CHECK(phi_inv(out, 2) == v);
}

TEST_CASE("phi: exhaustive transport of the statistic") {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= (r >= 3 ? 3 : 4); ++n) {
      std::set<MultiWord> images;
      const auto words = enumerate_r_stirling(n, r);
      for (const auto& v : words) {
        const MultiWord w = phi(v, r);
        CHECK(is_stirling(w, r));
        CHECK(stirling_INV(w, r) == stirling_MAJ(v, r));
        CHECK(phi_inv(w, r) == v);
        // the image uses the same letters
        MultiWord a = v, b = w;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
        images.insert(w);
      }
      CHECK(images.size() == words.size());
    }
  }
}

TEST_CASE("rho: worked examples") {
  CHECK(format_word(rho(parse_multiword("631245"))) == "000010111011");
  CHECK(format_word(rho(parse_multiword("2143"))) == "01001101");
  CHECK(rho_descents(parse_multiword("631245")) == std::vector<int>({1, 2, 6}));
  CHECK(rho_inverse_descents(parse_multiword("631245")) == std::vector<int>({2, 5, 6}));
  CHECK(rho_inv(parse_word("000010111011")) == parse_multiword("631245"));
}

TEST_CASE("rho: exhaustive round trip") {
  for (int n = 1; n <= 6; ++n) {
    std::set<Word01> images;
    const auto perms = enumerate_avoiding(n, "231");
    for (const auto& pi : perms) {
      const Word01 w = rho(pi);
      CHECK(is_r_dyck(w, 1));
      CHECK(rho_inv(w) == pi);
      images.insert(w);
    }
    CHECK(images.size() == perms.size());
    CHECK(static_cast<long long>(images.size()) == catalan_number(n));
  }
}

TEST_CASE("rho rejects bad input") {
  CHECK_THROWS_AS(rho(parse_multiword("231")), std::invalid_argument);
  CHECK_THROWS_AS(rho(parse_multiword("1,1,2")), std::invalid_argument);
}

TEST_CASE("non-crossing partition chain: worked example") {
  const NonCrossingPartition p = parse_nc("158/24/3/67");
  const NcChain c = nc_to_sigma(p);
  CHECK(c.minima == std::vector<int>({1, 2, 3, 6}));
  CHECK(c.maxima == std::vector<int>({3, 4, 7, 8}));
  CHECK(c.peaks == std::vector<int>({3, 5, 9, 13}));
  CHECK(c.valleys == std::vector<int>({4, 6, 12}));
  CHECK(format_word(c.dyck) == "0001010001110111");
  CHECK(c.code == std::vector<int>({5, 2, 2, 2, 1, 0, 0, 0}));
  CHECK(format_multiword(c.mu) == "63452178");
  CHECK(format_multiword(c.sigma) == "34765821");
  CHECK_FALSE(contains_312(c.sigma));
  CHECK(maj(c.sigma) == 20);
  CHECK(maj(inverse_permutation(c.sigma)) == 14);
  CHECK(nc_maj(p) == 34);
  CHECK(sigma_to_nc(c.sigma) == p);
}

TEST_CASE("lehmer codes") {
  CHECK(lehmer_code(parse_multiword("63452178")) ==
        std::vector<int>({5, 2, 2, 2, 1, 0, 0, 0}));
  CHECK(from_lehmer_code({5, 2, 2, 2, 1, 0, 0, 0}) == parse_multiword("63452178"));
  CHECK(lehmer_code(parse_multiword("123")) == std::vector<int>({0, 0, 0}));
  for (const auto& pi : enumerate_permutations(4)) {
    CHECK(from_lehmer_code(lehmer_code(pi)) == pi);
  }
}

TEST_CASE("non-crossing partition chain: exhaustive round trip") {
  for (int n = 1; n <= 6; ++n) {
    std::set<MultiWord> images;
    const auto parts = enumerate_nc(n);
    for (const auto& p : parts) {
      const NcChain c = nc_to_sigma(p);
      CHECK_FALSE(contains_312(c.sigma));
      CHECK(sigma_to_nc(c.sigma) == p);
      // the chain transports the block statistic to a descent statistic
      CHECK(maj(c.sigma) + maj(inverse_permutation(c.sigma)) == nc_maj(p));
      images.insert(c.sigma);
    }
    CHECK(images.size() == parts.size());
  }
}

TEST_CASE("psi: worked examples") {
  CHECK(format_word(psi(parse_word("00010111")).half) == "001011");
  CHECK(format_word(psi(parse_word("00011101")).half) == "00110");
  CHECK(format_word(psi(parse_word("01010101")).half) == "000");
  CHECK(format_word(psi(parse_word("00001111")).half) == "000111");
  CHECK(psi_inv(psi(parse_word("00011101"))) == parse_word("00011101"));
}

TEST_CASE("psi: exhaustive round trip") {
  for (int n = 2; n <= 6; ++n) {
    std::set<Word01> images;
    const auto paths = enumerate_r_dyck(n, 1);
    for (const auto& d : paths) {
      const SymmetricPath s = psi(d);
      CHECK(s.n == n - 1);
      CHECK(is_symmetric_half(s.half, n - 1));
      CHECK(psi_inv(s) == d);
      images.insert(s.half);
    }
    CHECK(images.size() == paths.size());
    CHECK(images.size() == enumerate_symmetric(n - 1).size());  // onto
  }
}
