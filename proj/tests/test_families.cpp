#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcat/families.hpp"
#include "qcat/objects.hpp"

using namespace qcat;

namespace {
LaurentPoly qe(int e) { return LaurentPoly::monomial(Var::q, e); }
}  // namespace

TEST_CASE("q-Catalan by convolution") {
  CHECK(catalan_poly(0).is_one());
  CHECK(catalan_poly(2).text() == "1 + q");
  CHECK(catalan_poly(3).text() == "1 + q + 2*q^2 + q^3");
  CHECK(catalan_poly(4).text() == "1 + q + 2*q^2 + 3*q^3 + 3*q^4 + 3*q^5 + q^6");
  for (int n = 0; n <= 10; ++n) {
    CHECK(catalan_poly(n).value_at_one() == catalan_number(n));
    CHECK(catalan_poly(n).max_exp(Var::q) == n * (n - 1) / 2);
  }
}

TEST_CASE("q-Catalan by quotient") {
  CHECK(e_poly(3).text() == "1 + q^2 + q^3 + q^4 + q^6");
  for (int n = 0; n <= 10; ++n) {
    CHECK(e_poly(n).value_at_one() == catalan_number(n));
  }
}

TEST_CASE("q-Fuss-Catalan") {
  CHECK(fuss_catalan_poly(2, 2).text() == "1 + q + q^2");
  for (int n = 0; n <= 6; ++n) {
    CHECK(fuss_catalan_poly(n, 1) == catalan_poly(n));
  }
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 5; ++n) {
      CHECK(fuss_catalan_poly(n, r).value_at_one() == fuss_catalan_number(n, r));
    }
  }
}

TEST_CASE("three-variable descent polynomial") {
  CHECK(e_general_poly(1, 2).text() == "1");
  CHECK(e_general_poly(2, 2).text() == "1 + a*b*x + a*b^2*x");
  CHECK(e_general_poly(3, 2).text() ==
        "1 + a*b*x + a^2*b*x + a*b^2*x + a^2*b^2*x + a^2*b^3*x + a^2*b^4*x + "
        "a^3*b^3*x^2 + a^3*b^4*x^2 + 2*a^3*b^5*x^2 + a^3*b^6*x^2");
  // the specialized form agrees with the symbolic form at a = b = q, x = 1
  for (int r = 1; r <= 2; ++r) {
    for (int n = 1; n <= 4; ++n) {
      Exps to_q = kUnitExps;
      to_q[static_cast<int>(Var::q)] = 1;
      const LaurentPoly folded = e_general_poly(n, r)
                                     .substitute(Var::a, to_q)
                                     .substitute(Var::b, to_q)
                                     .substitute(Var::x, kUnitExps);
      CHECK(folded == e_r_poly(n, r));
    }
  }
}

TEST_CASE("folded descent polynomial") {
  CHECK(e_r_poly(3, 2).text() ==
        "1 + q^2 + 2*q^3 + q^4 + q^5 + 2*q^6 + q^7 + 2*q^8 + q^9");
  CHECK(e_r_poly(3, 2).value_at_one() == fuss_catalan_number(3, 2));
  for (int n = 0; n <= 7; ++n) {
    CHECK(e_r_poly(n, 1) == e_poly(n));
  }
}

TEST_CASE("rank refinement: closed form") {
  CHECK(narayana_poly(0, 0).is_one());
  CHECK(narayana_poly(2, 1).text() == "q^2");
  CHECK(narayana_poly(3, 1).text() == "q^2 + q^3 + q^4");
  CHECK(narayana_poly(3, 2).text() == "q^6");
  CHECK(narayana_poly(4, 2).text() == "q^6 + q^7 + 2*q^8 + q^9 + q^10");
  CHECK(narayana_poly(2, 2).is_zero());
  CHECK(narayana_poly(3, 3).is_zero());
  CHECK(narayana_poly(0, 1).is_zero());
  // summing the refinement over r recovers the quotient q-Catalan
  for (int n = 1; n <= 7; ++n) {
    LaurentPoly sum;
    for (int r = 0; r < n; ++r) sum += narayana_poly(n, r);
    CHECK(sum == e_poly(n));
  }
}

TEST_CASE("rank refinement: recurrence and enumeration agree") {
  for (int n = 0; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) {
      CHECK(narayana_rec(n, r) == narayana_poly(n, r));
      CHECK(narayana_enum(n, r) == narayana_poly(n, r));
    }
  }
  // the truncated inner bound loses the j = 0 term
  CHECK(narayana_rec(2, 1, true).is_zero());
  CHECK(narayana_rec(2, 1, false) == qe(2));
}

TEST_CASE("partition-rank refinement") {
  CHECK(n2_enum(3, 1).text() == "q^2 + q^3 + q^4");
  CHECK(n2_enum(3, 2).text() == "q^6");
  for (int n = 0; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) {
      CHECK(n2_enum(n, r) == narayana_poly(n, r));
      CHECK(n2_rec(n, r) == narayana_poly(n, r));
    }
  }
  CHECK(n2_rec(2, 1, true).is_zero());
  CHECK(n2_rec(2, 1, false) == qe(2));
}

TEST_CASE("symmetric-path refinement") {
  CHECK(n3_rec(1, 1).text() == "q^2");
  CHECK(n3k_closed(2, 1, 1).text() == "q^2 + q^3");
  CHECK(n3k_closed(2, 2, 0).text() == "q^6");
  CHECK(n3k_closed(2, 1, 0).text() == "q^4");
  CHECK(n3k_closed(3, 1, 2).text() == "q^2 + q^3 + q^4");
  // r = 0 forces the all-up half word, which has n half arches
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(n3k_closed(n, 0, k).is_zero() == (k != n));
      if (k == n) CHECK(n3k_closed(n, 0, k).is_one());
    }
  }
  for (int n = 0; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      CHECK(n3_rec(n, r) == n3_enum(n, r));
      LaurentPoly sum;
      for (int k = 0; k <= n; ++k) {
        CHECK(n3k_closed(n, r, k) == n3k_enum(n, r, k));
        CHECK(n3k_rec(n, r, k) == n3k_enum(n, r, k));
        sum += n3k_closed(n, r, k);
      }
      CHECK(sum == n3_rec(n, r));
    }
  }
}

TEST_CASE("last-letter split") {
  CHECK(n3_plus(2, 1, 1).text() == "q^2");
  CHECK(n3_minus(2, 1, 1).text() == "q^3");
  CHECK(n3_plus(2, 1, 1) + n3_minus(2, 1, 1) == n3k_closed(2, 1, 1));
  for (int n = 1; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (int k = 0; k <= n; ++k) {
        CHECK(n3_plus(n, r, k) == n3_plus_enum(n, r, k));
        CHECK(n3_minus(n, r, k) == n3_minus_enum(n, r, k));
      }
    }
  }
}

TEST_CASE("two-variable distribution") {
  CHECK(aqt_poly(3).text() == "1 + q*t + q^2*t + q^2*t^2 + q^3*t^3");
  // setting t = q turns the distribution into the quotient q-Catalan
  Exps to_q = kUnitExps;
  to_q[static_cast<int>(Var::q)] = 1;
  for (int n = 0; n <= 6; ++n) {
    CHECK(aqt_poly(n).substitute(Var::t, to_q) == e_poly(n));
  }
}

TEST_CASE("defining series reduce to z") {
  for (int order = 1; order <= 8; ++order) {
    CHECK(series_catalan_def(order) == TruncSeries::z(order));
  }
  for (int r = 1; r <= 3; ++r) {
    CHECK(series_fuss_def(r, 6) == TruncSeries::z(6));
    CHECK(series_e_def(r, 6) == TruncSeries::z(6));
  }
  for (int r = 1; r <= 2; ++r) {
    CHECK(series_e_general_def(r, 5) == TruncSeries::z(5));
  }
}
