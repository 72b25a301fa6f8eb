#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcat/poly.hpp"

using namespace qcat;

namespace {
LaurentPoly qe(int e) { return LaurentPoly::monomial(Var::q, e); }
}  // namespace

TEST_CASE("constants and predicates") {
  CHECK(LaurentPoly::zero().is_zero());
  CHECK(LaurentPoly::one().is_one());
  CHECK(LaurentPoly::constant(5).is_constant());
  CHECK_FALSE(LaurentPoly::constant(5).is_zero());
  CHECK(LaurentPoly::constant(0).is_zero());
  CHECK(LaurentPoly::zero().text() == "0");
  CHECK(LaurentPoly::constant(-3).text() == "-3");
  CHECK(LaurentPoly::zero().term_count() == 0);
  CHECK(LaurentPoly::one().value_at_one() == 1);
}

TEST_CASE("ring arithmetic") {
  const LaurentPoly p = LaurentPoly::one() + qe(1);   // 1 + q
  const LaurentPoly m = LaurentPoly::one() - qe(1);   // 1 - q
  CHECK((p * m).text() == "1 - q^2");
  CHECK((p + m).text() == "2");
  CHECK((p - p).is_zero());
  CHECK((-m).text() == "-1 + q");
  CHECK(p.pow(3).text() == "1 + 3*q + 3*q^2 + q^3");
  CHECK(p.pow(0).is_one());
  CHECK(p.times(4).text() == "4 + 4*q");
  CHECK((Int(2) * p).text() == "2 + 2*q");
}

TEST_CASE("laurent exponents") {
  const LaurentPoly p = qe(-2) + qe(3);
  CHECK(p.min_exp(Var::q) == -2);
  CHECK(p.max_exp(Var::q) == 3);
  CHECK((qe(-2) * qe(5)).text() == "q^3");
  CHECK(p.coeff_q(-2) == 1);
  CHECK(p.coeff_q(0) == 0);
  Exps shift = kUnitExps;
  shift[static_cast<int>(Var::q)] = 2;
  CHECK(p.times_monomial(shift).text() == "1 + q^5");
}

TEST_CASE("term order is graded lex, earlier variable heavier") {
  const LaurentPoly a = LaurentPoly::monomial(Var::a, 1);
  const LaurentPoly b = LaurentPoly::monomial(Var::b, 1);
  const LaurentPoly x = LaurentPoly::monomial(Var::x, 1);
  // degree first
  CHECK((LaurentPoly::one() + qe(2) + qe(1)).text() == "1 + q + q^2");
  // within a degree, larger exponent on the earlier variable first
  CHECK((a * b * b + a * a * b).text() == "a^2*b + a*b^2");
  CHECK(((a + b) * (x + LaurentPoly::one())).text() == "a + b + a*x + b*x");
}

TEST_CASE("coefficient lookup") {
  const LaurentPoly p = (LaurentPoly::one() + qe(1)).pow(2);
  Exps e = kUnitExps;
  e[static_cast<int>(Var::q)] = 1;
  CHECK(p.coeff(e) == 2);
  e[static_cast<int>(Var::q)] = 7;
  CHECK(p.coeff(e) == 0);
  CHECK(p.is_univariate_in(Var::q));
  CHECK_FALSE((p + LaurentPoly::monomial(Var::t, 1)).is_univariate_in(Var::q));
  // constants count as univariate in any variable
  CHECK(LaurentPoly::constant(7).is_univariate_in(Var::t));
}

TEST_CASE("substitute maps a variable to a monomial") {
  const LaurentPoly p = qe(1) + LaurentPoly::monomial(Var::t, 1);
  Exps to_q = kUnitExps;
  to_q[static_cast<int>(Var::q)] = 1;
  CHECK(p.substitute(Var::t, to_q).text() == "2*q");
  Exps to_q2 = kUnitExps;
  to_q2[static_cast<int>(Var::q)] = 2;
  CHECK((qe(1) + qe(3)).substitute(Var::q, to_q2).text() == "q^2 + q^6");
  // substituting the all-zero image sets the variable to 1
  CHECK(p.substitute(Var::t, kUnitExps).text() == "1 + q");
}

TEST_CASE("reverse_in flips the exponent range") {
  const LaurentPoly p = LaurentPoly::one() + 2 * qe(1) + 3 * qe(2);
  CHECK(p.reverse_in(Var::q, 2).text() == "3 + 2*q + q^2");
  // degree larger than max_exp shifts the result upward
  CHECK(p.reverse_in(Var::q, 3).text() == "3*q + 2*q^2 + q^3");
  CHECK(p.reverse_in(Var::q, 2).reverse_in(Var::q, 2) == p);
}

TEST_CASE("q-integers, factorials, binomials") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1).is_one());
  CHECK(q_int(3).text() == "1 + q + q^2");
  CHECK(q_factorial(3).text() == "1 + 2*q + 2*q^2 + q^3");
  CHECK(q_binom(4, 2).text() == "1 + q + 2*q^2 + q^3 + q^4");
  CHECK(q_binom(4, 2).value_at_one() == 6);
  CHECK(q_binom(5, 0).is_one());
  CHECK(q_binom(5, 6).is_zero());
  CHECK(q_binom(7, 3) == q_binom(7, 4));
  // Pascal recurrence with the q-weight
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      CHECK(q_binom(n, k) == q_binom(n - 1, k - 1) + qe(k) * q_binom(n - 1, k));
    }
  }
}

TEST_CASE("exact division") {
  CHECK(exact_div(q_int(6), q_int(3)).text() == "1 + q^3");
  CHECK(exact_div(q_binom(4, 2) * q_int(3), q_int(3)) == q_binom(4, 2));
  CHECK(exact_div(LaurentPoly::zero(), q_int(2)).is_zero());
  CHECK_THROWS_AS(exact_div(q_int(4), q_int(3)), ExactDivisionError);
  try {
    exact_div(q_int(4), q_int(3));
    CHECK(false);
  } catch (const ExactDivisionError& e) {
    CHECK_FALSE(e.remainder().empty());
    CHECK(e.remainder() != "0");
  }
}
