#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcat {

using Int = boost::multiprecision::cpp_int;

// Formal variables of every polynomial in the library, in canonical order.
enum class Var : int { q = 0, t = 1, a = 2, b = 3, x = 4 };

inline constexpr int kNumVars = 5;
inline constexpr const char* kVarNames[kNumVars] = {"q", "t", "a", "b", "x"};

// Exponent vector of one term; entries may be negative (Laurent monomials).
using Exps = std::array<int, kNumVars>;

inline constexpr Exps kUnitExps{0, 0, 0, 0, 0};

inline long total_degree(const Exps& e) {
  long d = 0;
  for (int v : e) d += v;
  return d;
}

// Graded-lexicographic order: smaller total degree first; within a degree,
// the term with the larger exponent on the earlier variable comes first.
// Map iteration in this order is also the canonical printing order.
struct TermOrder {
  bool operator()(const Exps& u, const Exps& v) const {
    const long du = total_degree(u), dv = total_degree(v);
    if (du != dv) return du < dv;
    for (int i = 0; i < kNumVars; ++i)
      if (u[i] != v[i]) return u[i] > v[i];
    return false;
  }
};

class ExactDivisionError : public std::runtime_error {
 public:
  ExactDivisionError(const std::string& what, std::string remainder)
      : std::runtime_error(what), remainder_(std::move(remainder)) {}
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

// Sparse multivariate Laurent polynomial with exact integer coefficients.
// The zero polynomial is the empty term map; no zero coefficient is stored.
class LaurentPoly {
 public:
  using TermMap = std::map<Exps, Int, TermOrder>;

  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly constant(Int c);
  static LaurentPoly one() { return constant(1); }
  // c * v^e
  static LaurentPoly monomial(Var v, int e, Int c = 1);
  static LaurentPoly term(const Exps& e, Int c);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  // True when every term's exponents vanish outside `v`.
  bool is_univariate_in(Var v) const;

  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Int coeff(const Exps& e) const;
  Int coeff_q(int e) const;  // coefficient of q^e in a q-univariate poly

  int min_exp(Var v) const;  // 0 for the zero polynomial
  int max_exp(Var v) const;  // 0 for the zero polynomial

  // Sum of all coefficients == specialization at q=t=a=b=x=1.
  Int value_at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly times(const Int& c) const;
  LaurentPoly times_monomial(const Exps& e, const Int& c = 1) const;
  LaurentPoly pow(unsigned k) const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Substitute v := (coefficient-one monomial with exponents `image`).
  // Examples: a := q is image with q-slot 1; x := 1 is the all-zero image;
  // x := a*x keeps the x-slot at 1 and adds a-slot 1.
  LaurentPoly substitute(Var v, const Exps& image) const;

  // v^d * p(1/v) on the exponents of `v` only; other variables untouched.
  LaurentPoly reverse_in(Var v, int d) const;

  // Canonical text form, e.g. "1 + 2*q^2 + q^3" or "q^-1 + a*b^2*x".
  std::string text() const;

 private:
  void add_term(const Exps& e, const Int& c);
  TermMap terms_;
};

inline LaurentPoly operator*(const Int& c, const LaurentPoly& p) { return p.times(c); }

// [n] = 1 + q + ... + q^(n-1); requires n >= 0.
LaurentPoly q_int(int n);
// [n]! = [1][2]...[n]
LaurentPoly q_factorial(int n);
// Gaussian binomial via the q-Pascal recurrence; zero outside 0 <= k <= n.
LaurentPoly q_binom(int n, int k);

// Exact quotient of two q-univariate Laurent polynomials; throws
// ExactDivisionError (carrying the offending remainder) if the division
// leaves a remainder or a non-integral coefficient.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace qcat
