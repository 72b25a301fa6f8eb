#include "qcat/poly.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <sstream>
#include <utility>
#include <vector>

namespace qcat {

LaurentPoly LaurentPoly::constant(Int c) {
  LaurentPoly p;
  p.add_term(kUnitExps, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Var v, int e, Int c) {
  Exps ex = kUnitExps;
  ex[static_cast<int>(v)] = e;
  return term(ex, std::move(c));
}

LaurentPoly LaurentPoly::term(const Exps& e, Int c) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == kUnitExps &&
         terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kUnitExps);
}

bool LaurentPoly::is_univariate_in(Var v) const {
  const int keep = static_cast<int>(v);
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < kNumVars; ++i)
      if (i != keep && e[i] != 0) return false;
  return true;
}

Int LaurentPoly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentPoly::coeff_q(int e) const {
  Exps ex = kUnitExps;
  ex[static_cast<int>(Var::q)] = e;
  return coeff(ex);
}

int LaurentPoly::min_exp(Var v) const {
  const int i = static_cast<int>(v);
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e[i]);
  return terms_.empty() ? 0 : m;
}

int LaurentPoly::max_exp(Var v) const {
  const int i = static_cast<int>(v);
  int m = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) m = std::max(m, e[i]);
  return terms_.empty() ? 0 : m;
}

Int LaurentPoly::value_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void LaurentPoly::add_term(const Exps& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exps e = e1;
      for (int i = 0; i < kNumVars; ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::times(const Int& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

LaurentPoly LaurentPoly::times_monomial(const Exps& m, const Int& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) {
    Exps ex = e;
    for (int i = 0; i < kNumVars; ++i) ex[i] += m[i];
    r.terms_.emplace(ex, k * c);
  }
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r = one();
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1u) r *= base;
    base *= base;
    k >>= 1u;
  }
  return r;
}

LaurentPoly LaurentPoly::substitute(Var v, const Exps& image) const {
  const int vi = static_cast<int>(v);
  LaurentPoly r;
  for (const auto& [e, c] : terms_) {
    const int k = e[vi];
    Exps ex = e;
    ex[vi] = 0;
    for (int i = 0; i < kNumVars; ++i) ex[i] += k * image[i];
    r.add_term(ex, c);
  }
  return r;
}

LaurentPoly LaurentPoly::reverse_in(Var v, int d) const {
  const int vi = static_cast<int>(v);
  LaurentPoly r;
  for (const auto& [e, c] : terms_) {
    Exps ex = e;
    ex[vi] = d - ex[vi];
    r.add_term(ex, c);
  }
  return r;
}

std::string LaurentPoly::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const Int mag = neg ? Int(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string mono;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVarNames[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag;
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag << "*" << mono;
    }
  }
  return os.str();
}

LaurentPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: negative argument");
  LaurentPoly p;
  for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(Var::q, i);
  return p;
}

LaurentPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  LaurentPoly p = LaurentPoly::one();
  for (int i = 1; i <= n; ++i) p *= q_int(i);
  return p;
}

LaurentPoly q_binom(int n, int k) {
  if (k < 0 || k > n || n < 0) return LaurentPoly::zero();
  static std::map<std::pair<int, int>, LaurentPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto rec = [](auto&& self, int nn, int kk) -> const LaurentPoly& {
    auto it = cache.find({nn, kk});
    if (it != cache.end()) return it->second;
    LaurentPoly val;
    if (kk == 0 || kk == nn) {
      val = LaurentPoly::one();
    } else {
      // q-Pascal: [n k] = [n-1 k-1] + q^k [n-1 k]; stays a polynomial, no
      // division is ever performed.
      val = self(self, nn - 1, kk - 1) +
            LaurentPoly::monomial(Var::q, kk) * self(self, nn - 1, kk);
    }
    return cache.emplace(std::pair{nn, kk}, std::move(val)).first->second;
  };
  return rec(rec, n, k);
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw ExactDivisionError("exact_div: division by zero", "0");
  if (num.is_zero()) return LaurentPoly::zero();
  if (!num.is_univariate_in(Var::q) || !den.is_univariate_in(Var::q))
    throw ExactDivisionError("exact_div: operands must be q-univariate", num.text());

  const int nlo = num.min_exp(Var::q), nhi = num.max_exp(Var::q);
  const int dlo = den.min_exp(Var::q), dhi = den.max_exp(Var::q);
  std::vector<Int> r(static_cast<std::size_t>(nhi - nlo + 1));
  for (int e = nlo; e <= nhi; ++e) r[static_cast<std::size_t>(e - nlo)] = num.coeff_q(e);
  std::vector<Int> d(static_cast<std::size_t>(dhi - dlo + 1));
  for (int e = dlo; e <= dhi; ++e) d[static_cast<std::size_t>(e - dlo)] = den.coeff_q(e);

  const int qdeg = static_cast<int>(r.size()) - static_cast<int>(d.size());
  auto fail = [&](const std::vector<Int>& rem) {
    LaurentPoly rp;
    for (std::size_t i = 0; i < rem.size(); ++i)
      if (rem[i] != 0) rp += LaurentPoly::monomial(Var::q, static_cast<int>(i) + nlo, rem[i]);
    throw ExactDivisionError("exact_div: non-exact division, remainder " + rp.text(),
                             rp.text());
  };
  if (qdeg < 0) fail(r);

  std::vector<Int> quo(static_cast<std::size_t>(qdeg) + 1);
  const Int lead = d.back();
  for (int i = qdeg; i >= 0; --i) {
    const Int& top = r[static_cast<std::size_t>(i) + d.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) fail(r);
    const Int c = top / lead;
    quo[static_cast<std::size_t>(i)] = c;
    for (std::size_t j = 0; j < d.size(); ++j)
      r[static_cast<std::size_t>(i) + j] -= c * d[j];
  }
  for (const Int& c : r)
    if (c != 0) fail(r);

  LaurentPoly result;
  for (int i = 0; i <= qdeg; ++i)
    if (quo[static_cast<std::size_t>(i)] != 0)
      result += LaurentPoly::monomial(Var::q, i + (nlo - dlo), quo[static_cast<std::size_t>(i)]);
  return result;
}

}  // namespace qcat
