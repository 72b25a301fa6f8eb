#include "qcat/series.hpp"

#include <algorithm>
#include <sstream>

namespace qcat {

TruncSeries TruncSeries::z(int order) {
  TruncSeries s(order);
  if (order >= 1) s.set_coeff(1, LaurentPoly::one());
  return s;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  TruncSeries r(std::min(order(), o.order()));
  for (int k = 0; k <= r.order(); ++k) r.set_coeff(k, coeff(k) + o.coeff(k));
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  TruncSeries r(std::min(order(), o.order()));
  for (int k = 0; k <= r.order(); ++k) r.set_coeff(k, coeff(k) - o.coeff(k));
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  TruncSeries r(std::min(order(), o.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= r.order(); ++j) {
      if (o.coeff(j).is_zero()) continue;
      r.set_coeff(i + j, r.coeff(i + j) + coeff(i) * o.coeff(j));
    }
  }
  return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  *this = *this + o;
  return *this;
}

TruncSeries TruncSeries::scale(const LaurentPoly& p) const {
  TruncSeries r(order());
  for (int k = 0; k <= order(); ++k) r.set_coeff(k, coeff(k) * p);
  return r;
}

TruncSeries TruncSeries::shift(int k) const {
  TruncSeries r(order());
  for (int i = 0; i + k <= order(); ++i) r.set_coeff(i + k, coeff(i));
  return r;
}

bool TruncSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

int TruncSeries::first_difference(const TruncSeries& o) const {
  const int n = std::min(order(), o.order());
  for (int k = 0; k <= n; ++k)
    if (coeff(k) != o.coeff(k)) return k;
  return -1;
}

std::string TruncSeries::text() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    if (coeff(k).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool wrap = coeff(k).term_count() > 1;
    if (k == 0) {
      os << coeff(k).text();
    } else {
      if (coeff(k).is_one()) {
        os << "z";
      } else if (wrap) {
        os << "(" << coeff(k).text() << ")*z";
      } else {
        os << coeff(k).text() << "*z";
      }
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

TruncSeries geometric_inverse(const LaurentPoly& m, int order) {
  TruncSeries r(order);
  LaurentPoly p = LaurentPoly::one();
  r.set_coeff(0, p);
  for (int j = 1; j <= order; ++j) {
    p = -(p * m);
    r.set_coeff(j, p);
  }
  return r;
}

TruncSeries product_of_linear_factors(const std::vector<LaurentPoly>& cs, int step, int order) {
  TruncSeries r(order);
  r.set_coeff(0, LaurentPoly::one());
  for (const auto& c : cs) {
    TruncSeries f(order);
    f.set_coeff(0, LaurentPoly::one());
    if (step <= order) f.set_coeff(step, c);
    r = r * f;
  }
  return r;
}

}  // namespace qcat
