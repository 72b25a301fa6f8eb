#pragma once

#include <string>
#include <vector>

#include "qcat/poly.hpp"

namespace qcat {

// Power series in z truncated at z^order, with LaurentPoly coefficients.
// All operations truncate to the smaller order of their operands.
class TruncSeries {
 public:
  explicit TruncSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}

  static TruncSeries zero(int order) { return TruncSeries(order); }
  static TruncSeries z(int order);  // the series "z"

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const LaurentPoly& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  void set_coeff(int k, LaurentPoly p) { coeffs_[static_cast<std::size_t>(k)] = std::move(p); }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries& operator+=(const TruncSeries& o);

  // Multiply by a z-free polynomial.
  TruncSeries scale(const LaurentPoly& p) const;
  // Multiply by z^k (k >= 0), dropping overflowed coefficients.
  TruncSeries shift(int k) const;

  bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  bool is_zero() const;
  // Smallest k whose coefficient differs from `o`'s, or -1 if equal.
  int first_difference(const TruncSeries& o) const;

  // "z + (1 + q)*z^3 + ..." with coefficients in canonical text form.
  std::string text() const;

 private:
  std::vector<LaurentPoly> coeffs_;
};

// Series expansion of 1 / (1 + m*z) to the given order, i.e.
// sum_j (-m)^j z^j, for a z-free monomial or polynomial m.
TruncSeries geometric_inverse(const LaurentPoly& m, int order);

// Product of (1 + c_i * z^step) over the given z-free factors c_i.
TruncSeries product_of_linear_factors(const std::vector<LaurentPoly>& cs, int step, int order);

}  // namespace qcat
