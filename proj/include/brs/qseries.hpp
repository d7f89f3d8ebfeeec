#pragma once

#include <stdexcept>
#include <vector>

#include "brs/rational.hpp"

namespace brs {

// Truncated formal power series in q with exact rational coefficients and a
// rational leading-exponent offset: coeffs[i] is the coefficient of
// q^{offset+i}. Exponents outside the stored window are unknown, not zero;
// arithmetic tracks the known window.
class QSeries {
 public:
  QSeries() = default;
  QSeries(Rational offset, std::vector<Rational> coeffs)
      : offset_(std::move(offset)), coeffs_(std::move(coeffs)) {}

  // Constant 1 known through q^{prec}.
  static QSeries one(int prec);
  static QSeries zero(int prec);

  const Rational& offset() const { return offset_; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  const Rational& at(int i) const { return coeffs_.at(i); }

  // Coefficient of q^e for an absolute exponent e. Exponents off the offset
  // grid inside the known window are zero; outside the window it throws.
  Rational coeff_q(const Rational& e) const;

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries operator*(const Rational& s) const;
  QSeries operator/(const QSeries& o) const;

  // Multiplicative inverse; leading zeros shift the offset and shrink the
  // known window.
  QSeries inverse() const;
  QSeries pow(int e) const;

  // Drops leading zero coefficients, adjusting the offset.
  QSeries normalized() const;

  bool is_zero() const;

 private:
  Rational offset_ = 0;
  std::vector<Rational> coeffs_;
};

// k-th Bernoulli number (B_1 = -1/2 convention).
Rational bernoulli(int k);

// Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, k >= 2 even.
QSeries eisenstein(int k, int prec);

// Zhu's renormalization \hat{E}_k = -(B_k/k!) E_k.
QSeries eisenstein_hat(int k, int prec);

// (prod_{n>=1} (1-q^n))^e via the pentagonal number theorem; offset 0.
QSeries euler_product_pow(int e, int prec);

// eta^e = q^{e/24} prod (1-q^n)^e; offset e/24.
QSeries eta_power(int e, int prec);

QSeries delta(int prec);

// J = E4^3/Delta - 744 = q^{-1} + 0 + 196884 q + ...
QSeries j_invariant(int prec);

// Character of a holomorphic VOA of central charge 32 or 40 with given
// dim V_1, to q^{prec - c/24}.
QSeries zv_character(int c, const Integer& dim_v1, int prec);

int modular_form_dim(int weight);

// Echelonized basis of level-1 modular forms of the given even weight,
// ordered by leading exponent, from monomials in E4 and E6.
std::vector<QSeries> modular_form_basis(int weight, int prec);

}  // namespace brs
