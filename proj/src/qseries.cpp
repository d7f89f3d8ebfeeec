#include "brs/qseries.hpp"

#include <algorithm>
#include <map>

namespace brs {

QSeries QSeries::one(int prec) {
  std::vector<Rational> c(prec + 1, Rational(0));
  c[0] = 1;
  return QSeries(0, std::move(c));
}

QSeries QSeries::zero(int prec) {
  return QSeries(0, std::vector<Rational>(prec + 1, Rational(0)));
}

Rational QSeries::coeff_q(const Rational& e) const {
  Rational rel = e - offset_;
  if (!is_integer(rel)) {
    if (rel < size()) return 0;
    throw std::out_of_range("QSeries::coeff_q beyond known window");
  }
  Integer idx = rel.get_num();
  if (idx < 0) return 0;
  if (idx >= size()) throw std::out_of_range("QSeries::coeff_q beyond known window");
  return coeffs_[to_long(idx)];
}

QSeries QSeries::operator+(const QSeries& o) const {
  Rational d = o.offset_ - offset_;
  if (!is_integer(d))
    throw std::invalid_argument("QSeries::+ offsets differ by a non-integer");
  long shift = to_long(d.get_num());
  // align to the smaller offset
  if (shift < 0) return o + *this;
  // known absolute windows: [offset, offset+size) and [o.offset, o.offset+o.size)
  long n = std::min<long>(size(), shift + o.size());
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + n);
  for (long i = shift; i < n; ++i) c[i] += o.coeffs_[i - shift];
  return QSeries(offset_, std::move(c));
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + o * Rational(-1); }

QSeries QSeries::operator*(const QSeries& o) const {
  int n = std::min(size(), o.size());
  std::vector<Rational> c(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j < n; ++j) {
      if (o.coeffs_[j] == 0) continue;
      c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return QSeries(offset_ + o.offset_, std::move(c));
}

QSeries QSeries::operator*(const Rational& s) const {
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x *= s;
  return QSeries(offset_, std::move(c));
}

QSeries QSeries::normalized() const {
  int lead = 0;
  while (lead < size() && coeffs_[lead] == 0) ++lead;
  if (lead == 0) return *this;
  if (lead == size()) throw std::invalid_argument("QSeries: zero to known precision");
  std::vector<Rational> c(coeffs_.begin() + lead, coeffs_.end());
  return QSeries(offset_ + lead, std::move(c));
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& x) { return x == 0; });
}

QSeries QSeries::inverse() const {
  QSeries a = normalized();
  int n = a.size();
  std::vector<Rational> c(n, Rational(0));
  c[0] = 1 / a.coeffs_[0];
  for (int k = 1; k < n; ++k) {
    Rational s = 0;
    for (int i = 1; i <= k; ++i) s += a.coeffs_[i] * c[k - i];
    c[k] = -s / a.coeffs_[0];
  }
  return QSeries(-a.offset_, std::move(c));
}

QSeries QSeries::operator/(const QSeries& o) const { return *this * o.inverse(); }

QSeries QSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QSeries r = QSeries::one(size() - 1);
  QSeries b = *this;
  int k = e;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  // offset of pow accumulates through multiplication; for e == 0 keep window
  return r;
}

Rational bernoulli(int k) {
  static std::vector<Rational> cache{Rational(1)};
  if (k < static_cast<int>(cache.size())) return cache[k];
  for (int m = static_cast<int>(cache.size()); m <= k; ++m) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational s = 0;
    Rational binom = 1;  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      s += binom * cache[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    cache.push_back(-s / binom);  // binom == C(m+1, m) = m+1
  }
  return cache[k];
}

QSeries eisenstein(int k, int prec) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("eisenstein: k must be even >= 2");
  std::vector<Rational> c(prec + 1, Rational(0));
  c[0] = 1;
  Rational scale = Rational(-2 * k) / bernoulli(k);
  for (int n = 1; n <= prec; ++n) {
    Integer sigma = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), d, k - 1);
        sigma += p;
      }
    }
    c[n] = scale * Rational(sigma);
  }
  return QSeries(0, std::move(c));
}

QSeries eisenstein_hat(int k, int prec) {
  Rational f = -bernoulli(k);
  for (int i = 2; i <= k; ++i) f /= i;
  return eisenstein(k, prec) * f;
}

QSeries euler_product_pow(int e, int prec) {
  // phi(q) = sum_k (-1)^k q^{k(3k-1)/2}
  std::vector<Rational> phi(prec + 1, Rational(0));
  for (long k = -prec - 1; k <= prec + 1; ++k) {
    long ex = k * (3 * k - 1) / 2;
    if (ex >= 0 && ex <= prec) phi[ex] += (k % 2 == 0) ? 1 : -1;
  }
  return QSeries(0, std::move(phi)).pow(e);
}

QSeries eta_power(int e, int prec) {
  QSeries p = euler_product_pow(e, prec);
  std::vector<Rational> c(p.size());
  for (int i = 0; i < p.size(); ++i) c[i] = p.at(i);
  return QSeries(rat(e, 24), std::move(c));
}

QSeries delta(int prec) {
  QSeries e4 = eisenstein(4, prec);
  QSeries e6 = eisenstein(6, prec);
  return (e4.pow(3) - e6.pow(2)) * rat(1, 1728);
}

QSeries j_invariant(int prec) {
  // compute with extra guard terms so the division keeps prec known terms
  int p = prec + 2;
  QSeries e4 = eisenstein(4, p);
  QSeries num = e4.pow(3);
  QSeries d = delta(p);
  QSeries j = num / d;  // offset -1 after normalization of delta
  std::vector<Rational> c(prec + 2, Rational(0));
  for (int i = 0; i < static_cast<int>(c.size()) && i < j.size(); ++i) c[i] = j.at(i);
  c[1] -= 744;
  return QSeries(-1, std::move(c));
}

QSeries zv_character(int c, const Integer& dim_v1, int prec) {
  int p = prec + 3;
  QSeries j = j_invariant(p);
  if (c == 32) {
    QSeries f = eisenstein(4, p) * eta_power(-8, p);
    QSeries shifted = j + QSeries::one(p) * Rational(dim_v1 - 248);
    return f * shifted;
  }
  if (c == 40) {
    QSeries f = eisenstein(4, p).pow(2) * eta_power(-16, p);
    QSeries shifted = j + QSeries::one(p) * Rational(dim_v1 - 496);
    return f * shifted;
  }
  throw std::invalid_argument("zv_character: central charge must be 32 or 40");
}

int modular_form_dim(int weight) {
  if (weight < 0 || weight % 2 != 0) return 0;
  if (weight % 12 == 2) return weight / 12;
  return weight / 12 + 1;
}

std::vector<QSeries> modular_form_basis(int weight, int prec) {
  if (weight < 0 || weight % 2 != 0)
    throw std::invalid_argument("modular_form_basis: weight must be even >= 0");
  QSeries e4 = eisenstein(4, prec);
  QSeries e6 = eisenstein(6, prec);
  std::vector<QSeries> monomials;
  for (int b = 0; 6 * b <= weight; ++b) {
    if ((weight - 6 * b) % 4 != 0) continue;
    int a = (weight - 6 * b) / 4;
    monomials.push_back(e4.pow(a) * e6.pow(b));
  }
  // Gaussian elimination to an echelonized, reduced basis.
  std::vector<std::vector<Rational>> rows;
  for (const auto& m : monomials) {
    std::vector<Rational> r(prec + 1);
    for (int i = 0; i <= prec; ++i) r[i] = m.at(i);
    rows.push_back(std::move(r));
  }
  std::vector<std::vector<Rational>> ech;
  for (auto row : rows) {
    for (const auto& e : ech) {
      int lead = 0;
      while (e[lead] == 0) ++lead;
      if (row[lead] != 0) {
        Rational f = row[lead];
        for (int i = 0; i <= prec; ++i) row[i] -= f * e[i];
      }
    }
    int lead = 0;
    while (lead <= prec && row[lead] == 0) ++lead;
    if (lead > prec) continue;  // dependent monomial
    Rational f = row[lead];
    for (int i = 0; i <= prec; ++i) row[i] /= f;
    ech.push_back(std::move(row));
  }
  std::sort(ech.begin(), ech.end(), [](const auto& a, const auto& b) {
    int la = 0, lb = 0;
    while (a[la] == 0) ++la;
    while (b[lb] == 0) ++lb;
    return la < lb;
  });
  // back-substitute for a fully reduced basis
  for (size_t i = 0; i < ech.size(); ++i) {
    for (size_t j = i + 1; j < ech.size(); ++j) {
      int lead = 0;
      while (ech[j][lead] == 0) ++lead;
      Rational f = ech[i][lead];
      if (f != 0)
        for (int t = 0; t <= prec; ++t) ech[i][t] -= f * ech[j][t];
    }
  }
  if (static_cast<int>(ech.size()) != modular_form_dim(weight))
    throw std::logic_error("modular_form_basis: dimension mismatch");
  std::vector<QSeries> basis;
  for (auto& r : ech) basis.emplace_back(0, std::move(r));
  return basis;
}

}  // namespace brs
