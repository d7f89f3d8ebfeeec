#include <doctest.h>

#include "brs/qseries.hpp"

using namespace brs;

namespace {

// Independent oracle for Eisenstein coefficients: divisor power sums.
Integer sigma(int n, int k) {
  Integer s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) {
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), d, k);
      s += p;
    }
  return s;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("E4 matches the divisor-sum oracle") {
  QSeries e4 = eisenstein(4, 10);
  CHECK(e4.at(0) == 1);
  for (int n = 1; n <= 10; ++n) CHECK(e4.at(n) == Rational(240 * sigma(n, 3)));
  CHECK(e4.at(1) == 240);
  CHECK(e4.at(2) == 2160);
}

TEST_CASE("E2 and E6 expansions") {
  QSeries e2 = eisenstein(2, 4);
  CHECK(e2.at(1) == -24);
  CHECK(e2.at(2) == -72);
  QSeries e6 = eisenstein(6, 3);
  CHECK(e6.at(1) == -504);
  CHECK(e6.at(2) == -16632);
}

TEST_CASE("eta leading terms match the product expansion") {
  QSeries eta = eta_power(1, 17);
  CHECK(eta.offset() == Rational(1, 24));
  // 1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + ...
  std::vector<long> expect{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0};
  for (size_t i = 0; i < expect.size(); ++i) CHECK(eta.at(i) == Rational(expect[i]));
}

TEST_CASE("eta^24 equals Delta and 1728 Delta = E4^3 - E6^2") {
  int N = 12;
  QSeries d = delta(N);
  QSeries e24 = eta_power(24, N);
  CHECK(d.at(1) == 1);
  CHECK(d.at(2) == -24);
  CHECK(d.at(3) == 252);
  CHECK(d.at(4) == -1472);
  // align: eta^24 has offset 1, delta offset 0 with leading zero
  QSeries dn = d.normalized();
  CHECK(dn.offset() == 1);
  for (int i = 0; i + 1 < dn.size() && i < e24.size(); ++i) CHECK(dn.at(i) == e24.at(i));
  QSeries diff = eisenstein(4, N).pow(3) - eisenstein(6, N).pow(2) - d * Rational(1728);
  CHECK(diff.is_zero());
}

TEST_CASE("J invariant expansion") {
  QSeries j = j_invariant(3);
  CHECK(j.offset() == -1);
  CHECK(j.at(0) == 1);
  CHECK(j.at(1) == 0);
  CHECK(j.at(2) == 196884);
  CHECK(j.at(3) == 21493760);
}

TEST_CASE("series arithmetic round trips") {
  QSeries e4 = eisenstein(4, 9);
  QSeries r = e4 * e4.inverse();
  CHECK(r.at(0) == 1);
  for (int i = 1; i < r.size(); ++i) CHECK(r.at(i) == 0);
  QSeries em8 = eta_power(-8, 9);
  QSeries p8 = eta_power(8, 9);
  QSeries prod = em8 * p8;
  CHECK(prod.offset() == 0);
  CHECK(prod.at(0) == 1);
  for (int i = 1; i < prod.size(); ++i) CHECK(prod.at(i) == 0);
}

TEST_CASE("character of central charge 32") {
  QSeries z = zv_character(32, 992, 4);
  CHECK(z.offset() == Rational(-4, 3));
  CHECK(z.at(0) == 1);
  CHECK(z.at(1) == 992);
  CHECK(z.at(2) == 385520);  // 248*992 + 139504
  // independent oracle: the E8^4 lattice theory character E4^4 / eta^32
  QSeries oracle = eisenstein(4, 8).pow(4) * eta_power(-32, 8);
  CHECK(oracle.offset() == Rational(-4, 3));
  for (int i = 0; i < 5; ++i) CHECK(z.at(i) == oracle.at(i));
}

TEST_CASE("character q^2 coefficients for d1 in {0,1,992}") {
  for (long d1 : {0L, 1L, 992L}) {
    QSeries z32 = zv_character(32, d1, 3);
    CHECK(z32.at(1) == d1);
    CHECK(z32.at(2) == Rational(248 * d1 + 139504));
    QSeries z40 = zv_character(40, d1, 3);
    CHECK(z40.offset() == Rational(-5, 3));
    CHECK(z40.at(1) == d1);
    CHECK(z40.at(2) == Rational(496 * d1 + 20620));
  }
}

TEST_CASE("modular form dimensions") {
  CHECK(modular_form_dim(0) == 1);
  CHECK(modular_form_dim(2) == 0);
  CHECK(modular_form_dim(4) == 1);
  CHECK(modular_form_dim(12) == 2);
  CHECK(modular_form_dim(16) == 2);
  CHECK(modular_form_dim(18) == 2);
  CHECK(modular_form_dim(20) == 2);
  CHECK(modular_form_dim(22) == 2);
  CHECK(modular_form_dim(24) == 3);
  CHECK(modular_form_dim(26) == 2);
}

TEST_CASE("echelonized bases") {
  for (int w : {12, 16, 18, 20, 22, 24, 26}) {
    auto basis = modular_form_basis(w, 8);
    CHECK(static_cast<int>(basis.size()) == modular_form_dim(w));
    for (size_t i = 0; i < basis.size(); ++i) {
      // leading one at q^i, zeros at the other pivots
      CHECK(basis[i].at(i) == 1);
      for (size_t j = 0; j < basis.size(); ++j)
        if (j != i) CHECK(basis[i].at(j) == 0);
    }
  }
  auto w2 = modular_form_basis(2, 8);
  CHECK(w2.empty());
  // weight 16: f0 = 1 + 0 q + 146880 q^2 (used by the moment identities)
  auto b16 = modular_form_basis(16, 4);
  CHECK(b16[0].at(2) == 146880);
  CHECK(b16[1].at(2) == 216);
}
