#pragma once

#include <map>
#include <string>
#include <vector>

#include "brs/rational.hpp"

namespace brs {

// Polynomial in the Jacobi index variable x = <h,h>, dense in increasing
// powers of x.
using PolyX = std::vector<Rational>;

PolyX poly_add(const PolyX& a, const PolyX& b);
PolyX poly_scale(const PolyX& a, const Rational& s);
PolyX poly_shift(const PolyX& a, int xpow);  // multiply by x^xpow
Rational poly_eval(const PolyX& a, const Rational& x);
bool poly_is_zero(const PolyX& a);
std::string poly_to_string(const PolyX& a, const std::string& var = "<h,h>");

// Symbol S_n^j: the j-th weight moment of V_n under h. S_0^0 is the constant
// 1, S_1^0 is dim V_1, S_2^0 is dim V_2.
struct MomentSym {
  int n;  // graded piece: 0, 1 or 2
  int j;  // moment order, even
  auto operator<=>(const MomentSym&) const = default;
};

// A linear relation sum coeff(x) * S_n^j = 0 (all terms on one side).
using MomentRel = std::map<MomentSym, PolyX>;

// One identity of the moment set, split as lhs = rhs with lhs carrying the
// S_2^j terms and rhs everything else (S_1^j, dim V_1, constants).
struct MomentIdentity {
  std::map<int, PolyX> lhs;        // j -> coefficient of S_2^j
  std::map<MomentSym, PolyX> rhs;  // S_1^j / S_0^0 terms
  std::string to_string() const;
};

struct MomentIdentitySet {
  int central_charge = 0;
  std::vector<MomentIdentity> identities;
  // moment orders j whose modular-form space has dimension > 2, making a
  // standalone identity non-derivable from q^0/q^1 data
  std::vector<int> non_derivable;
};

// Reconstructs the moment identities for c in {32, 40} from scratch: each
// Taylor coefficient of P(tau,z) = exp(-(2 pi i z)^2 <h,h> E_2 / 24) eta^c
// Z_V(tau,z) is a level-1 modular form determined by its q^0 and q^1 terms
// whenever the relevant weight space is two-dimensional; the q^2 coefficient
// then yields one linear relation among the moments.
MomentIdentitySet derive_moment_identities(int c);

// Static copy of the published constants, used only to cross-check the
// derivation (never as an input to it).
MomentIdentitySet printed_moment_identities(int c);

// Exact equality of two identity sets.
bool identity_sets_equal(const MomentIdentitySet& a, const MomentIdentitySet& b);

}  // namespace brs
