#include "brs/identities.hpp"

#include <sstream>
#include <stdexcept>

#include "brs/qseries.hpp"

namespace brs {

PolyX poly_add(const PolyX& a, const PolyX& b) {
  PolyX r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

PolyX poly_scale(const PolyX& a, const Rational& s) {
  PolyX r(a);
  for (auto& x : r) x *= s;
  return r;
}

PolyX poly_shift(const PolyX& a, int xpow) {
  PolyX r(a.size() + xpow, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i + xpow] = a[i];
  return r;
}

Rational poly_eval(const PolyX& a, const Rational& x) {
  Rational r = 0;
  for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

bool poly_is_zero(const PolyX& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

std::string poly_to_string(const PolyX& a, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Rational c = a[i];
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    Rational ac = abs(c);
    if (ac != 1 || i == 0) os << to_string(ac);
    if (i >= 1) {
      if (ac != 1) os << "*";
      os << var;
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

std::string sym_name(const MomentSym& s) {
  if (s.n == 0 && s.j == 0) return "1";
  if (s.j == 0) return "d" + std::to_string(s.n);
  return "S" + std::to_string(s.n) + "^" + std::to_string(s.j);
}

std::string term_string(const PolyX& p, const std::string& name) {
  // render coeff-poly * name compactly
  int nonzero = 0;
  size_t last = 0;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) {
      ++nonzero;
      last = i;
    }
  std::ostringstream os;
  const bool unit = (name == "1");
  if (nonzero == 1) {
    Rational c = p[last];
    std::vector<std::string> parts;
    if (unit && last == 0) return to_string(c);
    if (c != 1 && c != -1) parts.push_back(to_string(abs(c)));
    if (!unit) parts.push_back(name);
    if (last >= 1) {
      std::string x = "<h,h>";
      if (last >= 2) x += "^" + std::to_string(last);
      parts.push_back(x);
    }
    if (c < 0) os << "-";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
  } else {
    os << "(" << poly_to_string(p) << ")";
    if (!unit) os << "*" << name;
  }
  return os.str();
}

void append_terms(std::ostringstream& os, const PolyX& p, const std::string& name,
                  bool& first) {
  if (poly_is_zero(p)) return;
  std::string t = term_string(p, name);
  if (first) {
    os << t;
    first = false;
  } else if (!t.empty() && t[0] == '-') {
    os << " - " << t.substr(1);
  } else {
    os << " + " << t;
  }
}

Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void rel_add(MomentRel& rel, const MomentSym& s, const PolyX& p) {
  auto it = rel.find(s);
  if (it == rel.end())
    rel[s] = p;
  else
    it->second = poly_add(it->second, p);
  if (rel.count(s) && poly_is_zero(rel[s])) rel.erase(s);
}

}  // namespace

std::string MomentIdentity::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, p] : lhs) append_terms(os, p, sym_name({2, j}), first);
  os << " = ";
  first = true;
  // constants and d1 last, higher moments first
  for (auto it = rhs.rbegin(); it != rhs.rend(); ++it)
    append_terms(os, it->second, sym_name(it->first), first);
  if (first) os << "0";
  return os.str();
}

MomentIdentitySet derive_moment_identities(int c) {
  if (c != 32 && c != 40)
    throw std::invalid_argument("derive_moment_identities: c must be 32 or 40");
  const int tmax = (c == 32) ? 5 : 3;
  const int prec = 4;

  // A_r = E_2^r * prod (1-q^n)^c, needed through q^2
  std::vector<QSeries> a_r;
  {
    QSeries pc = euler_product_pow(c, prec);
    QSeries e2 = eisenstein(2, prec);
    QSeries cur = pc;
    for (int r = 0; r <= tmax; ++r) {
      a_r.push_back(cur);
      cur = cur * e2;
    }
  }

  // [q^m] of the 2t-th Taylor coefficient of P as a linear relation in the
  // moment symbols, coefficients polynomial in x = <h,h>.
  auto taylor_coeff = [&](int t, int m) {
    MomentRel rel;
    for (int r = 0; r <= t; ++r) {
      int s = t - r;
      // (-x/24)^r / (r! (2s)!)
      Rational base = Rational(1) / (factorial(r) * factorial(2 * s));
      if (r % 2 == 1) base = -base;
      for (int i = 0; i < r; ++i) base /= 24;
      for (int n = 0; n <= m && n <= 2; ++n) {
        if (n == 0 && s > 0) continue;  // V_0 = C1, so S_0^j = 0 for j > 0
        Rational amn = a_r[r].at(m - n);
        if (amn == 0) continue;
        PolyX p = poly_shift({base * amn}, r);
        rel_add(rel, MomentSym{n, 2 * s}, p);
      }
    }
    return rel;
  };

  MomentIdentitySet out;
  out.central_charge = c;
  // solved S_2^j expressions, as rhs-style relations
  std::map<int, std::map<MomentSym, PolyX>> solved;

  for (int t = 0; t <= tmax; ++t) {
    int weight = c / 2 + 2 * t;
    if (modular_form_dim(weight) != 2) {
      out.non_derivable.push_back(2 * t);
      continue;
    }
    auto basis = modular_form_basis(weight, prec);
    // echelon basis: basis[0] = 1 + 0 q + a q^2 + ..., basis[1] = q + b q^2 + ...
    const Rational a = basis[0].at(2);
    const Rational b = basis[1].at(2);

    MomentRel rel = taylor_coeff(t, 2);
    {
      MomentRel q0 = taylor_coeff(t, 0);
      for (auto& [s, p] : q0) rel_add(rel, s, poly_scale(p, -a));
      MomentRel q1 = taylor_coeff(t, 1);
      for (auto& [s, p] : q1) rel_add(rel, s, poly_scale(p, -b));
    }

    // substitute previously solved S_2^{2s}
    for (auto it = rel.begin(); it != rel.end();) {
      const MomentSym s = it->first;
      if (s.n == 2 && solved.count(s.j)) {
        PolyX coeff = it->second;
        it = rel.erase(it);
        for (const auto& [rs, rp] : solved[s.j]) {
          // S_2^{s.j} = sum rp * rs  =>  coeff * S_2^{s.j} = sum coeff*rp*rs
          PolyX prod(coeff.size() + rp.size() - 1, Rational(0));
          for (size_t i = 0; i < coeff.size(); ++i)
            for (size_t k = 0; k < rp.size(); ++k) prod[i + k] += coeff[i] * rp[k];
          rel_add(rel, rs, prod);
        }
        it = rel.begin();  // restart; map mutated
      } else {
        ++it;
      }
    }

    // split into S2 side and the rest
    std::map<int, PolyX> s2_terms;
    std::map<MomentSym, PolyX> rest;
    for (auto& [s, p] : rel) {
      if (s.n == 2)
        s2_terms[s.j] = p;
      else
        rest[s] = p;
    }
    if (s2_terms.empty()) throw std::logic_error("moment relation lost its S2 terms");

    // normalize: make the top S_2 coefficient 1, then clear denominators on
    // the S2 side
    int top = s2_terms.rbegin()->first;
    if (s2_terms[top].size() != 1)
      throw std::logic_error("top S2 coefficient should be constant in x");
    Rational scale = Rational(1) / s2_terms[top][0];
    Integer den = 1;
    for (auto& [j, p] : s2_terms)
      for (auto& q : p) {
        Rational v = q * scale;
        den = lcm(den, v.get_den());
      }
    scale *= Rational(den);

    MomentIdentity id;
    for (auto& [j, p] : s2_terms) id.lhs[j] = poly_scale(p, scale);
    for (auto& [s, p] : rest) id.rhs[s] = poly_scale(p, -scale);

    if (s2_terms.size() == 1) {
      // record solved expression for substitution into later relations
      solved[top] = id.rhs;
      if (den != 1) throw std::logic_error("single identity should be monic");
    }
    out.identities.push_back(std::move(id));
  }
  return out;
}

namespace {

// helpers to spell out the printed constants succinctly
PolyX P(std::initializer_list<std::pair<int, long>> terms) {
  PolyX p;
  for (auto [pow, coef] : terms) {
    if (static_cast<size_t>(pow) >= p.size()) p.resize(pow + 1, Rational(0));
    p[pow] = coef;
  }
  return p;
}

constexpr MomentSym kOne{0, 0};
constexpr MomentSym kD1{1, 0};

MomentSym S1(int j) { return {1, j}; }

}  // namespace

MomentIdentitySet printed_moment_identities(int c) {
  MomentIdentitySet s;
  s.central_charge = c;
  if (c == 32) {
    {
      MomentIdentity d2;
      d2.lhs[0] = P({{0, 1}});
      d2.rhs[kD1] = P({{0, 248}});
      d2.rhs[kOne] = P({{0, 139504}});
      s.identities.push_back(d2);
    }
    {
      MomentIdentity i2;
      i2.lhs[2] = P({{0, 1}});
      i2.rhs[S1(2)] = P({{0, -496}});
      i2.rhs[kD1] = P({{1, 60}});
      i2.rhs[kOne] = P({{1, 16440}});
      s.identities.push_back(i2);
    }
    {
      MomentIdentity i4;
      i4.lhs[4] = P({{0, 1}});
      i4.rhs[S1(4)] = P({{0, 488}});
      i4.rhs[S1(2)] = P({{1, -504}});
      i4.rhs[kD1] = P({{2, 36}});
      i4.rhs[kOne] = P({{2, 5328}});
      s.identities.push_back(i4);
    }
    {
      MomentIdentity i6;
      i6.lhs[6] = P({{0, 1}});
      i6.rhs[S1(6)] = P({{0, -256}});
      i6.rhs[S1(4)] = P({{1, 900}});
      i6.rhs[S1(2)] = P({{2, -540}});
      i6.rhs[kD1] = P({{3, 30}});
      i6.rhs[kOne] = P({{3, 2640}});
      s.identities.push_back(i6);
    }
    {
      MomentIdentity i10;
      i10.lhs[10] = P({{0, 4}});
      i10.lhs[8] = P({{1, -15}});
      i10.rhs[S1(10)] = P({{0, -64}});
      i10.rhs[S1(8)] = P({{1, -120}});
      i10.rhs[S1(6)] = P({{2, 5040}});
      i10.rhs[S1(4)] = P({{3, -12600}});
      i10.rhs[S1(2)] = P({{4, 6300}});
      i10.rhs[kD1] = P({{5, -315}});
      i10.rhs[kOne] = P({{5, -20160}});
      s.identities.push_back(i10);
    }
    s.non_derivable = {8};
  } else if (c == 40) {
    {
      MomentIdentity d2;
      d2.lhs[0] = P({{0, 1}});
      d2.rhs[kD1] = P({{0, 496}});
      d2.rhs[kOne] = P({{0, 20620}});
      s.identities.push_back(d2);
    }
    {
      MomentIdentity i2;
      i2.lhs[2] = P({{0, 1}});
      i2.rhs[S1(2)] = P({{0, -248}});
      i2.rhs[kD1] = P({{1, 60}});
      i2.rhs[kOne] = P({{1, 1560}});
      s.identities.push_back(i2);
    }
    {
      MomentIdentity i6;
      i6.lhs[6] = P({{0, 4}});
      i6.lhs[4] = P({{1, -5}});
      i6.rhs[S1(6)] = P({{0, -32}});
      i6.rhs[S1(4)] = P({{1, -80}});
      i6.rhs[S1(2)] = P({{2, 360}});
      i6.rhs[kD1] = P({{3, -60}});
      i6.rhs[kOne] = P({{3, -1200}});
      s.identities.push_back(i6);
    }
    s.non_derivable = {4};
  } else {
    throw std::invalid_argument("printed_moment_identities: c must be 32 or 40");
  }
  return s;
}

namespace {

bool poly_eq(const PolyX& a, const PolyX& b) {
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    Rational x = i < a.size() ? a[i] : Rational(0);
    Rational y = i < b.size() ? b[i] : Rational(0);
    if (x != y) return false;
  }
  return true;
}

template <typename K>
bool map_eq(const std::map<K, PolyX>& a, const std::map<K, PolyX>& b) {
  for (const auto& [k, p] : a) {
    auto it = b.find(k);
    if (it == b.end()) {
      if (!poly_is_zero(p)) return false;
    } else if (!poly_eq(p, it->second)) {
      return false;
    }
  }
  for (const auto& [k, p] : b)
    if (!a.count(k) && !poly_is_zero(p)) return false;
  return true;
}

}  // namespace

bool identity_sets_equal(const MomentIdentitySet& a, const MomentIdentitySet& b) {
  if (a.central_charge != b.central_charge) return false;
  if (a.identities.size() != b.identities.size()) return false;
  if (a.non_derivable != b.non_derivable) return false;
  for (size_t i = 0; i < a.identities.size(); ++i) {
    if (!map_eq(a.identities[i].lhs, b.identities[i].lhs)) return false;
    if (!map_eq(a.identities[i].rhs, b.identities[i].rhs)) return false;
  }
  return true;
}

}  // namespace brs
