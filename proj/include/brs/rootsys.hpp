#pragma once

#include <compare>
#include <string>
#include <vector>

#include "brs/rational.hpp"

namespace brs {

// One of the simple families A..G with its Lie rank. Low-rank aliases are
// normalized on construction: B1 -> A1, C1 -> A1, C2 -> B2, D3 -> A3.
// D2 = A1 A1 splits into two factors and is handled at parse level.
struct SimpleType {
  char family = 'A';
  int rank = 0;

  static SimpleType make(char family, int rank);

  long dim() const;
  int dual_coxeter() const;

  auto operator<=>(const SimpleType&) const = default;
};

struct Factor {
  SimpleType type;
  int level = 1;

  auto operator<=>(const Factor&) const = default;
};

// Central charge d k / (k + h_dual) of one simple factor at its level.
Rational factor_central_charge(const Factor& f);

// Extended root system O^f Phi_{1,k_1} ... Phi_{n,k_n}: abelian rank plus a
// canonically sorted multiset of levelled simple factors. A supplemented
// root system is represented the same way with f = rk L.
class RootSystem {
 public:
  RootSystem() = default;
  RootSystem(int abelian_rank, std::vector<Factor> factors);

  int abelian_rank() const { return abelian_rank_; }
  const std::vector<Factor>& factors() const { return factors_; }

  bool empty() const { return abelian_rank_ == 0 && factors_.empty(); }

  long dim() const;                  // f + sum of factor dims
  long total_rank() const;           // f + sum of factor ranks
  Rational central_charge() const;  // f + sum of factor central charges

  // (type, level) classes with multiplicities, in canonical order.
  std::vector<std::pair<Factor, int>> classes() const;

  auto operator<=>(const RootSystem&) const = default;

 private:
  int abelian_rank_ = 0;
  std::vector<Factor> factors_;
};

// Definition of balance: (c - f) h_i/k_i = d - c for every factor, with
// c = d = f != 0 when there are no factors. Throws on the empty system.
bool is_balanced(const RootSystem& rs);

// True iff all factors share a single (type, level); n = 0 allowed.
bool is_pure_power(const RootSystem& rs);

// The finite set BRS(c, f), enumerated constructively. c may be rational;
// factor dimension totals are always integral.
std::vector<RootSystem> enumerate_brs(const Rational& c, int f);

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t pos);
  size_t position;
};

// Symbol grammar: optional "O^<f>", then whitespace-separated factors
// "<Family><rank>,<level>[^<mult>]". parse(format(rs)) == rs.
RootSystem parse_symbol(const std::string& text);
std::string format_symbol(const RootSystem& rs);

}  // namespace brs
