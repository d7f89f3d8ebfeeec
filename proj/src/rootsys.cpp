#include "brs/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace brs {

SimpleType SimpleType::make(char family, int rank) {
  if (rank < 1) throw std::invalid_argument("SimpleType: rank must be positive");
  switch (family) {
    case 'A':
      return {'A', rank};
    case 'B':
      if (rank == 1) return {'A', 1};
      return {'B', rank};
    case 'C':
      if (rank == 1) return {'A', 1};
      if (rank == 2) return {'B', 2};
      return {'C', rank};
    case 'D':
      if (rank == 2)
        throw std::invalid_argument("SimpleType: D2 is not simple (A1 A1)");
      if (rank == 3) return {'A', 3};
      if (rank < 4) throw std::invalid_argument("SimpleType: invalid D rank");
      return {'D', rank};
    case 'E':
      if (rank < 6 || rank > 8) throw std::invalid_argument("SimpleType: E rank must be 6, 7 or 8");
      return {'E', rank};
    case 'F':
      if (rank != 4) throw std::invalid_argument("SimpleType: F rank must be 4");
      return {'F', 4};
    case 'G':
      if (rank != 2) throw std::invalid_argument("SimpleType: G rank must be 2");
      return {'G', 2};
    default:
      throw std::invalid_argument("SimpleType: unknown family");
  }
}

long SimpleType::dim() const {
  long l = rank;
  switch (family) {
    case 'A': return l * l + 2 * l;
    case 'B': return 2 * l * l + l;
    case 'C': return 2 * l * l + l;
    case 'D': return 2 * l * l - l;
    case 'E': return rank == 6 ? 78 : rank == 7 ? 133 : 248;
    case 'F': return 52;
    case 'G': return 14;
  }
  throw std::logic_error("SimpleType::dim");
}

int SimpleType::dual_coxeter() const {
  switch (family) {
    case 'A': return rank + 1;
    case 'B': return 2 * rank - 1;
    case 'C': return rank + 1;
    case 'D': return 2 * rank - 2;
    case 'E': return rank == 6 ? 12 : rank == 7 ? 18 : 30;
    case 'F': return 9;
    case 'G': return 4;
  }
  throw std::logic_error("SimpleType::dual_coxeter");
}

Rational factor_central_charge(const Factor& f) {
  if (f.level < 1) throw std::invalid_argument("factor_central_charge: level must be positive");
  return rat(f.type.dim() * f.level, f.level + f.type.dual_coxeter());
}

RootSystem::RootSystem(int abelian_rank, std::vector<Factor> factors)
    : abelian_rank_(abelian_rank), factors_(std::move(factors)) {
  if (abelian_rank_ < 0) throw std::invalid_argument("RootSystem: negative abelian rank");
  for (const auto& f : factors_)
    if (f.level < 1) throw std::invalid_argument("RootSystem: nonpositive level");
  std::sort(factors_.begin(), factors_.end());
}

long RootSystem::dim() const {
  long d = abelian_rank_;
  for (const auto& f : factors_) d += f.type.dim();
  return d;
}

long RootSystem::total_rank() const {
  long r = abelian_rank_;
  for (const auto& f : factors_) r += f.type.rank;
  return r;
}

Rational RootSystem::central_charge() const {
  Rational c = abelian_rank_;
  for (const auto& f : factors_) c += factor_central_charge(f);
  return c;
}

std::vector<std::pair<Factor, int>> RootSystem::classes() const {
  std::vector<std::pair<Factor, int>> out;
  for (const auto& f : factors_) {
    if (!out.empty() && out.back().first == f)
      ++out.back().second;
    else
      out.emplace_back(f, 1);
  }
  return out;
}

bool is_balanced(const RootSystem& rs) {
  if (rs.empty()) throw std::invalid_argument("is_balanced: empty root system");
  if (rs.factors().empty()) return true;  // c = d = f != 0
  Rational c = rs.central_charge();
  Rational f = rs.abelian_rank();
  Rational d = rs.dim();
  for (const auto& fac : rs.factors()) {
    Rational lhs = (c - f) * fac.type.dual_coxeter() / fac.level;
    if (lhs != d - c) return false;
  }
  return true;
}

bool is_pure_power(const RootSystem& rs) {
  const auto& fs = rs.factors();
  for (size_t i = 1; i < fs.size(); ++i)
    if (!(fs[i] == fs[0])) return false;
  return true;
}

namespace {

// All simple types whose minimal central charge (level 1) does not exceed c.
std::vector<SimpleType> eligible_types(const Rational& c) {
  std::vector<SimpleType> out;
  auto consider = [&](char fam, int rank) {
    SimpleType t{fam, rank};
    if (rat(t.dim(), 1 + t.dual_coxeter()) <= c) out.push_back(t);
  };
  // ranks are bounded because the level-1 central charge grows with rank
  long cap = to_long(floor_div(c)) + 2;
  for (int l = 1; l <= cap; ++l) consider('A', l);
  for (int l = 2; l <= cap; ++l) consider('B', l);
  for (int l = 3; l <= cap; ++l) consider('C', l);
  for (int l = 4; l <= cap; ++l) consider('D', l);
  for (int l = 6; l <= 8; ++l) consider('E', l);
  consider('F', 4);
  consider('G', 2);
  return out;
}

struct Item {
  SimpleType type;
  int level;
  long dim;
};

void enumerate_multisets(const std::vector<Item>& items,
                         const std::vector<std::vector<bool>>& reach, size_t idx,
                         long remaining, std::vector<Factor>& stack,
                         std::vector<RootSystem>& out) {
  if (remaining == 0) {
    out.emplace_back(0, stack);
    return;
  }
  if (idx == items.size()) return;
  if (!reach[idx][remaining]) return;
  const Item& it = items[idx];
  long maxcount = remaining / it.dim;
  for (long t = 0; t <= maxcount; ++t) {
    long rest = remaining - t * it.dim;
    if (idx + 1 == items.size()) {
      if (rest != 0) continue;
    } else if (!reach[idx + 1][rest]) {
      continue;
    }
    for (long u = 0; u < t; ++u) stack.push_back({it.type, it.level});
    enumerate_multisets(items, reach, idx + 1, rest, stack, out);
    for (long u = 0; u < t; ++u) stack.pop_back();
  }
}

// Semisimple balanced systems with total central charge c: the balance
// condition forces h_i/k_i = (d - c)/c across all factors, so for each
// candidate dimension d there is at most one level per simple type.
std::vector<RootSystem> enumerate_semisimple(const Rational& c) {
  std::vector<RootSystem> out;
  auto types = eligible_types(c);
  int hmax = 0;
  for (const auto& t : types) hmax = std::max(hmax, t.dual_coxeter());
  long dmin = to_long(floor_div(c)) + 1;
  long dmax = to_long(floor_div(c * (1 + hmax)));
  for (long d = dmin; d <= dmax; ++d) {
    Rational gap = Rational(d) - c;
    std::vector<Item> items;
    for (const auto& t : types) {
      if (t.dim() > d) continue;
      Rational k = Rational(t.dual_coxeter()) * c / gap;
      if (!is_integer(k) || k < 1) continue;
      items.push_back({t, static_cast<int>(to_long(k.get_num())), t.dim()});
    }
    if (items.empty()) continue;
    // reach[i][s]: can items i.. sum to s
    std::vector<std::vector<bool>> reach(items.size() + 1,
                                         std::vector<bool>(d + 1, false));
    reach[items.size()][0] = true;
    for (size_t i = items.size(); i-- > 0;) {
      for (long s = 0; s <= d; ++s) {
        if (reach[i + 1][s]) {
          reach[i][s] = true;
          continue;
        }
        if (s >= items[i].dim && reach[i][s - items[i].dim]) reach[i][s] = true;
      }
    }
    if (!reach[0][d]) continue;
    std::vector<Factor> stack;
    enumerate_multisets(items, reach, 0, d, stack, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<RootSystem> enumerate_brs(const Rational& c, int f) {
  if (c <= 0 || c < f || f < 0)
    throw std::invalid_argument("enumerate_brs: need c > 0 and c >= f >= 0");
  if (f == 0) return enumerate_semisimple(c);
  if (c == f) return {RootSystem(f, {})};
  auto semi = enumerate_semisimple(c - f);
  std::vector<RootSystem> out;
  out.reserve(semi.size());
  for (auto& rs : semi) out.emplace_back(f, rs.factors());
  return out;
}

ParseError::ParseError(const std::string& msg, size_t pos)
    : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
      position(pos) {}

namespace {

long parse_number(const std::string& s, size_t& i, const char* what) {
  size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw ParseError(std::string("expected ") + what, start);
  long v = 0;
  for (size_t j = start; j < i; ++j) {
    v = v * 10 + (s[j] - '0');
    if (v > 1000000000L) throw ParseError(std::string(what) + " out of range", start);
  }
  return v;
}

}  // namespace

RootSystem parse_symbol(const std::string& text) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  int abelian = 0;
  std::vector<Factor> factors;
  skip_ws();
  if (i < text.size() && text[i] == 'O') {
    ++i;
    if (i >= text.size() || text[i] != '^') throw ParseError("expected '^' after O", i);
    ++i;
    abelian = static_cast<int>(parse_number(text, i, "abelian rank"));
    skip_ws();
  }
  while (i < text.size()) {
    char fam = text[i];
    if (fam < 'A' || fam > 'G')
      throw ParseError("expected family letter A-G", i);
    ++i;
    long rank = parse_number(text, i, "rank");
    if (i >= text.size() || text[i] != ',') throw ParseError("expected ',' before level", i);
    ++i;
    long level = parse_number(text, i, "level");
    if (level < 1) throw ParseError("level must be positive", i);
    long mult = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      mult = parse_number(text, i, "multiplicity");
      if (mult < 1) throw ParseError("multiplicity must be positive", i);
    }
    size_t at = i;
    try {
      if (fam == 'D' && rank == 2) {
        // D2 = A1 A1
        for (long m = 0; m < 2 * mult; ++m)
          factors.push_back({SimpleType::make('A', 1), static_cast<int>(level)});
      } else {
        SimpleType t = SimpleType::make(fam, static_cast<int>(rank));
        for (long m = 0; m < mult; ++m) factors.push_back({t, static_cast<int>(level)});
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), at);
    }
    skip_ws();
  }
  return RootSystem(abelian, std::move(factors));
}

std::string format_symbol(const RootSystem& rs) {
  std::ostringstream os;
  bool first = true;
  if (rs.abelian_rank() > 0 || rs.factors().empty()) {
    os << "O^" << rs.abelian_rank();
    first = false;
  }
  for (const auto& [f, mult] : rs.classes()) {
    if (!first) os << " ";
    os << f.type.family << f.type.rank << "," << f.level;
    if (mult > 1) os << "^" << mult;
    first = false;
  }
  return os.str();
}

}  // namespace brs
