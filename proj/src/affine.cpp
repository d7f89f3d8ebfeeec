#include "brs/affine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "brs/qseries.hpp"

namespace brs {

std::vector<Weight> integrable_weights(const Factor& f) {
  const LieData& g = lie_data(f.type);
  std::vector<Weight> out;
  Weight cur(g.rank, 0);
  // lexicographic depth-first fill with the comark budget
  std::function<void(int, int)> rec = [&](int i, int budget) {
    if (i == g.rank) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v * g.comarks[i] <= budget; ++v) {
      cur[i] = v;
      rec(i + 1, budget - v * g.comarks[i]);
    }
    cur[i] = 0;
  };
  rec(0, f.level);
  std::sort(out.begin(), out.end());
  return out;
}

Rational conformal_weight(const Factor& f, const Weight& lam) {
  const LieData& g = lie_data(f.type);
  // (lam, lam + 2rho) = (lam,lam) + 2 (lam, rho)
  Rational n = g.pair(lam, lam) + 2 * g.pair(lam, g.rho);
  return n / (2 * Rational(f.level + g.dual_coxeter));
}

namespace {

// exact LDL^T of a positive definite rational matrix
struct Ldl {
  MatQ l;               // unit lower triangular
  std::vector<Rational> d;
};

Ldl ldl_decompose(const MatQ& a) {
  int n = static_cast<int>(a.rows());
  Ldl out;
  out.l = MatQ::Identity(n, n);
  out.d.assign(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    Rational di = a(i, i);
    for (int t = 0; t < i; ++t) di -= out.l(i, t) * out.l(i, t) * out.d[t];
    if (di <= 0) throw std::logic_error("ldl: matrix not positive definite");
    out.d[i] = di;
    for (int j = i + 1; j < n; ++j) {
      Rational v = a(j, i);
      for (int t = 0; t < i; ++t) v -= out.l(j, t) * out.l(i, t) * out.d[t];
      out.l(j, i) = v / di;
    }
  }
  return out;
}

// largest integer <= p + sqrt(r), r >= 0
Integer floor_plus_sqrt(const Rational& p, const Rational& r) {
  Integer g = floor_div(p) + isqrt_floor(r) + 2;
  while (true) {
    Rational diff = Rational(g) - p;  // need diff <= sqrt(r)
    if (diff <= 0 || diff * diff <= r) return g;
    g -= 1;
  }
}

// smallest integer >= p - sqrt(r), r >= 0
Integer ceil_minus_sqrt(const Rational& p, const Rational& r) {
  Integer g = ceil_div(p) - isqrt_floor(r) - 2;
  while (true) {
    Rational diff = p - Rational(g);  // need diff <= sqrt(r)
    if (diff <= 0 || diff * diff <= r) return g;
    g += 1;
  }
}

struct ThetaKey {
  SimpleType type;
  int level;
  Weight lam;
  int depth;
  auto operator<=>(const ThetaKey&) const = default;
};

std::mutex graded_mutex;
std::map<ThetaKey, GradedDims> graded_cache;

GradedDims compute_graded_dims(const Factor& f, const Weight& lam, int depth,
                               long lattice_cap) {
  const LieData& g = lie_data(f.type);
  int l = g.rank;
  Rational kap = f.level + g.dual_coxeter;
  Rational h = conformal_weight(f, lam);

  // gamma = lam + kappa * Gv c (labels), c integer; minimize the shifted norm
  // (gamma + rho, gamma + rho) <= (rho, rho) + 2 kappa (h + depth)
  MatQ a = g.coroot_gram * (kap * kap);
  Ldl ldl = ldl_decompose(a);
  // center: A m = -kappa (lam + rho labels) paired against the coroot basis:
  // (gamma + rho, nu(a_i^vee)) = (lam_i + 1) + kappa (Gv c)_i, so the exact
  // condition is Q(c) = sum_i D_i (c_i + u_i + m-part)^2 with linear term
  // 2 kappa c . (lam + 1). Complete the square through the LDL recursion by
  // first shifting: Q(c) = c^T A c + 2 kappa c.(lam+1) + (lam+rho,lam+rho).
  VecQ lin(l);
  for (int i = 0; i < l; ++i) lin(i) = kap * (lam[i] + 1);
  // center m solves A m = -lin
  VecQ m(l);
  {
    // forward/backward substitution with LDL
    VecQ y(l);
    for (int i = 0; i < l; ++i) {
      Rational v = -lin(i);
      for (int t = 0; t < i; ++t) v -= ldl.l(i, t) * y(t);
      y(i) = v;
    }
    for (int i = 0; i < l; ++i) y(i) /= ldl.d[i];
    for (int i = l - 1; i >= 0; --i) {
      Rational v = y(i);
      for (int t = i + 1; t < l; ++t) v -= ldl.l(t, i) * m(t);
      m(i) = v;
    }
  }
  Weight lr(lam);
  for (auto& v : lr) ++v;
  Rational lam_rho2 = g.pair(lr, lr);
  Rational rho2 = g.pair(g.rho, g.rho);
  Rational bound = rho2 + 2 * kap * (h + depth);
  // Q(c) = (c-m)^T A (c-m) + c0 with c0 = (lam+rho,lam+rho) - m^T A m... but
  // easier: T = bound - lam_rho2 + m^T A m, enumerate (c-m)^T A (c-m) <= T
  Rational mAm = 0;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) mAm += m(i) * a(i, j) * m(j);
  Rational t_total = bound - lam_rho2 + mAm;

  std::vector<Integer> theta(depth + 1, Integer(0));
  if (t_total >= 0) {
    // recursive coordinate enumeration, last coordinate outermost
    std::vector<Integer> c(l);
    long visited = 0;
    std::function<void(int, const Rational&)> rec = [&](int i, const Rational& rem) {
      // rem = remaining budget for sum_{t<=i} D_t (x_t + inner_t)^2
      Rational inner = 0;  // sum_{j>i} L(j,i) x_j
      for (int j = i + 1; j < l; ++j) inner += ldl.l(j, i) * (Rational(c[j]) - m(j));
      // D_i (x_i + inner)^2 <= rem, x_i = c_i - m_i
      Rational rad = rem / ldl.d[i];
      Rational center = m(i) - inner;
      Integer lo = ceil_minus_sqrt(center, rad);
      Integer hi = floor_plus_sqrt(center, rad);
      for (Integer ci = lo; ci <= hi; ci += 1) {
        c[i] = ci;
        Rational term = Rational(ci) - center;
        Rational used = ldl.d[i] * term * term;
        if (used > rem) continue;
        if (++visited > lattice_cap)
          throw ResourceError("graded_dims: lattice enumeration cap exceeded");
        if (i == 0) {
          // gamma labels
          Weight gamma(lam);
          for (int r = 0; r < l; ++r) {
            Rational add = 0;
            for (int s = 0; s < l; ++s)
              if (c[s] != 0) add += g.coroot_gram(r, s) * Rational(c[s]);
            add *= kap;
            if (!is_integer(add)) throw std::logic_error("graded_dims: non-integral gamma");
            gamma[r] += static_cast<int>(to_long(add.get_num()));
          }
          Weight gr(gamma);
          for (auto& v : gr) ++v;
          Rational e = (g.pair(gr, gr) - rho2) / (2 * kap);  // (gamma,gamma+2rho)/(2kap)
          Rational idx = e - h;
          if (!is_integer(idx) || idx < 0)
            throw std::logic_error("graded_dims: bad exponent");
          Integer ii = idx.get_num();
          if (ii <= depth) {
            auto [sign, dom] = signed_dominant(g, gamma);
            if (sign != 0) {
              Integer w = weyl_dim(g, dom);
              theta[to_long(ii)] += sign > 0 ? w : -w;
            }
          }
        } else {
          rec(i - 1, rem - used);
        }
      }
    };
    rec(l - 1, t_total);
  }

  // free generating factor prod (1-q^n)^{-dim g}
  QSeries pre = euler_product_pow(-static_cast<int>(g.dim), depth);
  GradedDims out;
  out.offset = h;
  out.dims.assign(depth + 1, Integer(0));
  for (int n = 0; n <= depth; ++n) {
    Rational acc = 0;
    for (int t = 0; t <= n; ++t) acc += pre.at(n - t) * Rational(theta[t]);
    if (!is_integer(acc) || acc < 0)
      throw std::logic_error("graded_dims: non-integral or negative dimension");
    out.dims[n] = acc.get_num();
  }
  if (out.dims[0] != weyl_dim(g, lam))
    throw std::logic_error("graded_dims: leading term mismatch");
  return out;
}

}  // namespace

GradedDims graded_dims(const Factor& f, const Weight& lam, int depth, long lattice_cap) {
  ThetaKey key{f.type, f.level, lam, depth};
  {
    std::lock_guard<std::mutex> lock(graded_mutex);
    auto it = graded_cache.find(key);
    if (it != graded_cache.end()) return it->second;
  }
  GradedDims d = compute_graded_dims(f, lam, depth, lattice_cap);
  std::lock_guard<std::mutex> lock(graded_mutex);
  graded_cache.emplace(key, d);
  return d;
}

WeightSystem vacuum_depth2(const Factor& f) {
  const LieData& g = lie_data(f.type);
  WeightSystem out = weight_system_sum(sym2_weights(g), adjoint_weights(g));
  if (f.level == 1) {
    Weight two_theta(g.theta_labels);
    for (auto& v : two_theta) v *= 2;
    out = weight_system_sub(out, weight_system(g, two_theta));
  }
  return out;
}

Integer vacuum_depth2_dim(const Factor& f) {
  const LieData& g = lie_data(f.type);
  Integer d = g.dim;
  Integer out = d * (d + 1) / 2 + d;
  if (f.level == 1) {
    Weight two_theta(g.theta_labels);
    for (auto& v : two_theta) v *= 2;
    out -= weyl_dim(g, two_theta);
  }
  return out;
}

std::vector<Integer> vacuum_depth2_power_sums(const Factor& f,
                                              const std::vector<int>& h, int j_max) {
  const LieData& g = lie_data(f.type);
  auto adj = adjoint_power_sums(g, h, j_max);
  auto out = sym2_power_sums(adj, j_max);
  for (int j = 0; j <= j_max; ++j) out[j] += adj[j];
  if (f.level == 1) {
    Weight two_theta(g.theta_labels);
    for (auto& v : two_theta) v *= 2;
    auto corr = module_power_sums(g, two_theta, h, j_max);
    for (int j = 0; j <= j_max; ++j) out[j] -= corr[j];
  }
  return out;
}

namespace {

struct FactorOptions {
  Factor factor;
  int count = 0;
  std::vector<Weight> weights;
  std::vector<Rational> h;
};

}  // namespace

std::vector<ModuleOrbit> module_orbits_in_range(const RootSystem& rs,
                                                const Rational& min_h,
                                                const Rational& max_h,
                                                bool integral_only, long orbit_cap) {
  if (rs.abelian_rank() != 0)
    throw std::invalid_argument("module_orbits_in_range: semisimple systems only");
  auto classes = rs.classes();
  std::vector<FactorOptions> options;
  for (const auto& [f, count] : classes) {
    FactorOptions fo;
    fo.factor = f;
    fo.count = count;
    for (const auto& lam : integrable_weights(f)) {
      Rational h = conformal_weight(f, lam);
      if (h > max_h) continue;
      fo.weights.push_back(lam);
      fo.h.push_back(h);
    }
    options.push_back(std::move(fo));
  }

  // per-class multisets with their conformal weights
  struct ClassChoice {
    std::vector<Weight> weights;  // sorted multiset, size = count
    Rational h;
  };
  std::vector<std::vector<ClassChoice>> per_class;
  for (const auto& fo : options) {
    std::vector<ClassChoice> choices;
    std::vector<Weight> stack;
    std::function<void(size_t, int, Rational)> rec = [&](size_t idx, int left,
                                                         Rational used) {
      if (used > max_h) return;
      if (left == 0) {
        ClassChoice cc;
        cc.weights = stack;
        std::sort(cc.weights.begin(), cc.weights.end());
        cc.h = used;
        choices.push_back(std::move(cc));
        return;
      }
      if (idx == fo.weights.size()) return;
      for (int t = left; t >= 0; --t) {
        Rational cost = fo.h[idx] * t;
        if (used + cost > max_h) continue;
        for (int u = 0; u < t; ++u) stack.push_back(fo.weights[idx]);
        rec(idx + 1, left - t, used + cost);
        for (int u = 0; u < t; ++u) stack.pop_back();
      }
    };
    rec(0, fo.count, Rational(0));
    if (static_cast<long>(choices.size()) > orbit_cap)
      throw ResourceError("module_orbits_in_range: class choice cap exceeded");
    per_class.push_back(std::move(choices));
  }

  std::vector<ModuleOrbit> out;
  std::vector<const ClassChoice*> chosen(per_class.size());
  std::function<void(size_t, Rational)> combine = [&](size_t ci, Rational used) {
    if (used > max_h) return;
    if (ci == per_class.size()) {
      if (used < min_h) return;
      if (integral_only && !is_integer(used)) return;
      ModuleOrbit o;
      for (const auto* cc : chosen) o.per_class.push_back(cc->weights);
      o.total_h = used;
      out.push_back(std::move(o));
      if (static_cast<long>(out.size()) > orbit_cap)
        throw ResourceError("module_orbits_in_range: orbit cap exceeded");
      return;
    }
    for (const auto& cc : per_class[ci]) {
      chosen[ci] = &cc;
      combine(ci + 1, used + cc.h);
    }
  };
  combine(0, Rational(0));
  return out;
}

Integer orbit_top_dim(const RootSystem& rs, const ModuleOrbit& o) {
  auto classes = rs.classes();
  Integer dim = 1;
  for (size_t c = 0; c < classes.size(); ++c) {
    const LieData& g = lie_data(classes[c].first.type);
    for (const auto& w : o.per_class[c]) dim *= weyl_dim(g, w);
  }
  return dim;
}

std::vector<ModuleLabel> modules_with_conformal_weight(const RootSystem& rs,
                                                       const Rational& target,
                                                       bool collapse_orbits,
                                                       long orbit_cap) {
  auto orbits = module_orbits_in_range(rs, target, target, false, orbit_cap);
  std::vector<ModuleLabel> out;
  if (collapse_orbits) {
    for (const auto& o : orbits) {
      ModuleLabel lbl;
      for (const auto& cls : o.per_class)
        for (const auto& w : cls) lbl.weights.push_back(w);
      out.push_back(std::move(lbl));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  // expand each orbit into all distinct arrangements per class
  for (const auto& o : orbits) {
    std::vector<std::vector<std::vector<Weight>>> arrangements;
    for (const auto& cls : o.per_class) {
      std::vector<std::vector<Weight>> perms;
      std::vector<Weight> p(cls);
      std::sort(p.begin(), p.end());
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      arrangements.push_back(std::move(perms));
    }
    std::vector<size_t> pick(arrangements.size(), 0);
    while (true) {
      ModuleLabel lbl;
      for (size_t c = 0; c < arrangements.size(); ++c)
        for (const auto& w : arrangements[c][pick[c]]) lbl.weights.push_back(w);
      out.push_back(std::move(lbl));
      if (static_cast<long>(out.size()) > orbit_cap)
        throw ResourceError("modules_with_conformal_weight: expansion cap exceeded");
      size_t c = 0;
      while (c < pick.size() && ++pick[c] == arrangements[c].size()) pick[c++] = 0;
      if (c == pick.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace brs
