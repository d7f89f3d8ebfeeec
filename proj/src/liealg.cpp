#include "brs/liealg.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_set>

namespace brs {

Integer WeightSystem::dim() const {
  Integer d = 0;
  for (const auto& [w, m] : entries) d += m;
  return d;
}

Rational LieData::pair(const Weight& x, const Weight& y) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < rank; ++j)
      if (y[j] != 0) row += weight_gram(i, j) * y[j];
    s += row * x[i];
  }
  return s;
}

void LieData::reflect(Weight& x, int i) const {
  int xi = x[i];
  if (xi == 0) return;
  for (int j = 0; j < rank; ++j) x[j] -= xi * cartan(j, i);
}

bool LieData::dominant(const Weight& x) const {
  return std::all_of(x.begin(), x.end(), [](int v) { return v >= 0; });
}

Weight LieData::dominant_rep(Weight x) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank; ++i) {
      if (x[i] < 0) {
        reflect(x, i);
        changed = true;
      }
    }
  }
  return x;
}

namespace {

Eigen::MatrixXi cartan_matrix(SimpleType t) {
  int l = t.rank;
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(l, l);
  for (int i = 0; i < l; ++i) a(i, i) = 2;
  auto bond = [&](int i, int j) { a(i, j) = a(j, i) = -1; };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      a(l - 1, l - 2) = -2;  // short last root
      break;
    case 'C':
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      a(l - 2, l - 1) = -2;  // long last root
      break;
    case 'D':
      for (int i = 0; i + 1 < l - 1; ++i) bond(i, i + 1);
      bond(l - 3, l - 1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7)(-8) with node 2 attached to 4
      bond(0, 2);
      bond(2, 3);
      bond(1, 3);
      for (int i = 4; i < l; ++i) bond(i - 1, i);
      break;
    case 'F':
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      a(2, 1) = -2;  // alpha_3 short
      break;
    case 'G':
      bond(0, 1);
      a(1, 0) = -3;  // alpha_2 short
      break;
    default:
      throw std::logic_error("cartan_matrix: bad family");
  }
  return a;
}

// Exact inverse by Gauss-Jordan; matrices here are tiny.
MatQ mat_inverse(const MatQ& m) {
  int n = static_cast<int>(m.rows());
  MatQ a = m;
  MatQ inv = MatQ::Identity(n, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("mat_inverse: singular matrix");
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    Rational p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

LieData build_lie_data(SimpleType t) {
  LieData g;
  g.type = t;
  g.rank = t.rank;
  g.dim = t.dim();
  g.dual_coxeter = t.dual_coxeter();
  g.cartan = cartan_matrix(t);
  int l = g.rank;

  // root norms from the Cartan matrix: norm_j / norm_i = a(i,j) / a(j,i)
  std::vector<Rational> norm(l, Rational(0));
  norm[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        if (i == j || g.cartan(i, j) == 0) continue;
        if (norm[i] != 0 && norm[j] == 0) {
          norm[j] = norm[i] * g.cartan(i, j) / g.cartan(j, i);
          changed = true;
        }
      }
  }
  Rational mx = *std::max_element(norm.begin(), norm.end());
  for (auto& v : norm) v = v * 2 / mx;  // long roots get norm 2
  g.root_norm2 = norm;

  g.simple_gram = MatQ(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      g.simple_gram(i, j) = Rational(g.cartan(i, j)) * norm[i] / 2;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < i; ++j)
      if (g.simple_gram(i, j) != g.simple_gram(j, i))
        throw std::logic_error("lie data: Gram matrix not symmetric");

  MatQ ginv = mat_inverse(g.simple_gram);
  MatQ d = MatQ::Zero(l, l);
  for (int i = 0; i < l; ++i) d(i, i) = norm[i] / 2;
  g.weight_gram = d * ginv * d;

  g.coroot_gram = MatQ(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      g.coroot_gram(i, j) = 4 * g.simple_gram(i, j) / (norm[i] * norm[j]);

  // positive roots by closure over root strings
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  auto labels_of = [&](const std::vector<int>& n) {
    Weight m(l, 0);
    for (int i = 0; i < l; ++i) {
      int s = 0;
      for (int j = 0; j < l; ++j) s += g.cartan(i, j) * n[j];
      m[i] = s;
    }
    return m;
  };
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& n : frontier) {
      Weight m = labels_of(n);
      for (int i = 0; i < l; ++i) {
        // p = how far the alpha_i string extends backwards from n
        int p = 0;
        std::vector<int> back = n;
        while (true) {
          back[i] -= 1;
          if (back[i] < 0 || !seen.count(back)) break;
          ++p;
        }
        if (p - m[i] > 0) {
          std::vector<int> up = n;
          up[i] += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  g.positive_roots.assign(seen.begin(), seen.end());
  for (const auto& n : g.positive_roots) g.positive_root_labels.push_back(labels_of(n));

  if (static_cast<long>(g.positive_roots.size()) != (g.dim - l) / 2)
    throw std::logic_error("lie data: positive root count mismatch");

  // highest root = unique root of maximal height
  size_t hi = 0;
  long best = -1;
  for (size_t i = 0; i < g.positive_roots.size(); ++i) {
    long h = 0;
    for (int v : g.positive_roots[i]) h += v;
    if (h > best) {
      best = h;
      hi = i;
    }
  }
  g.marks = g.positive_roots[hi];
  g.theta_labels = g.positive_root_labels[hi];
  g.comarks.resize(l);
  for (int i = 0; i < l; ++i) {
    Rational cm = Rational(g.marks[i]) * norm[i] / 2;
    if (!is_integer(cm)) throw std::logic_error("lie data: comark not integral");
    g.comarks[i] = static_cast<int>(to_long(cm.get_num()));
  }
  int hsum = 1;
  for (int c : g.comarks) hsum += c;
  if (hsum != g.dual_coxeter) throw std::logic_error("lie data: dual Coxeter mismatch");

  // theta norm must be 2
  {
    Rational n2 = 0;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        n2 += Rational(g.marks[i]) * Rational(g.marks[j]) * g.simple_gram(i, j);
    if (n2 != 2) throw std::logic_error("lie data: highest root norm != 2");
  }

  g.rho.assign(l, 1);
  return g;
}

std::mutex lie_cache_mutex;
std::map<SimpleType, const LieData*> lie_cache;

}  // namespace

const LieData& lie_data(SimpleType t) {
  std::lock_guard<std::mutex> lock(lie_cache_mutex);
  auto it = lie_cache.find(t);
  if (it != lie_cache.end()) return *it->second;
  const LieData* d = new LieData(build_lie_data(t));
  lie_cache[t] = d;
  return *d;
}

Integer weyl_dim(const LieData& g, const Weight& lam) {
  if (!g.dominant(lam)) throw std::invalid_argument("weyl_dim: weight not dominant");
  // prod (lam+rho, a) / (rho, a) over positive roots, with
  // (x, a) = sum_j n_j (a_j,a_j)/2 * x_j for a = sum n_j a_j
  Rational num = 1, den = 1;
  for (const auto& n : g.positive_roots) {
    Rational top = 0, bot = 0;
    for (int j = 0; j < g.rank; ++j) {
      if (n[j] == 0) continue;
      Rational w = Rational(n[j]) * g.root_norm2[j] / 2;
      top += w * (lam[j] + 1);
      bot += w;
    }
    num *= top;
    den *= bot;
  }
  Rational r = num / den;
  if (!is_integer(r)) throw std::logic_error("weyl_dim: non-integral result");
  return r.get_num();
}

std::pair<int, Weight> signed_dominant(const LieData& g, const Weight& gamma) {
  Weight x(gamma);
  for (int i = 0; i < g.rank; ++i) x[i] += 1;  // gamma + rho
  int sign = 1;
  for (long guard = 0;; ++guard) {
    if (guard > 100000000L) throw std::logic_error("signed_dominant: no convergence");
    int neg = -1;
    for (int i = 0; i < g.rank; ++i) {
      if (x[i] == 0) return {0, {}};  // on a wall
      if (x[i] < 0) neg = i;
    }
    if (neg < 0) break;
    g.reflect(x, neg);
    sign = -sign;
  }
  for (int i = 0; i < g.rank; ++i) x[i] -= 1;
  return {sign, x};
}

namespace {

// dominance-order interval of dominant weights below lam; covers differ by a
// positive root (Stembridge), so BFS over positive-root steps is exhaustive
std::map<Weight, Integer> freudenthal(const LieData& g, const Weight& lam) {
  std::set<Weight> dom;
  std::vector<Weight> queue{lam};
  dom.insert(lam);
  while (!queue.empty()) {
    Weight v = queue.back();
    queue.pop_back();
    for (const auto& rl : g.positive_root_labels) {
      Weight w(v);
      bool ok = true;
      for (int i = 0; i < g.rank; ++i) {
        w[i] -= rl[i];
        if (w[i] < 0) ok = false;
      }
      if (!ok) continue;
      // lam - w must stay in the nonnegative root lattice; by construction it
      // is lam - v + root, both in Q+, so only dominance needed here
      if (dom.insert(w).second) queue.push_back(w);
    }
  }

  // order by decreasing height of the weight itself
  std::vector<Weight> order(dom.begin(), dom.end());
  auto height = [&](const Weight& w) {
    // height of lam - w in root coordinates (exact, via weight_gram pairing
    // with the sum of fundamental coweights is overkill; use norm ordering)
    return g.pair(w, w);
  };
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    Rational ha = height(a), hb = height(b);
    if (ha != hb) return ha > hb;
    return a > b;
  });

  std::map<Weight, Integer> mult;
  Weight lr(lam);
  for (auto& v : lr) ++v;
  Rational lam_rho2 = g.pair(lr, lr);
  for (const auto& mu : order) {
    if (mu == lam) {
      mult[mu] = 1;
      continue;
    }
    Rational acc = 0;
    for (size_t a = 0; a < g.positive_root_labels.size(); ++a) {
      const Weight& rl = g.positive_root_labels[a];
      for (int t = 1;; ++t) {
        Weight w(mu);
        for (int i = 0; i < g.rank; ++i) w[i] += t * rl[i];
        Weight rep = g.dominant_rep(w);
        auto it = mult.find(rep);
        if (it == mult.end()) break;
        // (mu + t a, a)
        const auto& n = g.positive_roots[a];
        Rational val = 0;
        for (int j = 0; j < g.rank; ++j)
          if (n[j] != 0) val += Rational(n[j]) * g.root_norm2[j] / 2 * w[j];
        acc += Rational(it->second) * val;
      }
    }
    Weight mr(mu);
    for (auto& v : mr) ++v;
    Rational denom = lam_rho2 - g.pair(mr, mr);
    if (denom == 0) throw std::logic_error("freudenthal: zero denominator");
    Rational m = 2 * acc / denom;
    if (!is_integer(m) || m < 0) throw std::logic_error("freudenthal: bad multiplicity");
    mult[mu] = m.get_num();
  }
  return mult;
}

std::mutex freud_mutex;
std::map<std::pair<SimpleType, Weight>, const std::map<Weight, Integer>*> freud_cache;

// Weyl orbit of a dominant weight, as packed label vectors.
std::vector<Weight> weyl_orbit(const LieData& g, const Weight& mu) {
  std::set<Weight> seen{mu};
  std::vector<Weight> queue{mu}, out{mu};
  while (!queue.empty()) {
    Weight v = queue.back();
    queue.pop_back();
    for (int i = 0; i < g.rank; ++i) {
      if (v[i] <= 0) continue;  // only walk downward through each wall once
      Weight w(v);
      g.reflect(w, i);
      if (seen.insert(w).second) {
        queue.push_back(w);
        out.push_back(w);
      }
    }
  }
  return out;
}

}  // namespace

const std::map<Weight, Integer>& dominant_multiplicities(const LieData& g,
                                                         const Weight& lam) {
  if (!g.dominant(lam))
    throw std::invalid_argument("dominant_multiplicities: weight not dominant");
  std::pair<SimpleType, Weight> key{g.type, lam};
  {
    std::lock_guard<std::mutex> lock(freud_mutex);
    auto it = freud_cache.find(key);
    if (it != freud_cache.end()) return *it->second;
  }
  auto* computed = new std::map<Weight, Integer>(freudenthal(g, lam));
  std::lock_guard<std::mutex> lock(freud_mutex);
  auto [it, inserted] = freud_cache.emplace(key, computed);
  if (!inserted) delete computed;
  return *it->second;
}

WeightSystem weight_system(const LieData& g, const Weight& lam, const Integer& dim_cap) {
  if (weyl_dim(g, lam) > dim_cap)
    throw std::length_error("weight_system: dimension exceeds cap");
  const auto& dm = dominant_multiplicities(g, lam);
  WeightSystem ws;
  for (const auto& [mu, m] : dm)
    for (const auto& w : weyl_orbit(g, mu)) ws.entries[w] = m;
  return ws;
}

std::vector<Rational> moments(const WeightSystem& ws, const std::vector<int>& h,
                              int j_max) {
  std::vector<Rational> out(j_max + 1, Rational(0));
  for (const auto& [w, m] : ws.entries) {
    long v = 0;
    for (size_t i = 0; i < h.size(); ++i) v += static_cast<long>(h[i]) * w[i];
    Rational p = m;
    out[0] += p;
    for (int j = 1; j <= j_max; ++j) {
      p *= v;
      out[j] += p;
    }
  }
  return out;
}

std::vector<Integer> module_power_sums(const LieData& g, const Weight& lam,
                                       const std::vector<int>& h, int j_max) {
  std::vector<Integer> out(j_max + 1, Integer(0));
  const auto& dm = dominant_multiplicities(g, lam);
  for (const auto& [mu, m] : dm) {
    for (const auto& w : weyl_orbit(g, mu)) {
      Integer v = 0;
      for (int i = 0; i < g.rank; ++i) v += Integer(h[i]) * w[i];
      Integer p = m;
      out[0] += p;
      for (int j = 1; j <= j_max; ++j) {
        p *= v;
        out[j] += p;
      }
    }
  }
  return out;
}

std::vector<Integer> adjoint_power_sums(const LieData& g, const std::vector<int>& h,
                                        int j_max) {
  std::vector<Integer> out(j_max + 1, Integer(0));
  out[0] = g.dim;
  for (const auto& rl : g.positive_root_labels) {
    Integer v = 0;
    for (int i = 0; i < g.rank; ++i) v += Integer(h[i]) * rl[i];
    Integer p = 1;
    for (int j = 1; j <= j_max; ++j) {
      p *= v;
      if (j % 2 == 0) out[j] += 2 * p;  // +root and -root contribute equally
    }
  }
  return out;
}

std::vector<Integer> sym2_power_sums(const std::vector<Integer>& p, int j_max) {
  // sum over unordered pairs a <= b of (v_a + v_b)^j
  // = 1/2 [ sum_t C(j,t) p_t p_{j-t} + 2^j p_j ]
  std::vector<Integer> out(j_max + 1, Integer(0));
  for (int j = 0; j <= j_max; ++j) {
    Integer s = 0;
    Integer binom = 1;
    for (int t = 0; t <= j; ++t) {
      s += binom * p[t] * p[j - t];
      binom = binom * (j - t) / (t + 1);
    }
    Integer pw = Integer(1) << j;
    Integer tot = s + pw * p[j];
    if (tot % 2 != 0) throw std::logic_error("sym2_power_sums: parity");
    out[j] = tot / 2;
  }
  return out;
}

std::vector<Integer> tensor_power_sums(const std::vector<Integer>& p,
                                       const std::vector<Integer>& q, int j_max) {
  std::vector<Integer> out(j_max + 1, Integer(0));
  for (int j = 0; j <= j_max; ++j) {
    Integer s = 0;
    Integer binom = 1;
    for (int t = 0; t <= j; ++t) {
      s += binom * p[t] * q[j - t];
      binom = binom * (j - t) / (t + 1);
    }
    out[j] = s;
  }
  return out;
}

WeightSystem adjoint_weights(const LieData& g) {
  WeightSystem ws;
  Weight zero(g.rank, 0);
  ws.entries[zero] = g.rank;
  for (const auto& rl : g.positive_root_labels) {
    ws.entries[rl] += 1;
    Weight neg(rl);
    for (auto& v : neg) v = -v;
    ws.entries[neg] += 1;
  }
  return ws;
}

WeightSystem sym2_weights(const LieData& g) {
  WeightSystem adj = adjoint_weights(g);
  std::vector<std::pair<Weight, Integer>> flat(adj.entries.begin(), adj.entries.end());
  WeightSystem out;
  for (size_t a = 0; a < flat.size(); ++a) {
    for (size_t b = a; b < flat.size(); ++b) {
      Weight s(g.rank);
      for (int i = 0; i < g.rank; ++i) s[i] = flat[a].first[i] + flat[b].first[i];
      Integer cnt = (a == b) ? Integer(flat[a].second * (flat[a].second + 1) / 2)
                             : Integer(flat[a].second * flat[b].second);
      out.entries[s] += cnt;
    }
  }
  return out;
}

WeightSystem tensor_weights(const WeightSystem& a, const WeightSystem& b) {
  WeightSystem out;
  for (const auto& [wa, ma] : a.entries)
    for (const auto& [wb, mb] : b.entries) {
      Weight s(wa.size());
      for (size_t i = 0; i < wa.size(); ++i) s[i] = wa[i] + wb[i];
      out.entries[s] += ma * mb;
    }
  return out;
}

WeightSystem weight_system_sum(const WeightSystem& a, const WeightSystem& b) {
  WeightSystem out = a;
  for (const auto& [w, m] : b.entries) out.entries[w] += m;
  return out;
}

WeightSystem weight_system_sub(const WeightSystem& a, const WeightSystem& b) {
  WeightSystem out = a;
  for (const auto& [w, m] : b.entries) {
    auto it = out.entries.find(w);
    if (it == out.entries.end() || it->second < m)
      throw std::invalid_argument("weight_system_sub: negative multiplicity");
    it->second -= m;
    if (it->second == 0) out.entries.erase(it);
  }
  return out;
}

Integer cartan_norm(const LieData& g, const std::vector<int>& h, int level) {
  Rational n = 0;
  for (int i = 0; i < g.rank; ++i)
    for (int j = 0; j < g.rank; ++j)
      if (h[i] != 0 && h[j] != 0) n += Rational(h[i]) * Rational(h[j]) * g.coroot_gram(i, j);
  n *= level;
  if (!is_integer(n)) throw std::logic_error("cartan_norm: non-integral");
  return n.get_num();
}

}  // namespace brs
