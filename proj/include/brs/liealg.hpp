#pragma once

#include <map>
#include <vector>

#include "brs/rational.hpp"
#include "brs/rootsys.hpp"

namespace brs {

// Dynkin labels (coefficients on fundamental weights).
using Weight = std::vector<int>;

// Weight multiset of a finite-dimensional module.
struct WeightSystem {
  std::map<Weight, Integer> entries;
  Integer dim() const;
};

// Static data of one simple Lie algebra, normalized so long roots have
// norm 2. Conventions: cartan(i,j) = 2(a_i,a_j)/(a_i,a_i), so the Dynkin
// labels of a root with root-basis coordinates n are cartan * n, and the
// simple reflection s_i acts on labels by x_j -= x_i * cartan(j,i).
struct LieData {
  SimpleType type;
  int rank = 0;
  long dim = 0;
  int dual_coxeter = 0;
  Eigen::MatrixXi cartan;
  std::vector<Rational> root_norm2;          // (a_i, a_i)
  MatQ simple_gram;                          // (a_i, a_j)
  MatQ weight_gram;                          // (w_i, w_j)
  MatQ coroot_gram;                          // (a_i^v, a_j^v), integer entries
  std::vector<std::vector<int>> positive_roots;        // root-basis coords
  std::vector<Weight> positive_root_labels;            // Dynkin labels
  std::vector<int> marks;     // theta in the root basis
  std::vector<int> comarks;   // a_i^v with 1 + sum = dual Coxeter number
  Weight theta_labels;
  Weight rho;  // all ones

  // bilinear form on weights given by Dynkin labels
  Rational pair(const Weight& x, const Weight& y) const;
  // <x, a_i^v> is just x[i]; this reflects x in the wall of a_i
  void reflect(Weight& x, int i) const;
  bool dominant(const Weight& x) const;
  // Weyl-orbit representative (weight multiplicity context, no rho shift)
  Weight dominant_rep(Weight x) const;
};

// Cached per simple type; thread safe.
const LieData& lie_data(SimpleType t);

// Dimension of the irreducible module V(lam) by the Weyl formula.
Integer weyl_dim(const LieData& g, const Weight& lam);

// Resolves a formal character ch_gamma as sign * ch(dominant) or 0 when
// gamma + rho is singular; sign is the parity of the Weyl element used.
std::pair<int, Weight> signed_dominant(const LieData& g, const Weight& gamma);

// Dominant weights of V(lam) with their Freudenthal multiplicities,
// cached per (type, lam).
const std::map<Weight, Integer>& dominant_multiplicities(const LieData& g,
                                                         const Weight& lam);

// Full weight multiset of V(lam); throws if dim exceeds the cap.
WeightSystem weight_system(const LieData& g, const Weight& lam,
                           const Integer& dim_cap = Integer(2000000));

// Moments S^0..S^{j_max} of a weight multiset under the Cartan element with
// the given coroot coordinates: S^j = sum_mu m_mu <mu, h>^j.
std::vector<Rational> moments(const WeightSystem& ws, const std::vector<int>& h,
                              int j_max);

// Power sums of <mu, h> over the weights of V(lam), computed from dominant
// orbits without materializing the weight system more than once per orbit.
std::vector<Integer> module_power_sums(const LieData& g, const Weight& lam,
                                       const std::vector<int>& h, int j_max);

// Power sums over the adjoint module (roots plus Cartan zeros).
std::vector<Integer> adjoint_power_sums(const LieData& g, const std::vector<int>& h,
                                        int j_max);

// Power sums over Sym^2 of a module, from the module's power sums:
// values {v_a + v_b : a <= b}.
std::vector<Integer> sym2_power_sums(const std::vector<Integer>& p, int j_max);

// Power sums of a direct product multiset {v + w}, binomial convolution.
std::vector<Integer> tensor_power_sums(const std::vector<Integer>& p,
                                       const std::vector<Integer>& q, int j_max);

// Weight multisets of Sym^2(adjoint) and of tensor products (materialized).
WeightSystem sym2_weights(const LieData& g);
WeightSystem adjoint_weights(const LieData& g);
WeightSystem tensor_weights(const WeightSystem& a, const WeightSystem& b);
WeightSystem weight_system_sum(const WeightSystem& a, const WeightSystem& b);
WeightSystem weight_system_sub(const WeightSystem& a, const WeightSystem& b);

// <h,h> = k (h,h) for a Cartan element of one factor at level k; a
// nonnegative even integer for integral h.
Integer cartan_norm(const LieData& g, const std::vector<int>& h, int level);

}  // namespace brs
