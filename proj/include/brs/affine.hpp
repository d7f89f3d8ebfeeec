#pragma once

#include <optional>
#include <vector>

#include "brs/liealg.hpp"
#include "brs/rootsys.hpp"

namespace brs {

// Raised when a configured cap on module counts, weight-system sizes or
// lattice enumeration is exceeded; surfaces as an inconclusive verdict.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All dominant weights integrable at the factor's level, i.e. with
// sum a_i^vee lambda_i <= k, in lexicographic order.
std::vector<Weight> integrable_weights(const Factor& f);

// h_lambda = (lam, lam + 2 rho) / (2 (k + h_dual)).
Rational conformal_weight(const Factor& f, const Weight& lam);

// Graded dimensions of L(k, lambda) at conformal weights h_lambda + n.
struct GradedDims {
  Rational offset;  // h_lambda
  std::vector<Integer> dims;
};

// Explicit character formula: the free-boson generating factor convolved
// with the signed theta-like sum over kappa Q^vee + lambda, enumerated
// exactly within the ellipsoid (gamma, gamma+2rho)/(2 kappa) <= h + depth.
GradedDims graded_dims(const Factor& f, const Weight& lam, int depth,
                       long lattice_cap = 50000000L);

// Degree-2 subspace of the vacuum module L(k,0) as a weight multiset:
// Sym^2(adjoint) + adjoint, minus V(2 theta) when k = 1.
WeightSystem vacuum_depth2(const Factor& f);

// Its dimension, via Weyl dimensions only.
Integer vacuum_depth2_dim(const Factor& f);

// Power sums of <.,h> over the degree-2 vacuum subspace, computed without
// materializing Sym^2.
std::vector<Integer> vacuum_depth2_power_sums(const Factor& f,
                                              const std::vector<int>& h, int j_max);

// A label of one irreducible module of the affine tensor product: one
// integrable weight per factor, in the root system's canonical factor order.
struct ModuleLabel {
  std::vector<Weight> weights;
  auto operator<=>(const ModuleLabel&) const = default;
};

// Orbit of labels under permutations of identical factors: per factor class,
// the sorted multiset of weights assigned to that class's copies.
struct ModuleOrbit {
  std::vector<std::vector<Weight>> per_class;
  Rational total_h;
};

// All labels with total conformal weight exactly `target`, for a semisimple
// root system. Collapsed mode returns one representative per orbit.
std::vector<ModuleLabel> modules_with_conformal_weight(const RootSystem& rs,
                                                       const Rational& target,
                                                       bool collapse_orbits = true,
                                                       long orbit_cap = 2000000L);

// Orbit-level enumeration used by the elimination tests; total conformal
// weights range over [min_h, max_h] intersected with the given integrality.
std::vector<ModuleOrbit> module_orbits_in_range(const RootSystem& rs,
                                                const Rational& min_h,
                                                const Rational& max_h,
                                                bool integral_only,
                                                long orbit_cap = 2000000L);

Integer orbit_top_dim(const RootSystem& rs, const ModuleOrbit& o);

}  // namespace brs
