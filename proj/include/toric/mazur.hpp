#pragma once

#include "toric/cohomology.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace toric {

/// A Levi subgroup: GL_n1 x ... x GL_nr as batch sizes, or the semisimple
/// rank one Levi of a single root.
struct LeviSpec {
  std::vector<int> batches;
  std::optional<Character> alpha;

  static LeviSpec from_batches(const RootDatum& datum, std::vector<int> batches);
  static LeviSpec rank_one(const RootDatum& datum, const Character& alpha);
};

struct ProjectionReport {
  bool equal = false;
  /// The factored (root by root) and direct computations of rhs agree.
  bool routes_agree = false;
  LatticePointSet lhs;  // pr_M(Conv(x_B) cap X)
  LatticePointSet rhs;  // Conv(x_P) cap pr_M(X)
  std::vector<Character> witnesses;  // rhs \ lhs
};

/// P_mu: integral nu in Conv(W mu) with nu - mu in the root lattice.
LatticePointSet compute_P_mu(const RootDatum& datum, const Character& mu);

ProjectionReport verify_projection_equality(const OrthogonalSet& os, const LeviSpec& spec);

/// A positive orthogonal set built from random convex blocks, every wall
/// increment at most `bound`, then translated by a random character.
/// Deterministic in `seed`.
OrthogonalSet random_positive_orthogonal_set(const std::shared_ptr<const Fan>& fan, std::int64_t bound,
                                             std::uint64_t seed);
/// A valid orthogonal set from random ray coefficients in [-range, range].
OrthogonalSet random_valid_orthogonal_set(const std::shared_ptr<const Fan>& fan, std::int64_t range,
                                          std::uint64_t seed);
/// A random positive set with one ray coefficient moved by +-1; convex or not.
OrthogonalSet perturbed_positive_orthogonal_set(const std::shared_ptr<const Fan>& fan, std::int64_t bound,
                                                std::uint64_t seed);

/// Ordered batch sizes summing to n.
std::vector<std::vector<int>> batch_compositions(int n);

/// Dominant G2 weights (a, b, -a-b) with 0 <= b <= a <= max_coord.
std::vector<Character> g2_dominant_weights(const RootDatum& g2, std::int64_t max_coord);

/// The positive G2 set of u = (1,0,-1) on sigma 1..5, 12 and (0,-1,1) on sigma 6..11.
OrthogonalSet g2_counterexample_set(const std::shared_ptr<const Fan>& g2_fan);

struct Counterexample {
  OrthogonalSet os;
  Character alpha;
  ProjectionReport projection;
  CohomologyReport cohomology;
};
Counterexample g2_counterexample();

/// The Weyl-orbit G2 sets left over after the strictly positive case:
/// (a), (b) from n (1,1,-2) and (c), (d) from n (1,0,-1); the root is
/// (1,-1,0) for (a), (c) and (2,-1,-1) for (b), (d).
struct G2Case {
  OrthogonalSet os;
  Character alpha;
  LatticePointSet expected_divisor_points;
};
G2Case g2_case(const std::shared_ptr<const Fan>& g2_fan, char label, std::int64_t n);

}  // namespace toric
