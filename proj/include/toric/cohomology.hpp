#pragma once

#include "toric/divisor.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace toric {

/// Lattice points of a polytope, sorted lexicographically and distinct.
/// `projected_along` is set for points of p_alpha(X) (possibly half-integral).
struct LatticePointSet {
  std::vector<Character> points;
  std::optional<Character> projected_along;

  std::size_t size() const { return points.size(); }
  bool contains(const Character& c) const;
};

struct CohomologyReport {
  std::size_t h0_dim = 0;          // |P_D|
  std::size_t h0_divisor_dim = 0;  // |P_{D_alpha}|
  std::size_t coker_dim = 0;
  /// Points of P_{D_alpha} not of the form p_alpha(u), u in P_D.
  std::vector<Character> missing;
  /// Nonzero topological H^1 eigenspace dimensions, when computed.
  std::map<Character, std::int64_t> per_eigenweight;
};

/// <y, v_rho> <= psi(v_rho) for every ray: membership in the polytope of a
/// convex orthogonal set (on a full fan or a sub-fan).
bool in_polytope(const OrthogonalSet& os, const Character& y);
/// Whether the line y + t * direction meets the polytope of `os`.
bool line_meets_polytope(const OrthogonalSet& os, const Character& y, const Character& direction);

/// P_D: integral characters of the polytope. Throws std::invalid_argument
/// when `os` is not a valid convex set on a full Weyl fan.
LatticePointSet h0_points(const OrthogonalSet& os);

/// The points p_alpha(z), <alpha^vee, z> in {0, 1}, over a box large enough
/// to reach every fiber of the polytope. A superset of P_{D_alpha}.
std::vector<Character> projected_lattice_candidates(const OrthogonalSet& os, const Character& alpha);

/// P_{D_alpha}: points of p_alpha(X) in p_alpha(Conv).
LatticePointSet projected_h0_points(const OrthogonalSet& os, const Character& alpha);

/// Cokernel of phi: chi^u -> chi^{p_alpha(u)}, the dimension of
/// H^1(V_G, J_{D_alpha} (x) O(D)).
CohomologyReport phi_cokernel_dim(const OrthogonalSet& os, const Character& alpha);

/// max(0, c - 1) for c the number of connected components of
/// {v : psi(v) - <u, v> < 0}.
std::int64_t h1_eigenspace_dim_topological(const OrthogonalSet& os_minus, const Character& u);

/// All nonzero eigenspaces of H^1 for the set of D - D_alpha, found by
/// scanning weights around its polytope.
std::map<Character, std::int64_t> topological_h1(const OrthogonalSet& os, const Character& alpha);
std::int64_t topological_h1_total(const OrthogonalSet& os, const Character& alpha);

struct Lemma31Conditions {
  bool cond_i = false;   // no v with psi_D(v) < 0 and <alpha, v> <= 0
  bool cond_ii = false;  // psi_D < 0 somewhere on each closed side of [alpha = 0]
};
Lemma31Conditions check_lemma31_conditions(const OrthogonalSet& os, const Character& alpha);

}  // namespace toric
