#pragma once

#include "toric/fan.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace toric {

/// One character per maximal cone of a fan: a (G,T)-orthogonal set, read
/// equivalently as a torus-equivariant Cartier divisor D with support
/// function psi_D(v) = <u(sigma), v> for v in sigma.
///
/// Construction only checks shape (one character of the right datum per
/// cone); use validate() for the wall condition.
class OrthogonalSet {
 public:
  OrthogonalSet(std::shared_ptr<const Fan> fan, std::vector<Character> chars);

  const Fan& fan() const { return *fan_; }
  const std::shared_ptr<const Fan>& fan_ptr() const { return fan_; }
  const RootDatum& datum() const { return fan_->datum(); }
  const std::vector<Character>& chars() const { return chars_; }
  const Character& at(std::size_t cone) const { return chars_.at(cone); }
  const Character& at(std::string_view cone_id) const { return chars_.at(fan_->cone_index(cone_id)); }

  friend bool operator==(const OrthogonalSet& a, const OrthogonalSet& b) {
    return a.fan_ == b.fan_ && a.chars_ == b.chars_;
  }

 private:
  std::shared_ptr<const Fan> fan_;
  std::vector<Character> chars_;
};

/// Conewise sum and difference; both operands must share one fan object.
OrthogonalSet operator+(const OrthogonalSet& a, const OrthogonalSet& b);
OrthogonalSet operator-(const OrthogonalSet& a, const OrthogonalSet& b);
OrthogonalSet operator*(std::int64_t k, const OrthogonalSet& a);

struct Validation {
  bool valid = false;
  bool positive = false;
  /// Positive with pairwise distinct characters.
  bool strictly_positive = false;
  /// Cone ids of the first failing wall (or the offending cone, twice).
  std::optional<std::pair<std::string, std::string>> failing_pair;
  std::string message;
};

/// Chooses, for every chamber, the orbit element dominant for it.
OrthogonalSet from_weyl_orbit(std::shared_ptr<const Fan> fan, const Character& mu);
OrthogonalSet constant_set(std::shared_ptr<const Fan> fan, const Character& c);

/// Wall condition: for adjacent sigma, sigma' the difference
/// u(sigma) - u(sigma') is n times the wall root (positive on sigma), with n
/// an integer on the full Weyl fan; positive means every n >= 0.
Validation validate(const OrthogonalSet& os);

/// The multiple n of the wall root across each adjacency (indexed like
/// Fan::adjacency()). Throws std::invalid_argument when a difference is not
/// a multiple of its wall root.
std::vector<Rational> wall_increments(const OrthogonalSet& os);

/// Values of psi_D at the fan's ray generators (indexed like Fan::rays()).
std::vector<Rational> psi_at_rays(const OrthogonalSet& os);
Rational evaluate_psi(const OrthogonalSet& os, std::span<const Rational> v);

/// Finite ray criterion for lower convexity: <u(sigma), v_rho> <= psi(v_rho)
/// for every maximal cone sigma and every ray rho.
bool is_convex(const OrthogonalSet& os);

/// u(sigma) = alpha where alpha >= 0 on sigma and 0 where alpha <= 0: the
/// equivariant divisor linearly equivalent to D_alpha.
OrthogonalSet d_alpha_set(std::shared_ptr<const Fan> fan, const Character& alpha);
/// The orthogonal set of D - D_alpha.
OrthogonalSet subtract_d_alpha(const OrthogonalSet& os, const Character& alpha);

/// a_rho = <u(sigma), v_rho> for any cone containing rho.
std::vector<Rational> ray_coefficients(const OrthogonalSet& os);
/// Solves <u(sigma), v_rho> = a_rho on every cone. `degree` is the common
/// coordinate sum of the characters (nonzero only for GL_n). Throws
/// std::invalid_argument when some cone has no solution in the lattice.
OrthogonalSet from_ray_coefficients(std::shared_ptr<const Fan> fan, const std::vector<Rational>& coefficients,
                                    const Rational& degree = 0);

/// Translates every character by -u.
OrthogonalSet shift(const OrthogonalSet& os, const Character& u);

/// The orthogonal set of D restricted to D_beta: for each cone of the
/// sub-fan in [beta = 0], the projection of u(sigma) for a maximal cone
/// sigma containing it.
OrthogonalSet restrict_to_divisor(const OrthogonalSet& os, const Character& beta);

}  // namespace toric
