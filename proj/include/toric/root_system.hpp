#pragma once

#include "toric/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

enum class DatumKind { GL, SL, G2 };

/// A point of the character lattice (or of its real span). Projected
/// characters may carry half-integral or, after iterated projection,
/// other rational coordinates.
struct Character {
  DatumKind kind = DatumKind::SL;
  std::vector<Rational> coords;

  std::size_t size() const { return coords.size(); }
  bool is_integral() const;
  bool is_zero() const;
  Rational sum() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.kind == b.kind && a.coords == b.coords;
  }
  /// Lexicographic on coordinates; this is the canonical output order.
  friend bool operator<(const Character& a, const Character& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.coords < b.coords;
  }
};

Character operator+(const Character& a, const Character& b);
Character operator-(const Character& a, const Character& b);
Character operator-(const Character& a);
Character operator*(const Rational& s, const Character& a);

/// Euclidean dot product of coordinate vectors. The standard form is
/// Weyl-invariant for all three data, so projections along roots are
/// orthogonal projections for it.
Rational dot(const Character& a, const Character& b);

std::string to_string(const Character& c);

/// Integral cocharacter. For every datum here the fan lives in
/// Z^n / Z(1,...,1); `coords` is one representative and equality is
/// taken modulo the diagonal.
struct Cocharacter {
  DatumKind kind = DatumKind::SL;
  std::vector<std::int64_t> coords;

  std::size_t size() const { return coords.size(); }
  /// Representative with last coordinate 0.
  Cocharacter canonical() const;

  friend bool operator==(const Cocharacter& a, const Cocharacter& b);
};

std::string to_string(const Cocharacter& c);

/// Literal dot product of the stored representative with `u`. Independent
/// of the representative whenever `u` has coordinate sum 0.
Rational pairing(const Cocharacter& v, const Character& u);
/// Same pairing against a real (rational) cocharacter vector.
Rational pairing(std::span<const Rational> v, const Character& u);

class RootDatum {
 public:
  /// `n` is the number of coordinates for GL/SL (n >= 2); ignored for G2,
  /// which always uses sum-zero coordinates in Z^3.
  static RootDatum build(DatumKind kind, int n = 3);
  /// "GL:4", "SL:3", "G2".
  static RootDatum parse(std::string_view name);

  DatumKind kind() const { return kind_; }
  /// Number of coordinates.
  int n() const { return n_; }
  /// Semisimple rank; the dimension of the fan.
  int rank() const { return kind_ == DatumKind::G2 ? 2 : n_ - 1; }
  std::string name() const;

  const std::vector<Character>& roots() const { return roots_; }
  const std::vector<Character>& positive_roots() const { return positive_roots_; }
  const std::vector<Character>& simple_roots() const { return simple_roots_; }

  bool is_root(const Character& c) const;
  /// Throws std::invalid_argument when `root` is not a root.
  const Cocharacter& coroot(const Character& root) const;
  /// Throws std::invalid_argument when `root` is not a root.
  void require_root(const Character& root) const;

  /// Builds an integral character; throws if the length or (SL/G2) the
  /// coordinate sum is wrong.
  Character character(std::span<const std::int64_t> coords) const;
  Character character(std::initializer_list<std::int64_t> coords) const;
  Character character(std::vector<Rational> coords) const;
  Character zero() const;
  Cocharacter cocharacter(std::vector<std::int64_t> coords) const;

  /// Integral, and sum-zero where the datum requires it.
  bool in_character_lattice(const Character& c) const;
  bool is_dominant(const Character& mu) const;
  /// Simple reflection s_alpha(u) = u - <alpha^vee, u> alpha.
  Character reflect(const Character& u, const Character& root) const;
  /// True when `c` is an integral combination of simple roots.
  bool in_root_lattice(const Character& c) const;

 private:
  DatumKind kind_ = DatumKind::SL;
  int n_ = 0;
  std::vector<Character> roots_;
  std::vector<Character> positive_roots_;
  std::vector<Character> simple_roots_;
  std::vector<Cocharacter> coroots_;  // parallel to roots_
};

/// The orbit W.mu, in lexicographic order.
std::vector<Character> weyl_orbit(const RootDatum& datum, const Character& mu);

/// p_alpha(u) = u - (<alpha^vee, u>/2) alpha.
Character project_along_root(const RootDatum& datum, const Character& u, const Character& alpha);

/// Orthogonal projection of `u` along `direction` onto its complement.
Character project_along(const Character& u, const Character& direction);

/// Mutually orthogonal directions spanning the same space as `roots`,
/// produced by successively projecting each root along the earlier ones.
std::vector<Character> orthogonal_fiber_directions(std::span<const Character> roots);

/// Per-batch coordinate means (the Levi projection for GL_n1 x ... x GL_nr).
Character pr_levi(const RootDatum& datum, const Character& u, std::span<const int> batches);

/// The roots L_j - L_{j+1} inside each batch, batch by batch, in the order
/// the q_k factorization applies them.
std::vector<Character> levi_roots(const RootDatum& datum, std::span<const int> batches);

/// pr_levi computed as the composition of projections along the Levi roots,
/// each root first carried into the current subspace.
Character pr_levi_factored(const RootDatum& datum, const Character& u, std::span<const int> batches);

}  // namespace toric
