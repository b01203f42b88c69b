#pragma once

#include "toric/root_system.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

/// A simplicial cone given by indices into Fan::rays(), kept sorted.
struct Cone {
  std::string id;
  std::vector<std::size_t> rays;
};

/// Two maximal cones sharing a facet. `wall` is the (projected) root that
/// vanishes on the shared facet and is positive on `first`.
struct Adjacency {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<std::size_t> shared_rays;
  Character wall;
};

/// Adjacency seen from one cone: `wall` is positive on the queried cone.
struct Neighbor {
  std::size_t cone = 0;
  std::vector<std::size_t> shared_rays;
  Character wall;
};

/// The Weyl fan of V_G, or the sub-fan of it lying in an intersection of
/// root hyperplanes (the fan of D_alpha, or of Y_M^G for a Levi M).
///
/// A sub-fan remembers the roots that cut it out (`cut_roots`) and the
/// mutually orthogonal directions along which characters are projected
/// when restricted to it (`fiber_directions`). The character space of a
/// sub-fan is the orthogonal complement of those directions.
class Fan {
 public:
  const RootDatum& datum() const { return datum_; }
  /// Dimension of the maximal cones.
  std::size_t dimension() const { return dimension_; }
  const std::vector<Cocharacter>& rays() const { return rays_; }
  const std::vector<Cone>& cones() const { return cones_; }
  const std::vector<Adjacency>& adjacency() const { return adjacency_; }
  const std::vector<Character>& cut_roots() const { return cut_roots_; }
  const std::vector<Character>& fiber_directions() const { return fiber_directions_; }
  bool is_subfan() const { return !cut_roots_.empty(); }

  std::optional<std::size_t> find_cone(std::string_view id) const;
  /// Throws std::invalid_argument for unknown ids.
  std::size_t cone_index(std::string_view id) const;
  const std::vector<std::size_t>& cones_at_ray(std::size_t ray) const { return cones_at_ray_[ray]; }
  std::optional<std::size_t> ray_index(const Cocharacter& v) const;
  /// For a sub-fan: a maximal cone of the parent fan having this cone as a face.
  std::size_t parent_cone(std::size_t cone) const { return parent_cones_.at(cone); }

  std::vector<Neighbor> neighbors(std::size_t cone) const;

  /// Projects a character of the parent space into this fan's character space.
  Character project(const Character& u) const;

  /// True when `v` (taken modulo the diagonal) is a nonnegative combination
  /// of the cone's rays.
  bool contains(std::size_t cone, std::span<const Rational> v) const;

 private:
  friend Fan build_weyl_fan(const RootDatum& datum);
  friend Fan divisor_subfan(const Fan& fan, const Character& alpha);

  void finalize();

  RootDatum datum_;
  std::size_t dimension_ = 0;
  std::vector<Cocharacter> rays_;
  std::vector<Cone> cones_;
  std::vector<Adjacency> adjacency_;
  std::vector<std::vector<std::size_t>> cones_at_ray_;
  std::vector<Character> cut_roots_;
  std::vector<Character> fiber_directions_;
  std::vector<std::size_t> parent_cones_;
};

/// SL_n/GL_n: one cone per ordering (i1..i_{n-1}) with rays L_i1,
/// L_i1 + L_i2, ...; id "i1-i2-...". G2: the twelve cones sigma_i over
/// (v_i, v_{i+1}); id "i".
Fan build_weyl_fan(const RootDatum& datum);
std::shared_ptr<const Fan> make_weyl_fan(const RootDatum& datum);

/// Index of a maximal cone containing `v`. The fan is complete in its own
/// subspace, so this always succeeds for `v` in that subspace.
std::size_t locate_cone(const Fan& fan, std::span<const Rational> v);

/// Throws std::invalid_argument when `id` is not a maximal cone.
std::vector<Neighbor> adjacent_cones(const Fan& fan, std::string_view id);

/// Cones of `fan` lying in [alpha = 0] of one dimension less, as a fan.
Fan divisor_subfan(const Fan& fan, const Character& alpha);

}  // namespace toric
