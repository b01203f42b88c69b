#include "toric/fan.hpp"

#include "toric/linalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace toric {

std::optional<std::size_t> Fan::find_cone(std::string_view id) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].id == id) return i;
  return std::nullopt;
}

std::size_t Fan::cone_index(std::string_view id) const {
  auto i = find_cone(id);
  if (!i) throw std::invalid_argument("no maximal cone with id '" + std::string(id) + "'");
  return *i;
}

std::optional<std::size_t> Fan::ray_index(const Cocharacter& v) const {
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i] == v) return i;
  return std::nullopt;
}

std::vector<Neighbor> Fan::neighbors(std::size_t cone) const {
  std::vector<Neighbor> out;
  for (const auto& adj : adjacency_) {
    if (adj.first == cone) out.push_back({adj.second, adj.shared_rays, adj.wall});
    else if (adj.second == cone) out.push_back({adj.first, adj.shared_rays, -adj.wall});
  }
  return out;
}

Character Fan::project(const Character& u) const {
  Character r = u;
  for (const auto& d : fiber_directions_) r = project_along(r, d);
  return r;
}

bool Fan::contains(std::size_t cone, std::span<const Rational> v) const {
  const auto& c = cones_.at(cone);
  const std::size_t n = static_cast<std::size_t>(datum_.n());
  if (v.size() != n) throw std::invalid_argument("vector of the wrong length");
  RationalMatrix a(n, std::vector<Rational>(c.rays.size() + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < c.rays.size(); ++j) a[i][j] = Rational(static_cast<long>(rays_[c.rays[j]].coords[i]));
    a[i][c.rays.size()] = 1;  // the diagonal is zero in the quotient lattice
  }
  auto x = solve_exact(std::move(a), {v.begin(), v.end()});
  if (!x) return false;
  for (std::size_t j = 0; j < c.rays.size(); ++j)
    if ((*x)[j] < 0) return false;
  return true;
}

void Fan::finalize() {
  cones_at_ray_.assign(rays_.size(), {});
  for (std::size_t i = 0; i < cones_.size(); ++i)
    for (auto r : cones_[i].rays) cones_at_ray_[r].push_back(i);

  adjacency_.clear();
  if (dimension_ == 0) return;
  for (std::size_t a = 0; a < cones_.size(); ++a) {
    for (std::size_t b = a + 1; b < cones_.size(); ++b) {
      std::vector<std::size_t> shared;
      std::set_intersection(cones_[a].rays.begin(), cones_[a].rays.end(), cones_[b].rays.begin(),
                            cones_[b].rays.end(), std::back_inserter(shared));
      if (shared.size() + 1 != dimension_) continue;
      std::size_t free_ray = 0;
      for (auto r : cones_[a].rays)
        if (!std::binary_search(shared.begin(), shared.end(), r)) free_ray = r;
      std::optional<Character> wall;
      for (const auto& beta : datum_.roots()) {
        const bool vanishes = std::all_of(shared.begin(), shared.end(),
                                          [&](std::size_t r) { return pairing(rays_[r], beta) == 0; });
        if (!vanishes) continue;
        const Rational side = pairing(rays_[free_ray], beta);
        if (side == 0) continue;
        Character d = project(beta);
        wall = side > 0 ? d : -d;
        break;
      }
      if (!wall) throw std::logic_error("no root separates adjacent cones " + cones_[a].id + " and " + cones_[b].id);
      adjacency_.push_back({a, b, std::move(shared), std::move(*wall)});
    }
  }
}

Fan build_weyl_fan(const RootDatum& datum) {
  Fan fan;
  fan.datum_ = datum;
  fan.dimension_ = static_cast<std::size_t>(datum.rank());
  const std::size_t n = static_cast<std::size_t>(datum.n());
  if (datum.kind() == DatumKind::G2) {
    const std::vector<std::vector<std::int64_t>> half = {{1, 0, 0}, {1, 0, -1}, {0, 0, -1},
                                                         {0, 1, -1}, {0, 1, 0},  {-1, 1, 0}};
    for (const auto& v : half) fan.rays_.push_back(datum.cocharacter(v));
    for (auto v : half) {
      for (auto& x : v) x = -x;
      fan.rays_.push_back(datum.cocharacter(v));
    }
    for (std::size_t i = 0; i < 12; ++i) {
      std::vector<std::size_t> r = {i, (i + 1) % 12};
      std::sort(r.begin(), r.end());
      fan.cones_.push_back({std::to_string(i + 1), r});
    }
  } else {
    // rays L_S for nonempty proper subsets S, ordered by |S| then lexicographically
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m + 1 < (1u << n); ++m) masks.push_back(m);
    auto elements = [n](std::uint32_t m) {
      std::vector<std::size_t> e;
      for (std::size_t i = 0; i < n; ++i)
        if (m & (1u << i)) e.push_back(i);
      return e;
    };
    std::sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
      return elements(a) < elements(b);
    });
    std::map<std::uint32_t, std::size_t> ray_of_mask;
    for (auto m : masks) {
      std::vector<std::int64_t> v(n, 0);
      for (auto i : elements(m)) v[i] = 1;
      ray_of_mask[m] = fan.rays_.size();
      fan.rays_.push_back(datum.cocharacter(v));
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::size_t> r;
      std::uint32_t m = 0;
      std::string id;
      for (std::size_t k = 0; k + 1 < n; ++k) {
        m |= 1u << perm[k];
        r.push_back(ray_of_mask.at(m));
        id += (k ? "-" : "") + std::to_string(perm[k] + 1);
      }
      std::sort(r.begin(), r.end());
      fan.cones_.push_back({id, r});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  fan.finalize();
  return fan;
}

std::shared_ptr<const Fan> make_weyl_fan(const RootDatum& datum) {
  return std::make_shared<const Fan>(build_weyl_fan(datum));
}

std::size_t locate_cone(const Fan& fan, std::span<const Rational> v) {
  for (std::size_t i = 0; i < fan.cones().size(); ++i)
    if (fan.contains(i, v)) return i;
  throw std::invalid_argument("vector lies outside the support of the fan");
}

std::vector<Neighbor> adjacent_cones(const Fan& fan, std::string_view id) {
  return fan.neighbors(fan.cone_index(id));
}

Fan divisor_subfan(const Fan& fan, const Character& alpha) {
  fan.datum().require_root(alpha);
  if (fan.dimension() == 0) throw std::invalid_argument("a zero-dimensional fan has no divisors");
  Fan sub;
  sub.datum_ = fan.datum_;
  sub.dimension_ = fan.dimension_ - 1;
  sub.cut_roots_ = fan.cut_roots_;
  sub.cut_roots_.push_back(alpha);
  sub.fiber_directions_ = orthogonal_fiber_directions(sub.cut_roots_);

  std::map<std::vector<std::size_t>, std::size_t> faces;  // parent ray indices -> parent cone
  for (std::size_t c = 0; c < fan.cones_.size(); ++c) {
    std::vector<std::size_t> on_wall;
    for (auto r : fan.cones_[c].rays)
      if (pairing(fan.rays_[r], alpha) == 0) on_wall.push_back(r);
    if (on_wall.size() == sub.dimension_) faces.emplace(std::move(on_wall), c);
  }
  std::vector<std::size_t> used;
  for (const auto& [rays, parent] : faces) used.insert(used.end(), rays.begin(), rays.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto r : used) sub.rays_.push_back(fan.rays_[r]);

  std::size_t k = 0;
  for (const auto& [rays, parent] : faces) {
    std::vector<std::size_t> local;
    for (auto r : rays)
      local.push_back(static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), r) - used.begin()));
    sub.cones_.push_back({"t" + std::to_string(++k), local});
    sub.parent_cones_.push_back(parent);
  }
  sub.finalize();
  return sub;
}

}  // namespace toric
