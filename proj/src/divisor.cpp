#include "toric/divisor.hpp"

#include "toric/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace toric {

OrthogonalSet::OrthogonalSet(std::shared_ptr<const Fan> fan, std::vector<Character> chars)
    : fan_(std::move(fan)), chars_(std::move(chars)) {
  if (!fan_) throw std::invalid_argument("orthogonal set without a fan");
  if (chars_.size() != fan_->cones().size())
    throw std::invalid_argument("orthogonal set needs one character per maximal cone");
  for (std::size_t i = 0; i < chars_.size(); ++i) {
    const auto& c = chars_[i];
    if (c.kind != fan_->datum().kind() || c.size() != static_cast<std::size_t>(fan_->datum().n()))
      throw std::invalid_argument("character for cone " + fan_->cones()[i].id + " has the wrong shape");
  }
}

namespace {

void require_same_fan(const OrthogonalSet& a, const OrthogonalSet& b) {
  if (a.fan_ptr() != b.fan_ptr()) throw std::invalid_argument("orthogonal sets on different fans");
}

void require_full_fan(const Fan& fan, const char* what) {
  if (fan.is_subfan()) throw std::invalid_argument(std::string(what) + " needs the full Weyl fan");
}

std::vector<Rational> as_rationals(const Cocharacter& v) {
  std::vector<Rational> r;
  for (auto x : v.coords) r.push_back(Rational(static_cast<long>(x)));
  return r;
}

}  // namespace

OrthogonalSet operator+(const OrthogonalSet& a, const OrthogonalSet& b) {
  require_same_fan(a, b);
  std::vector<Character> c;
  for (std::size_t i = 0; i < a.chars().size(); ++i) c.push_back(a.at(i) + b.at(i));
  return {a.fan_ptr(), std::move(c)};
}

OrthogonalSet operator-(const OrthogonalSet& a, const OrthogonalSet& b) {
  require_same_fan(a, b);
  std::vector<Character> c;
  for (std::size_t i = 0; i < a.chars().size(); ++i) c.push_back(a.at(i) - b.at(i));
  return {a.fan_ptr(), std::move(c)};
}

OrthogonalSet operator*(std::int64_t k, const OrthogonalSet& a) {
  std::vector<Character> c;
  for (const auto& u : a.chars()) c.push_back(Rational(static_cast<long>(k)) * u);
  return {a.fan_ptr(), std::move(c)};
}

OrthogonalSet from_weyl_orbit(std::shared_ptr<const Fan> fan, const Character& mu) {
  require_full_fan(*fan, "from_weyl_orbit");
  const auto orbit = weyl_orbit(fan->datum(), mu);
  std::vector<Character> chars;
  for (const auto& cone : fan->cones()) {
    // the sum of the rays is a regular point of the chamber
    Cocharacter interior = fan->rays()[cone.rays.front()];
    for (std::size_t k = 1; k < cone.rays.size(); ++k)
      for (std::size_t i = 0; i < interior.size(); ++i) interior.coords[i] += fan->rays()[cone.rays[k]].coords[i];
    const Character* best = &orbit.front();
    Rational best_value = pairing(interior, *best);
    for (const auto& w : orbit) {
      Rational value = pairing(interior, w);
      if (value > best_value) {
        best_value = value;
        best = &w;
      }
    }
    chars.push_back(*best);
  }
  return {std::move(fan), std::move(chars)};
}

OrthogonalSet constant_set(std::shared_ptr<const Fan> fan, const Character& c) {
  std::vector<Character> chars(fan->cones().size(), c);
  return {std::move(fan), std::move(chars)};
}

Validation validate(const OrthogonalSet& os) {
  const Fan& fan = os.fan();
  Validation v;
  auto fail = [&](std::size_t a, std::size_t b, std::string message) {
    v.failing_pair = std::make_pair(fan.cones()[a].id, fan.cones()[b].id);
    v.message = std::move(message);
    return v;
  };
  for (std::size_t i = 0; i < os.chars().size(); ++i) {
    const auto& u = os.at(i);
    if (!fan.is_subfan()) {
      if (!fan.datum().in_character_lattice(u))
        return fail(i, i, "character " + to_string(u) + " of cone " + fan.cones()[i].id +
                              " is not in the character lattice of " + fan.datum().name());
    } else {
      for (const auto& d : fan.fiber_directions())
        if (dot(u, d) != 0)
          return fail(i, i, "character " + to_string(u) + " of cone " + fan.cones()[i].id +
                                " is not in the character space of the sub-fan");
    }
  }
  bool positive = true;
  for (const auto& adj : fan.adjacency()) {
    const Character diff = os.at(adj.first) - os.at(adj.second);
    std::size_t k = 0;
    while (adj.wall.coords[k] == 0) ++k;
    const Rational multiple = diff.coords[k] / adj.wall.coords[k];
    const std::string pair = fan.cones()[adj.first].id + " | " + fan.cones()[adj.second].id;
    if (!(diff == multiple * adj.wall))
      return fail(adj.first, adj.second,
                  "wall " + pair + ": difference " + to_string(diff) + " is not a multiple of " + to_string(adj.wall));
    if (!fan.is_subfan() && !is_integer(multiple))
      return fail(adj.first, adj.second,
                  "wall " + pair + ": difference " + to_string(diff) + " is a non-integral multiple of the root");
    if (multiple < 0) positive = false;
  }
  v.valid = true;
  v.positive = positive;
  std::set<Character> distinct(os.chars().begin(), os.chars().end());
  v.strictly_positive = positive && distinct.size() == os.chars().size();
  return v;
}

std::vector<Rational> wall_increments(const OrthogonalSet& os) {
  const Fan& fan = os.fan();
  std::vector<Rational> out;
  out.reserve(fan.adjacency().size());
  for (const auto& adj : fan.adjacency()) {
    const Character diff = os.at(adj.first) - os.at(adj.second);
    std::size_t k = 0;
    while (adj.wall.coords[k] == 0) ++k;
    const Rational multiple = diff.coords[k] / adj.wall.coords[k];
    if (!(diff == multiple * adj.wall))
      throw std::invalid_argument("wall " + fan.cones()[adj.first].id + " | " + fan.cones()[adj.second].id +
                                  ": difference is not a multiple of the wall root");
    out.push_back(multiple);
  }
  return out;
}

std::vector<Rational> psi_at_rays(const OrthogonalSet& os) {
  const Fan& fan = os.fan();
  std::vector<Rational> values;
  values.reserve(fan.rays().size());
  for (std::size_t r = 0; r < fan.rays().size(); ++r)
    values.push_back(pairing(fan.rays()[r], os.at(fan.cones_at_ray(r).front())));
  return values;
}

Rational evaluate_psi(const OrthogonalSet& os, std::span<const Rational> v) {
  return pairing(v, os.at(locate_cone(os.fan(), v)));
}

bool is_convex(const OrthogonalSet& os) {
  const Fan& fan = os.fan();
  const auto psi = psi_at_rays(os);
  for (const auto& u : os.chars())
    for (std::size_t r = 0; r < fan.rays().size(); ++r)
      if (pairing(fan.rays()[r], u) > psi[r]) return false;
  return true;
}

OrthogonalSet d_alpha_set(std::shared_ptr<const Fan> fan, const Character& alpha) {
  require_full_fan(*fan, "d_alpha_set");
  fan->datum().require_root(alpha);
  std::vector<Character> chars;
  for (const auto& cone : fan->cones()) {
    bool nonneg = true, nonpos = true;
    for (auto r : cone.rays) {
      const Rational s = pairing(fan->rays()[r], alpha);
      nonneg = nonneg && s >= 0;
      nonpos = nonpos && s <= 0;
    }
    if (nonneg == nonpos) throw std::logic_error("root changes sign on maximal cone " + cone.id);
    chars.push_back(nonneg ? alpha : fan->datum().zero());
  }
  return {std::move(fan), std::move(chars)};
}

OrthogonalSet subtract_d_alpha(const OrthogonalSet& os, const Character& alpha) {
  return os - d_alpha_set(os.fan_ptr(), alpha);
}

std::vector<Rational> ray_coefficients(const OrthogonalSet& os) { return psi_at_rays(os); }

OrthogonalSet from_ray_coefficients(std::shared_ptr<const Fan> fan, const std::vector<Rational>& coefficients,
                                    const Rational& degree) {
  if (coefficients.size() != fan->rays().size())
    throw std::invalid_argument("need one coefficient per ray");
  const RootDatum& datum = fan->datum();
  if (datum.kind() != DatumKind::GL && degree != 0)
    throw std::invalid_argument("only GL_n characters have nonzero degree");
  const std::size_t n = static_cast<std::size_t>(datum.n());
  std::vector<Character> chars;
  for (const auto& cone : fan->cones()) {
    RationalMatrix a;
    std::vector<Rational> b;
    for (auto r : cone.rays) {
      a.push_back(as_rationals(fan->rays()[r]));
      b.push_back(coefficients[r]);
    }
    a.emplace_back(n, Rational(1));
    b.push_back(degree);
    for (const auto& d : fan->fiber_directions()) {
      a.push_back(d.coords);
      b.push_back(0);
    }
    auto x = solve_exact(std::move(a), std::move(b));
    if (!x) throw std::invalid_argument("no character solves the ray equations on cone " + cone.id);
    Character u{datum.kind(), std::move(*x)};
    if (!fan->is_subfan() && !u.is_integral())
      throw std::invalid_argument("ray coefficients give the non-integral character " + to_string(u) + " on cone " +
                                  cone.id);
    chars.push_back(std::move(u));
  }
  OrthogonalSet os(std::move(fan), std::move(chars));
  auto v = validate(os);
  if (!v.valid) throw std::invalid_argument("ray coefficients are inconsistent: " + v.message);
  return os;
}

OrthogonalSet shift(const OrthogonalSet& os, const Character& u) {
  std::vector<Character> chars;
  for (const auto& c : os.chars()) chars.push_back(c - u);
  return {os.fan_ptr(), std::move(chars)};
}

OrthogonalSet restrict_to_divisor(const OrthogonalSet& os, const Character& beta) {
  auto sub = std::make_shared<const Fan>(divisor_subfan(os.fan(), beta));
  std::vector<Character> chars;
  for (std::size_t t = 0; t < sub->cones().size(); ++t) chars.push_back(sub->project(os.at(sub->parent_cone(t))));
  return {std::move(sub), std::move(chars)};
}

}  // namespace toric
