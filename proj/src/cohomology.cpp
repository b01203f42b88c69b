#include "toric/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace toric {

bool LatticePointSet::contains(const Character& c) const {
  return std::binary_search(points.begin(), points.end(), c);
}

namespace {

using IntVec = std::vector<std::int64_t>;

std::int64_t idot(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec to_ints(const Character& c) {
  IntVec v;
  for (const auto& x : c.coords) v.push_back(to_int64(x));
  return v;
}

// Integral data of a valid set on a full Weyl fan.
struct IntegralSet {
  std::size_t n = 0;
  std::vector<IntVec> rays;
  IntVec psi;
  std::vector<IntVec> chars;
  IntVec lo, hi;  // bounding box of the characters
  std::int64_t degree = 0;
};

IntegralSet integral_data(const OrthogonalSet& os) {
  IntegralSet d;
  const Fan& fan = os.fan();
  d.n = static_cast<std::size_t>(os.datum().n());
  for (const auto& r : fan.rays()) d.rays.push_back(r.coords);
  for (const auto& u : os.chars()) d.chars.push_back(to_ints(u));
  for (std::size_t r = 0; r < d.rays.size(); ++r) d.psi.push_back(idot(d.rays[r], d.chars[fan.cones_at_ray(r).front()]));
  d.lo = d.hi = d.chars.front();
  for (const auto& u : d.chars)
    for (std::size_t i = 0; i < d.n; ++i) {
      d.lo[i] = std::min(d.lo[i], u[i]);
      d.hi[i] = std::max(d.hi[i], u[i]);
    }
  d.degree = std::accumulate(d.chars.front().begin(), d.chars.front().end(), std::int64_t{0});
  return d;
}

// Calls f on every integral point of the box with coordinate sum `degree`.
void for_each_in_box(const IntVec& lo, const IntVec& hi, std::int64_t degree,
                     const std::function<void(const IntVec&)>& f) {
  const std::size_t n = lo.size();
  IntVec z(lo);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t partial) {
    if (i + 1 == n) {
      z[i] = degree - partial;
      if (z[i] >= lo[i] && z[i] <= hi[i]) f(z);
      return;
    }
    for (std::int64_t x = lo[i]; x <= hi[i]; ++x) {
      z[i] = x;
      rec(i + 1, partial + x);
    }
  };
  rec(0, 0);
}

void require_convex_full(const OrthogonalSet& os, const char* what) {
  if (os.fan().is_subfan()) throw std::invalid_argument(std::string(what) + " needs the full Weyl fan");
  const auto v = validate(os);
  if (!v.valid) throw std::invalid_argument(std::string(what) + ": invalid orthogonal set: " + v.message);
  if (!is_convex(os))
    throw std::invalid_argument(std::string(what) + ": the divisor is not generated by its sections");
}

Character from_doubled(DatumKind kind, const IntVec& y) {
  Character c{kind, {}};
  for (auto x : y) c.coords.push_back(make_rational(x, 2));
  return c;
}

// Calls f(Y) for every doubled candidate Y = 2 p_alpha(z).
void for_each_projected_candidate(const IntegralSet& d, const IntVec& alpha, const IntVec& coroot,
                                  const std::function<void(const IntVec&)>& f) {
  std::int64_t m = 0;
  for (const auto& u : d.chars) m = std::max(m, std::abs(idot(coroot, u)));
  const std::int64_t reach = (m + 2) / 2;
  IntVec lo = d.lo, hi = d.hi;
  for (std::size_t i = 0; i < d.n; ++i) {
    lo[i] -= reach * std::abs(alpha[i]);
    hi[i] += reach * std::abs(alpha[i]);
  }
  std::set<IntVec> seen;
  for_each_in_box(lo, hi, d.degree, [&](const IntVec& z) {
    const std::int64_t k = idot(coroot, z);
    if (k != 0 && k != 1) return;
    IntVec y(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) y[i] = 2 * z[i] - k * alpha[i];
    if (seen.insert(y).second) f(y);
  });
}

// Exists T with <Y, v> + T <alpha, v> <= 2 psi(v) for every ray.
bool doubled_line_meets(const IntegralSet& d, const IntVec& y, const IntVec& alpha) {
  // lower bound lo_n/lo_d, upper bound hi_n/hi_d with positive denominators
  bool has_lo = false, has_hi = false;
  std::int64_t lo_n = 0, lo_d = 1, hi_n = 0, hi_d = 1;
  for (std::size_t r = 0; r < d.rays.size(); ++r) {
    const std::int64_t a = idot(alpha, d.rays[r]);
    const std::int64_t b = 2 * d.psi[r] - idot(y, d.rays[r]);
    if (a == 0) {
      if (b < 0) return false;
    } else if (a > 0) {
      if (!has_hi || b * hi_d < hi_n * a) hi_n = b, hi_d = a, has_hi = true;
    } else {
      if (!has_lo || (-b) * lo_d > lo_n * (-a)) lo_n = -b, lo_d = -a, has_lo = true;
    }
  }
  return !has_lo || !has_hi || lo_n * hi_d <= hi_n * lo_d;
}

}  // namespace

bool in_polytope(const OrthogonalSet& os, const Character& y) {
  const auto psi = psi_at_rays(os);
  for (std::size_t r = 0; r < psi.size(); ++r)
    if (pairing(os.fan().rays()[r], y) > psi[r]) return false;
  return true;
}

bool line_meets_polytope(const OrthogonalSet& os, const Character& y, const Character& direction) {
  const auto psi = psi_at_rays(os);
  std::optional<Rational> lo, hi;
  for (std::size_t r = 0; r < psi.size(); ++r) {
    const Rational a = pairing(os.fan().rays()[r], direction);
    const Rational b = psi[r] - pairing(os.fan().rays()[r], y);
    if (a == 0) {
      if (b < 0) return false;
      continue;
    }
    const Rational t = b / a;
    if (a > 0) {
      if (!hi || t < *hi) hi = t;
    } else {
      if (!lo || t > *lo) lo = t;
    }
  }
  return !lo || !hi || *lo <= *hi;
}

LatticePointSet h0_points(const OrthogonalSet& os) {
  require_convex_full(os, "h0_points");
  const auto d = integral_data(os);
  LatticePointSet out;
  for_each_in_box(d.lo, d.hi, d.degree, [&](const IntVec& z) {
    for (std::size_t r = 0; r < d.rays.size(); ++r)
      if (idot(z, d.rays[r]) > d.psi[r]) return;
    Character c{os.datum().kind(), {}};
    for (auto x : z) c.coords.push_back(Rational(static_cast<long>(x)));
    out.points.push_back(std::move(c));
  });
  std::sort(out.points.begin(), out.points.end());
  return out;
}

std::vector<Character> projected_lattice_candidates(const OrthogonalSet& os, const Character& alpha) {
  require_convex_full(os, "projected_lattice_candidates");
  const auto& datum = os.datum();
  const auto d = integral_data(os);
  std::vector<Character> out;
  for_each_projected_candidate(d, to_ints(alpha), datum.coroot(alpha).coords,
                               [&](const IntVec& y) { out.push_back(from_doubled(datum.kind(), y)); });
  std::sort(out.begin(), out.end());
  return out;
}

LatticePointSet projected_h0_points(const OrthogonalSet& os, const Character& alpha) {
  require_convex_full(os, "projected_h0_points");
  const auto& datum = os.datum();
  const auto d = integral_data(os);
  const IntVec a = to_ints(alpha);
  LatticePointSet out;
  out.projected_along = alpha;
  for_each_projected_candidate(d, a, datum.coroot(alpha).coords, [&](const IntVec& y) {
    if (doubled_line_meets(d, y, a)) out.points.push_back(from_doubled(datum.kind(), y));
  });
  std::sort(out.points.begin(), out.points.end());
  return out;
}

CohomologyReport phi_cokernel_dim(const OrthogonalSet& os, const Character& alpha) {
  const auto pd = h0_points(os);
  const auto pda = projected_h0_points(os, alpha);
  std::set<Character> image;
  for (const auto& u : pd.points) image.insert(project_along_root(os.datum(), u, alpha));
  CohomologyReport rep;
  rep.h0_dim = pd.size();
  rep.h0_divisor_dim = pda.size();
  for (const auto& y : pda.points)
    if (!image.count(y)) rep.missing.push_back(y);
  rep.coker_dim = rep.missing.size();
  return rep;
}

std::int64_t h1_eigenspace_dim_topological(const OrthogonalSet& os_minus, const Character& u) {
  const Fan& fan = os_minus.fan();
  const auto psi = psi_at_rays(os_minus);
  const std::size_t nr = fan.rays().size();
  std::vector<bool> negative(nr);
  for (std::size_t r = 0; r < nr; ++r) negative[r] = psi[r] - pairing(fan.rays()[r], u) < 0;
  std::vector<std::size_t> parent(nr);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  // negative rays of one cone lie in one convex piece of the open set
  for (const auto& cone : fan.cones()) {
    std::optional<std::size_t> first;
    for (auto r : cone.rays) {
      if (!negative[r]) continue;
      if (!first) first = r;
      else parent[find(r)] = find(*first);
    }
  }
  std::int64_t components = 0;
  for (std::size_t r = 0; r < nr; ++r)
    if (negative[r] && find(r) == r) ++components;
  return std::max<std::int64_t>(0, components - 1);
}

std::map<Character, std::int64_t> topological_h1(const OrthogonalSet& os, const Character& alpha) {
  const auto minus = subtract_d_alpha(os, alpha);
  auto d = integral_data(minus);
  std::int64_t reach = 1;
  for (const auto& x : alpha.coords) reach = std::max(reach, std::abs(to_int64(x)) + 1);
  for (std::size_t i = 0; i < d.n; ++i) {
    d.lo[i] -= reach;
    d.hi[i] += reach;
  }
  // component count on integers, same rule as h1_eigenspace_dim_topological
  const Fan& fan = minus.fan();
  std::map<Character, std::int64_t> out;
  std::vector<std::size_t> parent(d.rays.size());
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::vector<bool> negative(d.rays.size());
  for_each_in_box(d.lo, d.hi, d.degree, [&](const IntVec& u) {
    for (std::size_t r = 0; r < d.rays.size(); ++r) negative[r] = d.psi[r] - idot(u, d.rays[r]) < 0;
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& cone : fan.cones()) {
      std::optional<std::size_t> first;
      for (auto r : cone.rays) {
        if (!negative[r]) continue;
        if (!first) first = r;
        else parent[find(r)] = find(*first);
      }
    }
    std::int64_t components = 0;
    for (std::size_t r = 0; r < d.rays.size(); ++r)
      if (negative[r] && find(r) == r) ++components;
    if (components > 1) {
      Character c{os.datum().kind(), {}};
      for (auto x : u) c.coords.push_back(Rational(static_cast<long>(x)));
      out[c] = components - 1;
    }
  });
  return out;
}

std::int64_t topological_h1_total(const OrthogonalSet& os, const Character& alpha) {
  std::int64_t total = 0;
  for (const auto& [u, h] : topological_h1(os, alpha)) total += h;
  return total;
}

Lemma31Conditions check_lemma31_conditions(const OrthogonalSet& os, const Character& alpha) {
  const Fan& fan = os.fan();
  const auto psi = psi_at_rays(os);
  bool neg_nonpos = false, neg_nonneg = false;
  for (std::size_t r = 0; r < psi.size(); ++r) {
    if (psi[r] >= 0) continue;
    const Rational a = pairing(fan.rays()[r], alpha);
    if (a <= 0) neg_nonpos = true;
    if (a >= 0) neg_nonneg = true;
  }
  return {!neg_nonpos, neg_nonpos && neg_nonneg};
}

}  // namespace toric
