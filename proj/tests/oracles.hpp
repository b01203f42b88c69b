#pragma once

// Brute-force references that share no code with the library's polytope
// routines: hulls from their vertices alone, with a private elimination.

#include "toric/mazur.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using toric::Character;
using toric::Rational;

// Unique solution of the (possibly overdetermined) system, if consistent.
inline std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) return std::nullopt;  // rank deficient
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < cols) return std::nullopt;
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
  return x;
}

// Convex hull of finitely many points, as the supporting half-spaces through
// every k-subset of vertices inside the k-dimensional affine hull (k <= 3).
class Hull {
 public:
  explicit Hull(const std::vector<Character>& pts_in) {
    std::set<Character> distinct(pts_in.begin(), pts_in.end());
    std::vector<Character> pts(distinct.begin(), distinct.end());
    origin_ = pts.front();
    for (const auto& p : pts) {
      const auto d = p - origin_;
      if (!coords(d)) basis_.push_back(d);
    }
    const std::size_t k = basis_.size();
    if (k > 3) throw std::logic_error("hull oracle handles dimension at most 3");
    std::vector<std::vector<Rational>> v;
    for (const auto& p : pts) v.push_back(*coords(p - origin_));
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (pick.size() == k) {
        consider(v, pick);
        return;
      }
      for (std::size_t i = start; i < v.size(); ++i) {
        pick.push_back(i);
        rec(i + 1);
        pick.pop_back();
      }
    };
    if (k > 0) rec(0);
  }

  bool contains(const Character& y) const {
    const auto c = coords(y - origin_);
    if (!c) return false;
    for (const auto& [n, b] : facets_) {
      Rational s = 0;
      for (std::size_t i = 0; i < n.size(); ++i) s += n[i] * (*c)[i];
      if (s > b) return false;
    }
    return true;
  }

 private:
  std::optional<std::vector<Rational>> coords(const Character& d) const {
    if (basis_.empty()) return d.is_zero() ? std::optional<std::vector<Rational>>(std::vector<Rational>{}) : std::nullopt;
    std::vector<std::vector<Rational>> a(d.size(), std::vector<Rational>(basis_.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < basis_.size(); ++j) a[i][j] = basis_[j].coords[i];
    return solve(a, d.coords);
  }

  void consider(const std::vector<std::vector<Rational>>& v, const std::vector<std::size_t>& pick) {
    const std::size_t k = basis_.size();
    std::vector<Rational> n(k);
    const auto& p = v[pick[0]];
    if (k == 1) {
      n[0] = 1;
    } else if (k == 2) {
      const auto& q = v[pick[1]];
      n = {q[1] - p[1], p[0] - q[0]};
    } else {
      const auto& q = v[pick[1]];
      const auto& r = v[pick[2]];
      const Rational a0 = q[0] - p[0], a1 = q[1] - p[1], a2 = q[2] - p[2];
      const Rational b0 = r[0] - p[0], b1 = r[1] - p[1], b2 = r[2] - p[2];
      n = {a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0};
    }
    if (std::all_of(n.begin(), n.end(), [](const Rational& x) { return x == 0; })) return;
    auto value = [&](const std::vector<Rational>& x) {
      Rational s = 0;
      for (std::size_t i = 0; i < k; ++i) s += n[i] * x[i];
      return s;
    };
    const Rational b = value(p);
    bool below = true, above = true;
    for (const auto& x : v) {
      const Rational s = value(x);
      below = below && s <= b;
      above = above && s >= b;
    }
    if (below) facets_.emplace_back(n, b);
    if (above) {
      for (auto& x : n) x = -x;
      facets_.emplace_back(n, -b);
    }
  }

  Character origin_;
  std::vector<Character> basis_;
  std::vector<std::pair<std::vector<Rational>, Rational>> facets_;
};

inline void box_bounds(const std::vector<Character>& pts, std::vector<std::int64_t>& lo,
                       std::vector<std::int64_t>& hi, std::int64_t pad) {
  const std::size_t n = pts.front().size();
  lo.assign(n, 0);
  hi.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = pts.front().coords[i], mx = mn;
    for (const auto& p : pts) {
      mn = std::min(mn, p.coords[i]);
      mx = std::max(mx, p.coords[i]);
    }
    mpz_class f, c;
    mpz_fdiv_q(f.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_cdiv_q(c.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    lo[i] = f.get_si() - pad;
    hi[i] = c.get_si() + pad;
  }
}

inline void for_each_integral(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
                              const std::function<void(const std::vector<std::int64_t>&)>& f) {
  std::vector<std::int64_t> z(lo);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == lo.size()) {
      f(z);
      return;
    }
    for (z[i] = lo[i]; z[i] <= hi[i]; ++z[i]) rec(i + 1);
  };
  rec(0);
}

inline Character make(toric::DatumKind kind, const std::vector<std::int64_t>& z) {
  Character c{kind, {}};
  for (auto x : z) c.coords.push_back(Rational(static_cast<long>(x)));
  return c;
}

// P_D by scanning every integral point of the box and testing hull membership.
inline std::vector<Character> brute_h0(const toric::OrthogonalSet& os) {
  const auto& verts = os.chars();
  std::vector<std::int64_t> lo, hi;
  box_bounds(verts, lo, hi, 1);
  const Hull hull(verts);
  const Rational degree = verts.front().sum();
  std::vector<Character> out;
  for_each_integral(lo, hi, [&](const std::vector<std::int64_t>& z) {
    const Character c = make(os.datum().kind(), z);
    if (c.sum() == degree && hull.contains(c)) out.push_back(c);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// P_{D_alpha}: every p_alpha(z) for z in a generous box, kept when it is in
// the hull of the projected vertices.
inline std::vector<Character> brute_projected(const toric::OrthogonalSet& os, const Character& alpha) {
  const auto& datum = os.datum();
  std::vector<Character> verts;
  for (const auto& u : os.chars()) verts.push_back(toric::project_along_root(datum, u, alpha));
  std::vector<std::int64_t> lo, hi;
  box_bounds(os.chars(), lo, hi, 0);
  std::int64_t spread = 0;
  for (std::size_t i = 0; i < lo.size(); ++i) spread = std::max(spread, hi[i] - lo[i]);
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] -= spread + 2;
    hi[i] += spread + 2;
  }
  const Character first = os.chars().front();
  const Hull hull(verts);
  std::set<Character> seen;
  std::vector<Character> out;
  for_each_integral(lo, hi, [&](const std::vector<std::int64_t>& z) {
    const Character c = make(datum.kind(), z);
    if (c.sum() != first.sum()) return;
    const Character y = toric::project_along_root(datum, c, alpha);
    if (!seen.insert(y).second) return;
    if (hull.contains(y)) out.push_back(y);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
