#include "toric/mazur.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace toric {

LeviSpec LeviSpec::from_batches(const RootDatum& datum, std::vector<int> batches) {
  if (datum.kind() == DatumKind::G2) throw std::invalid_argument("batch Levi subgroups need GL_n or SL_n");
  int total = 0;
  for (int b : batches) {
    if (b <= 0) throw std::invalid_argument("batch sizes must be positive");
    total += b;
  }
  if (total != datum.n())
    throw std::invalid_argument("batch sizes sum to " + std::to_string(total) + ", expected " +
                                std::to_string(datum.n()));
  return {std::move(batches), std::nullopt};
}

LeviSpec LeviSpec::rank_one(const RootDatum& datum, const Character& alpha) {
  datum.require_root(alpha);
  return {{}, alpha};
}

LatticePointSet compute_P_mu(const RootDatum& datum, const Character& mu) {
  if (!datum.in_character_lattice(mu)) throw std::invalid_argument("mu is not a character of " + datum.name());
  if (!datum.is_dominant(mu)) throw std::invalid_argument("mu = " + to_string(mu) + " is not dominant");
  const auto os = from_weyl_orbit(make_weyl_fan(datum), mu);
  auto pts = h0_points(os);
  std::erase_if(pts.points, [&](const Character& nu) { return !datum.in_root_lattice(nu - mu); });
  return pts;
}

namespace {

std::vector<Character> sorted_unique(std::vector<Character> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Points of pr_M(X) in the bounding box of pr_M(Conv): batch b holds m_b / n_b.
std::vector<Character> batch_candidates(const OrthogonalSet& os, const std::vector<int>& batches) {
  const auto& datum = os.datum();
  const std::size_t r = batches.size();
  std::vector<std::int64_t> lo(r), hi(r);
  std::vector<std::size_t> start(r + 1, 0);
  for (std::size_t b = 0; b < r; ++b) start[b + 1] = start[b] + static_cast<std::size_t>(batches[b]);
  for (std::size_t b = 0; b < r; ++b) {
    std::optional<Rational> mn, mx;
    for (const auto& u : os.chars())
      for (std::size_t i = start[b]; i < start[b + 1]; ++i) {
        if (!mn || u.coords[i] < *mn) mn = u.coords[i];
        if (!mx || u.coords[i] > *mx) mx = u.coords[i];
      }
    lo[b] = batches[b] * to_int64(*mn);
    hi[b] = batches[b] * to_int64(*mx);
  }
  const std::int64_t degree = to_int64(os.at(0).sum());
  std::vector<Character> out;
  std::vector<std::int64_t> m(r);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t b, std::int64_t partial) {
    if (b + 1 == r) {
      m[b] = degree - partial;
      if (m[b] < lo[b] || m[b] > hi[b]) return;
      Character y{datum.kind(), std::vector<Rational>(static_cast<std::size_t>(datum.n()))};
      for (std::size_t c = 0; c < r; ++c)
        for (std::size_t i = start[c]; i < start[c + 1]; ++i) y.coords[i] = make_rational(m[c], batches[c]);
      out.push_back(std::move(y));
      return;
    }
    for (std::int64_t x = lo[b]; x <= hi[b]; ++x) {
      m[b] = x;
      rec(b + 1, partial + x);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Character> keep_if(const std::vector<Character>& v, const std::function<bool(const Character&)>& pred) {
  std::vector<Character> out;
  for (const auto& c : v)
    if (pred(c)) out.push_back(c);
  return out;
}

}  // namespace

ProjectionReport verify_projection_equality(const OrthogonalSet& os, const LeviSpec& spec) {
  const auto v = validate(os);
  if (!v.valid) throw std::invalid_argument("invalid orthogonal set: " + v.message);
  if (!v.positive) throw std::invalid_argument("the orthogonal set is not positive");
  const auto& datum = os.datum();
  const auto pd = h0_points(os);

  ProjectionReport rep;
  std::vector<Character> lhs, composed, direct;
  if (spec.alpha) {
    const Character& alpha = *spec.alpha;
    for (const auto& u : pd.points) lhs.push_back(project_along_root(datum, u, alpha));
    const auto candidates = projected_lattice_candidates(os, alpha);
    composed = keep_if(candidates, [&](const Character& y) { return line_meets_polytope(os, y, alpha); });
    const auto restricted = restrict_to_divisor(os, alpha);
    direct = keep_if(candidates, [&](const Character& y) { return in_polytope(restricted, y); });
    rep.lhs.projected_along = rep.rhs.projected_along = alpha;
  } else {
    for (const auto& u : pd.points) lhs.push_back(pr_levi(datum, u, spec.batches));
    const auto roots = levi_roots(datum, spec.batches);
    const auto candidates = batch_candidates(os, spec.batches);
    if (roots.empty()) {
      composed = keep_if(candidates, [&](const Character& y) { return in_polytope(os, y); });
      direct = composed;
    } else {
      OrthogonalSet current = os;
      for (std::size_t k = 0; k + 1 < roots.size(); ++k) current = restrict_to_divisor(current, roots[k]);
      const Character last = orthogonal_fiber_directions(roots).back();
      composed = keep_if(candidates, [&](const Character& y) { return line_meets_polytope(current, y, last); });
      const auto final_set = restrict_to_divisor(current, roots.back());
      direct = keep_if(candidates, [&](const Character& y) { return in_polytope(final_set, y); });
    }
  }
  rep.lhs.points = sorted_unique(std::move(lhs));
  rep.rhs.points = sorted_unique(std::move(composed));
  direct = sorted_unique(std::move(direct));
  rep.routes_agree = direct == rep.rhs.points;
  for (const auto& y : rep.lhs.points)
    if (!rep.rhs.contains(y)) throw std::logic_error("projected point " + to_string(y) + " lies outside the rhs");
  for (const auto& y : rep.rhs.points)
    if (!rep.lhs.contains(y)) rep.witnesses.push_back(y);
  rep.equal = rep.witnesses.empty();
  return rep;
}

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // uniform enough for sweeps, and identical on every platform
  std::uint64_t below(std::uint64_t m) { return engine_() % m; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

Character unit(const RootDatum& datum, std::size_t i, std::int64_t sign) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(datum.n()), 0);
  c[i] = sign;
  Character u{datum.kind(), {}};
  for (auto x : c) u.coords.push_back(Rational(static_cast<long>(x)));
  return u;
}

// Sets with convex support function, from which the generator draws.
std::vector<OrthogonalSet> positive_blocks(const std::shared_ptr<const Fan>& fan) {
  const auto& datum = fan->datum();
  std::vector<OrthogonalSet> blocks;
  for (const auto& alpha : datum.roots()) blocks.push_back(d_alpha_set(fan, alpha));
  if (datum.kind() == DatumKind::G2) {
    blocks.push_back(from_weyl_orbit(fan, datum.character({1, 0, -1})));
    blocks.push_back(from_weyl_orbit(fan, datum.character({2, -1, -1})));
    return blocks;
  }
  const std::size_t n = static_cast<std::size_t>(datum.n());
  // order of the coordinates on each chamber, largest first
  std::vector<std::vector<std::int64_t>> interior;
  for (const auto& cone : fan->cones()) {
    std::vector<std::int64_t> s(n, 0);
    for (auto r : cone.rays)
      for (std::size_t i = 0; i < n; ++i) s[i] += fan->rays()[r].coords[i];
    interior.push_back(std::move(s));
  }
  auto top = [&](std::size_t cone, std::uint32_t mask) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i & 1) && (!best || interior[cone][i] > interior[cone][*best])) best = i;
    return *best;
  };
  auto bottom = [&](std::size_t cone, std::uint32_t mask) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i & 1) && (!best || interior[cone][i] < interior[cone][*best])) best = i;
    return *best;
  };
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t a = 1; a <= full; ++a)
    for (std::uint32_t b = 1; b <= full; ++b) {
      std::vector<Character> chars;
      for (std::size_t c = 0; c < fan->cones().size(); ++c)
        chars.push_back(unit(datum, top(c, a), 1) + unit(datum, bottom(c, b), -1));
      blocks.emplace_back(fan, std::move(chars));
    }
  if (datum.kind() == DatumKind::GL) {
    for (std::uint32_t a = 1; a <= full; ++a) {
      std::vector<Character> up, down;
      for (std::size_t c = 0; c < fan->cones().size(); ++c) {
        up.push_back(unit(datum, top(c, a), 1));
        down.push_back(unit(datum, bottom(c, a), -1));
      }
      blocks.emplace_back(fan, std::move(up));
      blocks.emplace_back(fan, std::move(down));
    }
  }
  return blocks;
}

Character random_character(const RootDatum& datum, Rng& rng, std::int64_t range) {
  const std::size_t n = static_cast<std::size_t>(datum.n());
  std::vector<std::int64_t> c(n);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = rng.between(-range, range);
    sum += c[i];
  }
  if (datum.kind() != DatumKind::GL) c[n - 1] -= sum;
  return datum.character(std::span<const std::int64_t>(c));
}

}  // namespace

OrthogonalSet random_positive_orthogonal_set(const std::shared_ptr<const Fan>& fan, std::int64_t bound,
                                             std::uint64_t seed) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  Rng rng(seed);
  const auto& datum = fan->datum();
  OrthogonalSet current = constant_set(fan, datum.zero());
  if (bound > 0) {
    const auto blocks = positive_blocks(fan);
    const std::uint64_t target = 1 + rng.below(static_cast<std::uint64_t>(3 * bound));
    std::uint64_t added = 0;
    for (std::uint64_t attempt = 0; added < target && attempt < 50 * target; ++attempt) {
      OrthogonalSet candidate = current + blocks[rng.below(blocks.size())];
      const auto inc = wall_increments(candidate);
      if (std::all_of(inc.begin(), inc.end(), [&](const Rational& m) { return m <= bound; })) {
        current = std::move(candidate);
        ++added;
      }
    }
  }
  return shift(current, random_character(datum, rng, 3));
}

OrthogonalSet random_valid_orthogonal_set(const std::shared_ptr<const Fan>& fan, std::int64_t range,
                                          std::uint64_t seed) {
  Rng rng(seed);
  const auto& datum = fan->datum();
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Rational> coefficients;
    for (std::size_t r = 0; r < fan->rays().size(); ++r)
      coefficients.push_back(Rational(static_cast<long>(rng.between(-range, range))));
    const std::int64_t degree = datum.kind() == DatumKind::GL ? rng.between(-range, range) : 0;
    try {
      return from_ray_coefficients(fan, coefficients, Rational(static_cast<long>(degree)));
    } catch (const std::invalid_argument&) {
    }
  }
  return constant_set(fan, datum.zero());
}

OrthogonalSet perturbed_positive_orthogonal_set(const std::shared_ptr<const Fan>& fan, std::int64_t bound,
                                                std::uint64_t seed) {
  const auto base = random_positive_orthogonal_set(fan, bound, seed);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto coefficients = ray_coefficients(base);
  coefficients[rng.below(coefficients.size())] += rng.below(2) ? 1 : -1;
  return from_ray_coefficients(fan, coefficients, base.at(0).sum());
}

std::vector<std::vector<int>> batch_compositions(int n) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    std::vector<int> batches;
    int size = 1;
    for (int i = 0; i + 1 < n; ++i) {
      if (cuts >> i & 1) {
        batches.push_back(size);
        size = 1;
      } else {
        ++size;
      }
    }
    batches.push_back(size);
    out.push_back(std::move(batches));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Character> g2_dominant_weights(const RootDatum& g2, std::int64_t max_coord) {
  std::vector<Character> out;
  for (std::int64_t a = 0; a <= max_coord; ++a)
    for (std::int64_t b = 0; b <= a; ++b) out.push_back(g2.character({a, b, -a - b}));
  return out;
}

OrthogonalSet g2_counterexample_set(const std::shared_ptr<const Fan>& g2_fan) {
  const auto& datum = g2_fan->datum();
  if (datum.kind() != DatumKind::G2) throw std::invalid_argument("the counterexample lives on the G2 fan");
  std::vector<Character> chars;
  for (int i = 1; i <= 12; ++i) {
    const bool upper = i <= 5 || i == 12;
    chars.push_back(upper ? datum.character({1, 0, -1}) : datum.character({0, -1, 1}));
  }
  std::vector<Character> ordered(12, datum.zero());
  for (int i = 1; i <= 12; ++i) ordered[g2_fan->cone_index(std::to_string(i))] = chars[static_cast<std::size_t>(i - 1)];
  return {g2_fan, std::move(ordered)};
}

Counterexample g2_counterexample() {
  const auto datum = RootDatum::build(DatumKind::G2);
  auto os = g2_counterexample_set(make_weyl_fan(datum));
  const Character alpha = datum.character({1, -1, 0});
  auto projection = verify_projection_equality(os, LeviSpec::rank_one(datum, alpha));
  auto cohomology = phi_cokernel_dim(os, alpha);
  return {std::move(os), alpha, std::move(projection), std::move(cohomology)};
}

G2Case g2_case(const std::shared_ptr<const Fan>& g2_fan, char label, std::int64_t n) {
  const auto& datum = g2_fan->datum();
  if (datum.kind() != DatumKind::G2) throw std::invalid_argument("the G2 cases live on the G2 fan");
  if (n < 1) throw std::invalid_argument("n must be a positive integer");
  const bool long_orbit = label == 'a' || label == 'b';
  if (!long_orbit && label != 'c' && label != 'd') throw std::invalid_argument("case must be one of a, b, c, d");
  // values on sigma_k, sigma_{k+1} for the first cone k of each pair
  std::vector<std::pair<int, Character>> pairs;
  if (long_orbit) {
    pairs = {{2, datum.character({n, n, -2 * n})},
             {4, datum.character({-n, 2 * n, -n})},
             {6, datum.character({-2 * n, n, n})}};
  } else {
    pairs = {{1, datum.character({n, 0, -n})}, {3, datum.character({0, n, -n})}, {5, datum.character({-n, n, 0})}};
  }
  std::vector<Character> chars(12, datum.zero());
  auto put = [&](int sigma, const Character& u) {
    chars[g2_fan->cone_index(std::to_string((sigma - 1) % 12 + 1))] = u;
  };
  for (const auto& [k, u] : pairs) {
    put(k, u);
    put(k + 1, u);
    put(k + 6, -u);
    put(k + 7, -u);
  }
  const bool short_root = label == 'a' || label == 'c';
  const Character alpha = short_root ? datum.character({1, -1, 0}) : datum.character({2, -1, -1});
  const std::int64_t reach = label == 'a' ? 2 * n : label == 'b' ? 3 * n : label == 'c' ? n : 2 * n;
  LatticePointSet expected;
  expected.projected_along = alpha;
  for (std::int64_t k = -reach; k <= reach; ++k) {
    if (short_root)
      expected.points.push_back(datum.character({make_rational(k, 2), make_rational(k, 2), make_rational(-k)}));
    else
      expected.points.push_back(datum.character({Rational(0), make_rational(k, 2), make_rational(-k, 2)}));
  }
  std::sort(expected.points.begin(), expected.points.end());
  return {OrthogonalSet(g2_fan, std::move(chars)), alpha, std::move(expected)};
}

}  // namespace toric
