#include "toric/root_system.hpp"

#include "toric/linalg.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toric {

bool Character::is_integral() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return is_integer(r); });
}

bool Character::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return r == 0; });
}

Rational Character::sum() const {
  Rational s = 0;
  for (const auto& c : coords) s += c;
  return s;
}

namespace {

void require_same_shape(const Character& a, const Character& b) {
  if (a.kind != b.kind || a.size() != b.size())
    throw std::invalid_argument("characters of different root data");
}

}  // namespace

Character operator+(const Character& a, const Character& b) {
  require_same_shape(a, b);
  Character r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Character operator-(const Character& a, const Character& b) {
  require_same_shape(a, b);
  Character r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

Character operator-(const Character& a) {
  Character r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

Character operator*(const Rational& s, const Character& a) {
  Character r = a;
  for (auto& c : r.coords) c *= s;
  return r;
}

Rational dot(const Character& a, const Character& b) {
  require_same_shape(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.coords[i] * b.coords[i];
  return s;
}

std::string to_string(const Character& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << to_string(c.coords[i]);
  os << ')';
  return os.str();
}

Cocharacter Cocharacter::canonical() const {
  Cocharacter r = *this;
  if (r.coords.empty()) return r;
  const std::int64_t last = r.coords.back();
  for (auto& c : r.coords) c -= last;
  return r;
}

bool operator==(const Cocharacter& a, const Cocharacter& b) {
  return a.kind == b.kind && a.canonical().coords == b.canonical().coords;
}

std::string to_string(const Cocharacter& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c.coords[i];
  os << ')';
  return os.str();
}

Rational pairing(const Cocharacter& v, const Character& u) {
  if (v.kind != u.kind || v.size() != u.size())
    throw std::invalid_argument("pairing between different root data");
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.coords[i] != 0) s += Rational(static_cast<long>(v.coords[i])) * u.coords[i];
  return s;
}

Rational pairing(std::span<const Rational> v, const Character& u) {
  if (v.size() != u.size()) throw std::invalid_argument("pairing between different root data");
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * u.coords[i];
  return s;
}

RootDatum RootDatum::build(DatumKind kind, int n) {
  RootDatum d;
  d.kind_ = kind;
  auto unit_difference = [&](int i, int j) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(d.n_), 0);
    c[i] = 1;
    c[j] = -1;
    return c;
  };
  std::vector<std::vector<std::int64_t>> raw;
  std::vector<std::vector<std::int64_t>> simple;
  if (kind == DatumKind::G2) {
    d.n_ = 3;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j)
        if (i != j) raw.push_back(unit_difference(i, j));  // short
      std::vector<std::int64_t> l(3, -1);
      l[i] = 2;
      raw.push_back(l);  // long
      for (auto& x : l) x = -x;
      raw.push_back(l);
    }
    simple = {{1, -1, 0}, {-1, 2, -1}};
  } else {
    if (n < 2) throw std::invalid_argument("GL_n/SL_n need n >= 2");
    d.n_ = n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) raw.push_back(unit_difference(i, j));
    for (int i = 0; i + 1 < n; ++i) simple.push_back(unit_difference(i, i + 1));
  }
  for (const auto& r : raw) d.roots_.push_back(Character{kind, {r.begin(), r.end()}});
  std::sort(d.roots_.begin(), d.roots_.end());
  for (const auto& s : simple) d.simple_roots_.push_back(Character{kind, {s.begin(), s.end()}});

  for (const auto& root : d.roots_) {
    // 2 alpha / (alpha, alpha), moved along the diagonal to an integral representative
    const Rational scale = Rational(2) / dot(root, root);
    std::vector<Rational> c;
    for (const auto& x : root.coords) c.push_back(scale * x);
    if (!std::all_of(c.begin(), c.end(), [](const Rational& r) { return is_integer(r); })) {
      const Rational shift = c.back();
      for (auto& x : c) x -= shift;
    }
    Cocharacter cv{kind, {}};
    for (const auto& x : c) cv.coords.push_back(to_int64(x));
    d.coroots_.push_back(cv);
  }

  // positive roots: nonnegative coordinates in the simple-root basis
  for (const auto& root : d.roots_) {
    RationalMatrix a(static_cast<std::size_t>(d.n_), std::vector<Rational>(d.simple_roots_.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < d.simple_roots_.size(); ++j) a[i][j] = d.simple_roots_[j].coords[i];
    auto x = solve_exact(a, root.coords);
    if (!x) throw std::logic_error("root outside the span of the simple roots");
    if (std::all_of(x->begin(), x->end(), [](const Rational& r) { return r >= 0; }))
      d.positive_roots_.push_back(root);
  }
  return d;
}

RootDatum RootDatum::parse(std::string_view name) {
  if (name == "G2") return build(DatumKind::G2);
  const auto colon = name.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("bad root datum name '" + std::string(name) + "'");
  const std::string_view head = name.substr(0, colon);
  const std::string tail(name.substr(colon + 1));
  DatumKind kind;
  if (head == "GL") kind = DatumKind::GL;
  else if (head == "SL") kind = DatumKind::SL;
  else throw std::invalid_argument("bad root datum name '" + std::string(name) + "'");
  if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      tail.size() > 3)
    throw std::invalid_argument("bad rank in root datum name '" + std::string(name) + "'");
  return build(kind, std::stoi(tail));
}

std::string RootDatum::name() const {
  switch (kind_) {
    case DatumKind::GL: return "GL:" + std::to_string(n_);
    case DatumKind::SL: return "SL:" + std::to_string(n_);
    case DatumKind::G2: return "G2";
  }
  return {};
}

bool RootDatum::is_root(const Character& c) const {
  return std::binary_search(roots_.begin(), roots_.end(), c);
}

const Cocharacter& RootDatum::coroot(const Character& root) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), root);
  if (it == roots_.end() || !(*it == root))
    throw std::invalid_argument(to_string(root) + " is not a root of " + name());
  return coroots_[static_cast<std::size_t>(it - roots_.begin())];
}

void RootDatum::require_root(const Character& root) const { (void)coroot(root); }

Character RootDatum::character(std::span<const std::int64_t> coords) const {
  std::vector<Rational> c;
  for (auto x : coords) c.push_back(Rational(static_cast<long>(x)));
  return character(std::move(c));
}

Character RootDatum::character(std::initializer_list<std::int64_t> coords) const {
  return character(std::span<const std::int64_t>(coords.begin(), coords.size()));
}

Character RootDatum::character(std::vector<Rational> coords) const {
  if (coords.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("character of " + name() + " needs " + std::to_string(n_) + " coordinates");
  Character c{kind_, std::move(coords)};
  if (kind_ != DatumKind::GL && c.sum() != 0)
    throw std::invalid_argument("characters of " + name() + " have coordinate sum 0, got " + to_string(c));
  return c;
}

Character RootDatum::zero() const { return Character{kind_, std::vector<Rational>(static_cast<std::size_t>(n_))}; }

Cocharacter RootDatum::cocharacter(std::vector<std::int64_t> coords) const {
  if (coords.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("cocharacter of " + name() + " needs " + std::to_string(n_) + " coordinates");
  return Cocharacter{kind_, std::move(coords)};
}

bool RootDatum::in_character_lattice(const Character& c) const {
  if (c.kind != kind_ || c.size() != static_cast<std::size_t>(n_) || !c.is_integral()) return false;
  return kind_ == DatumKind::GL || c.sum() == 0;
}

bool RootDatum::is_dominant(const Character& mu) const {
  return std::all_of(simple_roots_.begin(), simple_roots_.end(),
                     [&](const Character& a) { return pairing(coroot(a), mu) >= 0; });
}

Character RootDatum::reflect(const Character& u, const Character& root) const {
  return u - pairing(coroot(root), u) * root;
}

bool RootDatum::in_root_lattice(const Character& c) const {
  if (c.kind != kind_ || c.size() != static_cast<std::size_t>(n_)) return false;
  RationalMatrix a(static_cast<std::size_t>(n_), std::vector<Rational>(simple_roots_.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < simple_roots_.size(); ++j) a[i][j] = simple_roots_[j].coords[i];
  auto x = solve_exact(a, c.coords);
  return x && std::all_of(x->begin(), x->end(), [](const Rational& r) { return is_integer(r); });
}

std::vector<Character> weyl_orbit(const RootDatum& datum, const Character& mu) {
  if (!mu.is_integral()) throw std::invalid_argument("weyl_orbit needs an integral weight");
  std::set<Character> seen{mu};
  std::deque<Character> queue{mu};
  while (!queue.empty()) {
    Character u = queue.front();
    queue.pop_front();
    for (const auto& s : datum.simple_roots()) {
      Character w = datum.reflect(u, s);
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  return {seen.begin(), seen.end()};
}

Character project_along_root(const RootDatum& datum, const Character& u, const Character& alpha) {
  const Cocharacter& co = datum.coroot(alpha);
  return u - (pairing(co, u) / 2) * alpha;
}

Character project_along(const Character& u, const Character& direction) {
  const Rational norm = dot(direction, direction);
  if (norm == 0) throw std::invalid_argument("projection along the zero vector");
  return u - (dot(u, direction) / norm) * direction;
}

std::vector<Character> orthogonal_fiber_directions(std::span<const Character> roots) {
  std::vector<Character> dirs;
  for (const auto& r : roots) {
    Character d = r;
    for (const auto& prev : dirs) d = project_along(d, prev);
    if (d.is_zero()) throw std::invalid_argument("fiber roots are linearly dependent");
    dirs.push_back(std::move(d));
  }
  return dirs;
}

namespace {

void require_batches(const RootDatum& datum, std::span<const int> batches) {
  if (datum.kind() == DatumKind::G2) throw std::invalid_argument("Levi batches are defined for GL_n/SL_n only");
  if (std::any_of(batches.begin(), batches.end(), [](int b) { return b <= 0; }))
    throw std::invalid_argument("Levi batches must be positive");
  if (std::accumulate(batches.begin(), batches.end(), 0) != datum.n())
    throw std::invalid_argument("Levi batches must sum to " + std::to_string(datum.n()));
}

}  // namespace

Character pr_levi(const RootDatum& datum, const Character& u, std::span<const int> batches) {
  require_batches(datum, batches);
  if (u.size() != static_cast<std::size_t>(datum.n())) throw std::invalid_argument("pr_levi: wrong length");
  Character r = u;
  std::size_t start = 0;
  for (int b : batches) {
    Rational mean = 0;
    for (int i = 0; i < b; ++i) mean += u.coords[start + i];
    mean /= b;
    for (int i = 0; i < b; ++i) r.coords[start + i] = mean;
    start += static_cast<std::size_t>(b);
  }
  return r;
}

std::vector<Character> levi_roots(const RootDatum& datum, std::span<const int> batches) {
  require_batches(datum, batches);
  std::vector<Character> roots;
  int start = 0;
  for (int b : batches) {
    for (int j = start; j + 1 < start + b; ++j) {
      Character r = datum.zero();
      r.coords[j] = 1;
      r.coords[j + 1] = -1;
      roots.push_back(std::move(r));
    }
    start += b;
  }
  return roots;
}

Character pr_levi_factored(const RootDatum& datum, const Character& u, std::span<const int> batches) {
  const auto roots = levi_roots(datum, batches);
  Character r = u;
  for (const auto& d : orthogonal_fiber_directions(roots)) r = project_along(r, d);
  return r;
}

}  // namespace toric
