#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/root_system.hpp"

#include <set>

using namespace toric;

TEST_CASE("rationals print and parse exactly") {
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(make_rational(-4, 2)) == "-2");
  CHECK(parse_rational("-3/6") == make_rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK(to_int64(make_rational(-9)) == -9);
  CHECK_THROWS_AS(to_int64(make_rational(1, 2)), std::domain_error);
}

TEST_CASE("datum names round-trip") {
  for (const char* name : {"GL:3", "SL:4", "G2"}) CHECK(RootDatum::parse(name).name() == name);
  CHECK_THROWS_AS(RootDatum::parse("SO:5"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::parse("SL:x"), std::invalid_argument);
}

TEST_CASE("root counts and coroot pairings") {
  struct Want {
    const char* name;
    std::size_t roots;
    int rank;
  };
  for (auto w : {Want{"SL:3", 6, 2}, Want{"SL:4", 12, 3}, Want{"GL:3", 6, 2}, Want{"GL:5", 20, 4}, Want{"G2", 12, 2}}) {
    const auto d = RootDatum::parse(w.name);
    CHECK(d.roots().size() == w.roots);
    CHECK(d.positive_roots().size() == w.roots / 2);
    CHECK(d.simple_roots().size() == static_cast<std::size_t>(w.rank));
    for (const auto& a : d.roots()) {
      CHECK(pairing(d.coroot(a), a) == 2);
      CHECK(d.is_root(-a));
      // reflection is an involution that negates the root
      CHECK(d.reflect(a, a) == -a);
    }
  }
}

TEST_CASE("G2 roots and coroots") {
  const auto g = RootDatum::build(DatumKind::G2);
  std::size_t shorts = 0, longs = 0;
  for (const auto& a : g.roots()) (dot(a, a) == 2 ? shorts : longs)++;
  CHECK(shorts == 6);
  CHECK(longs == 6);
  CHECK(g.coroot(g.character({2, -1, -1})).canonical() == g.cocharacter({1, 0, 0}).canonical());
  CHECK(g.coroot(g.character({-1, 2, -1})).canonical() == g.cocharacter({0, 1, 0}).canonical());
  const std::set<Character> simple(g.simple_roots().begin(), g.simple_roots().end());
  CHECK(simple == std::set<Character>{g.character({-1, 2, -1}), g.character({1, -1, 0})});
  CHECK_THROWS_AS(g.coroot(g.character({2, 0, -2})), std::invalid_argument);
}

TEST_CASE("cocharacters compare modulo the diagonal") {
  const auto d = RootDatum::build(DatumKind::SL, 3);
  CHECK(d.cocharacter({1, 1, 0}) == d.cocharacter({0, 0, -1}));
  CHECK(!(d.cocharacter({1, 0, 0}) == d.cocharacter({0, 1, 0})));
}

TEST_CASE("Weyl orbits") {
  const auto sl3 = RootDatum::build(DatumKind::SL, 3);
  CHECK(weyl_orbit(sl3, sl3.character({1, 0, -1})).size() == 6);
  CHECK(weyl_orbit(sl3, sl3.character({1, 1, -2})).size() == 3);
  CHECK(weyl_orbit(sl3, sl3.zero()).size() == 1);
  const auto g = RootDatum::build(DatumKind::G2);
  CHECK(weyl_orbit(g, g.character({1, 0, -1})).size() == 6);
  CHECK(weyl_orbit(g, g.character({2, -1, -1})).size() == 6);
  CHECK(weyl_orbit(g, g.character({3, 1, -4})).size() == 12);
  // every orbit holds exactly one dominant element
  for (const auto& mu : {g.character({3, 1, -4}), g.character({1, 0, -1})}) {
    int dominant = 0;
    for (const auto& w : weyl_orbit(g, mu)) dominant += g.is_dominant(w);
    CHECK(dominant == 1);
  }
}

TEST_CASE("dominance and the root lattice") {
  const auto g = RootDatum::build(DatumKind::G2);
  CHECK(g.is_dominant(g.character({2, 1, -3})));
  CHECK(!g.is_dominant(g.character({1, 2, -3})));
  CHECK(!g.is_dominant(g.character({1, -1, 0})));
  CHECK(g.in_root_lattice(g.character({1, 0, -1})));
  const auto gl = RootDatum::build(DatumKind::GL, 3);
  CHECK(gl.in_root_lattice(gl.character({1, -1, 0})));
  CHECK(!gl.in_root_lattice(gl.character({1, 0, 0})));
  CHECK_THROWS_AS(RootDatum::build(DatumKind::SL, 3).character({1, 0, 0}), std::invalid_argument);
}

TEST_CASE("projection along a root") {
  const auto g = RootDatum::build(DatumKind::G2);
  const auto a = g.character({1, -1, 0});
  const auto p = project_along_root(g, g.character({1, 0, -1}), a);
  CHECK(to_string(p) == "(1/2,1/2,-1)");
  CHECK(pairing(g.coroot(a), p) == 0);
  // idempotent, and equal to the orthogonal projection
  CHECK(project_along_root(g, p, a) == p);
  CHECK(project_along(g.character({1, 0, -1}), a) == p);
  const auto b = g.character({2, -1, -1});
  CHECK(to_string(project_along_root(g, g.character({1, 0, -1}), b)) == "(0,1/2,-1/2)");
}

TEST_CASE("Levi projections average each batch") {
  const auto gl = RootDatum::build(DatumKind::GL, 4);
  const auto u = gl.character({1, 2, 3, 4});
  const std::vector<int> b22 = {2, 2}, b31 = {3, 1}, b4 = {4}, b1111 = {1, 1, 1, 1};
  CHECK(to_string(pr_levi(gl, u, b22)) == "(3/2,3/2,7/2,7/2)");
  CHECK(to_string(pr_levi(gl, u, b31)) == "(2,2,2,4)");
  CHECK(to_string(pr_levi(gl, u, b4)) == "(5/2,5/2,5/2,5/2)");
  CHECK(pr_levi(gl, u, b1111) == u);
  CHECK(levi_roots(gl, b31) == std::vector<Character>{gl.character({1, -1, 0, 0}), gl.character({0, 1, -1, 0})});
  for (const auto& b : {b22, b31, b4, b1111}) CHECK(pr_levi_factored(gl, u, b) == pr_levi(gl, u, b));
  // projecting along the raw roots one after the other does not give the mean
  const auto literal = project_along_root(gl, project_along_root(gl, u, gl.character({1, -1, 0, 0})),
                                          gl.character({0, 1, -1, 0}));
  CHECK(literal != pr_levi(gl, u, b31));
  const std::vector<int> bad = {2, 1};
  CHECK_THROWS_AS(pr_levi(gl, u, bad), std::invalid_argument);
}

TEST_CASE("fiber directions are orthogonal") {
  const auto gl = RootDatum::build(DatumKind::GL, 4);
  const std::vector<Character> roots = {gl.character({1, -1, 0, 0}), gl.character({0, 1, -1, 0}),
                                        gl.character({0, 0, 1, -1})};
  const auto dirs = orthogonal_fiber_directions(roots);
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (std::size_t j = i + 1; j < dirs.size(); ++j) CHECK(dot(dirs[i], dirs[j]) == 0);
  const std::vector<Character> dependent = {roots[0], -roots[0]};
  CHECK_THROWS_AS(orthogonal_fiber_directions(dependent), std::invalid_argument);
}
