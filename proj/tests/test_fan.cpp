#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/fan.hpp"

#include <set>

using namespace toric;

namespace {

std::vector<Rational> rat(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

std::set<std::vector<std::int64_t>> canonical_rays(const Fan& fan, const std::vector<std::size_t>& idx) {
  std::set<std::vector<std::int64_t>> out;
  for (auto i : idx) out.insert(fan.rays()[i].canonical().coords);
  return out;
}

std::set<std::vector<std::int64_t>> all_rays(const Fan& fan) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& r : fan.rays()) out.insert(r.canonical().coords);
  return out;
}

std::set<std::vector<std::int64_t>> canon(const RootDatum& d, std::vector<std::vector<std::int64_t>> vs) {
  std::set<std::vector<std::int64_t>> out;
  for (auto& v : vs) out.insert(d.cocharacter(v).canonical().coords);
  return out;
}

}  // namespace

TEST_CASE("fan sizes") {
  struct Want {
    const char* name;
    std::size_t rays, cones, walls;
  };
  for (auto w : {Want{"SL:3", 6, 6, 6}, Want{"GL:3", 6, 6, 6}, Want{"SL:4", 14, 24, 36}, Want{"GL:4", 14, 24, 36},
                 Want{"SL:5", 30, 120, 240}, Want{"G2", 12, 12, 12}}) {
    const auto fan = build_weyl_fan(RootDatum::parse(w.name));
    CHECK(fan.rays().size() == w.rays);
    CHECK(fan.cones().size() == w.cones);
    CHECK(fan.adjacency().size() == w.walls);
    CHECK(!fan.is_subfan());
    // every maximal cone has one neighbour across each facet
    for (std::size_t c = 0; c < fan.cones().size(); ++c) CHECK(fan.neighbors(c).size() == fan.dimension());
  }
}

TEST_CASE("SL3 chambers match the pictured hexagon") {
  const auto d = RootDatum::build(DatumKind::SL, 3);
  const auto fan = build_weyl_fan(d);
  // sigma_1 .. sigma_6: L1,-L3; -L3,L2; L2,-L1; -L1,L3; L3,-L2; -L2,L1
  const std::vector<std::pair<std::string, std::vector<std::vector<std::int64_t>>>> want = {
      {"1-2", {{1, 0, 0}, {0, 0, -1}}}, {"2-1", {{0, 0, -1}, {0, 1, 0}}}, {"2-3", {{0, 1, 0}, {-1, 0, 0}}},
      {"3-2", {{-1, 0, 0}, {0, 0, 1}}}, {"3-1", {{0, 0, 1}, {0, -1, 0}}}, {"1-3", {{0, -1, 0}, {1, 0, 0}}}};
  for (const auto& [id, rays] : want) CHECK(canonical_rays(fan, fan.cones()[fan.cone_index(id)].rays) == canon(d, rays));
}

TEST_CASE("G2 chambers and rays") {
  const auto g = RootDatum::build(DatumKind::G2);
  const auto fan = build_weyl_fan(g);
  CHECK(all_rays(fan) == canon(g, {{1, 0, 0}, {1, 0, -1}, {0, 0, -1}, {0, 1, -1}, {0, 1, 0}, {-1, 1, 0},
                                   {-1, 0, 0}, {-1, 0, 1}, {0, 0, 1}, {0, -1, 1}, {0, -1, 0}, {1, -1, 0}}));
  CHECK(canonical_rays(fan, fan.cones()[fan.cone_index("12")].rays) == canon(g, {{1, -1, 0}, {1, 0, 0}}));
  CHECK(canonical_rays(fan, fan.cones()[fan.cone_index("1")].rays) == canon(g, {{1, 0, 0}, {1, 0, -1}}));
}

TEST_CASE("walls are roots vanishing on the shared facet") {
  for (const char* name : {"SL:3", "SL:4", "GL:3", "G2"}) {
    const auto fan = build_weyl_fan(RootDatum::parse(name));
    for (const auto& adj : fan.adjacency()) {
      CHECK(fan.datum().is_root(adj.wall));
      for (auto r : adj.shared_rays) CHECK(pairing(fan.rays()[r], adj.wall) == 0);
      for (auto r : fan.cones()[adj.first].rays) CHECK(pairing(fan.rays()[r], adj.wall) >= 0);
      for (auto r : fan.cones()[adj.second].rays) CHECK(pairing(fan.rays()[r], adj.wall) <= 0);
    }
  }
  const auto g = RootDatum::build(DatumKind::G2);
  const auto fan = build_weyl_fan(g);
  // sigma_5 and sigma_6 meet along v6 = (-1,1,0), cut by the long root (1,1,-2)
  const auto ns = adjacent_cones(fan, "5");
  bool found = false;
  for (const auto& nb : ns)
    if (fan.cones()[nb.cone].id == "6") {
      found = true;
      CHECK(nb.wall == g.character({1, 1, -2}));
    }
  CHECK(found);
  CHECK_THROWS_AS(adjacent_cones(fan, "13"), std::invalid_argument);
}

TEST_CASE("cone membership and location") {
  const auto fan = build_weyl_fan(RootDatum::build(DatumKind::SL, 3));
  CHECK(fan.contains(fan.cone_index("1-2"), rat({2, 1, 0})));
  CHECK(!fan.contains(fan.cone_index("1-2"), rat({1, 2, 0})));
  // representatives modulo the diagonal
  CHECK(fan.contains(fan.cone_index("1-2"), rat({5, 4, 3})));
  CHECK(fan.cones()[locate_cone(fan, rat({0, 3, 1}))].id == "2-3");
  // boundary points lie in both neighbouring cones
  CHECK(fan.contains(fan.cone_index("1-2"), rat({1, 0, 0})));
  CHECK(fan.contains(fan.cone_index("1-3"), rat({1, 0, 0})));
}

TEST_CASE("sub-fans in root hyperplanes") {
  const auto sl4 = RootDatum::build(DatumKind::SL, 4);
  const auto fan4 = build_weyl_fan(sl4);
  const auto sub = divisor_subfan(fan4, sl4.character({0, 0, 1, -1}));
  CHECK(sub.is_subfan());
  CHECK(sub.dimension() == 2);
  CHECK(sub.cones().size() == 6);
  CHECK(sub.adjacency().size() == 6);
  CHECK(all_rays(sub) == canon(sl4, {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 1}, {0, 0, 1, 1}, {1, 0, 1, 1}}));
  for (std::size_t t = 0; t < sub.cones().size(); ++t) {
    // each sub-cone is a face of its parent chamber
    const auto& parent = fan4.cones()[sub.parent_cone(t)];
    for (auto r : sub.cones()[t].rays) {
      auto idx = fan4.ray_index(sub.rays()[r]);
      REQUIRE(idx);
      CHECK(std::binary_search(parent.rays.begin(), parent.rays.end(), *idx));
    }
  }

  const auto g = RootDatum::build(DatumKind::G2);
  const auto gfan = build_weyl_fan(g);
  const auto gsub = divisor_subfan(gfan, g.character({1, -1, 0}));
  CHECK(all_rays(gsub) == canon(g, {{0, 0, -1}, {0, 0, 1}}));
  CHECK(gsub.cones().size() == 2);

  const auto sl3 = RootDatum::build(DatumKind::SL, 3);
  const auto s3 = divisor_subfan(build_weyl_fan(sl3), sl3.character({1, -1, 0}));
  CHECK(all_rays(s3) == canon(sl3, {{1, 1, 0}, {0, 0, 1}}));
  CHECK(s3.fiber_directions() == std::vector<Character>{sl3.character({1, -1, 0})});
  CHECK(s3.project(sl3.character({1, 0, -1})) == sl3.character({make_rational(1, 2), make_rational(1, 2), Rational(-1)}));

  // sub-fan of a sub-fan: the chain GL4 -> [L1=L2] -> [L2=L3]
  const auto gl4 = RootDatum::build(DatumKind::GL, 4);
  const auto f1 = divisor_subfan(build_weyl_fan(gl4), gl4.character({1, -1, 0, 0}));
  const auto f2 = divisor_subfan(f1, gl4.character({0, 1, -1, 0}));
  CHECK(f2.dimension() == 1);
  CHECK(all_rays(f2) == canon(gl4, {{1, 1, 1, 0}, {0, 0, 0, 1}}));
  CHECK(f2.fiber_directions().size() == 2);
  CHECK(dot(f2.fiber_directions()[0], f2.fiber_directions()[1]) == 0);
}
