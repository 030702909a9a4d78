#include <doctest.h>

#include <map>
#include <random>

#include "corpus.hpp"
#include "media/error.hpp"
#include "media/graph.hpp"
#include "media/representation.hpp"
#include "oracles.hpp"

using namespace media;
using corpus::lines;

namespace {

// Regions of a line arrangement: 1 + n + sum over intersection points of (lines through it - 1).
std::size_t euler_count(const Arrangement& arr) {
  std::map<std::pair<mpq_class, mpq_class>, std::size_t> through;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    for (std::size_t j = i + 1; j < arr.size(); ++j) {
      const Line& p = arr[i];
      const Line& q = arr[j];
      mpq_class det = p.a * q.b - p.b * q.a;
      if (sgn(det) == 0) continue;
      through[{(p.b * q.c - p.c * q.b) / det, (p.c * q.a - p.a * q.c) / det}] = 0;
    }
  }
  std::size_t count = 1 + arr.size();
  for (auto& [pt, m] : through) {
    for (std::size_t i = 0; i < arr.size(); ++i) m += sgn(arr[i].eval(pt.first, pt.second)) == 0;
    count += m - 1;
  }
  return count;
}

void check_regions(const Arrangement& arr, const std::vector<Region>& regions) {
  std::set<std::vector<bool>> seen;
  for (const Region& r : regions) {
    CHECK(seen.insert(r.positive).second);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      int s = sgn(arr[i].eval(r.witness.x, r.witness.y));
      CHECK(s == (r.positive[i] ? 1 : -1));
    }
  }
}

// Lines separating two witness points.
std::size_t separating(const Arrangement& arr, const Point& p, const Point& q) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    n += sgn(arr[i].eval(p.x, p.y)) != sgn(arr[i].eval(q.x, q.y));
  }
  return n;
}

void check_pipeline(const Arrangement& arr) {
  std::vector<Region> regions = enumerate_regions(arr);
  check_regions(arr, regions);
  LabeledGraph g = region_adjacency(arr, regions);
  PartialCubeResult r = is_partial_cube(g);
  CHECK(r.accepted);
  TokenSystem ts = arrangement_medium(arr, regions);
  CHECK(decide_medium(ts).is_medium);
  SetFamily f = region_family(arr, regions);
  CHECK(is_well_graded(f).well_graded);
  DistanceMatrix d(g);
  for (std::size_t a = 0; a < regions.size(); ++a) {
    for (std::size_t b = 0; b < regions.size(); ++b) {
      CHECK(distance(f[a], f[b]) == separating(arr, regions[a].witness, regions[b].witness));
      CHECK(d(a, b) == distance(f[a], f[b]));
    }
  }
}

}  // namespace

TEST_CASE("arrangement validation") {
  CHECK_THROWS_AS(lines({{0, 0, 1}}), InputError);
  CHECK_THROWS_AS(lines({{1, 2, 3}, {2, 4, 6}}), InputError);
  CHECK_THROWS_AS(lines({{1, 2, 3}, {-1, -2, -3}}), InputError);
  CHECK_NOTHROW(lines({{1, 2, 3}, {1, 2, 4}}));
  CHECK_THROWS_AS(enumerate_regions(Arrangement{}), InputError);
  CHECK(lines({{1, 0, 0}, {0, 1, 0}}).line_names() == std::vector<std::string>{"1", "2"});
}

TEST_CASE("small arrangements") {
  Arrangement one = lines({{1, 0, 0}});
  auto r1 = enumerate_regions(one);
  CHECK(r1.size() == 2);
  CHECK(region_adjacency(one, r1).edge_count() == 1);
  TokenSystem m1 = arrangement_medium(one);
  CHECK(m1.state_count() == 2);
  CHECK(decide_medium(m1).is_medium);

  Arrangement cross = lines({{1, 0, 0}, {0, 1, 0}});
  auto r2 = enumerate_regions(cross);
  CHECK(r2.size() == 4);
  LabeledGraph square = region_adjacency(cross, r2);
  CHECK(square.edge_count() == 4);
  for (VertexIndex v = 0; v < 4; ++v) CHECK(square.neighbors(v).size() == 2);
  CHECK(is_partial_cube(square).accepted);

  Arrangement parallel = lines({{1, 0, 0}, {1, 0, -1}});
  CHECK(enumerate_regions(parallel).size() == 3);
  CHECK(oracle::region_count(parallel) == 3);
  CHECK(oracle::region_count(cross) == 4);

  Arrangement concurrent = lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  auto r3 = enumerate_regions(concurrent);
  CHECK(r3.size() == 6);
  LabeledGraph hex = region_adjacency(concurrent, r3);
  CHECK(hex.edge_count() == 6);
  for (VertexIndex v = 0; v < 6; ++v) CHECK(hex.neighbors(v).size() == 2);
  CHECK(oracle::region_count(concurrent) == 6);

  Arrangement generic = lines({{1, 0, 0}, {0, 1, 0}, {1, 1, -1}});
  TokenSystem m3 = arrangement_medium(generic);
  CHECK(m3.state_count() == 7);
  CHECK(is_partial_cube(medium_graph(m3)).accepted);
}

TEST_CASE("names and labels") {
  Arrangement cross = lines({{1, 0, 0}, {0, 1, 0}});
  auto regions = enumerate_regions(cross);
  LabeledGraph g = region_adjacency(cross, regions);
  std::set<std::string> names(g.vertices().begin(), g.vertices().end());
  CHECK(names == std::set<std::string>{"{}", "{1}", "{2}", "{1,2}"});
  REQUIRE(g.edge_labels());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const EdgeLabel& l = (*g.edge_labels())[e];
    CHECK(l.forward.substr(1) == l.backward.substr(1));
    CHECK(l.forward[0] != l.backward[0]);
  }
  REQUIRE(g.vertex_labels());
  CHECK(g.vertex_labels()->ground() == cross.line_names());

  TokenSystem ts = arrangement_medium(cross, regions);
  CHECK(ts.token_names() == std::vector<std::string>{"+1", "-1", "+2", "-2"});
  StateIndex empty = ts.state_index("{}");
  CHECK(ts.state_name(ts.act(ts.token_index("+1"), empty)) == "{1}");
  CHECK(ts.act(ts.token_index("-1"), empty) == empty);
}

TEST_CASE("facets") {
  // Three lines through the origin: the region x>0, y>0 touches x+y=0 only at the origin.
  Arrangement concurrent = lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  CHECK(has_facet(concurrent, {true, true, true}, 0));
  CHECK(has_facet(concurrent, {true, true, true}, 1));
  CHECK_FALSE(has_facet(concurrent, {true, true, true}, 2));
  // Parallel lines: the middle strip has both as facets, the outer half-plane only one.
  Arrangement parallel = lines({{1, 0, 0}, {1, 0, -1}});
  CHECK(has_facet(parallel, {true, false}, 0));
  CHECK(has_facet(parallel, {true, false}, 1));
  CHECK_FALSE(has_facet(parallel, {true, true}, 0));
}

TEST_CASE("random generic arrangements") {
  std::mt19937_64 rng(101);
  for (std::size_t k = 1; k <= 8; ++k) {
    for (int trial = 0; trial < 3; ++trial) {
      Arrangement arr = oracle::generic_lines(rng, k);
      auto regions = enumerate_regions(arr);
      CHECK(regions.size() == 1 + k + k * (k - 1) / 2);
      if (k <= 6) CHECK(regions.size() == oracle::region_count(arr));
      check_pipeline(arr);
    }
  }
}

TEST_CASE("random degenerate arrangements") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<long> coef(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Line> ls;
    const std::size_t k = 2 + rng() % 5;
    while (ls.size() < k) {
      Line l{coef(rng), coef(rng), coef(rng)};
      if (sgn(l.a) == 0 && sgn(l.b) == 0) continue;
      bool dup = false;
      for (const Line& m : ls) {
        dup = dup || (l.a * m.b == l.b * m.a && l.a * m.c == l.c * m.a && l.b * m.c == l.c * m.b);
      }
      if (!dup) ls.push_back(l);
    }
    Arrangement arr(ls);
    auto regions = enumerate_regions(arr);
    CHECK(regions.size() == euler_count(arr));
    CHECK(regions.size() == oracle::region_count(arr));
    check_pipeline(arr);
  }
}

TEST_CASE("mosaic windows") {
  CHECK(parse_mosaic_kind("triangular") == MosaicKind::triangular);
  CHECK(parse_mosaic_kind("truncated-square") == MosaicKind::truncated_square);
  CHECK_FALSE(parse_mosaic_kind("penrose"));
  CHECK(std::string(to_string(MosaicKind::truncated_square)) == "truncated-square");
  CHECK_THROWS_AS(mosaic_window(MosaicKind::triangular, 0), InputError);

  Arrangement tri = mosaic_window(MosaicKind::triangular, 1);
  CHECK(tri.size() == 9);
  for (MosaicKind kind : {MosaicKind::triangular, MosaicKind::truncated_square}) {
    for (int radius = 1; radius <= 2; ++radius) {
      CAPTURE(radius);
      Arrangement arr = mosaic_window(kind, radius);
      auto regions = enumerate_regions(arr);
      CHECK(regions.size() == euler_count(arr));
      check_pipeline(arr);
    }
  }
}
