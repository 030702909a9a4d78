// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "corpus.hpp"
#include "media/axioms.hpp"
#include "media/cube_isometry.hpp"
#include "media/graph.hpp"
#include "media/linear_orders.hpp"
#include "media/representation.hpp"
#include "oracles.hpp"

using namespace media;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Outcome()>& body, double limit_s = 0) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double t = seconds_since(start);
  if (limit_s > 0 && t >= limit_s) {
    o.pass = false;
    o.detail += "; over time limit";
  }
  std::printf("%s %s  %s: %s [%.2fs", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), t);
  if (limit_s > 0) std::printf(", limit %.0fs", limit_s);
  std::printf("]\n");
  std::fflush(stdout);
  failures += !o.pass;
}

SetFamily from_masks(const std::vector<std::uint64_t>& masks, int ground) {
  std::vector<std::string> g;
  for (int i = 0; i < ground; ++i) g.emplace_back(1, static_cast<char>('a' + i));
  std::vector<ElementSet> sets;
  for (auto m : masks) {
    std::vector<ElementIndex> e;
    for (int i = 0; i < ground; ++i) {
      if (m >> i & 1u) e.push_back(static_cast<ElementIndex>(i));
    }
    sets.emplace_back(std::move(e));
  }
  return SetFamily(std::move(g), std::move(sets));
}

ElementSet random_set(std::mt19937_64& rng, std::size_t n) {
  std::vector<ElementIndex> out;
  for (ElementIndex x = 0; x < n; ++x) {
    if (rng() & 1u) out.push_back(x);
  }
  return ElementSet(out);
}

// ---- AC1 ----

Outcome ac1() {
  constexpr std::size_t ns = 3;
  // Every non-identity self-map of three states.
  std::vector<std::vector<StateIndex>> rows;
  for (StateIndex a = 0; a < ns; ++a) {
    for (StateIndex b = 0; b < ns; ++b) {
      for (StateIndex c = 0; c < ns; ++c) {
        if (a != 0 || b != 1 || c != 2) rows.push_back({a, b, c});
      }
    }
  }
  const std::size_t r = rows.size();
  const std::vector<std::string> states{"A", "B", "C"};
  std::atomic<std::size_t> checked{0}, media{0}, disagreements{0};
  std::atomic<std::size_t> next{0};
  std::string first_bad;
  std::mutex bad_mutex;

  auto examine = [&](const std::vector<std::string>& tokens, std::vector<std::vector<StateIndex>> action,
                     const std::vector<TokenIndex>& rev) {
    TokenSystem ts(states, tokens, std::move(action), rev);
    bool decided = decide_medium(ts).is_medium;
    bool axioms = check_axioms(ts, 8).all_hold();
    ++checked;
    media += decided;
    if (decided != axioms) {
      ++disagreements;
      std::lock_guard lock(bad_mutex);
      if (first_bad.empty()) {
        std::ostringstream os;
        for (const auto& row : ts.action()) os << row[0] << row[1] << row[2] << ' ';
        first_bad = os.str();
      }
    }
  };

  // One pair.
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) examine({"x", "x~"}, {rows[i], rows[j]}, {1, 0});
  }
  // Two pairs, split over threads by the first row.
  auto worker = [&] {
    for (std::size_t i; (i = next++) < r;) {
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < r; ++k) {
          for (std::size_t l = 0; l < r; ++l) {
            examine({"x", "x~", "y", "y~"}, {rows[i], rows[j], rows[k], rows[l]}, {1, 0, 3, 2});
          }
        }
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ostringstream os;
  os << checked << " systems, " << media << " media, " << disagreements << " disagreements";
  if (!first_bad.empty()) os << " (first: " << first_bad << ")";
  const std::size_t expected = r * r + r * r * r * r;
  return {disagreements == 0 && checked == expected && media > 0, os.str()};
}

// ---- AC2 ----

Outcome ac2() {
  std::size_t exhaustive = 0, random = 0, wg_count = 0, discrepancies = 0;
  auto test = [&](const std::vector<std::uint64_t>& masks, int ground) {
    SetFamily f = from_masks(masks, ground);
    bool wg = is_well_graded(f).well_graded;
    bool medium = decide_medium(family_to_medium(f)).is_medium;
    wg_count += wg;
    discrepancies += (wg != medium) + (wg != oracle::well_graded(masks));
  };
  for (std::uint64_t code = 0; code < 256; ++code) {
    if (std::popcount(code) < 2) continue;
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m = 0; m < 8; ++m) {
      if (code >> m & 1u) masks.push_back(m);
    }
    test(masks, 3);
    ++exhaustive;
  }
  std::mt19937_64 rng(20240);
  while (random < 1000) {
    std::vector<std::uint64_t> masks;
    if (random % 2) {
      masks = oracle::random_well_graded(rng, 5, 2 + rng() % 24);
    } else {
      for (std::uint64_t m = 0; m < 32; ++m) {
        if (rng() % 4 == 0) masks.push_back(m);
      }
    }
    if (masks.size() < 2) continue;
    test(masks, 5);
    ++random;
  }
  std::ostringstream os;
  os << exhaustive << " families on 3 elements + " << random << " random on 5, " << wg_count
     << " well graded, " << discrepancies << " discrepancies";
  return {exhaustive == 247 && discrepancies == 0, os.str()};
}

// ---- AC3 ----

Outcome ac3() {
  TokenSystem f = family_to_medium(corpus::hexagon_f());
  TokenSystem fp = family_to_medium(corpus::hexagon_f_prime());
  bool media = decide_medium(f).is_medium && decide_medium(fp).is_medium;
  bool cubes = is_partial_cube(medium_graph(f)).accepted && is_partial_cube(medium_graph(fp)).accepted;
  bool apart = !media_isomorphic(f, fp).has_value();
  std::ostringstream os;
  os << "both media: " << media << ", both partial cubes: " << cubes << ", non-isomorphic: " << apart;
  return {media && cubes && apart, os.str()};
}

// ---- AC4 ----

Outcome ac4() {
  LinearMedium three = linear_medium(3);
  const std::vector<std::pair<std::string, std::string>> listed = {
      {"123", "{12,13,23}"}, {"213", "{13,23}"}, {"231", "{23}"},
      {"321", "{}"},         {"312", "{12}"},    {"132", "{12,13}"}};
  bool images = three.medium.state_count() == 6;
  for (const auto& [order, set] : listed) {
    StateIndex s = three.medium.state_index(order);
    images = images && format_set(three.family.ground(), three.family[s]) == set;
  }
  LabeledGraph g = medium_graph(three.medium);
  PartialCubeResult cube = is_partial_cube(g);
  bool cycle = g.edge_count() == 6 && cube.accepted && cube.class_count == 3;
  for (VertexIndex v = 0; v < 6; ++v) cycle = cycle && g.neighbors(v).size() == 2;

  std::ostringstream os;
  os << "n=3 images match: " << images << ", 6-cycle in the 3-cube: " << cycle;
  bool ok = images && cycle;
  for (int n : {4, 5}) {
    auto start = Clock::now();
    LinearMedium m = linear_medium(n);
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    bool counts = m.medium.state_count() == fact &&
                  medium_graph(m.medium).edge_count() == fact * (n - 1) / 2;
    bool wg = is_well_graded(m.family).well_graded;
    bool medium = decide_medium(m.medium).is_medium;
    double t = seconds_since(start);
    os << "; n=" << n << ": counts " << counts << ", well graded " << wg << ", medium " << medium;
    if (n == 5) {
      char buf[48];
      std::snprintf(buf, sizeof buf, ", %.3fs (limit 10s)", t);
      os << buf;
    }
    ok = ok && counts && wg && medium && (n != 5 || t < 10);
  }
  return {ok, os.str()};
}

// ---- AC5 ----

Outcome ac5() {
  std::size_t checked = 0, bad = 0;
  std::string first;
  for (const auto& [name, ts] : corpus::media()) {
    if (ts.state_count() > 200) continue;
    ++checked;
    bool ok = true;
    ContentTable table = contents(ts);
    const std::size_t pairs = ts.token_count() / 2;
    for (StateIndex s = 0; s < ts.state_count(); ++s) {
      ok = ok && table[s].size() == pairs;
      for (TokenIndex t = 0; t < ts.token_count(); ++t) {
        bool a = std::binary_search(table[s].begin(), table[s].end(), t);
        bool b = std::binary_search(table[s].begin(), table[s].end(), ts.reverse(t));
        ok = ok && a != b;
      }
    }
    Representation r = positive_content_family(ts, orient_from_state(ts, 0));
    TokenSystem image = family_to_medium(r.family);
    auto iso = media_isomorphic(ts, image);
    ok = ok && iso && is_isomorphism(ts, image, *iso);
    if (!ok) {
      ++bad;
      if (first.empty()) first = name;
    }
  }
  std::ostringstream os;
  os << checked << " corpus media, " << bad << " failures";
  if (!first.empty()) os << " (first: " << first << ")";
  return {bad == 0 && checked > 0, os.str()};
}

// ---- AC6 ----

Outcome ac6() {
  std::mt19937_64 rng(6006);
  std::size_t failures_here = 0, probes = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    SetFamily f = from_masks(oracle::random_well_graded(rng, n, 1 + rng() % 24), n);
    CubeIsometry sigma;
    sigma.ground_size = n;
    sigma.translation = random_set(rng, n);
    sigma.permutation.resize(n);
    std::iota(sigma.permutation.begin(), sigma.permutation.end(), 0);
    std::shuffle(sigma.permutation.begin(), sigma.permutation.end(), rng);
    std::vector<ElementSet> image;
    for (const ElementSet& s : f.sets()) image.push_back(sigma.apply(s));
    SetFamily g(f.ground(), image);
    std::vector<std::size_t> alpha(f.size());
    std::iota(alpha.begin(), alpha.end(), 0);
    bool ok = true;
    try {
      CubeIsometry found = extend_isometry(f, g, alpha);
      for (std::size_t i = 0; i < f.size(); ++i) ok = ok && found.apply(f[i]) == g[i];
      for (int p = 0; p < 100; ++p) {
        ElementSet a = random_set(rng, n), b = random_set(rng, n);
        ok = ok && distance(found.apply(a), found.apply(b)) == distance(a, b);
        ++probes;
      }
    } catch (const std::exception&) {
      ok = false;
    }
    failures_here += !ok;
  }
  std::ostringstream os;
  os << "500 trials, " << probes << " probe pairs, " << failures_here << " failures";
  return {failures_here == 0, os.str()};
}

// ---- AC7 ----

Outcome ac7() {
  std::mt19937_64 rng(707);
  std::ostringstream os;
  bool ok = true;
  for (std::size_t k = 3; k <= 8; ++k) {
    Arrangement arr = oracle::generic_lines(rng, k);
    std::vector<Region> regions = enumerate_regions(arr);
    bool count = regions.size() == 1 + k + k * (k - 1) / 2 && regions.size() == oracle::region_count(arr);
    bool cube = is_partial_cube(region_adjacency(arr, regions)).accepted;
    bool medium = decide_medium(arrangement_medium(arr, regions)).is_medium;
    ok = ok && count && cube && medium;
    if (!(count && cube && medium)) os << "k=" << k << " failed; ";
  }
  os << "generic k=3..8 ok: " << ok;

  Arrangement concurrent = corpus::lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  auto cr = enumerate_regions(concurrent);
  LabeledGraph hex = region_adjacency(concurrent, cr);
  bool six = cr.size() == 6 && hex.edge_count() == 6;
  for (VertexIndex v = 0; v < hex.vertex_count(); ++v) six = six && hex.neighbors(v).size() == 2;
  os << "; concurrent 6-cycle: " << six;
  ok = ok && six;

  for (MosaicKind kind : {MosaicKind::triangular, MosaicKind::truncated_square}) {
    for (int radius = 1; radius <= 3; ++radius) {
      Arrangement arr = mosaic_window(kind, radius);
      auto regions = enumerate_regions(arr);
      bool cube = is_partial_cube(region_adjacency(arr, regions)).accepted;
      os << "; " << to_string(kind) << " r=" << radius << ": " << arr.size() << " lines, " << regions.size()
         << " regions, partial cube " << cube;
      ok = ok && cube;
    }
  }
  return {ok, os.str()};
}

// ---- AC8 ----

bool odd_cycle_valid(const LabeledGraph& g, const PartialCubeResult& r) {
  const auto& c = r.odd_cycle;
  if (c.size() % 2 == 0) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
  }
  return true;
}

bool rejection_valid(const LabeledGraph& g, const PartialCubeResult& r) {
  if (r.accepted) return false;
  switch (r.rejection) {
    case CubeRejection::odd_cycle:
      return odd_cycle_valid(g, r);
    case CubeRejection::theta_not_transitive: {
      if (r.theta_edges.size() != 3) return false;
      DistanceMatrix d(g);
      const auto& e = g.edges();
      return theta_related(d, e[r.theta_edges[0]], e[r.theta_edges[1]]) &&
             theta_related(d, e[r.theta_edges[1]], e[r.theta_edges[2]]) &&
             !theta_related(d, e[r.theta_edges[0]], e[r.theta_edges[2]]);
    }
    case CubeRejection::not_isometric:
      return r.isometry_pair.has_value();
    case CubeRejection::none:
      return false;
  }
  return false;
}

Outcome ac8() {
  auto graph = [](std::size_t n, std::vector<std::pair<VertexIndex, VertexIndex>> edges) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return LabeledGraph(names, edges);
  };
  LabeledGraph k3 = graph(3, {{0, 1}, {1, 2}, {2, 0}});
  LabeledGraph c5 = graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  LabeledGraph k23 = graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  std::ostringstream os;
  bool ok = true;
  for (const auto& [name, g] : {std::pair<const char*, const LabeledGraph*>{"K3", &k3}, {"C5", &c5}, {"K2,3", &k23}}) {
    PartialCubeResult r = is_partial_cube(*g);
    bool valid = rejection_valid(*g, r);
    os << name << " rejected (" << to_string(r.rejection) << ") with valid witness: " << valid << "; ";
    ok = ok && valid;
  }
  std::vector<StateIndex> pr{0, 2};
  TokenSystem reduced = reduce(corpus::path_pqr(), pr);
  MediumDecision d = decide_medium(reduced);
  bool m2 = !d.is_medium && d.axiom == Axiom::M2 && d.witness && d.witness->target &&
            !straight_message(reduced, d.witness->state, *d.witness->target).has_value();
  os << "two-state reduction rejected with M2 witness: " << m2;
  return {ok && m2, os.str()};
}

}  // namespace

int main() {
  auto start = Clock::now();
  report("AC1", "decide_medium vs axioms, 3 states, <= 2 pairs, bound 8", ac1, 60);
  report("AC2", "well graded <=> medium", ac2);
  report("AC3", "hexagon F and F' media", ac3);
  report("AC4", "linear-order media", ac4);
  report("AC5", "representation round trip", ac5);
  report("AC6", "isometry extension", ac6);
  report("AC7", "line arrangements and windows", ac7, 120);
  report("AC8", "negative controls", ac8);
  std::printf("total %.2fs, %d failed\n", seconds_since(start), failures);
  return failures == 0 ? 0 : 1;
}
