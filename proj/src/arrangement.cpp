#include "media/arrangement.hpp"

#include <deque>
#include <map>

#include "media/error.hpp"

namespace media {

Arrangement::Arrangement(std::vector<Line> lines) : lines_(std::move(lines)) {
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    const Line& l = lines_[i];
    if (sgn(l.a) == 0 && sgn(l.b) == 0) {
      throw InputError("line " + std::to_string(i + 1) + " has a = b = 0");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const Line& m = lines_[j];
      if (l.a * m.b == l.b * m.a && l.a * m.c == l.c * m.a && l.b * m.c == l.c * m.b) {
        throw InputError("lines " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                         " coincide");
      }
    }
  }
}

std::vector<std::string> Arrangement::line_names() const {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= lines_.size(); ++i) out.push_back(std::to_string(i));
  return out;
}

ElementSet Region::positive_set() const {
  std::vector<ElementIndex> elems;
  for (std::size_t i = 0; i < positive.size(); ++i) {
    if (positive[i]) elems.push_back(static_cast<ElementIndex>(i));
  }
  return ElementSet(std::move(elems));
}

namespace {

int side(const std::vector<bool>& positive, std::size_t i) { return positive[i] ? 1 : -1; }

// A point in the relative interior of the facet of line k, if there is one.
std::optional<Point> facet_point(const Arrangement& arr, const std::vector<bool>& positive,
                                 std::size_t k) {
  const Line& l = arr[k];
  Point p0;
  if (sgn(l.a) != 0) {
    p0 = {-l.c / l.a, 0};
  } else {
    p0 = {0, -l.c / l.b};
  }
  const Rational dx = -l.b, dy = l.a;
  std::optional<Rational> lo, hi;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i == k) continue;
    const Line& m = arr[i];
    Rational alpha = m.eval(p0.x, p0.y);
    Rational beta = m.a * dx + m.b * dy;
    int s = side(positive, i);
    if (sgn(beta) == 0) {
      if (s * sgn(alpha) <= 0) return std::nullopt;
      continue;
    }
    Rational root = -alpha / beta;
    if (s * sgn(beta) > 0) {
      if (!lo || root > *lo) lo = root;
    } else {
      if (!hi || root < *hi) hi = root;
    }
  }
  Rational t;
  if (lo && hi) {
    if (*lo >= *hi) return std::nullopt;
    t = (*lo + *hi) / 2;
  } else if (lo) {
    t = *lo + 1;
  } else if (hi) {
    t = *hi - 1;
  }
  return Point{p0.x + t * dx, p0.y + t * dy};
}

// Step off the facet point of line k into the region beyond it.
Point cross(const Arrangement& arr, const std::vector<bool>& positive, std::size_t k, const Point& f) {
  const Line& l = arr[k];
  const int s = -side(positive, k);
  Rational eps = 1;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i == k) continue;
    const Line& m = arr[i];
    Rational value = m.eval(f.x, f.y);
    Rational slope = s * (m.a * l.a + m.b * l.b);
    if (sgn(value) * sgn(slope) < 0) {
      Rational ratio = abs(value) / abs(slope) / 2;
      if (ratio < eps) eps = ratio;
    }
  }
  return {f.x + s * eps * l.a, f.y + s * eps * l.b};
}

std::string region_name(const Arrangement& arr, const std::vector<bool>& positive) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!positive[i]) continue;
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::map<std::vector<bool>, std::size_t> region_index(const std::vector<Region>& regions) {
  std::map<std::vector<bool>, std::size_t> index;
  for (std::size_t r = 0; r < regions.size(); ++r) {
    if (!index.emplace(regions[r].positive, r).second) throw InputError("repeated region");
  }
  return index;
}

}  // namespace

bool has_facet(const Arrangement& arr, const std::vector<bool>& positive, std::size_t k) {
  if (positive.size() != arr.size() || k >= arr.size()) throw InputError("side vector does not fit");
  return facet_point(arr, positive, k).has_value();
}

std::vector<Region> enumerate_regions(const Arrangement& arr) {
  if (arr.size() == 0) throw InputError("arrangement has no lines");

  Point seed;
  for (long j = 0;; ++j) {
    seed = {Rational(1, 101 + 2 * j), Rational(1, 997 + 3 * j)};
    bool generic = true;
    for (const Line& l : arr.lines()) generic = generic && sgn(l.eval(seed.x, seed.y)) != 0;
    if (generic) break;
  }
  Region first;
  for (const Line& l : arr.lines()) first.positive.push_back(sgn(l.eval(seed.x, seed.y)) > 0);
  first.witness = seed;

  std::vector<Region> regions{first};
  std::map<std::vector<bool>, std::size_t> index{{first.positive, 0}};
  for (std::size_t r = 0; r < regions.size(); ++r) {
    for (std::size_t k = 0; k < arr.size(); ++k) {
      std::vector<bool> flipped = regions[r].positive;
      flipped[k] = !flipped[k];
      if (index.count(flipped)) continue;
      auto f = facet_point(arr, regions[r].positive, k);
      if (!f) continue;
      Region next{flipped, cross(arr, regions[r].positive, k, *f)};
      index.emplace(flipped, regions.size());
      regions.push_back(std::move(next));
    }
  }
  return regions;
}

LabeledGraph region_adjacency(const Arrangement& arr, const std::vector<Region>& regions) {
  auto index = region_index(regions);
  std::vector<std::string> names;
  for (const Region& r : regions) names.push_back(region_name(arr, r.positive));
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  std::map<std::pair<VertexIndex, VertexIndex>, std::size_t> crossing;
  for (std::size_t r = 0; r < regions.size(); ++r) {
    for (std::size_t k = 0; k < arr.size(); ++k) {
      std::vector<bool> flipped = regions[r].positive;
      flipped[k] = !flipped[k];
      auto it = index.find(flipped);
      if (it == index.end() || it->second < r || !has_facet(arr, regions[r].positive, k)) continue;
      edges.emplace_back(r, it->second);
      crossing[{r, it->second}] = k;
    }
  }
  LabeledGraph g(std::move(names), std::move(edges));
  std::vector<EdgeLabel> labels;
  for (const Edge& e : g.edges()) {
    std::size_t k = crossing.at({e.u, e.v});
    std::string up = "+" + std::to_string(k + 1), down = "-" + std::to_string(k + 1);
    labels.push_back(regions[e.u].positive[k] ? EdgeLabel{down, up} : EdgeLabel{up, down});
  }
  g.set_edge_labels(std::move(labels));
  g.set_vertex_labels(region_family(arr, regions));
  return g;
}

SetFamily region_family(const Arrangement& arr, const std::vector<Region>& regions) {
  std::vector<ElementSet> sets;
  for (const Region& r : regions) {
    if (r.positive.size() != arr.size()) throw InputError("side vector does not fit");
    sets.push_back(r.positive_set());
  }
  return SetFamily(arr.line_names(), std::move(sets));
}

TokenSystem arrangement_medium(const Arrangement& arr, const std::vector<Region>& regions) {
  auto index = region_index(regions);
  const std::size_t n = arr.size();
  std::vector<std::string> states, tokens;
  std::vector<TokenIndex> reverse;
  for (const Region& r : regions) states.push_back(region_name(arr, r.positive));
  for (std::size_t k = 0; k < n; ++k) {
    tokens.push_back("+" + std::to_string(k + 1));
    tokens.push_back("-" + std::to_string(k + 1));
    reverse.push_back(2 * k + 1);
    reverse.push_back(2 * k);
  }
  std::vector<std::vector<StateIndex>> action(2 * n, std::vector<StateIndex>(regions.size()));
  for (auto& row : action) {
    for (StateIndex s = 0; s < row.size(); ++s) row[s] = s;
  }
  for (std::size_t r = 0; r < regions.size(); ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<bool> flipped = regions[r].positive;
      flipped[k] = !flipped[k];
      auto it = index.find(flipped);
      if (it == index.end() || !has_facet(arr, regions[r].positive, k)) continue;
      action[regions[r].positive[k] ? 2 * k + 1 : 2 * k][r] = it->second;
    }
  }
  return TokenSystem(std::move(states), std::move(tokens), std::move(action), std::move(reverse));
}

TokenSystem arrangement_medium(const Arrangement& arr) {
  return arrangement_medium(arr, enumerate_regions(arr));
}

std::optional<MosaicKind> parse_mosaic_kind(const std::string& name) {
  if (name == "triangular") return MosaicKind::triangular;
  if (name == "truncated-square") return MosaicKind::truncated_square;
  return std::nullopt;
}

const char* to_string(MosaicKind k) {
  return k == MosaicKind::triangular ? "triangular" : "truncated-square";
}

Arrangement mosaic_window(MosaicKind kind, int radius) {
  if (radius < 1) throw InputError("window radius must be at least 1");
  struct Pencil {
    Rational a, b, step;  // a*x + b*y = step * offset
  };
  std::vector<Pencil> pencils;
  if (kind == MosaicKind::triangular) {
    pencils = {{0, 1, 1}, {2, -1, -2}, {2, 1, 2}};
  } else {
    pencils = {{1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, -1, 1}};
  }
  const Rational r2 = Rational(radius) * radius;
  std::vector<Line> lines;
  for (const Pencil& p : pencils) {
    for (int o = -3 * radius; o <= 3 * radius; ++o) {
      Line l{p.a, p.b, -p.step * o};
      if (l.c * l.c <= r2 * (l.a * l.a + l.b * l.b)) lines.push_back(l);
    }
  }
  return Arrangement(std::move(lines));
}

}  // namespace media
