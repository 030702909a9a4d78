#include "media/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "media/error.hpp"
#include "media/representation.hpp"

namespace media {

// ---- LabeledGraph ----

LabeledGraph::LabeledGraph(std::vector<std::string> vertices,
                           std::vector<std::pair<VertexIndex, VertexIndex>> edges)
    : vertices_(std::move(vertices)), adjacency_(vertices_.size()) {
  std::map<std::string, VertexIndex> names;
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (!names.emplace(vertices_[v], v).second) {
      throw InputError("duplicate vertex '" + vertices_[v] + "'");
    }
  }
  for (auto [a, b] : edges) {
    if (a >= vertices_.size() || b >= vertices_.size()) throw InputError("edge endpoint out of range");
    if (a == b) throw InputError("loop at vertex '" + vertices_[a] + "'");
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InputError("duplicate edge");
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool LabeledGraph::adjacent(VertexIndex a, VertexIndex b) const {
  const auto& nb = adjacency_.at(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<std::size_t> LabeledGraph::edge_index(VertexIndex a, VertexIndex b) const {
  Edge e{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::optional<VertexIndex> LabeledGraph::find_vertex(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<VertexIndex>(it - vertices_.begin());
}

void LabeledGraph::set_vertex_labels(SetFamily labels) {
  if (labels.size() != vertices_.size()) throw InputError("one label per vertex is required");
  for (const Edge& e : edges_) {
    if (distance(labels[e.u], labels[e.v]) != 1) {
      throw InputError("labels of edge " + vertices_[e.u] + "-" + vertices_[e.v] +
                       " are not at distance one");
    }
  }
  vertex_labels_ = std::move(labels);
}

void LabeledGraph::set_edge_labels(std::vector<EdgeLabel> labels) {
  if (labels.size() != edges_.size()) throw InputError("one label per edge is required");
  edge_labels_ = std::move(labels);
}

bool is_connected(const LabeledGraph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexIndex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexIndex v = stack.back();
    stack.pop_back();
    for (VertexIndex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.vertex_count();
}

DistanceMatrix::DistanceMatrix(const LabeledGraph& g)
    : n_(g.vertex_count()), d_(n_ * n_, infinite) {
  std::vector<VertexIndex> queue(n_);
  for (VertexIndex s = 0; s < n_; ++s) {
    std::uint32_t* row = &d_[s * n_];
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      VertexIndex v = queue[head++];
      for (VertexIndex w : g.neighbors(v)) {
        if (row[w] == infinite) {
          row[w] = row[v] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
}

LabeledGraph medium_graph(const TokenSystem& ts) {
  const std::size_t n = ts.state_count();
  // Token realising each ordered step, first by token index.
  std::map<std::pair<StateIndex, StateIndex>, TokenIndex> step;
  for (TokenIndex t = 0; t < ts.token_count(); ++t) {
    for (StateIndex s = 0; s < n; ++s) {
      StateIndex v = ts.act(t, s);
      if (v != s) step.emplace(std::make_pair(s, v), t);
    }
  }
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (const auto& [sv, t] : step) {
    auto [s, v] = sv;
    if (s < v || !step.count({v, s})) edges.emplace_back(std::min(s, v), std::max(s, v));
  }
  LabeledGraph g(ts.state_names(), std::move(edges));
  std::vector<EdgeLabel> labels;
  labels.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    auto name_of = [&](StateIndex a, StateIndex b) -> std::string {
      if (auto it = step.find({a, b}); it != step.end()) return ts.token_name(it->second);
      if (ts.has_reverse()) {
        if (auto it = step.find({b, a}); it != step.end()) return ts.token_name(ts.reverse(it->second));
      }
      return "";
    };
    labels.push_back({name_of(e.u, e.v), name_of(e.v, e.u)});
  }
  g.set_edge_labels(std::move(labels));
  return g;
}

// ---- partial cubes ----

const char* to_string(CubeRejection r) {
  switch (r) {
    case CubeRejection::none: return "none";
    case CubeRejection::odd_cycle: return "odd-cycle";
    case CubeRejection::theta_not_transitive: return "theta-not-transitive";
    case CubeRejection::not_isometric: return "not-isometric";
  }
  return "?";
}

bool theta_related(const DistanceMatrix& d, const Edge& e, const Edge& f) {
  return d(e.u, f.u) + d(e.v, f.v) != d(e.u, f.v) + d(e.v, f.u);
}

namespace {

// BFS two-colouring from vertex 0; on conflict returns an odd cycle.
std::optional<std::vector<VertexIndex>> find_odd_cycle(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> depth(n, none), parent(n, none);
  std::deque<VertexIndex> queue{0};
  depth[0] = 0;
  while (!queue.empty()) {
    VertexIndex v = queue.front();
    queue.pop_front();
    for (VertexIndex w : g.neighbors(v)) {
      if (depth[w] == none) {
        depth[w] = depth[v] + 1;
        parent[w] = v;
        queue.push_back(w);
      } else if (depth[w] % 2 == depth[v] % 2) {
        std::vector<VertexIndex> left{v}, right{w};
        while (left.back() != right.back()) {
          if (depth[left.back()] >= depth[right.back()]) {
            left.push_back(parent[left.back()]);
          } else {
            right.push_back(parent[right.back()]);
          }
        }
        // left: v .. lca, right: w .. lca. Cycle: lca .. v, w .. (before lca).
        std::vector<VertexIndex> cycle(left.rbegin(), left.rend());
        right.pop_back();
        cycle.insert(cycle.end(), right.begin(), right.end());
        return cycle;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PartialCubeResult is_partial_cube(const LabeledGraph& g, GraphLimits limits) {
  if (g.vertex_count() > limits.max_vertices) {
    throw CapError("graph has " + std::to_string(g.vertex_count()) + " vertices, cap is " +
                   std::to_string(limits.max_vertices));
  }
  if (!is_connected(g)) throw InputError("partial cube recognition needs a connected graph");

  PartialCubeResult result;
  if (g.vertex_count() == 0) {
    result.accepted = true;
    result.labeling = SetFamily({}, {});
    return result;
  }
  if (auto cycle = find_odd_cycle(g)) {
    result.rejection = CubeRejection::odd_cycle;
    result.odd_cycle = std::move(*cycle);
    return result;
  }

  const DistanceMatrix d(g);
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cls(m, unassigned);
  std::vector<std::size_t> rep;
  for (std::size_t e = 0; e < m; ++e) {
    if (cls[e] != unassigned) continue;
    cls[e] = rep.size();
    for (std::size_t f = e + 1; f < m; ++f) {
      if (cls[f] == unassigned && theta_related(d, edges[e], edges[f])) cls[f] = rep.size();
    }
    rep.push_back(e);
  }
  result.edge_class = cls;
  result.class_count = rep.size();

  // Theta must coincide with "same class" on every pair.
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t f = e + 1; f < m; ++f) {
      bool related = theta_related(d, edges[e], edges[f]);
      if (related == (cls[e] == cls[f])) continue;
      result.rejection = CubeRejection::theta_not_transitive;
      if (!related) {
        result.theta_edges = {e, rep[cls[e]], f};
      } else {
        std::size_t re = rep[cls[e]], rf = rep[cls[f]];
        if (!theta_related(d, edges[re], edges[f])) {
          result.theta_edges = {re, e, f};
        } else {
          result.theta_edges = {rf, f, re};
        }
      }
      return result;
    }
  }

  // Coordinate c is set on the side of its class's representative edge that does
  // not contain vertex 0.
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<ElementIndex>> coords(n);
  for (std::size_t c = 0; c < rep.size(); ++c) {
    const Edge& e = edges[rep[c]];
    bool base_near_u = d(0, e.u) < d(0, e.v);
    for (VertexIndex w = 0; w < n; ++w) {
      bool near_u = d(w, e.u) < d(w, e.v);
      if (near_u != base_near_u) coords[w].push_back(static_cast<ElementIndex>(c));
    }
  }
  std::vector<std::string> ground;
  for (std::size_t c = 0; c < rep.size(); ++c) ground.push_back("c" + std::to_string(c));
  std::vector<ElementSet> labels;
  labels.reserve(n);
  for (auto& c : coords) labels.emplace_back(std::move(c));

  for (VertexIndex a = 0; a < n; ++a) {
    for (VertexIndex b = a + 1; b < n; ++b) {
      if (distance(labels[a], labels[b]) != d(a, b)) {
        result.rejection = CubeRejection::not_isometric;
        result.isometry_pair = std::make_pair(a, b);
        return result;
      }
    }
  }
  result.accepted = true;
  result.labeling = SetFamily(std::move(ground), std::move(labels));
  return result;
}

NotPartialCubeError::NotPartialCubeError(PartialCubeResult r)
    : std::invalid_argument(std::string("graph is not a partial cube (") + to_string(r.rejection) + ")"),
      result_(std::move(r)) {}

TokenSystem graph_to_medium(const LabeledGraph& g, GraphLimits limits) {
  PartialCubeResult r = is_partial_cube(g, limits);
  if (!r.accepted) throw NotPartialCubeError(std::move(r));
  return family_to_medium(*r.labeling, g.vertices());
}

// ---- isomorphism ----

namespace {

struct VertexInvariant {
  std::size_t degree;
  std::vector<std::size_t> class_sizes;   // sizes of the Theta classes of incident edges
  std::vector<std::size_t> distance_profile;  // number of vertices at each distance
  friend auto operator<=>(const VertexInvariant&, const VertexInvariant&) = default;
};

std::vector<VertexInvariant> vertex_invariants(const LabeledGraph& g, const DistanceMatrix& d,
                                               const PartialCubeResult& cube) {
  std::vector<std::size_t> class_size(cube.class_count, 0);
  for (std::size_t c : cube.edge_class) ++class_size[c];
  std::vector<VertexInvariant> inv(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    inv[v].degree = g.neighbors(v).size();
    for (VertexIndex w : g.neighbors(v)) {
      inv[v].class_sizes.push_back(class_size[cube.edge_class[*g.edge_index(v, w)]]);
    }
    std::sort(inv[v].class_sizes.begin(), inv[v].class_sizes.end());
    for (VertexIndex w = 0; w < g.vertex_count(); ++w) {
      std::size_t dist = d(v, w);
      if (inv[v].distance_profile.size() <= dist) inv[v].distance_profile.resize(dist + 1, 0);
      ++inv[v].distance_profile[dist];
    }
  }
  return inv;
}

class GraphMatcher {
 public:
  GraphMatcher(const LabeledGraph& g1, const LabeledGraph& g2, const DistanceMatrix& d1,
               const DistanceMatrix& d2, std::vector<VertexInvariant> inv1,
               std::vector<VertexInvariant> inv2, std::size_t max_steps)
      : g1_(g1), g2_(g2), d1_(d1), d2_(d2), inv1_(std::move(inv1)), inv2_(std::move(inv2)),
        max_steps_(max_steps), map_(g1.vertex_count(), unmapped), used_(g2.vertex_count(), 0) {
    // BFS order from vertex 0 so every later vertex has an earlier neighbour.
    std::vector<char> seen(g1.vertex_count(), 0);
    std::deque<VertexIndex> queue{0};
    seen[0] = 1;
    parent_.assign(g1.vertex_count(), unmapped);
    while (!queue.empty()) {
      VertexIndex v = queue.front();
      queue.pop_front();
      order_.push_back(v);
      for (VertexIndex w : g1.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          parent_[w] = v;
          queue.push_back(w);
        }
      }
    }
  }

  std::optional<std::vector<VertexIndex>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr VertexIndex unmapped = static_cast<VertexIndex>(-1);

  bool consistent(std::size_t depth, VertexIndex v, VertexIndex w) const {
    if (used_[w] || inv1_[v] != inv2_[w]) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      VertexIndex u = order_[i];
      if (d1_(v, u) != d2_(w, map_[u])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++steps_ > max_steps_) {
      throw CapError("isomorphism search exceeded " + std::to_string(max_steps_) + " steps");
    }
    VertexIndex v = order_[depth];
    std::vector<VertexIndex> candidates;
    if (parent_[v] == unmapped) {
      candidates.resize(g2_.vertex_count());
      for (VertexIndex w = 0; w < g2_.vertex_count(); ++w) candidates[w] = w;
    } else {
      candidates = g2_.neighbors(map_[parent_[v]]);
    }
    for (VertexIndex w : candidates) {
      if (!consistent(depth, v, w)) continue;
      map_[v] = w;
      used_[w] = 1;
      if (extend(depth + 1)) return true;
      used_[w] = 0;
      map_[v] = unmapped;
    }
    return false;
  }

  const LabeledGraph& g1_;
  const LabeledGraph& g2_;
  const DistanceMatrix& d1_;
  const DistanceMatrix& d2_;
  std::vector<VertexInvariant> inv1_, inv2_;
  std::size_t max_steps_;
  std::size_t steps_ = 0;
  std::vector<VertexIndex> order_, parent_, map_;
  std::vector<char> used_;
};

}  // namespace

bool is_isomorphism(const TokenSystem& a, const TokenSystem& b, const MediaIsomorphism& iso) {
  if (iso.alpha.size() != a.state_count() || iso.beta.size() != a.token_count()) return false;
  if (a.state_count() != b.state_count() || a.token_count() != b.token_count()) return false;
  std::vector<char> hit_s(b.state_count(), 0), hit_t(b.token_count(), 0);
  for (StateIndex s : iso.alpha) {
    if (s >= b.state_count() || hit_s[s]) return false;
    hit_s[s] = 1;
  }
  for (TokenIndex t : iso.beta) {
    if (t >= b.token_count() || hit_t[t]) return false;
    hit_t[t] = 1;
  }
  for (TokenIndex t = 0; t < a.token_count(); ++t) {
    for (StateIndex s = 0; s < a.state_count(); ++s) {
      if (iso.alpha[a.act(t, s)] != b.act(iso.beta[t], iso.alpha[s])) return false;
    }
  }
  return true;
}

std::optional<MediaIsomorphism> media_isomorphic(const TokenSystem& a, const TokenSystem& b,
                                                 GraphLimits limits) {
  for (const TokenSystem* ts : {&a, &b}) {
    if (ts->state_count() > limits.max_vertices) {
      throw CapError("token system has " + std::to_string(ts->state_count()) +
                     " states, cap is " + std::to_string(limits.max_vertices));
    }
    if (!decide_medium(*ts, limits).is_medium) {
      throw InputError("media_isomorphic needs two media");
    }
  }
  if (a.state_count() != b.state_count() || a.token_count() != b.token_count()) return std::nullopt;

  LabeledGraph g1 = medium_graph(a), g2 = medium_graph(b);
  if (g1.edge_count() != g2.edge_count()) return std::nullopt;
  PartialCubeResult c1 = is_partial_cube(g1, limits), c2 = is_partial_cube(g2, limits);
  DistanceMatrix d1(g1), d2(g2);
  auto inv1 = vertex_invariants(g1, d1, c1);
  auto inv2 = vertex_invariants(g2, d2, c2);
  {
    auto s1 = inv1, s2 = inv2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  auto map = GraphMatcher(g1, g2, d1, d2, std::move(inv1), std::move(inv2),
                          limits.max_search_steps).run();
  if (!map) return std::nullopt;

  MediaIsomorphism iso;
  iso.alpha = *map;
  iso.beta.assign(a.token_count(), 0);
  for (TokenIndex t = 0; t < a.token_count(); ++t) {
    StateIndex s = 0;
    while (a.act(t, s) == s) ++s;
    StateIndex from = iso.alpha[s], to = iso.alpha[a.act(t, s)];
    TokenIndex u = 0;
    while (u < b.token_count() && b.act(u, from) != to) ++u;
    if (u == b.token_count()) throw DefectError("graph isomorphism maps an edge to a non-edge");
    iso.beta[t] = u;
  }
  if (!is_isomorphism(a, b, iso)) {
    throw DefectError("token map read off a graph isomorphism is not an isomorphism of media");
  }
  return iso;
}

}  // namespace media
