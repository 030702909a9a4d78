#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "media/set_family.hpp"
#include "media/token_system.hpp"

namespace media {

using VertexIndex = std::size_t;

struct Edge {
  VertexIndex u = 0;  // u < v
  VertexIndex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Token pair carried by an edge: `forward` moves u to v, `backward` moves v to u.
struct EdgeLabel {
  std::string forward;
  std::string backward;
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

// Simple undirected graph with named vertices. Edges are stored sorted with u < v.
// Optional vertex labels are finite sets over `label_ground`; every edge must then
// join sets at distance one. Optional edge labels carry token pairs.
class LabeledGraph {
 public:
  LabeledGraph(std::vector<std::string> vertices, std::vector<std::pair<VertexIndex, VertexIndex>> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexIndex>& neighbors(VertexIndex v) const { return adjacency_.at(v); }
  bool adjacent(VertexIndex a, VertexIndex b) const;
  std::optional<std::size_t> edge_index(VertexIndex a, VertexIndex b) const;
  std::optional<VertexIndex> find_vertex(const std::string& name) const;

  const std::optional<SetFamily>& vertex_labels() const { return vertex_labels_; }
  void set_vertex_labels(SetFamily labels);  // one set per vertex, in vertex order
  const std::optional<std::vector<EdgeLabel>>& edge_labels() const { return edge_labels_; }
  void set_edge_labels(std::vector<EdgeLabel> labels);  // one per edge, in edge order

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexIndex>> adjacency_;
  std::optional<SetFamily> vertex_labels_;
  std::optional<std::vector<EdgeLabel>> edge_labels_;
};

bool is_connected(const LabeledGraph& g);

// All-pairs shortest-path lengths by one BFS per vertex. Unreachable pairs hold `infinite`.
class DistanceMatrix {
 public:
  static constexpr std::uint32_t infinite = static_cast<std::uint32_t>(-1);
  explicit DistanceMatrix(const LabeledGraph& g);
  std::uint32_t operator()(VertexIndex a, VertexIndex b) const { return d_[a * n_ + b]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> d_;
};

// Graph of a token system: states as vertices, an edge ST whenever S != T and
// S tau = T for some token. Edge labels record the first such token in each
// direction (for a medium, the unique token pair of the edge).
LabeledGraph medium_graph(const TokenSystem& ts);

struct GraphLimits {
  std::size_t max_vertices = 2000;
  std::size_t max_search_steps = 20'000'000;  // isomorphism backtracking
};

enum class CubeRejection { none, odd_cycle, theta_not_transitive, not_isometric };
const char* to_string(CubeRejection r);

struct PartialCubeResult {
  bool accepted = false;
  // On acceptance: one coordinate per Theta class, named "c0", "c1", ... in order
  // of each class's first edge; vertex 0 is labelled by the empty set.
  std::optional<SetFamily> labeling;
  std::vector<std::size_t> edge_class;  // Theta class per edge (filled whenever Theta was computed)
  std::size_t class_count = 0;

  CubeRejection rejection = CubeRejection::none;
  std::vector<VertexIndex> odd_cycle;                // closed walk v0..vk (vk adjacent to v0)
  std::vector<std::size_t> theta_edges;             // edges a, b, c: a Θ b, b Θ c, not a Θ c
  std::optional<std::pair<VertexIndex, VertexIndex>> isometry_pair;  // labels disagree with distance
};

// Theta(uv, xy) <=> d(u,x) + d(v,y) != d(u,y) + d(v,x).
bool theta_related(const DistanceMatrix& d, const Edge& e, const Edge& f);

// Bipartite + transitive Djokovic-Winkler relation, then an explicit labeling that
// is checked against graph distances for every vertex pair. Throws InputError on a
// disconnected graph and CapError above limits.max_vertices.
PartialCubeResult is_partial_cube(const LabeledGraph& g, GraphLimits limits = {});

class NotPartialCubeError : public std::invalid_argument {
 public:
  explicit NotPartialCubeError(PartialCubeResult r);
  const PartialCubeResult& result() const { return result_; }

 private:
  PartialCubeResult result_;
};

// The medium of the vertex labels of a partial cube; states keep the vertex names.
TokenSystem graph_to_medium(const LabeledGraph& g, GraphLimits limits = {});

struct MediaIsomorphism {
  std::vector<StateIndex> alpha;  // states of the first system -> states of the second
  std::vector<TokenIndex> beta;   // tokens of the first system -> tokens of the second
};

// Isomorphism of two media via a graph isomorphism of their graphs (backtracking
// refined by degree, Theta-class sizes and distance profiles), with the token map
// read off edge labels. Throws InputError if either argument is not a medium.
std::optional<MediaIsomorphism> media_isomorphic(const TokenSystem& a, const TokenSystem& b,
                                                 GraphLimits limits = {});

// S tau = T <=> alpha(S) beta(tau) = alpha(T) for all S, tau (alpha, beta bijective).
bool is_isomorphism(const TokenSystem& a, const TokenSystem& b, const MediaIsomorphism& iso);

}  // namespace media
