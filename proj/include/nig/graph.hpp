#ifndef NIG_GRAPH_HPP
#define NIG_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nig {

using Vertex = int;
using VertexMask = std::uint64_t;

/// Largest order a Graph can hold; adjacency rows are 64-bit masks.
inline constexpr int kMaxOrder = 64;

/// Simple undirected graph on vertices 0..order-1.
///
/// Adjacency is stored as one bit mask per vertex. The relation is kept
/// symmetric and irreflexive by every mutator, so a constructed Graph is
/// always simple. Values are cheap to copy and safe to share between threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const;

  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  VertexMask neighbors(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const;
  VertexMask all_vertices() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Graph on the same vertex set with vertex v renamed perm[v].
  Graph permuted(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexMask> rows_;
};

/// Diameter or girth value that may be undefined.
struct GraphInvariants {
  int order = 0;
  int size = 0;
  bool connected = false;
  std::optional<int> diameter;  // nullopt: disconnected
  std::optional<int> girth;     // nullopt: acyclic
};

GraphInvariants connectivity_diameter_girth(const Graph& g);

bool is_connected(const Graph& g);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Subgraph induced by `vertices`, relabelled 0.. in ascending original order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph induced_subgraph(const Graph& g, VertexMask vertices);

/// g with the vertices in `removed` deleted (remaining labels kept in order).
Graph remove_vertices(const Graph& g, VertexMask removed);

/// Block-diagonal composition: b's vertices follow a's.
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_bipartite(const Graph& g);

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }

inline VertexMask low_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

}  // namespace nig

#endif  // NIG_GRAPH_HPP
