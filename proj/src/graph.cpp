#include "nig/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace nig {

Graph::Graph(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(order) + " outside 0.." +
                                std::to_string(kMaxOrder));
  }
  rows_.assign(static_cast<std::size_t>(order), 0);
}

Graph::Graph(int order, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(order, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

int Graph::size() const {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

int Graph::degree(Vertex v) const { return std::popcount(rows_[v]); }

VertexMask Graph::all_vertices() const { return low_mask(order()); }

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(order()));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order(); ++u) {
    VertexMask higher = rows_[u] & ~low_mask(u + 1);
    while (higher) {
      Vertex v = std::countr_zero(higher);
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order()) {
    throw std::invalid_argument("permutation length does not match graph order");
  }
  Graph out(order());
  for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  dist[source] = 0;
  VertexMask frontier = bit(source);
  VertexMask seen = frontier;
  int level = 0;
  while (frontier) {
    ++level;
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    next &= ~seen;
    seen |= next;
    for (VertexMask f = next; f; f &= f - 1) dist[std::countr_zero(f)] = level;
    frontier = next;
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexMask seen = 1;
  VertexMask frontier = 1;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.all_vertices();
}

namespace {

// Shortest cycle through the BFS tree rooted at `root`: the first non-tree
// edge seen closes a cycle of length dist[u] + dist[w] + 1.
int shortest_cycle_from(const Graph& g, Vertex root, int best) {
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::deque<Vertex> queue{root};
  dist[root] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (2 * dist[u] >= best) break;
    for (VertexMask nb = g.neighbors(u); nb; nb &= nb - 1) {
      Vertex w = std::countr_zero(nb);
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      } else if (parent[u] != w) {
        best = std::min(best, dist[u] + dist[w] + 1);
      }
    }
  }
  return best;
}

}  // namespace

GraphInvariants connectivity_diameter_girth(const Graph& g) {
  GraphInvariants inv;
  inv.order = g.order();
  inv.size = g.size();
  inv.connected = is_connected(g);

  if (inv.connected) {
    int diameter = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      auto dist = bfs_distances(g, v);
      diameter = std::max(diameter, *std::max_element(dist.begin(), dist.end()));
    }
    inv.diameter = diameter;
  }

  const int none = g.order() + 1;
  int girth = none;
  for (Vertex v = 0; v < g.order(); ++v) girth = shortest_cycle_from(g, v, girth);
  if (girth != none) inv.girth = girth;
  return inv;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  VertexMask mask = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.order()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                              std::to_string(g.order()));
    }
    mask |= bit(v);
  }
  return induced_subgraph(g, mask);
}

Graph induced_subgraph(const Graph& g, VertexMask vertices) {
  if (vertices & ~g.all_vertices()) throw std::out_of_range("vertex set exceeds graph order");
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (VertexMask m = vertices; m; m &= m - 1) index[std::countr_zero(m)] = next++;
  Graph out(next);
  for (VertexMask m = vertices; m; m &= m - 1) {
    Vertex u = std::countr_zero(m);
    for (VertexMask nb = g.neighbors(u) & vertices & ~low_mask(u + 1); nb; nb &= nb - 1) {
      out.add_edge(index[u], index[std::countr_zero(nb)]);
    }
  }
  return out;
}

Graph remove_vertices(const Graph& g, VertexMask removed) {
  return induced_subgraph(g, g.all_vertices() & ~removed);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
  return out;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (VertexMask nb = g.neighbors(u); nb; nb &= nb - 1) {
        Vertex w = std::countr_zero(nb);
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace nig
