// Seeded randomized checks of the invariants that tie the modules together.
#include <random>

#include "doctest.h"
#include "nig/canonical.hpp"
#include "nig/families.hpp"
#include "nig/enumerate.hpp"
#include "nig/graph_io.hpp"
#include "nig/reductions.hpp"
#include "nig/spectra.hpp"
#include "oracles.hpp"

using namespace nig;

namespace {

constexpr int kCases = 10000;

int ceil_half(int x) { return (x + 1) / 2; }

// Vertices of one shortest cycle, in cycle order.
std::vector<Vertex> shortest_cycle(const Graph& g) {
  const int girth = *connectivity_diameter_girth(g).girth;
  for (auto [u, v] : g.edges()) {
    Graph h = g;
    h.remove_edge(u, v);
    const auto dist = bfs_distances(h, u);
    if (dist[v] != girth - 1) continue;
    std::vector<Vertex> cycle{v};
    Vertex cur = v;
    while (cur != u) {
      for (Vertex w = 0; w < h.order(); ++w) {
        if (h.adjacent(cur, w) && dist[w] == dist[cur] - 1) {
          cur = w;
          break;
        }
      }
      cycle.push_back(cur);
    }
    return cycle;
  }
  return {};
}

}  // namespace

TEST_CASE("inertia invariants on random graphs") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < kCases; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    Graph g = oracle::random_graph(rng, n, std::uniform_real_distribution<double>(0.05, 0.9)(rng));
    const auto s = inertia(g);
    REQUIRE(s.order() == n);
    CHECK(s.positive >= 0);
    CHECK(s.negative >= 0);
    CHECK(s.nullity >= 0);
    if (i % 4 == 0) CHECK(inertia_signcount(char_poly(g)) == s);
    // Relabelling never changes the spectrum.
    if (i % 8 == 0) CHECK(inertia(g.permuted(oracle::random_permutation(rng, n))) == s);
    if (g.size() > 0) {
      CHECK(s.positive >= 1);
      CHECK(s.negative >= 1);
    }
  }
}

TEST_CASE("graph invariants on random graphs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < kCases; ++i) {
    const int n = 1 + static_cast<int>(rng() % 14);
    Graph g = oracle::random_graph(rng, n, 0.3);
    const auto inv = connectivity_diameter_girth(g);
    if (inv.connected && n >= 2) {
      CHECK(*inv.diameter >= 1);
      CHECK(*inv.diameter <= n - 1);
    }
    if (inv.girth) {
      CHECK(*inv.girth >= 3);
      CHECK(*inv.girth <= n);
    }
    if (i % 10 == 0) CHECK(parse_graph6(emit_graph6(g)) == g);
  }
}

TEST_CASE("lower bounds on random connected graphs") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < kCases; ++i) {
    const int n = 2 + static_cast<int>(rng() % 14);
    Graph g = oracle::random_connected(rng, n, std::uniform_real_distribution<double>(0.0, 0.3)(rng));
    const auto inv = connectivity_diameter_girth(g);
    const auto s = inertia(g);
    const int d = *inv.diameter;
    CHECK(2 * s.negative >= d);
    if (d % 2 == 1) {
      CHECK(2 * s.negative >= d + 1);
      CHECK(s.rank() >= d + 1);
    }
    if (inv.girth) CHECK(s.negative >= ceil_half(*inv.girth) - 1);
  }
}

TEST_CASE("trimming and twin bookkeeping") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < kCases / 5; ++i) {
    const int n = 1 + static_cast<int>(rng() % 14);
    Graph g = oracle::random_connected(rng, n, 0.1);
    const auto s = inertia(g);
    auto trim = trim_to_core(g);
    const auto r = inertia(trim.residual);
    CHECK(s.negative == trim.trims + r.negative);
    CHECK(s.positive == trim.trims + r.positive);
    auto twins = reduce_twins(g);
    CHECK(inertia(twins.residual).negative == s.negative);
  }
}

TEST_CASE("paths between cycle vertices avoiding a shortest cycle are long") {
  // For a shortest cycle C and two cycle vertices u, v, any u-v path whose
  // interior avoids C has length at least ceil(g/2).
  for (int n = 4; n <= 7; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      const auto inv = connectivity_diameter_girth(g);
      if (!inv.girth) continue;
      const auto cycle = shortest_cycle(g);
      REQUIRE(static_cast<int>(cycle.size()) == *inv.girth);
      VertexMask on_cycle = 0;
      for (Vertex v : cycle) on_cycle |= VertexMask{1} << v;
      const VertexMask outside = g.all_vertices() & ~on_cycle;
      for (Vertex u : cycle) {
        for (Vertex v : cycle) {
          if (u >= v) continue;
          // Shortest u-v path through the outside: BFS over outside vertices.
          Graph h(g.order());
          for (auto [a, b] : g.edges()) {
            const bool a_out = (outside >> a) & 1U, b_out = (outside >> b) & 1U;
            if (a_out && b_out) h.add_edge(a, b);
            if ((a == u || a == v) && b_out) h.add_edge(a, b);
            if ((b == u || b == v) && a_out) h.add_edge(a, b);
          }
          const int dist = bfs_distances(h, u)[v];
          if (dist > 0) CHECK(dist >= ceil_half(*inv.girth));
        }
      }
    }
  }
}

TEST_CASE("equality with the cycle forces every vertex next to it") {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      const auto inv = connectivity_diameter_girth(g);
      if (!inv.girth) continue;
      if (negative_inertia(g) != negative_inertia(gen_cycle(*inv.girth))) continue;
      const auto cycle = shortest_cycle(g);
      VertexMask near = 0;
      for (Vertex v : cycle) near |= (VertexMask{1} << v) | g.neighbors(v);
      CHECK(near == g.all_vertices());
    }
  }
}
