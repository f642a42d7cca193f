// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "nig/canonical.hpp"
#include "nig/classify.hpp"
#include "nig/enumerate.hpp"
#include "nig/families.hpp"
#include "nig/graph_io.hpp"
#include "nig/reductions.hpp"
#include "nig/spectra.hpp"
#include "nig/verify.hpp"
#include "oracles.hpp"

using namespace nig;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures += (failures.empty() ? "" : "; ") + what;
    }
  }
};

EnumerationTask up_to(int max_n) {
  EnumerationTask t;
  t.min_order = 1;
  t.max_order = max_n;
  return t;
}

std::vector<Graph> connected_up_to(int max_n) { return materialize(up_to(max_n)); }

// ---------------------------------------------------------------------------

void closed_forms(Outcome& o) {
  int bad = 0;
  for (int n = 1; n <= 64; ++n) {
    if (formula_path_inertia(n) != inertia(gen_path(n))) ++bad;
  }
  for (int n = 3; n <= 64; ++n) {
    // formula_cycle_negative throws if its two closed forms disagree.
    if (formula_cycle_negative(n) != negative_inertia(gen_cycle(n))) ++bad;
  }
  o.detail << "paths 1..64, cycles 3..64, disagreements " << bad;
  o.expect(bad == 0, "closed form mismatch");
}

void oracle_agreement(Outcome& o) {
  long checked = 0, bad = 0;
  for (const auto& g : connected_up_to(8)) {
    ++checked;
    if (inertia_signcount(char_poly(g)) != inertia_congruence(g)) ++bad;
  }
  const long census = checked;
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 16);
    Graph g = oracle::random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.9)(rng));
    ++checked;
    if (inertia_signcount(char_poly(g)) != inertia_congruence(g)) ++bad;
  }
  o.detail << "connected graphs of order <= 8: " << census << ", random: 1000, disagreements "
           << bad;
  o.expect(bad == 0, "backend disagreement");
}

void fixtures(Outcome& o) {
  const Graph k33 = gen_complete_bipartite(3, 3);
  const auto s = inertia(k33);
  o.expect(s == InertiaSignature{1, 1, 4}, "K3,3 inertia " + to_string(s));
  const auto poly = char_poly(k33).to_string();
  o.expect(poly == "x^6 - 9x^4", "K3,3 polynomial " + poly);
  auto exact = [&](const std::string& name, const Graph& g, int want) {
    const int got = negative_inertia(g);
    o.detail << name << "=" << got << " ";
    o.expect(got == want, name + " = " + std::to_string(got) + ", expected " + std::to_string(want));
  };
  auto at_least = [&](const std::string& name, const Graph& g, int want) {
    const int got = negative_inertia(g);
    o.detail << name << "=" << got << " ";
    o.expect(got >= want, name + " = " + std::to_string(got) + ", expected >= " + std::to_string(want));
  };
  exact("n(B(5,5,5))", gen_theta(5, 5, 5), 4);
  exact("n(B(5,2,5))", gen_theta(5, 2, 5), 4);
  exact("n(B(4,3,5))", gen_theta(4, 3, 5), 4);
  exact("n(B(5,6,6))", gen_theta(5, 6, 6), 6);
  at_least("n(B(4,6,6))", gen_theta(4, 6, 6), 5);
  at_least("n(B(5,5,6))", gen_theta(5, 5, 6), 5);
  exact("n(G8)", gen_named_H(NamedGraph::kG8), 4);
}

void bound_census(Outcome& o) {
  auto r = verify_bounds(up_to(8));
  o.detail << "graphs " << r.graphs_examined << ", violations " << r.violations.size();
  for (const auto& c : r.checks) o.detail << ", " << c.name << " equality " << c.equality_cases;
  o.expect(r.pass(), "bound violated");
}

void report_mismatches(Outcome& o, const VerificationReport& r) {
  o.detail << "examined " << r.graphs_examined << ", mismatches " << r.mismatches.size();
  for (const auto& m : r.mismatches) {
    o.detail << "\n    counterexample " << m.graph6 << " structural=" << m.structural
             << " computed=" << m.computed;
  }
  o.expect(r.mismatches.empty(), "classifier mismatch");
}

void theorem_3_6(Outcome& o) {
  report_mismatches(o, verify_classifier_equivalence(up_to(8), Theorem::k3_6));
}

void theorem_3_10(Outcome& o) {
  report_mismatches(o, verify_classifier_equivalence(up_to(8), Theorem::k3_10));
}

void theorem_2_9(Outcome& o) {
  EnumerationTask t = up_to(8);
  t.reduced_only = true;
  std::vector<Graph> d3;
  for (const auto& g : materialize(t)) {
    if (connectivity_diameter_girth(g).diameter == 3) d3.push_back(g);
  }
  EnumerationTask ext;
  ext.min_order = 1;
  ext.max_order = 8;
  ext.external = d3;
  const auto induced = verify_classifier_equivalence(ext, Theorem::k2_9, ContainmentMode::kInduced);
  const auto subgraph = verify_classifier_equivalence(ext, Theorem::k2_9, ContainmentMode::kSubgraph);
  o.detail << "reduced d=3 graphs " << d3.size() << ", induced-mode mismatches "
           << induced.mismatches.size() << " (subgraph mode: " << subgraph.mismatches.size()
           << ")";
  o.expect(induced.mismatches.empty(), "sandwich mismatch");
  for (int k = 1; k <= 4; ++k) {
    const auto& c = construct_G1(k);
    o.detail << "\n    G1(" << k << ") order " << c.graph.order() << " (want " << 2 * k + 6
             << ") classes " << c.maximal_classes << " universal "
             << (c.universal ? "yes" : "no") << " " << emit_graph6(c.graph);
    const auto& p = c.post;
    std::string failed;
    if (!p.order) failed += " order";
    if (!p.diameter) failed += " diameter";
    if (!p.negative) failed += " negative";
    if (!p.reduced) failed += " reduced";
    if (!p.trims) failed += " trims";
    if (!p.residual) failed += " residual";
    o.expect(p.all(), "G1(" + std::to_string(k) + ") postconditions failed:" + failed);
  }
}

void claim_scans(Outcome& o) {
  auto r = scan_claim3_shapes();
  o.detail << "configurations " << r.graphs_examined << ", below threshold " << r.violations.size();
  for (const auto& n : r.notes) {
    if (n.find("BELOW") != std::string::npos) o.detail << "\n    " << n;
  }
  o.expect(r.pass(), "configuration below threshold");
}

void miner(Outcome& o) {
  const auto mined = mine_minimal_obstructions(6);
  auto has = [&](const Graph& h) {
    for (const auto& g : mined) {
      if (g.order() == h.order() && is_isomorphic(g, h)) return true;
    }
    return false;
  };
  o.expect(has(gen_complete(4)), "K4 missing");
  o.expect(has(gen_named_H(NamedGraph::kH2)), "X32 missing");
  o.expect(has(gen_path(6)), "P6 missing");
  int bad = 0;
  for (const auto& f : mined) {
    if (negative_inertia(f) != 3 || !is_minimal_obstruction(f)) ++bad;
  }
  o.detail << "mined " << mined.size() << " graphs, failed re-verification " << bad;
  o.expect(bad == 0, "re-verification failed");
}

// Six randomized property families, 10,000 cases in total.
void properties(Outcome& o) {
  std::mt19937_64 rng(77);
  auto random_n = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  long cases = 0;
  std::array<long, 6> failures{};

  for (int i = 0; i < 2000; ++i, ++cases) {  // pendant pair
    Graph g = oracle::random_connected(rng, random_n(2, 14), 0.1);
    Vertex x = -1;
    for (Vertex v = 0; v < g.order() && x < 0; ++v) {
      if (g.degree(v) == 1) x = v;
    }
    if (x < 0) {
      g = oracle::random_tree(rng, g.order());
      for (Vertex v = 0; x < 0; ++v) {
        if (g.degree(v) == 1) x = v;
      }
    }
    const auto a = inertia(g);
    const auto b = inertia(trim_pendant_pair(g, x));
    if (a.negative != b.negative + 1 || a.positive != b.positive + 1) ++failures[0];
  }
  for (int i = 0; i < 1500; ++i, ++cases) {  // twin reduction
    Graph g = oracle::random_graph(rng, random_n(2, 12), 0.5);
    const auto a = inertia(g);
    const auto b = inertia(reduce_twins(g).residual);
    if (a.negative != b.negative || a.positive != b.positive) ++failures[1];
  }
  for (int i = 0; i < 1500; ++i, ++cases) {  // dominated edge
    Graph g = oracle::random_graph(rng, random_n(3, 12), 0.5);
    bool done = false;
    for (Vertex u = 0; u < g.order() && !done; ++u) {
      for (Vertex v = 0; v < g.order() && !done; ++v) {
        if (u == v || (g.neighbors(u) & ~g.neighbors(v))) continue;
        if (inertia(dominated_edge_reduction(g, u, v)) != inertia(g)) ++failures[2];
        done = true;
      }
    }
    if (!done) {  // a leaf and its far neighbour always qualify on a star
      Graph s = gen_star(random_n(2, 10));
      if (inertia(dominated_edge_reduction(s, 1, 2)) != inertia(s)) ++failures[2];
    }
  }
  for (int i = 0; i < 1500; ++i, ++cases) {  // disjoint union
    Graph a = oracle::random_graph(rng, random_n(1, 10), 0.4);
    Graph b = oracle::random_graph(rng, random_n(1, 10), 0.4);
    if (inertia(disjoint_union(a, b)) != inertia(a) + inertia(b)) ++failures[3];
  }
  for (int i = 0; i < 2000; ++i, ++cases) {  // induced-subgraph monotonicity
    Graph g = oracle::random_graph(rng, random_n(2, 14), 0.4);
    const VertexMask keep = rng() & g.all_vertices();
    const auto a = inertia(g);
    const auto b = inertia(induced_subgraph(g, keep));
    if (b.negative > a.negative || b.positive > a.positive) ++failures[4];
  }
  for (int i = 0; i < 1500; ++i, ++cases) {  // bipartite symmetry
    const int left = random_n(1, 8), right = random_n(1, 8);
    Graph g(left + right);
    std::bernoulli_distribution coin(0.4);
    for (Vertex u = 0; u < left; ++u) {
      for (Vertex v = left; v < left + right; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    const auto s = inertia(g.permuted(oracle::random_permutation(rng, g.order())));
    if (!is_bipartite(g) || s.positive != s.negative) ++failures[5];
  }
  const char* names[] = {"pendant-pair", "twins", "dominated-edge", "union", "monotonicity",
                         "bipartite"};
  o.detail << "cases " << cases;
  for (int i = 0; i < 6; ++i) {
    o.detail << ", " << names[i] << " failures " << failures[i];
    o.expect(failures[i] == 0, std::string(names[i]) + " failed");
  }
  o.expect(cases == 10000, "case count");
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "closed forms", 5, closed_forms},
      {2, "oracle agreement", 300, oracle_agreement},
      {3, "fixture values", 1, fixtures},
      {4, "bound census", 300, bound_census},
      {5, "girth lower-bound characterization", 300, theorem_3_6},
      {6, "girth equality characterization", 300, theorem_3_10},
      {7, "diameter characterization and G1", 600, theorem_2_9},
      {8, "claim scans", 60, claim_scans},
      {9, "minimal obstructions", 600, miner},
      {10, "property suites", 300, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) o.expect(false, "over time limit");
    if (!o.pass) ++failed;
    std::printf("criterion %d: %s %s (%.2f s, limit %.0f s): %s\n", c.id, o.pass ? "PASS" : "FAIL",
                c.name, secs, c.limit_s, o.detail.str().c_str());
    if (!o.pass) std::printf("    failed: %s\n", o.failures.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
