#include "nig/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nig/families.hpp"
#include "nig/graph_io.hpp"
#include "nig/reductions.hpp"
#include "nig/spectra.hpp"

namespace nig {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

int ceil_half(int x) { return (x + 1) / 2; }

CheckTally& tally(VerificationReport& r, const std::string& name) {
  for (auto& t : r.checks) {
    if (t.name == name) return t;
  }
  r.checks.push_back({name, 0, 0, 0});
  return r.checks.back();
}

// Splits `graphs` round-robin over `jobs` workers, each filling a private
// report; partial reports are merged in worker order and normalized, so the
// result does not depend on `jobs`.
VerificationReport run_parallel(const std::vector<Graph>& graphs, int jobs,
                                const std::function<void(const Graph&, VerificationReport&)>& fn) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
  std::vector<VerificationReport> parts(jobs);
  auto work = [&](int w) {
    for (std::size_t i = w; i < graphs.size(); i += jobs) fn(graphs[i], parts[w]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  VerificationReport out;
  for (const auto& p : parts) out = merge(std::move(out), p);
  normalize(out);
  return out;
}

}  // namespace

VerificationReport merge(VerificationReport a, const VerificationReport& b) {
  if (a.task.empty()) a.task = b.task;
  if (a.subject.empty()) a.subject = b.subject;
  a.graphs_examined += b.graphs_examined;
  a.equality_cases += b.equality_cases;
  a.violations.insert(a.violations.end(), b.violations.begin(), b.violations.end());
  a.mismatches.insert(a.mismatches.end(), b.mismatches.begin(), b.mismatches.end());
  a.notes.insert(a.notes.end(), b.notes.begin(), b.notes.end());
  for (const auto& t : b.checks) {
    auto& dst = tally(a, t.name);
    dst.examined += t.examined;
    dst.equality_cases += t.equality_cases;
    dst.violations += t.violations;
  }
  a.wall_ms = std::max(a.wall_ms, b.wall_ms);
  return a;
}

void normalize(VerificationReport& r) {
  std::sort(r.violations.begin(), r.violations.end());
  r.violations.erase(std::unique(r.violations.begin(), r.violations.end()), r.violations.end());
  std::sort(r.mismatches.begin(), r.mismatches.end());
  std::sort(r.notes.begin(), r.notes.end());
  std::sort(r.checks.begin(), r.checks.end(),
            [](const CheckTally& x, const CheckTally& y) { return x.name < y.name; });
}

// ---------------------------------------------------------------------------
// bounds

namespace {

struct BoundName {
  Bound bit;
  const char* name;
};

constexpr BoundName kBoundNames[] = {
    {kBoundHalfDiameter, "half-diameter"},
    {kBoundOddDiameter, "odd-diameter"},
    {kBoundRank, "rank"},
    {kBoundGirth, "girth"},
};

}  // namespace

unsigned bounds_from_string(const std::string& text) {
  if (text.empty() || text == "all") return kAllBounds;
  unsigned out = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    bool found = false;
    for (const auto& b : kBoundNames) {
      if (item == b.name) {
        out |= b.bit;
        found = true;
      }
    }
    if (!found) {
      throw std::invalid_argument("unknown bound '" + item +
                                  "' (expected all, half-diameter, odd-diameter, rank, girth)");
    }
  }
  return out;
}

std::string bounds_to_string(unsigned bounds) {
  if (bounds == kAllBounds) return "all";
  std::string out;
  for (const auto& b : kBoundNames) {
    if (bounds & b.bit) {
      if (!out.empty()) out += ',';
      out += b.name;
    }
  }
  return out;
}

VerificationReport verify_bounds(const EnumerationTask& task, unsigned bounds, int jobs) {
  const auto start = Clock::now();
  const auto graphs = materialize(task);
  auto check = [bounds](const Graph& g, VerificationReport& r) {
    const auto inv = connectivity_diameter_girth(g);
    if (!inv.connected) return;
    ++r.graphs_examined;
    const auto sig = inertia(g);
    const int n = sig.negative;
    const int d = *inv.diameter;
    bool equality = false;
    bool violated = false;
    auto record = [&](Bound b, bool holds, bool tight) {
      auto& t = tally(r, bounds_to_string(b));
      ++t.examined;
      if (tight) {
        ++t.equality_cases;
        equality = true;
      }
      if (!holds) {
        ++t.violations;
        violated = true;
      }
    };
    if (bounds & kBoundHalfDiameter) record(kBoundHalfDiameter, 2 * n >= d, 2 * n == d);
    if (d % 2 == 1) {
      if (bounds & kBoundOddDiameter) record(kBoundOddDiameter, 2 * n >= d + 1, 2 * n == d + 1);
      if (bounds & kBoundRank) record(kBoundRank, sig.rank() >= d + 1, sig.rank() == d + 1);
    }
    if (inv.girth && (bounds & kBoundGirth)) {
      const int target = ceil_half(*inv.girth) - 1;
      record(kBoundGirth, n >= target, n == target);
    }
    if (equality) ++r.equality_cases;
    if (violated) r.violations.push_back(emit_graph6(g));
  };
  auto report = run_parallel(graphs, jobs, check);
  report.task = "bounds " + task.describe();
  report.subject = bounds_to_string(bounds);
  report.wall_ms = elapsed_ms(start);
  return report;
}

// ---------------------------------------------------------------------------
// classifier equivalence

VerificationReport verify_classifier_equivalence(const EnumerationTask& task, Theorem theorem,
                                                 ContainmentMode mode, int jobs) {
  const auto start = Clock::now();
  const auto graphs = materialize(task);
  if (theorem == Theorem::k2_9) {
    // Build the needed G1 graphs before fanning out.
    int max_d = 0;
    for (const auto& g : graphs) max_d = std::max(max_d, g.order() - 1);
    for (int k = 1; 2 * k + 1 <= max_d; ++k) construct_G1(k);
  }
  auto check = [theorem, mode](const Graph& g, VerificationReport& r) {
    const auto inv = connectivity_diameter_girth(g);
    if (!inv.connected) {
      ++tally(r, "skipped-disconnected").examined;
      return;
    }
    if (theorem == Theorem::k2_9) {
      if (!is_reduced(g) || *inv.diameter % 2 == 0 || *inv.diameter < 3) {
        ++tally(r, "skipped-not-applicable").examined;
        return;
      }
    } else if (!inv.girth) {
      ++tally(r, "skipped-acyclic").examined;
      return;
    }
    ++r.graphs_examined;
    const Verdict v = classify(g, theorem, mode);
    auto& t = tally(r, std::string("theorem-") + to_string(theorem));
    ++t.examined;
    if (v.computed) {
      ++t.equality_cases;
      ++r.equality_cases;
    }
    if (theorem == Theorem::k2_9 && v.rank_equality) ++tally(r, "rank-equality").equality_cases;
    if (!v.agrees()) {
      ++t.violations;
      std::string structural = v.structural ? "extremal" : "not-extremal";
      if (v.family) structural += " " + v.family->to_string();
      std::string computed = "n=" + std::to_string(v.inertia.negative) +
                             (v.computed ? " equality" : " strict");
      if (v.girth) computed += " g=" + std::to_string(*v.girth);
      computed += " d=" + std::to_string(*v.diameter);
      r.mismatches.push_back({emit_graph6(g), structural, computed});
    }
  };
  auto report = run_parallel(graphs, jobs, check);
  report.task = "classifier " + task.describe();
  report.subject = std::string("theorem ") + to_string(theorem);
  if (theorem == Theorem::k2_9) report.subject += std::string(" mode=") + to_string(mode);
  report.wall_ms = elapsed_ms(start);
  return report;
}

// ---------------------------------------------------------------------------
// Claim-3 shapes

std::vector<ShapeConfiguration> claim3_configurations() {
  // C5 on 0..4, x1 = 5 ~ y1, x2 = 6 ~ y2, x = 7 ~ x1, x2; optionally a third
  // N1 neighbour x3 = 8 ~ x with x3 ~ y3. Only girth-5 graphs qualify.
  std::map<std::string, ShapeConfiguration> unique;
  auto consider = [&](Graph g, const std::string& label) {
    const auto inv = connectivity_diameter_girth(g);
    if (!inv.girth || *inv.girth != 5) return;
    std::string key = canonical_key(g);
    if (!unique.contains(key)) unique.emplace(key, ShapeConfiguration{label, canonical_form(g), 4});
  };
  for (int y1 = 0; y1 < 5; ++y1) {
    for (int y2 = 0; y2 < 5; ++y2) {
      Graph base(8);
      for (int i = 0; i < 5; ++i) base.add_edge(i, (i + 1) % 5);
      base.add_edge(5, y1);
      base.add_edge(6, y2);
      base.add_edge(7, 5);
      base.add_edge(7, 6);
      consider(base, "x~x1,x2 y=" + std::to_string(y1) + "," + std::to_string(y2));
      for (int y3 = 0; y3 < 5; ++y3) {
        Graph g(9);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        g.add_edge(8, 7);
        g.add_edge(8, y3);
        consider(g, "x~x1,x2,x3 y=" + std::to_string(y1) + "," + std::to_string(y2) + "," +
                        std::to_string(y3));
      }
    }
  }
  std::vector<ShapeConfiguration> out;
  for (auto& [key, cfg] : unique) out.push_back(std::move(cfg));
  out.push_back({"theta(4,6,6)", gen_theta(4, 6, 6), 5});
  out.push_back({"theta(5,5,6)", gen_theta(5, 5, 6), 5});
  return out;
}

VerificationReport scan_claim3_shapes() {
  const auto start = Clock::now();
  VerificationReport r;
  r.task = "claim-3 shape scan";
  r.subject = "n >= 4 on C5 configurations; n >= 5 on theta(4,6,6), theta(5,5,6)";
  for (const auto& cfg : claim3_configurations()) {
    ++r.graphs_examined;
    const int n = negative_inertia(cfg.graph);
    auto& t = tally(r, "n>=" + std::to_string(cfg.required_negative));
    ++t.examined;
    const bool ok = n >= cfg.required_negative;
    if (n == cfg.required_negative) {
      ++t.equality_cases;
      ++r.equality_cases;
    }
    if (!ok) {
      ++t.violations;
      r.violations.push_back(emit_graph6(cfg.graph));
    }
    r.notes.push_back(cfg.label + " " + emit_graph6(cfg.graph) + " n=" + std::to_string(n) +
                      (ok ? "" : " BELOW " + std::to_string(cfg.required_negative)));
  }
  normalize(r);
  r.wall_ms = elapsed_ms(start);
  return r;
}

// ---------------------------------------------------------------------------
// minimal obstructions

bool is_minimal_obstruction(const Graph& f) {
  if (!is_connected(f) || negative_inertia(f) < 3) return false;
  const VertexMask full = f.all_vertices();
  for (VertexMask s = 1; s < full; ++s) {
    const Graph h = induced_subgraph(f, s);
    if (is_connected(h) && negative_inertia(h) > 2) return false;
  }
  return true;
}

namespace {

// Vertex masks of the connected components of g restricted to `alive`.
std::vector<VertexMask> components(const Graph& g, VertexMask alive) {
  std::vector<VertexMask> out;
  while (alive) {
    VertexMask comp = alive & (~alive + 1);
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask m = frontier; m; m &= m - 1) next |= g.neighbors(std::countr_zero(m));
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    alive &= ~comp;
  }
  return out;
}

// By interlacing, every proper connected induced subgraph has n <= 2 iff
// every component of every vertex-deleted subgraph does.
bool vertex_deleted_components_ok(const Graph& f) {
  for (Vertex v = 0; v < f.order(); ++v) {
    for (VertexMask comp : components(f, f.all_vertices() & ~bit(v))) {
      if (negative_inertia(induced_subgraph(f, comp)) > 2) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Graph> mine_minimal_obstructions(int max_order, int jobs) {
  if (max_order > kEnumerationBudget) {
    throw std::invalid_argument("miner supports max order <= " + std::to_string(kEnumerationBudget));
  }
  std::vector<Graph> out;
  for (int n = 1; n <= max_order; ++n) {
    const auto& graphs = enumerate_connected(n);
    std::vector<std::vector<Graph>> found(std::max(1, jobs));
    auto work = [&](int w) {
      for (std::size_t i = w; i < graphs.size(); i += found.size()) {
        const Graph& g = graphs[i];
        if (negative_inertia(g) >= 3 && vertex_deleted_components_ok(g)) found[w].push_back(g);
      }
    };
    if (found.size() == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < static_cast<int>(found.size()); ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    std::vector<Graph> level;
    for (auto& part : found) level.insert(level.end(), part.begin(), part.end());
    std::sort(level.begin(), level.end(), [](const Graph& a, const Graph& b) {
      return emit_graph6(a) < emit_graph6(b);
    });
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

VerificationReport mine_report(int max_order, int jobs) {
  const auto start = Clock::now();
  VerificationReport r;
  r.task = "minimal obstructions order <= " + std::to_string(max_order);
  r.subject = "n(F) >= 3, every proper connected induced subgraph n <= 2";
  for (const auto& f : mine_minimal_obstructions(max_order, jobs)) {
    ++r.graphs_examined;
    const std::string g6 = emit_graph6(f);
    const int n = negative_inertia(f);
    const bool swept = is_minimal_obstruction(f);
    auto& t = tally(r, "re-verified");
    ++t.examined;
    if (n != 3 || !swept) {
      ++t.violations;
      r.violations.push_back(g6);
    }
    r.notes.push_back(g6 + " order=" + std::to_string(f.order()) + " size=" +
                      std::to_string(f.size()) + " n=" + std::to_string(n));
  }
  normalize(r);
  r.wall_ms = elapsed_ms(start);
  return r;
}

std::vector<Graph> g0_candidates() {
  CharPolynomial target;
  target.coefficients = {0, 0, 0, 0, -9, 0, 1};
  std::vector<Graph> out;
  for (const auto& g : enumerate_connected(6)) {
    if (char_poly(g) == target) out.push_back(g);
  }
  return out;
}

}  // namespace nig
