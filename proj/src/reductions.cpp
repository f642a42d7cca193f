#include "nig/reductions.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace nig {

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::kPendantPair: return "pendant-pair";
    case MoveKind::kTwinDelete: return "twin-delete";
    case MoveKind::kDominatedEdgeDelete: return "dominated-edge-delete";
    case MoveKind::kIsolatedDelete: return "isolated-delete";
  }
  return "unknown";
}

InertiaSignature ReductionTrace::implied_inertia(const InertiaSignature& residual_inertia,
                                                 int original_order) const {
  InertiaSignature s = residual_inertia;
  s.positive += trims;
  s.negative += trims;
  s.nullity = original_order - s.positive - s.negative;
  return s;
}

std::string serialize_trace(const ReductionTrace& trace, int original_order) {
  std::ostringstream os;
  int trims = 0;
  int order = original_order;
  int step = 0;
  for (const auto& m : trace.moves) {
    if (m.kind == MoveKind::kPendantPair) ++trims;
    switch (m.kind) {
      case MoveKind::kPendantPair: order -= 2; break;
      case MoveKind::kTwinDelete:
      case MoveKind::kIsolatedDelete: order -= 1; break;
      case MoveKind::kDominatedEdgeDelete: break;
    }
    os << ++step << ' ' << to_string(m.kind);
    for (Vertex v : m.vertices) os << ' ' << v;
    os << " trims=" << trims << " order=" << order << '\n';
  }
  return os.str();
}

Graph trim_pendant_pair(const Graph& g, Vertex x) {
  if (x < 0 || x >= g.order() || g.degree(x) != 1) {
    throw std::invalid_argument("vertex " + std::to_string(x) + " is not pendant");
  }
  const Vertex y = std::countr_zero(g.neighbors(x));
  return remove_vertices(g, bit(x) | bit(y));
}

namespace {

void drop(Graph& g, std::vector<Vertex>& labels, VertexMask removed) {
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!((removed >> v) & 1U)) kept.push_back(labels[v]);
  }
  g = remove_vertices(g, removed);
  labels = std::move(kept);
}

std::vector<Vertex> identity_labels(int n) {
  std::vector<Vertex> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  return labels;
}

}  // namespace

ReductionTrace trim_to_core(const Graph& g) {
  ReductionTrace trace;
  Graph cur = g;
  std::vector<Vertex> labels = identity_labels(g.order());

  for (;;) {
    VertexMask isolated = 0;
    Vertex pendant = -1;
    for (Vertex v = 0; v < cur.order(); ++v) {
      const int d = cur.degree(v);
      if (d == 0) isolated |= bit(v);
      if (d == 1 && pendant < 0) pendant = v;
    }
    if (isolated) {
      for (VertexMask m = isolated; m; m &= m - 1) {
        trace.moves.push_back({MoveKind::kIsolatedDelete, {labels[std::countr_zero(m)]}});
      }
      drop(cur, labels, isolated);
      continue;
    }
    if (pendant < 0) break;
    const Vertex y = std::countr_zero(cur.neighbors(pendant));
    trace.moves.push_back({MoveKind::kPendantPair, {labels[pendant], labels[y]}});
    ++trace.trims;
    drop(cur, labels, bit(pendant) | bit(y));
  }
  trace.residual = std::move(cur);
  trace.residual_labels = std::move(labels);
  return trace;
}

ReductionTrace reduce_twins(const Graph& g) {
  ReductionTrace trace;
  Graph cur = g;
  std::vector<Vertex> labels = identity_labels(g.order());
  for (;;) {
    Vertex victim = -1;
    for (Vertex u = 0; u < cur.order() && victim < 0; ++u) {
      for (Vertex v = u + 1; v < cur.order(); ++v) {
        if (cur.neighbors(u) == cur.neighbors(v)) {
          victim = v;
          trace.moves.push_back({MoveKind::kTwinDelete, {labels[v], labels[u]}});
          break;
        }
      }
    }
    if (victim < 0) break;
    drop(cur, labels, bit(victim));
  }
  trace.residual = std::move(cur);
  trace.residual_labels = std::move(labels);
  return trace;
}

Graph dominated_edge_reduction(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) {
    throw std::invalid_argument("dominated_edge_reduction needs two distinct vertices");
  }
  const VertexMask nu = g.neighbors(u);
  if ((nu & ~g.neighbors(v)) != 0) {
    throw std::invalid_argument("N(" + std::to_string(u) + ") is not contained in N(" +
                                std::to_string(v) + ")");
  }
  Graph out = g;
  for (VertexMask m = nu; m; m &= m - 1) out.remove_edge(std::countr_zero(m), v);
  return out;
}

bool is_reduced(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.neighbors(u) == g.neighbors(v)) return false;
    }
  }
  return true;
}

}  // namespace nig
