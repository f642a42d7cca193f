#ifndef NIG_REDUCTIONS_HPP
#define NIG_REDUCTIONS_HPP

#include <string>
#include <vector>

#include "nig/graph.hpp"
#include "nig/spectra.hpp"

namespace nig {

enum class MoveKind { kPendantPair, kTwinDelete, kDominatedEdgeDelete, kIsolatedDelete };

const char* to_string(MoveKind kind);

/// One surgery step. Vertices are labels of the graph the trace started from.
struct ReductionMove {
  MoveKind kind;
  std::vector<Vertex> vertices;  // twin-delete: {deleted, kept twin}
};

/// Ordered surgery log. Each pendant-pair move adds exactly one to both the
/// positive and the negative inertia of what remains; every other move is
/// inertia neutral.
struct ReductionTrace {
  std::vector<ReductionMove> moves;
  int trims = 0;
  Graph residual;
  std::vector<Vertex> residual_labels;  // original label of each residual vertex

  /// Inertia of the starting graph implied by the trace and the residual.
  InertiaSignature implied_inertia(const InertiaSignature& residual_inertia,
                                   int original_order) const;
};

/// Line-oriented log: "<step> <kind> <vertices...> trims=<t> order=<n>".
std::string serialize_trace(const ReductionTrace& trace, int original_order);

/// g - x - y where y is the unique neighbour of the pendant vertex x.
/// Throws std::invalid_argument when x does not have degree 1.
Graph trim_pendant_pair(const Graph& g, Vertex x);

/// Deletes isolated vertices and trims pendant pairs (lowest label first,
/// re-scanning after each move) until the minimum degree is at least 2 or
/// nothing is left.
ReductionTrace trim_to_core(const Graph& g);

/// Repeatedly deletes the higher-labelled vertex of the lowest twin pair.
ReductionTrace reduce_twins(const Graph& g);

/// Deletes every edge xv with x in N(u). Requires N(u) subset of N(v), u != v.
Graph dominated_edge_reduction(const Graph& g, Vertex u, Vertex v);

/// No two distinct vertices share an open neighbourhood.
bool is_reduced(const Graph& g);

}  // namespace nig

#endif  // NIG_REDUCTIONS_HPP
