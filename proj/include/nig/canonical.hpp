#ifndef NIG_CANONICAL_HPP
#define NIG_CANONICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "nig/graph.hpp"

namespace nig {

/// Largest order canonical_form accepts.
inline constexpr int kCanonicalBudget = 12;

/// Canonical relabelling: among labellings that list vertices in the order of
/// the degree-refined ordered partition, the one whose column-major upper
/// triangle bit string is lexicographically smallest. Isomorphic graphs, and
/// only those, get equal results. Throws std::invalid_argument above budget.
Graph canonical_form(const Graph& g);

/// graph6 of canonical_form(g); the key used for isomorphism rejection.
std::string canonical_key(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

enum class ContainmentMode { kSubgraph, kInduced };

const char* to_string(ContainmentMode mode);

/// An injection V(pattern) -> V(host) preserving edges (and non-edges when
/// induced), or nullopt. result[v] is the host vertex for pattern vertex v.
std::optional<std::vector<Vertex>> find_embedding(const Graph& pattern, const Graph& host,
                                                  ContainmentMode mode);

/// True iff some vertex subset of g induces a graph isomorphic to h.
bool contains_induced(const Graph& h, const Graph& g);

/// Sandwich test low <= g <= high: g embeds into high and low embeds into g,
/// both in the given containment mode.
bool contains_spanning_subgraph_between(const Graph& low, const Graph& g, const Graph& high,
                                        ContainmentMode mode = ContainmentMode::kSubgraph);

}  // namespace nig

#endif  // NIG_CANONICAL_HPP
