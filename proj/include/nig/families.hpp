#ifndef NIG_FAMILIES_HPP
#define NIG_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "nig/graph.hpp"

namespace nig {

enum class FamilyKind {
  kPath,
  kCycle,
  kCompleteBipartite,
  kStar,
  kTheta,
  kCycleStar,
  kCanonicalUnicyclic,
  kG1,
  kNamedH,
  kNegativeInertiaTwo,  // graphs with n(G) = 2, matched by exact inertia
};

const char* to_string(FamilyKind kind);
std::optional<FamilyKind> family_kind_from_string(const std::string& name);

/// A named family member, e.g. theta(5,5,5) or canonical-unicyclic(6;1,0,0,0,0,0).
struct FamilySpec {
  FamilyKind kind;
  std::vector<int> params;

  std::string to_string() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete_bipartite(int s, int t);
Graph gen_star(int leaves);
Graph gen_complete(int n);

/// path (n>=1), cycle (n>=3), complete-bipartite (s,t>=1), star (k>=1 leaves).
Graph gen_elementary(FamilyKind kind, const std::vector<int>& params);

/// Hubs 0 and 1 joined by paths on r, s and t vertices (r-2, s-2, t-2
/// internal vertices). Needs every parameter >= 2 and at most one equal to 2.
Graph gen_theta(int r, int s, int t);

/// Cycle 0..g-1, star centre g adjacent to cycle vertex 0, leaves g+1..g+k.
Graph gen_cycle_star(int g, int k);

/// Cycle 0..g-1 with leaves[i] pendant vertices on cycle vertex i.
Graph gen_canonical_unicyclic(int g, const std::vector<int>& leaves);

enum class NamedGraph { kH1, kH2, kH3, kG8 };

std::optional<NamedGraph> named_graph_from_string(const std::string& name);

/// H1 = K4, H2 = X32 (triangle with a two-edge tail), H3 = P6, and G8: a
/// 5-cycle with two pendant-side vertices on one cycle vertex whose own
/// neighbours are adjacent.
Graph gen_named_H(NamedGraph which);

/// Maximal reduced extension of the diametral path P_{2k+2} by vertices at
/// distance one, with every prefix keeping d(v_1, v_{2k+2}) = 2k+1 and
/// negative inertia k+1.
struct G1Construction {
  int k = 0;
  Graph graph;
  Graph path;                   // P_{2k+2}, vertices 0..2k+1 of `graph`
  int extremal_graphs = 0;      // reduced extensions with d = 2k+1, n = k+1
  int maximal_classes = 0;      // isomorphism classes at the maximum order
  bool universal = false;       // every extension embeds (induced) in `graph`
  long search_nodes = 0;

  struct Postconditions {
    bool order = false;         // 2k + 6 vertices
    bool diameter = false;      // 2k + 1
    bool negative = false;      // k + 1
    bool reduced = false;
    bool trims = false;         // trim_to_core performs exactly k pendant trims
    bool residual = false;      // residual characteristic polynomial x^6 - 9x^4
    bool all() const { return order && diameter && negative && reduced && trims && residual; }
  } post;

  std::string describe() const;
};

/// Runs the extension search (memoised per k, thread safe).
const G1Construction& construct_G1(int k);

/// construct_G1(k).graph, throwing std::runtime_error when a postcondition fails.
Graph gen_G1(int k);

/// Builds any family member; named-H takes params {1, 2, 3, 8}.
Graph generate(const FamilySpec& spec);

}  // namespace nig

#endif  // NIG_FAMILIES_HPP
