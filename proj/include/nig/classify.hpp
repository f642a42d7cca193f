#ifndef NIG_CLASSIFY_HPP
#define NIG_CLASSIFY_HPP

#include <optional>
#include <string>

#include "nig/canonical.hpp"
#include "nig/families.hpp"
#include "nig/graph.hpp"
#include "nig/spectra.hpp"

namespace nig {

enum class Theorem { k2_9, k3_6, k3_10 };

const char* to_string(Theorem t);
std::optional<Theorem> theorem_from_string(const std::string& name);

/// Outcome of one characterization check. `structural` is the family test,
/// `computed` the exact-inertia equality it is supposed to characterize.
struct Verdict {
  Theorem theorem = Theorem::k3_6;
  bool structural = false;
  bool computed = false;
  std::optional<FamilySpec> family;  // set whenever structural holds
  std::string witness;
  InertiaSignature inertia;
  std::optional<int> girth;
  std::optional<int> diameter;
  // theorem 2.9 only
  int k = 0;
  bool rank_equality = false;        // r(G) = d(G) + 1
  ContainmentMode mode = ContainmentMode::kInduced;

  bool extremal() const { return structural; }
  bool agrees() const { return structural == computed; }
  std::string describe() const;
};

/// n = ceil(g/2) - 1 iff G is C_n with n = 0,1 (mod 4) or K_{s,t} with s+t >= 5.
/// Throws std::invalid_argument for disconnected or acyclic input.
Verdict classify_theorem_3_6(const Graph& g);

/// n = ceil(g/2). Girth >= 5 uses the four families; girth 3 or 4 uses the
/// direct n = 2 test backed by the induced K3/P4 and H1-H3 probes.
Verdict classify_theorem_3_10(const Graph& g);

/// d = 2k+1 and n = k+1 iff P_{2k+2} <= G <= G1(k). Needs a reduced connected
/// graph of odd diameter; d = 1 is decided directly (only K2 qualifies).
Verdict classify_theorem_2_9(const Graph& g, ContainmentMode mode = ContainmentMode::kInduced);

Verdict classify(const Graph& g, Theorem t, ContainmentMode mode = ContainmentMode::kInduced);

/// Structural probes, exposed for tests.
bool is_cycle_graph(const Graph& g);
std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g);

/// Cycle order and leaf counts per cycle vertex (in cycle order) when G is a
/// cycle with pendant leaves only.
struct UnicyclicShape {
  int girth = 0;
  std::vector<int> leaves;
};
std::optional<UnicyclicShape> canonical_unicyclic_shape(const Graph& g);

/// Cycle length and star size when G is C_g joined to the centre of S_k.
std::optional<std::pair<int, int>> cycle_star_shape(const Graph& g);

/// The parity rule for canonical unicyclic graphs of girth g with leaf counts
/// in cycle order: one major vertex always qualifies; otherwise every segment
/// between cyclically consecutive majors must have an odd number of internal
/// vertices (g even) or exactly one segment may be even (g odd).
bool unicyclic_parity_rule(const UnicyclicShape& shape);

}  // namespace nig

#endif  // NIG_CLASSIFY_HPP
