#ifndef NIG_VERIFY_HPP
#define NIG_VERIFY_HPP

#include <string>
#include <vector>

#include "nig/canonical.hpp"
#include "nig/classify.hpp"
#include "nig/enumerate.hpp"
#include "nig/graph.hpp"

namespace nig {

struct Mismatch {
  std::string graph6;
  std::string structural;
  std::string computed;
  friend auto operator<=>(const Mismatch&, const Mismatch&) = default;
};

/// Per-check aggregate; one CSV row each.
struct CheckTally {
  std::string name;
  long examined = 0;
  long equality_cases = 0;
  long violations = 0;
};

struct VerificationReport {
  std::string task;
  std::string subject;  // bound list or theorem identifier
  long graphs_examined = 0;
  long equality_cases = 0;
  std::vector<std::string> violations;  // graph6, sorted
  std::vector<Mismatch> mismatches;     // sorted by graph6
  std::vector<CheckTally> checks;
  std::vector<std::string> notes;       // informational, do not affect pass
  long wall_ms = 0;

  bool pass() const { return violations.empty() && mismatches.empty(); }
};

/// Sums two partial reports over disjoint graph sets. Associative and
/// commutative once `normalize` has sorted the lists.
VerificationReport merge(VerificationReport a, const VerificationReport& b);
void normalize(VerificationReport& r);

enum Bound : unsigned {
  kBoundHalfDiameter = 1U << 0,  // 2n >= d
  kBoundOddDiameter = 1U << 1,   // d odd: 2n >= d+1
  kBoundRank = 1U << 2,          // d odd: r >= d+1
  kBoundGirth = 1U << 3,         // cyclic: n >= ceil(g/2) - 1
  kAllBounds = 0xFU,
};

/// Parses "all" or a comma list of half-diameter, odd-diameter, rank, girth.
unsigned bounds_from_string(const std::string& text);
std::string bounds_to_string(unsigned bounds);

VerificationReport verify_bounds(const EnumerationTask& task, unsigned bounds = kAllBounds,
                                 int jobs = 1);

/// Structural verdict against exact-inertia equality on every applicable
/// graph of the task. Theorem 2.9 takes reduced graphs of odd diameter >= 3
/// (others are skipped and counted in a note).
VerificationReport verify_classifier_equivalence(const EnumerationTask& task, Theorem theorem,
                                                 ContainmentMode mode = ContainmentMode::kInduced,
                                                 int jobs = 1);

/// Claim-3 configurations on C5 plus the Claim-4 theta values.
VerificationReport scan_claim3_shapes();

/// Every Claim-3 configuration graph (deduplicated, canonical form).
struct ShapeConfiguration {
  std::string label;
  Graph graph;
  int required_negative = 4;
};
std::vector<ShapeConfiguration> claim3_configurations();

/// Connected F with n(F) >= 3 whose proper connected induced subgraphs all
/// have n <= 2, one per isomorphism class, order <= max_order (<= 9).
std::vector<Graph> mine_minimal_obstructions(int max_order, int jobs = 1);

/// Exhaustive sweep over every proper connected induced subgraph.
bool is_minimal_obstruction(const Graph& f);

VerificationReport mine_report(int max_order, int jobs = 1);

/// Connected graphs of order 6 with characteristic polynomial x^6 - 9x^4.
std::vector<Graph> g0_candidates();

enum class ReportFormat { kText, kJson, kCsv };

/// Deterministic serialization. `include_timing` false pins wall_ms to 0.
std::string emit_report(const VerificationReport& r, ReportFormat format,
                        bool include_timing = true);

}  // namespace nig

#endif  // NIG_VERIFY_HPP
