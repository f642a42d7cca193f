#ifndef NIG_ENUMERATE_HPP
#define NIG_ENUMERATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "nig/graph.hpp"

namespace nig {

/// Largest order the built-in generator handles.
inline constexpr int kEnumerationBudget = 9;

/// One representative per isomorphism class of connected graphs on n vertices,
/// each in canonical form, sorted by graph6 key. Results are cached.
const std::vector<Graph>& enumerate_connected(int n);

/// A slice of the graph universe handed to the verifier.
struct EnumerationTask {
  int min_order = 1;
  int max_order = 1;
  bool connected_only = true;
  bool reduced_only = false;
  int shard_index = 0;
  int shard_count = 1;
  // Replaces the built-in generator (e.g. a graph6 stream on stdin).
  std::optional<std::vector<Graph>> external;

  std::string describe() const;
};

/// Graphs of the task in deterministic order. Shards take every
/// shard_count-th graph of the filtered sequence starting at shard_index.
std::vector<Graph> materialize(const EnumerationTask& task);

}  // namespace nig

#endif  // NIG_ENUMERATE_HPP
