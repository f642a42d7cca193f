#include "nig/enumerate.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nig/canonical.hpp"
#include "nig/graph_io.hpp"
#include "nig/reductions.hpp"

namespace nig {

namespace {

// Every connected graph keeps a non-cut vertex whose removal leaves a
// connected graph, so extending each order n-1 class by one vertex with a
// nonempty neighbourhood reaches every class at order n.
std::vector<Graph> extend_all(const std::vector<Graph>& smaller, int n) {
  std::set<std::string> seen;
  std::map<std::string, Graph> by_key;
  for (const Graph& base : smaller) {
    for (VertexMask nb = 1; nb < (VertexMask{1} << (n - 1)); ++nb) {
      Graph g(n);
      for (auto [u, v] : base.edges()) g.add_edge(u, v);
      for (VertexMask m = nb; m; m &= m - 1) g.add_edge(n - 1, std::countr_zero(m));
      Graph c = canonical_form(g);
      std::string key = emit_graph6(c);
      if (seen.insert(key).second) by_key.emplace(std::move(key), std::move(c));
    }
  }
  std::vector<Graph> out;
  out.reserve(by_key.size());
  for (auto& [key, g] : by_key) out.push_back(std::move(g));
  return out;
}

}  // namespace

const std::vector<Graph>& enumerate_connected(int n) {
  if (n < 1 || n > kEnumerationBudget) {
    throw std::invalid_argument("built-in enumeration supports 1 <= n <= " +
                                std::to_string(kEnumerationBudget));
  }
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard lock(mu);
  if (cache.empty()) cache.emplace(1, std::vector<Graph>{Graph(1)});
  for (int m = 2; m <= n; ++m) {
    if (!cache.contains(m)) cache.emplace(m, extend_all(cache.at(m - 1), m));
  }
  return cache.at(n);
}

std::string EnumerationTask::describe() const {
  std::ostringstream os;
  if (external) {
    os << "external(" << external->size() << ")";
  } else {
    os << "order " << min_order << ".." << max_order;
  }
  if (connected_only) os << " connected";
  if (reduced_only) os << " reduced";
  if (shard_count > 1) os << " shard " << shard_index << "/" << shard_count;
  return os.str();
}

std::vector<Graph> materialize(const EnumerationTask& task) {
  if (task.shard_count < 1 || task.shard_index < 0 || task.shard_index >= task.shard_count) {
    throw std::invalid_argument("shard index must lie in [0, shard count)");
  }
  std::vector<Graph> pool;
  if (task.external) {
    pool = *task.external;
  } else {
    if (!task.connected_only) {
      throw std::invalid_argument("built-in enumeration only produces connected graphs");
    }
    for (int n = task.min_order; n <= task.max_order; ++n) {
      const auto& graphs = enumerate_connected(n);
      pool.insert(pool.end(), graphs.begin(), graphs.end());
    }
  }
  std::vector<Graph> out;
  long index = 0;
  for (auto& g : pool) {
    if (task.connected_only && !is_connected(g)) continue;
    if (task.reduced_only && !is_reduced(g)) continue;
    if (index++ % task.shard_count == task.shard_index) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace nig
