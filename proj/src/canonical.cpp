#include "nig/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "nig/graph_io.hpp"

namespace nig {

namespace {

// Iterated degree refinement. Colours are ranks of sorted signatures, so the
// ordered partition depends only on the isomorphism class.
std::vector<int> refined_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = 0;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> counts(n + 1, 0);
      for (VertexMask nb = g.neighbors(v); nb; nb &= nb - 1) ++counts[colour[std::countr_zero(nb)]];
      sig[v].reserve(n + 2);
      sig[v].push_back(colour[v]);
      sig[v].insert(sig[v].end(), counts.begin(), counts.end());
    }
    std::map<std::vector<int>, int> rank;
    for (auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [key, value] : rank) value = r++;
    for (int v = 0; v < n; ++v) colour[v] = rank[sig[v]];
    if (r == classes) break;
    classes = r;
  }
  return colour;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {
    colour_ = refined_colours(g);
    cell_of_position_.resize(n_);
    std::vector<int> sorted = colour_;
    std::sort(sorted.begin(), sorted.end());
    cell_of_position_ = sorted;
    placed_.assign(n_, -1);
    best_.assign(n_, 0);
  }

  std::vector<Vertex> run() {
    search(0, 0);
    return best_perm_;
  }

 private:
  bool twins(Vertex u, Vertex v) const {
    return (g_.neighbors(u) & ~bit(v)) == (g_.neighbors(v) & ~bit(u));
  }

  void search(int pos, VertexMask used) {
    if (pos == n_) {
      best_perm_ = placed_;
      return;
    }
    VertexMask tried = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if ((used >> v) & 1U || colour_[v] != cell_of_position_[pos]) continue;
      bool redundant = false;
      for (VertexMask t = tried; t; t &= t - 1) {
        if (twins(std::countr_zero(t), v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried |= bit(v);

      std::uint64_t column = 0;
      for (int q = 0; q < pos; ++q) column = (column << 1) | (g_.adjacent(placed_[q], v) ? 1U : 0U);
      if (pos < valid_) {
        if (column > best_[pos]) continue;
        if (column < best_[pos]) {
          best_[pos] = column;
          valid_ = pos + 1;
        }
      } else {
        best_[pos] = column;
        valid_ = pos + 1;
      }
      placed_[pos] = v;
      search(pos + 1, used | bit(v));
      // A deeper improvement may have lowered best_[pos]; re-check siblings
      // against the updated prefix on the next iteration.
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> cell_of_position_;
  std::vector<Vertex> placed_;
  std::vector<std::uint64_t> best_;
  int valid_ = 0;
  std::vector<Vertex> best_perm_;
};

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.order() > kCanonicalBudget) {
    throw std::invalid_argument("canonical_form supports order <= " +
                                std::to_string(kCanonicalBudget) + ", got " +
                                std::to_string(g.order()));
  }
  if (g.order() == 0) return g;
  auto placed = Canonicalizer(g).run();
  std::vector<Vertex> perm(g.order());
  for (int pos = 0; pos < g.order(); ++pos) perm[placed[pos]] = pos;
  return g.permuted(perm);
}

std::string canonical_key(const Graph& g) { return emit_graph6(canonical_form(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.order() <= kCanonicalBudget) return canonical_form(a) == canonical_form(b);
  return find_embedding(a, b, ContainmentMode::kInduced).has_value();
}

const char* to_string(ContainmentMode mode) {
  return mode == ContainmentMode::kInduced ? "induced" : "subgraph";
}

namespace {

class Embedder {
 public:
  Embedder(const Graph& pattern, const Graph& host, ContainmentMode mode)
      : p_(pattern), h_(host), induced_(mode == ContainmentMode::kInduced) {
    // Place high-degree pattern vertices first, each next vertex preferring
    // one adjacent to what is already placed.
    const int n = p_.order();
    VertexMask placed = 0;
    while (static_cast<int>(order_.size()) < n) {
      Vertex best = -1;
      int best_links = -1;
      for (Vertex v = 0; v < n; ++v) {
        if ((placed >> v) & 1U) continue;
        int links = std::popcount(p_.neighbors(v) & placed);
        if (links > best_links || (links == best_links && p_.degree(v) > p_.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      order_.push_back(best);
      placed |= bit(best);
    }
    map_.assign(n, -1);
  }

  bool run() { return p_.order() == 0 || step(0, 0); }
  std::vector<Vertex> mapping() const { return map_; }

 private:
  bool step(std::size_t idx, VertexMask used) {
    if (idx == order_.size()) return true;
    const Vertex v = order_[idx];
    VertexMask cand = h_.all_vertices() & ~used;
    for (std::size_t j = 0; j < idx; ++j) {
      const Vertex u = order_[j];
      const VertexMask hn = h_.neighbors(map_[u]);
      if (p_.adjacent(u, v)) {
        cand &= hn;
      } else if (induced_) {
        cand &= ~hn;
      }
    }
    const int need = p_.degree(v);
    for (; cand; cand &= cand - 1) {
      const Vertex w = std::countr_zero(cand);
      if (h_.degree(w) < need) continue;
      map_[v] = w;
      if (step(idx + 1, used | bit(w))) return true;
    }
    map_[v] = -1;
    return false;
  }

  const Graph& p_;
  const Graph& h_;
  bool induced_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_embedding(const Graph& pattern, const Graph& host,
                                                  ContainmentMode mode) {
  if (pattern.order() > host.order()) return std::nullopt;
  Embedder e(pattern, host, mode);
  if (!e.run()) return std::nullopt;
  return e.mapping();
}

bool contains_induced(const Graph& h, const Graph& g) {
  return find_embedding(h, g, ContainmentMode::kInduced).has_value();
}

bool contains_spanning_subgraph_between(const Graph& low, const Graph& g, const Graph& high,
                                        ContainmentMode mode) {
  return find_embedding(low, g, mode).has_value() && find_embedding(g, high, mode).has_value();
}

}  // namespace nig
