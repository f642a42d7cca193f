#include "nig/families.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "nig/canonical.hpp"
#include "nig/reductions.hpp"
#include "nig/spectra.hpp"

namespace nig {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kPath: return "path";
    case FamilyKind::kCycle: return "cycle";
    case FamilyKind::kCompleteBipartite: return "complete-bipartite";
    case FamilyKind::kStar: return "star";
    case FamilyKind::kTheta: return "theta";
    case FamilyKind::kCycleStar: return "cycle-star";
    case FamilyKind::kCanonicalUnicyclic: return "canonical-unicyclic";
    case FamilyKind::kG1: return "G1";
    case FamilyKind::kNamedH: return "named-H";
    case FamilyKind::kNegativeInertiaTwo: return "n2-class";
  }
  return "unknown";
}

std::optional<FamilyKind> family_kind_from_string(const std::string& name) {
  for (auto kind : {FamilyKind::kPath, FamilyKind::kCycle, FamilyKind::kCompleteBipartite,
                    FamilyKind::kStar, FamilyKind::kTheta, FamilyKind::kCycleStar,
                    FamilyKind::kCanonicalUnicyclic, FamilyKind::kG1, FamilyKind::kNamedH,
                    FamilyKind::kNegativeInertiaTwo}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

std::string FamilySpec::to_string() const {
  std::ostringstream os;
  os << nig::to_string(kind) << '(';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) os << (kind == FamilyKind::kCanonicalUnicyclic && i == 1 ? ";" : ",");
    os << params[i];
  }
  os << ')';
  return os.str();
}

Graph gen_path(int n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph gen_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g = gen_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph gen_complete_bipartite(int s, int t) {
  require(s >= 1 && t >= 1, "complete bipartite needs s, t >= 1");
  Graph g(s + t);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) g.add_edge(i, s + j);
  }
  return g;
}

Graph gen_star(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  return gen_complete_bipartite(1, leaves);
}

Graph gen_complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph gen_elementary(FamilyKind kind, const std::vector<int>& params) {
  auto need = [&](std::size_t count) {
    require(params.size() == count, std::string(to_string(kind)) + " takes " +
                                         std::to_string(count) + " parameter(s)");
  };
  switch (kind) {
    case FamilyKind::kPath: need(1); return gen_path(params[0]);
    case FamilyKind::kCycle: need(1); return gen_cycle(params[0]);
    case FamilyKind::kCompleteBipartite: need(2); return gen_complete_bipartite(params[0], params[1]);
    case FamilyKind::kStar: need(1); return gen_star(params[0]);
    default: throw std::invalid_argument("not an elementary family");
  }
}

Graph gen_theta(int r, int s, int t) {
  require(r >= 2 && s >= 2 && t >= 2, "theta paths need at least 2 vertices each");
  require((r == 2) + (s == 2) + (t == 2) <= 1, "theta with two direct hub edges is not simple");
  Graph g(r + s + t - 4);
  Vertex next = 2;
  for (int len : {r, s, t}) {
    Vertex prev = 0;
    for (int i = 0; i < len - 2; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

Graph gen_cycle_star(int g, int k) {
  require(g >= 3 && k >= 1, "cycle-star needs g >= 3 and k >= 1");
  Graph out(g + k + 1);
  for (int i = 0; i < g; ++i) out.add_edge(i, (i + 1) % g);
  out.add_edge(0, g);
  for (int i = 1; i <= k; ++i) out.add_edge(g, g + i);
  return out;
}

Graph gen_canonical_unicyclic(int g, const std::vector<int>& leaves) {
  require(g >= 3, "canonical unicyclic needs g >= 3");
  require(static_cast<int>(leaves.size()) == g, "need one leaf count per cycle vertex");
  int total = g;
  for (int t : leaves) {
    require(t >= 0, "leaf counts must be nonnegative");
    total += t;
  }
  Graph out(total);
  for (int i = 0; i < g; ++i) out.add_edge(i, (i + 1) % g);
  Vertex next = g;
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < leaves[i]; ++j) out.add_edge(i, next++);
  }
  return out;
}

std::optional<NamedGraph> named_graph_from_string(const std::string& name) {
  if (name == "H1" || name == "1") return NamedGraph::kH1;
  if (name == "H2" || name == "2") return NamedGraph::kH2;
  if (name == "H3" || name == "3") return NamedGraph::kH3;
  if (name == "G8" || name == "8") return NamedGraph::kG8;
  return std::nullopt;
}

Graph gen_named_H(NamedGraph which) {
  switch (which) {
    case NamedGraph::kH1: return gen_complete(4);
    case NamedGraph::kH2: return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    case NamedGraph::kH3: return gen_path(6);
    case NamedGraph::kG8: {
      // cycle 0..4; x1=5, x2=6 on cycle vertex 0; x1'=7 ~ x1, x2'=8 ~ x2; x1' ~ x2'
      Graph g = gen_cycle(5);
      Graph out(9);
      for (auto [u, v] : g.edges()) out.add_edge(u, v);
      out.add_edge(0, 5);
      out.add_edge(0, 6);
      out.add_edge(5, 7);
      out.add_edge(6, 8);
      out.add_edge(7, 8);
      return out;
    }
  }
  throw std::invalid_argument("unknown named graph");
}

// ---------------------------------------------------------------------------
// G1 extension search

namespace {

class G1Search {
 public:
  explicit G1Search(int k) : k_(k), len_(2 * k + 2) {
    for (int i = 0; i < len_; ++i) types_.push_back(bit(i));
    for (int i = 0; i + 1 < len_; ++i) types_.push_back(bit(i) | bit(i + 1));
    for (int i = 0; i + 2 < len_; ++i) types_.push_back(bit(i) | bit(i + 2));
    for (int i = 0; i + 2 < len_; ++i) types_.push_back(bit(i) | bit(i + 1) | bit(i + 2));
  }

  void run() {
    Graph p = gen_path(len_);
    extend(p, 0);
  }

  std::vector<Graph> found;
  long nodes = 0;

 private:
  // Bit-parallel BFS from vertex 0: the far end must first appear at layer len-1.
  bool endpoints_far(const Graph& g) const {
    VertexMask seen = bit(0);
    VertexMask frontier = seen;
    const VertexMask target = bit(len_ - 1);
    for (int layer = 1; layer < len_ - 1; ++layer) {
      VertexMask next = 0;
      for (VertexMask m = frontier; m; m &= m - 1) next |= g.neighbors(std::countr_zero(m));
      frontier = next & ~seen;
      if (frontier & target) return false;
      seen |= frontier;
    }
    return true;
  }

  void extend(const Graph& g, std::size_t first_type) {
    ++nodes;
    auto inv = connectivity_diameter_girth(g);
    if (inv.diameter == len_ - 1 && is_reduced(g)) found.push_back(g);

    const int extras = g.order() - len_;
    const Vertex x = g.order();
    std::optional<VertexExtensionOracle> oracle;  // built on first use
    Graph h(g.order() + 1);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (std::size_t ti = first_type; ti < types_.size(); ++ti) {
      for (VertexMask links = 0; links < (VertexMask{1} << extras); ++links) {
        const VertexMask nb = types_[ti] | (links << len_);
        for (VertexMask d = nb ^ h.neighbors(x); d; d &= d - 1) {
          const Vertex v = std::countr_zero(d);
          if ((nb >> v) & 1U) {
            h.add_edge(x, v);
          } else {
            h.remove_edge(x, v);
          }
        }
        if (!endpoints_far(h)) continue;
        if (!oracle) oracle.emplace(g);
        if (oracle->extended(nb).negative > k_ + 1) continue;
        extend(h, ti + 1);
      }
    }
  }

  int k_;
  int len_;
  std::vector<VertexMask> types_;
};

G1Construction build_G1(int k) {
  require(k >= 1, "G1 needs k >= 1");
  G1Search search(k);
  search.run();

  G1Construction c;
  c.k = k;
  c.path = gen_path(2 * k + 2);
  c.search_nodes = search.nodes;
  c.extremal_graphs = static_cast<int>(search.found.size());

  int max_order = 0;
  for (const auto& g : search.found) max_order = std::max(max_order, g.order());
  std::vector<Graph> top;
  for (const auto& g : search.found) {
    if (g.order() != max_order) continue;
    bool seen = std::any_of(top.begin(), top.end(), [&](const Graph& t) { return is_isomorphic(t, g); });
    if (!seen) top.push_back(g);
  }
  // Among maximum-order classes prefer the one with the most edges.
  c.graph = *std::max_element(top.begin(), top.end(),
                              [](const Graph& a, const Graph& b) { return a.size() < b.size(); });
  c.maximal_classes = static_cast<int>(top.size());
  c.universal = std::all_of(search.found.begin(), search.found.end(),
                            [&](const Graph& g) { return contains_induced(g, c.graph); });

  const auto inv = connectivity_diameter_girth(c.graph);
  c.post.order = c.graph.order() == 2 * k + 6;
  c.post.diameter = inv.diameter == 2 * k + 1;
  c.post.negative = negative_inertia(c.graph) == k + 1;
  c.post.reduced = is_reduced(c.graph);
  const auto trace = trim_to_core(c.graph);
  c.post.trims = trace.trims == k;
  CharPolynomial target;
  target.coefficients = {0, 0, 0, 0, -9, 0, 1};
  c.post.residual = char_poly(trace.residual) == target;
  return c;
}

}  // namespace

std::string G1Construction::describe() const {
  std::ostringstream os;
  os << "G1(" << k << "): order=" << graph.order() << " size=" << graph.size()
     << " extremal_extensions=" << extremal_graphs << " maximal_classes=" << maximal_classes
     << " universal=" << (universal ? "yes" : "no") << " search_nodes=" << search_nodes
     << "\n  postconditions:"
     << " order(2k+6)=" << (post.order ? "ok" : "FAIL")
     << " diameter(2k+1)=" << (post.diameter ? "ok" : "FAIL")
     << " negative(k+1)=" << (post.negative ? "ok" : "FAIL")
     << " reduced=" << (post.reduced ? "ok" : "FAIL")
     << " trims(k)=" << (post.trims ? "ok" : "FAIL")
     << " residual(x^6-9x^4)=" << (post.residual ? "ok" : "FAIL");
  return os.str();
}

const G1Construction& construct_G1(int k) {
  static std::mutex mu;
  static std::map<int, G1Construction> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, build_G1(k)).first;
  return it->second;
}

Graph gen_G1(int k) {
  const auto& c = construct_G1(k);
  if (!c.post.all()) throw std::runtime_error("G1 postcondition failure: " + c.describe());
  return c.graph;
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::kPath:
    case FamilyKind::kCycle:
    case FamilyKind::kCompleteBipartite:
    case FamilyKind::kStar:
      return gen_elementary(spec.kind, p);
    case FamilyKind::kTheta:
      require(p.size() == 3, "theta takes r,s,t");
      return gen_theta(p[0], p[1], p[2]);
    case FamilyKind::kCycleStar:
      require(p.size() == 2, "cycle-star takes g,k");
      return gen_cycle_star(p[0], p[1]);
    case FamilyKind::kCanonicalUnicyclic:
      require(!p.empty(), "canonical-unicyclic takes g,t1..tg");
      return gen_canonical_unicyclic(p[0], std::vector<int>(p.begin() + 1, p.end()));
    case FamilyKind::kG1:
      require(p.size() == 1, "G1 takes k");
      return construct_G1(p[0]).graph;
    case FamilyKind::kNamedH: {
      require(p.size() == 1, "named-H takes one of 1,2,3,8");
      auto which = named_graph_from_string(std::to_string(p[0]));
      require(which.has_value(), "named-H takes one of 1,2,3,8");
      return gen_named_H(*which);
    }
    case FamilyKind::kNegativeInertiaTwo:
      break;
  }
  throw std::invalid_argument(std::string("cannot generate family ") + to_string(spec.kind));
}

}  // namespace nig
