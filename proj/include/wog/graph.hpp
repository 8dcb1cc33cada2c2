#ifndef WOG_GRAPH_HPP
#define WOG_GRAPH_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "wog/errors.hpp"
#include "wog/vertex_set.hpp"

namespace wog {

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on at most 64 labeled vertices.
class Graph {
 public:
  static constexpr std::size_t max_vertices = VertexSet::capacity;

  Graph() = default;

  explicit Graph(std::size_t n) {
    check_size(n);
    adjacency_.resize(n);
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back("v" + std::to_string(i));
  }

  explicit Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    check_size(labels_.size());
    adjacency_.resize(labels_.size());
  }

  std::size_t vertex_count() const { return labels_.size(); }
  VertexSet vertices() const { return VertexSet::prefix(vertex_count()); }

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_label(Vertex v, std::string label) { labels_.at(v) = std::move(label); }

  std::optional<Vertex> find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return static_cast<Vertex>(i);
    return std::nullopt;
  }

  /// Adding an edge that already exists is a no-op.
  void add_edge(Vertex u, Vertex v) {
    if (u >= vertex_count() || v >= vertex_count())
      throw ValidationError("edge-endpoint", "endpoint out of range");
    if (u == v) throw ValidationError("no-loops", "loop at " + label(u));
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
  }

  bool has_edge(Vertex u, Vertex v) const { return adjacency_.at(u).contains(v); }
  VertexSet neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (VertexSet n : adjacency_) twice += n.size();
    return twice / 2;
  }

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < vertex_count(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  /// Induced subgraph on `keep`, vertices renumbered in increasing order and
  /// labels carried over.
  Graph induced(VertexSet keep) const {
    std::vector<Vertex> old_ids = keep.to_vector();
    std::vector<std::string> labels;
    for (Vertex v : old_ids) labels.push_back(labels_.at(v));
    Graph h(std::move(labels));
    for (std::size_t i = 0; i < old_ids.size(); ++i)
      for (std::size_t j = i + 1; j < old_ids.size(); ++j)
        if (has_edge(old_ids[i], old_ids[j]))
          h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return h;
  }

  bool operator==(const Graph& other) const {
    return labels_ == other.labels_ && adjacency_ == other.adjacency_;
  }

  bool same_structure(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  static void check_size(std::size_t n) {
    if (n > max_vertices) throw BoundExceeded("vertex count", max_vertices, n);
  }

  std::vector<std::string> labels_;
  std::vector<VertexSet> adjacency_;
};

struct EnumerationBounds {
  std::size_t subsets = 24;
  std::size_t decomposability = 16;
};

inline constexpr std::size_t infinite_girth = std::numeric_limits<std::size_t>::max();

/// Some shortest cycle, listed in cyclic order; nullopt for forests.
inline std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = infinite_girth;
  std::vector<Vertex> best_cycle;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), infinite_girth);
    dist[root] = 0;
    parent[root] = root;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      Vertex a = queue.front();
      queue.pop();
      if (2 * dist[a] + 1 >= best) break;
      for (Vertex b : g.neighbors(a)) {
        if (dist[b] == infinite_girth) {
          dist[b] = dist[a] + 1;
          parent[b] = a;
          queue.push(b);
        } else if (parent[a] != b && dist[a] + dist[b] + 1 < best) {
          // Minimal closed walks through the root are simple cycles.
          best = dist[a] + dist[b] + 1;
          std::vector<Vertex> left, right;
          for (Vertex w = a; w != root; w = parent[w]) left.push_back(w);
          for (Vertex w = b; w != root; w = parent[w]) right.push_back(w);
          best_cycle.assign({root});
          best_cycle.insert(best_cycle.end(), left.rbegin(), left.rend());
          best_cycle.insert(best_cycle.end(), right.begin(), right.end());
        }
      }
    }
  }
  if (best == infinite_girth) return std::nullopt;
  return best_cycle;
}

/// Length of a shortest cycle, or `infinite_girth`.
inline std::size_t girth(const Graph& g) {
  auto cycle = shortest_cycle(g);
  return cycle ? cycle->size() : infinite_girth;
}

inline bool is_independent(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

inline bool is_vertex_cover(const Graph& g, VertexSet c) {
  return is_independent(g, g.vertices() - c);
}

/// Calls `visit(S)` for every maximal independent set S of G[within] until it
/// returns false. Returns false iff stopped early.
template <class Visitor>
bool for_each_maximal_independent_set(const Graph& g, VertexSet within, Visitor&& visit) {
  // Bron-Kerbosch with pivoting on the complement of G[within].
  auto compatible = [&](Vertex v) { return within - g.neighbors(v) - VertexSet::singleton(v); };
  std::function<bool(VertexSet, VertexSet, VertexSet)> extend = [&](VertexSet chosen,
                                                                    VertexSet candidates,
                                                                    VertexSet excluded) {
    if (candidates.empty()) return excluded.empty() ? static_cast<bool>(visit(chosen)) : true;
    Vertex pivot = (candidates | excluded).front();
    std::size_t best = 0;
    for (Vertex u : candidates | excluded) {
      std::size_t k = (candidates & compatible(u)).size();
      if (k >= best) {
        best = k;
        pivot = u;
      }
    }
    for (Vertex v : candidates - compatible(pivot)) {
      if (!extend(chosen.with(v), candidates & compatible(v), excluded & compatible(v)))
        return false;
      candidates.erase(v);
      excluded.insert(v);
    }
    return true;
  };
  return extend(VertexSet{}, within, VertexSet{});
}

inline void check_subset_bound(std::size_t n, const EnumerationBounds& bounds) {
  if (n > bounds.subsets) throw BoundExceeded("subset enumeration", bounds.subsets, n);
}

/// All maximal independent sets of G[within], sorted by bit pattern.
inline std::vector<VertexSet> maximal_independent_sets(const Graph& g, VertexSet within,
                                                       const EnumerationBounds& bounds = {}) {
  check_subset_bound(within.size(), bounds);
  std::vector<VertexSet> out;
  for_each_maximal_independent_set(g, within, [&](VertexSet s) {
    out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<VertexSet> maximal_independent_sets(const Graph& g,
                                                       const EnumerationBounds& bounds = {}) {
  return maximal_independent_sets(g, g.vertices(), bounds);
}

inline std::size_t independence_number(const Graph& g, const EnumerationBounds& bounds = {}) {
  std::size_t best = 0;
  for (VertexSet s : maximal_independent_sets(g, bounds)) best = std::max(best, s.size());
  return best;
}

inline std::vector<VertexSet> minimal_vertex_covers(const Graph& g,
                                                    const EnumerationBounds& bounds = {}) {
  std::vector<VertexSet> out;
  for (VertexSet s : maximal_independent_sets(g, bounds)) out.push_back(g.vertices() - s);
  std::sort(out.begin(), out.end());
  return out;
}

/// Two maximal independent sets of different sizes, if any.
inline std::optional<std::pair<VertexSet, VertexSet>> well_covered_violation(
    const Graph& g, VertexSet within, const EnumerationBounds& bounds = {}) {
  check_subset_bound(within.size(), bounds);
  std::optional<VertexSet> first;
  std::optional<std::pair<VertexSet, VertexSet>> witness;
  for_each_maximal_independent_set(g, within, [&](VertexSet s) {
    if (!first) {
      first = s;
      return true;
    }
    if (s.size() != first->size()) {
      witness = std::minmax(*first, s, [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
      return false;
    }
    return true;
  });
  return witness;
}

inline std::optional<std::pair<VertexSet, VertexSet>> well_covered_violation(
    const Graph& g, const EnumerationBounds& bounds = {}) {
  return well_covered_violation(g, g.vertices(), bounds);
}

inline bool is_well_covered(const Graph& g, const EnumerationBounds& bounds = {}) {
  return !well_covered_violation(g, bounds).has_value();
}

/// v is shedding in G[within] iff every maximal independent set of
/// G[within] \ v meets N(v).
inline bool is_shedding_vertex(const Graph& g, VertexSet within, Vertex v) {
  const VertexSet nv = g.neighbors(v) & within;
  return for_each_maximal_independent_set(g, within.without(v),
                                          [&](VertexSet s) { return s.intersects(nv); });
}

inline bool is_shedding_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw PreconditionError("VertexRange", "no such vertex");
  return is_shedding_vertex(g, g.vertices(), v);
}

inline bool is_vertex_decomposable(const Graph& g, const EnumerationBounds& bounds = {}) {
  if (g.vertex_count() > bounds.decomposability)
    throw BoundExceeded("decomposability recursion", bounds.decomposability, g.vertex_count());
  std::unordered_map<std::uint64_t, bool> memo;
  std::function<bool(VertexSet)> decomposable = [&](VertexSet within) -> bool {
    bool edgeless = true;
    for (Vertex v : within)
      if (g.neighbors(v).intersects(within)) {
        edgeless = false;
        break;
      }
    if (edgeless) return true;
    if (auto it = memo.find(within.bits()); it != memo.end()) return it->second;
    bool result = false;
    for (Vertex v : within) {
      if (!g.neighbors(v).intersects(within)) continue;
      if (!is_shedding_vertex(g, within, v)) continue;
      if (decomposable(within.without(v)) &&
          decomposable(within - g.neighbors(v) - VertexSet::singleton(v))) {
        result = true;
        break;
      }
    }
    memo.emplace(within.bits(), result);
    return result;
  };
  return decomposable(g.vertices());
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::singleton(unseen.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

using FiveCycle = std::array<Vertex, 5>;

/// Induced 5-cycles, each starting at its smallest vertex with cycle[1] < cycle[4].
inline std::vector<FiveCycle> induced_five_cycles(const Graph& g) {
  std::vector<FiveCycle> out;
  const std::size_t n = g.vertex_count();
  for (Vertex s = 0; s < n; ++s) {
    const VertexSet later = g.vertices() - VertexSet::prefix(s + 1);
    for (Vertex a : g.neighbors(s) & later)
      for (Vertex b : g.neighbors(a) & later) {
        if (g.has_edge(s, b)) continue;
        for (Vertex c : g.neighbors(b) & later) {
          if (c == a || g.has_edge(s, c) || g.has_edge(a, c)) continue;
          for (Vertex d : g.neighbors(c) & g.neighbors(s) & later) {
            if (d <= a || d == b || g.has_edge(a, d) || g.has_edge(b, d)) continue;
            out.push_back({s, a, b, c, d});
          }
        }
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Induced 5-cycles with no two adjacent vertices of degree >= 3.
inline std::vector<FiveCycle> basic_five_cycles(const Graph& g) {
  std::vector<FiveCycle> out;
  for (const FiveCycle& c : induced_five_cycles(g)) {
    bool basic = true;
    for (std::size_t i = 0; i < 5 && basic; ++i)
      if (g.degree(c[i]) >= 3 && g.degree(c[(i + 1) % 5]) >= 3) basic = false;
    if (basic) out.push_back(c);
  }
  return out;
}

inline VertexSet to_set(const FiveCycle& c) {
  VertexSet s;
  for (Vertex v : c) s.insert(v);
  return s;
}

struct PCDecomposition {
  VertexSet pendant_vertices;
  VertexSet cycle_vertices;
  std::vector<Edge> pendant_matching;
  std::vector<FiveCycle> basic_cycles;
};

/// Why a graph is not in the class PC. `clause` is one of
/// "isolated-vertex", "pendant-matching", "overlapping-basic-cycles",
/// "partition-overlap", "uncovered-vertex".
struct NotInPC {
  std::string clause;
  VertexSet vertices;
};

using PCResult = std::variant<PCDecomposition, NotInPC>;

/// Decides membership in PC: V(G) splits into the vertices of pendant edges,
/// which those edges match perfectly, and the vertices of pairwise disjoint
/// basic 5-cycles. Isolated vertices are in neither part, so they fail the
/// partition unless `skip_isolated` drops them from it.
inline PCResult pc_decomposition(const Graph& g, bool skip_isolated = false) {
  VertexSet required = g.vertices();
  for (Vertex v : g.vertices())
    if (g.degree(v) == 0) {
      if (!skip_isolated) return NotInPC{"isolated-vertex", VertexSet::singleton(v)};
      required.erase(v);
    }

  PCDecomposition d;
  std::vector<std::size_t> pendant_incidence(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) != 1 && g.degree(e.v) != 1) continue;
    d.pendant_matching.push_back(e);
    d.pendant_vertices.insert(e.u);
    d.pendant_vertices.insert(e.v);
    ++pendant_incidence[e.u];
    ++pendant_incidence[e.v];
  }
  for (Vertex v : d.pendant_vertices)
    if (pendant_incidence[v] != 1) return NotInPC{"pendant-matching", VertexSet::singleton(v)};

  d.basic_cycles = basic_five_cycles(g);
  for (const FiveCycle& c : d.basic_cycles) {
    VertexSet cs = to_set(c);
    if (cs.intersects(d.cycle_vertices))
      return NotInPC{"overlapping-basic-cycles", cs & d.cycle_vertices};
    d.cycle_vertices |= cs;
  }
  if (d.pendant_vertices.intersects(d.cycle_vertices))
    return NotInPC{"partition-overlap", d.pendant_vertices & d.cycle_vertices};
  VertexSet uncovered = required - d.pendant_vertices - d.cycle_vertices;
  if (!uncovered.empty()) return NotInPC{"uncovered-vertex", uncovered};
  return d;
}

inline bool in_pc(const Graph& g) { return std::holds_alternative<PCDecomposition>(pc_decomposition(g)); }

}  // namespace wog

#endif  // WOG_GRAPH_HPP
