#ifndef WOG_ORIENTED_GRAPH_HPP
#define WOG_ORIENTED_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wog/errors.hpp"
#include "wog/graph.hpp"
#include "wog/monomial_ideal.hpp"
#include "wog/vertex_set.hpp"

namespace wog {

using Weight = std::uint64_t;

/// Directed edge (tail, head).
struct Arc {
  Vertex tail;
  Vertex head;
  auto operator<=>(const Arc&) const = default;
};

/// Weighted oriented graph: an underlying simple graph, an orientation of
/// every edge (both directions only between weight-1 vertices), and positive
/// vertex weights.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  explicit OrientedGraph(Graph underlying)
      : underlying_(std::move(underlying)),
        out_(underlying_.vertex_count()),
        in_(underlying_.vertex_count()),
        weights_(underlying_.vertex_count(), 1) {}

  const Graph& underlying() const { return underlying_; }
  std::size_t vertex_count() const { return underlying_.vertex_count(); }
  VertexSet vertices() const { return underlying_.vertices(); }
  const std::string& label(Vertex v) const { return underlying_.label(v); }

  Weight weight(Vertex v) const { return weights_.at(v); }
  const std::vector<Weight>& weights() const { return weights_; }

  void set_weight(Vertex v, Weight w) {
    if (w == 0) throw ValidationError("positive-weight", "weight of " + label(v) + " is 0");
    weights_.at(v) = w;
  }

  void add_arc(Vertex tail, Vertex head) {
    if (tail >= vertex_count() || head >= vertex_count() || !underlying_.has_edge(tail, head))
      throw ValidationError("arc-on-edge", "arc has no underlying edge");
    out_[tail].insert(head);
    in_[head].insert(tail);
  }

  void remove_arc(Vertex tail, Vertex head) {
    out_.at(tail).erase(head);
    in_.at(head).erase(tail);
  }

  bool has_arc(Vertex tail, Vertex head) const { return out_.at(tail).contains(head); }
  VertexSet out_neighbors(Vertex v) const { return out_.at(v); }
  VertexSet in_neighbors(Vertex v) const { return in_.at(v); }

  bool is_source(Vertex v) const { return in_.at(v).empty(); }
  bool is_sink(Vertex v) const { return out_.at(v).empty(); }

  /// Arcs sorted by (tail, head).
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (Vertex t = 0; t < vertex_count(); ++t)
      for (Vertex h : out_[t]) out.push_back({t, h});
    return out;
  }

  /// Throws ValidationError naming the first broken invariant.
  void validate() const {
    for (const Edge& e : underlying_.edges()) {
      bool forward = has_arc(e.u, e.v), backward = has_arc(e.v, e.u);
      if (!forward && !backward)
        throw ValidationError("edge-oriented", label(e.u) + "-" + label(e.v) + " has no orientation");
      if (forward && backward && (weight(e.u) != 1 || weight(e.v) != 1))
        throw ValidationError("bidirected-weight-one",
                              label(e.u) + "-" + label(e.v) + " is bidirected with a weight above 1");
    }
    for (Weight w : weights_)
      if (w == 0) throw ValidationError("positive-weight", "zero weight");
  }

  bool operator==(const OrientedGraph&) const = default;

 private:
  Graph underlying_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::vector<Weight> weights_;
};

/// Sources get weight 1, then every edge between two weight-1 vertices gets
/// both orientations. Leaves the edge ideal unchanged.
inline OrientedGraph normalize(const OrientedGraph& d) {
  OrientedGraph out = d;
  for (Vertex v : d.vertices())
    if (d.is_source(v)) out.set_weight(v, 1);
  for (const Edge& e : d.underlying().edges())
    if (out.weight(e.u) == 1 && out.weight(e.v) == 1) {
      out.add_arc(e.u, e.v);
      out.add_arc(e.v, e.u);
    }
  return out;
}

inline bool is_normalized(const OrientedGraph& d) { return normalize(d) == d; }

/// Generators x_i * x_j^w(x_j) over arcs (x_i, x_j); variables are vertex ids.
inline MonomialIdeal edge_ideal(const OrientedGraph& d) {
  std::vector<Monomial> gens;
  for (const Arc& a : d.arcs())
    gens.push_back(Monomial::variable(a.tail) * Monomial::variable(a.head, d.weight(a.head)));
  return MonomialIdeal(d.vertex_count(), std::move(gens));
}

/// Edge ideal of a simple graph (all weights 1).
inline MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (const Edge& e : g.edges())
    gens.push_back(Monomial::variable(e.u) * Monomial::variable(e.v));
  return MonomialIdeal(g.vertex_count(), std::move(gens));
}

/// m_D(uv): u*v^w(v) for the arc (u, v), v*u^w(u) for (v, u), and the
/// squarefree uv when both arcs are present.
inline Monomial edge_monomial(const OrientedGraph& d, Vertex u, Vertex v) {
  if (!d.underlying().has_edge(u, v))
    throw PreconditionError("NotAnEdge", d.label(u) + "-" + d.label(v));
  bool forward = d.has_arc(u, v), backward = d.has_arc(v, u);
  if (forward && backward) return Monomial::variable(u) * Monomial::variable(v);
  if (forward) return Monomial::variable(u) * Monomial::variable(v, d.weight(v));
  if (backward) return Monomial::variable(v) * Monomial::variable(u, d.weight(u));
  throw MissingOrientation(d.label(u) + "-" + d.label(v));
}

/// Oriented graph induced on `keep`; vertices renumbered in increasing order,
/// arcs and weights inherited.
inline OrientedGraph induced_subgraph(const OrientedGraph& d, VertexSet keep) {
  std::vector<Vertex> old_ids = keep.to_vector();
  std::vector<Vertex> new_id(d.vertex_count(), 0);
  for (std::size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<Vertex>(i);
  OrientedGraph out(d.underlying().induced(keep));
  for (std::size_t i = 0; i < old_ids.size(); ++i) {
    out.set_weight(static_cast<Vertex>(i), d.weight(old_ids[i]));
    for (Vertex h : d.out_neighbors(old_ids[i]) & keep)
      out.add_arc(static_cast<Vertex>(i), new_id[h]);
  }
  return out;
}

/// D minus a vertex set, as an induced subgraph.
inline OrientedGraph remove_vertices(const OrientedGraph& d, VertexSet drop) {
  return induced_subgraph(d, d.vertices() - drop);
}

struct CoverPartition {
  VertexSet cover;
  VertexSet l1;
  VertexSet l2;
  VertexSet l3;
};

/// L1: members with an arc out of the cover. L2: other members with an arc
/// into them from outside. L3: members whose whole neighborhood is covered.
inline CoverPartition cover_partition(const OrientedGraph& d, VertexSet cover) {
  const Graph& g = d.underlying();
  if (!cover.is_subset_of(g.vertices()) || !is_vertex_cover(g, cover))
    throw NotACover("vertex set does not cover every edge");
  const VertexSet outside = g.vertices() - cover;
  CoverPartition p{cover, {}, {}, {}};
  for (Vertex x : cover) {
    if (d.out_neighbors(x).intersects(outside))
      p.l1.insert(x);
    else if (d.in_neighbors(x).intersects(outside))
      p.l2.insert(x);
    else
      p.l3.insert(x);
  }
  return p;
}

inline bool is_minimal_vertex_cover(const Graph& g, VertexSet cover) {
  if (!is_vertex_cover(g, cover)) return false;
  for (Vertex v : cover)
    if (is_vertex_cover(g, cover.without(v))) return false;
  return true;
}

/// Strong vertex cover: minimal, or every L3 vertex has an in-neighbor of
/// weight >= 2 inside L2 u L3.
inline bool is_strong_cover(const OrientedGraph& d, VertexSet cover) {
  CoverPartition p = cover_partition(d, cover);
  if (is_minimal_vertex_cover(d.underlying(), cover)) return true;
  const VertexSet inner = p.l2 | p.l3;
  for (Vertex x : p.l3) {
    bool supported = false;
    for (Vertex y : d.in_neighbors(x) & inner)
      if (d.weight(y) >= 2) {
        supported = true;
        break;
      }
    if (!supported) return false;
  }
  return true;
}

/// Two maximal independent sets of the underlying graph with different sizes.
struct NotWellCoveredWitness {
  VertexSet smaller;
  VertexSet larger;
};

/// A strong vertex cover whose L3 part is nonempty.
struct StrongCoverWitness {
  VertexSet cover;
  VertexSet l3;
};

struct UnmixedResult {
  bool unmixed = true;
  std::variant<std::monostate, NotWellCoveredWitness, StrongCoverWitness> witness;
};

/// Unmixedness through strong vertex covers: the underlying graph must be
/// well-covered and no strong cover may have L3 nonempty. The input is
/// normalized first; a strong-cover witness is the one with the smallest bit
/// pattern.
inline UnmixedResult is_unmixed(const OrientedGraph& raw, const EnumerationBounds& bounds = {}) {
  const OrientedGraph d = normalize(raw);
  const Graph& g = d.underlying();
  check_subset_bound(g.vertex_count(), bounds);
  if (auto v = well_covered_violation(g, bounds))
    return {false, NotWellCoveredWitness{v->first, v->second}};

  const std::uint64_t limit = g.vertex_count() == 64 ? 0 : (std::uint64_t{1} << g.vertex_count());
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const VertexSet cover(bits);
    const VertexSet outside = g.vertices() - cover;
    bool covers = true;
    bool has_l3 = false;
    for (Vertex x : outside)
      if (!g.neighbors(x).is_subset_of(cover)) {
        covers = false;
        break;
      }
    if (!covers) continue;
    for (Vertex x : cover)
      if (g.neighbors(x).is_subset_of(cover)) {
        has_l3 = true;
        break;
      }
    // Minimal covers never have L3 vertices.
    if (!has_l3) continue;
    if (is_strong_cover(d, cover)) return {false, StrongCoverWitness{cover, cover_partition(d, cover).l3}};
  }
  return {true, {}};
}

}  // namespace wog

#endif  // WOG_ORIENTED_GRAPH_HPP
