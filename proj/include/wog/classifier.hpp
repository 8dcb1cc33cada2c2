#ifndef WOG_CLASSIFIER_HPP
#define WOG_CLASSIFIER_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wog/errors.hpp"
#include "wog/graph.hpp"
#include "wog/oriented_graph.hpp"

namespace wog {

// ---------------------------------------------------------------------------
// Paths of length three.

using Path4 = std::array<Vertex, 4>;

/// Unmixedness of the oriented path p[0]-p[1]-p[2]-p[3] sitting inside `d`
/// (normalized): deg_y m(yz) <= deg_y m(xy) and deg_z m(yz) <= deg_z m(vz).
inline bool path3_unmixed_along(const OrientedGraph& d, const Path4& p) {
  const auto [x, y, z, v] = p;
  const Monomial xy = edge_monomial(d, x, y);
  const Monomial yz = edge_monomial(d, y, z);
  const Monomial zv = edge_monomial(d, z, v);
  return yz.degree(y) <= xy.degree(y) && yz.degree(z) <= zv.degree(z);
}

/// The path order of an underlying path on four vertices, starting at its
/// smaller end.
inline Path4 path3_order(const Graph& g) {
  if (g.vertex_count() != 4 || g.edge_count() != 3 || !is_connected(g))
    throw NotAPath3("underlying graph is not a path on four vertices");
  std::vector<Vertex> ends;
  for (Vertex w : g.vertices()) {
    if (g.degree(w) > 2) throw NotAPath3("vertex of degree three");
    if (g.degree(w) == 1) ends.push_back(w);
  }
  Path4 p{};
  p[0] = ends.front();
  p[1] = g.neighbors(p[0]).front();
  p[2] = (g.neighbors(p[1]) - VertexSet{p[0]}).front();
  p[3] = (g.neighbors(p[2]) - VertexSet{p[1]}).front();
  return p;
}

inline bool path3_is_unmixed(const OrientedGraph& d) {
  const Path4 p = path3_order(d.underlying());
  return path3_unmixed_along(normalize(d), p);
}

// ---------------------------------------------------------------------------
// Oriented 5-cycles and reducible vertices.

/// Cyclic order of an underlying 5-cycle, starting at vertex 0 and continuing
/// to its smaller neighbor.
inline FiveCycle five_cycle_order(const Graph& g) {
  if (g.vertex_count() != 5 || g.edge_count() != 5 || !is_connected(g))
    throw NotA5Cycle("underlying graph is not a 5-cycle");
  for (Vertex w : g.vertices())
    if (g.degree(w) != 2) throw NotA5Cycle("vertex of degree other than two");
  FiveCycle c{};
  c[0] = 0;
  c[1] = g.neighbors(0).front();
  for (std::size_t i = 2; i < 5; ++i) c[i] = (g.neighbors(c[i - 1]) - VertexSet{c[i - 2]}).front();
  return c;
}

/// Names around a cycle vertex x: the cycle is x-y-z-u-v-x.
struct CycleView {
  Vertex x, y, z, u, v;

  static CycleView at(const FiveCycle& c, std::size_t i) {
    return {c[i], c[(i + 1) % 5], c[(i + 2) % 5], c[(i + 3) % 5], c[(i + 4) % 5]};
  }
  Path4 path_without_x() const { return {y, z, u, v}; }
};

struct ReducibleFinding {
  enum class Kind { first_kind_sink, first_kind_weight1, second_kind };
  Vertex vertex;
  Kind kind;
  std::vector<Arc> evidence;
};

inline const char* to_string(ReducibleFinding::Kind k) {
  switch (k) {
    case ReducibleFinding::Kind::first_kind_sink: return "first-kind-sink";
    case ReducibleFinding::Kind::first_kind_weight1: return "first-kind-weight1";
    case ReducibleFinding::Kind::second_kind: return "second-kind";
  }
  return "?";
}

/// Is c[i] reducible on the oriented cycle `c` inside normalized `d`?
/// Requires C \ x unmixed and either both cycle arcs into x, or w(x) = 1 with
/// (y,x),(x,v),(u,v) or (v,x),(x,y),(z,y).
inline std::optional<ReducibleFinding> reducible_at(const OrientedGraph& d, const FiveCycle& c,
                                                    std::size_t i) {
  const CycleView n = CycleView::at(c, i);
  if (!path3_unmixed_along(d, n.path_without_x())) return std::nullopt;
  using Kind = ReducibleFinding::Kind;
  if (d.has_arc(n.y, n.x) && d.has_arc(n.v, n.x))
    return ReducibleFinding{n.x, Kind::first_kind_sink, {{n.y, n.x}, {n.v, n.x}}};
  if (d.weight(n.x) != 1) return std::nullopt;
  if (d.has_arc(n.y, n.x) && d.has_arc(n.x, n.v) && d.has_arc(n.u, n.v))
    return ReducibleFinding{n.x, Kind::first_kind_weight1, {{n.y, n.x}, {n.x, n.v}, {n.u, n.v}}};
  if (d.has_arc(n.v, n.x) && d.has_arc(n.x, n.y) && d.has_arc(n.z, n.y))
    return ReducibleFinding{n.x, Kind::first_kind_weight1, {{n.v, n.x}, {n.x, n.y}, {n.z, n.y}}};
  return std::nullopt;
}

/// Second kind: (x,v), (u,v), (x,y), (z,y) are all arcs.
inline std::optional<ReducibleFinding> second_kind_at(const OrientedGraph& d, const FiveCycle& c,
                                                      std::size_t i) {
  const CycleView n = CycleView::at(c, i);
  if (d.has_arc(n.x, n.v) && d.has_arc(n.u, n.v) && d.has_arc(n.x, n.y) && d.has_arc(n.z, n.y))
    return ReducibleFinding{n.x, ReducibleFinding::Kind::second_kind,
                            {{n.x, n.v}, {n.u, n.v}, {n.x, n.y}, {n.z, n.y}}};
  return std::nullopt;
}

inline std::optional<std::size_t> position_in(const FiveCycle& c, Vertex x) {
  for (std::size_t i = 0; i < 5; ++i)
    if (c[i] == x) return i;
  return std::nullopt;
}

/// First reducible vertex (by vertex id) of an oriented graph whose
/// underlying graph is a 5-cycle.
inline std::optional<ReducibleFinding> find_reducible_vertex(const OrientedGraph& raw) {
  const FiveCycle c = five_cycle_order(raw.underlying());
  const OrientedGraph d = normalize(raw);
  for (Vertex x = 0; x < 5; ++x)
    if (auto f = reducible_at(d, c, *position_in(c, x))) return f;
  return std::nullopt;
}

inline std::optional<ReducibleFinding> reducible_vertex_at(const OrientedGraph& raw, Vertex x) {
  const FiveCycle c = five_cycle_order(raw.underlying());
  return reducible_at(normalize(raw), c, *position_in(c, x));
}

inline std::optional<ReducibleFinding> second_kind_vertex_at(const OrientedGraph& raw, Vertex x) {
  const FiveCycle c = five_cycle_order(raw.underlying());
  return second_kind_at(normalize(raw), c, *position_in(c, x));
}

inline bool cycle5_is_cm(const OrientedGraph& d) { return find_reducible_vertex(d).has_value(); }

// ---------------------------------------------------------------------------
// Whiskered graphs: pendant edges forming a perfect matching.

/// Pendant edges as (stem, leaf) pairs, if they perfectly match the graph.
inline std::optional<std::vector<std::pair<Vertex, Vertex>>> pendant_perfect_matching(const Graph& g) {
  auto pc = pc_decomposition(g);
  const auto* d = std::get_if<PCDecomposition>(&pc);
  if (!d || !d->basic_cycles.empty()) return std::nullopt;
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : d->pendant_matching)
    out.push_back(g.degree(e.v) == 1 ? std::make_pair(e.u, e.v) : std::make_pair(e.v, e.u));
  return out;
}

/// For every stem x with w(x) != 1 that receives an arc from a vertex other
/// than its leaf y, the arc (y, x) must be present.
inline bool pendant_matching_is_cm(const OrientedGraph& raw) {
  auto matching = pendant_perfect_matching(raw.underlying());
  if (!matching) throw NoPendantPerfectMatching("pendant edges do not perfectly match the graph");
  const OrientedGraph d = normalize(raw);
  for (const auto& [x, y] : *matching) {
    if (d.weight(x) == 1) continue;
    if (!(d.in_neighbors(x) - VertexSet{y}).empty() && !d.has_arc(y, x)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// The girth >= 5 classification with certificates.

enum class Verdict { cm, not_cm, out_of_scope };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::cm: return "CM";
    case Verdict::not_cm: return "NotCM";
    case Verdict::out_of_scope: return "OutOfScope";
  }
  return "?";
}

/// Clause ids: "pc", "a", "b.i", "b.ii", "b.iii". Vertex conventions:
///   pc     the offending vertices reported by the PC test, `detail` its clause
///   a      {x, y, z}: leaf y on stem x, arc (z, x), arc (y, x) missing
///   b.i    the basic cycle in cyclic order
///   b.ii   {x, y, z, u, v}: cycle from x; the path y-z-u-v is mixed
///   b.iii  {x, w, y, v}: arc (w, x) from outside, y and v the cycle neighbors
struct FailedClause {
  std::string clause;
  std::vector<Vertex> vertices;
  std::string detail;
};

struct ClauseRecord {
  std::string clause;
  std::size_t checks = 0;
};

struct Condition2Route {
  bool underlying_cm = false;  // well-covered and vertex decomposable
  UnmixedResult unmixed;
  bool cm() const { return underlying_cm && unmixed.unmixed; }
};

struct Certificate {
  Verdict verdict = Verdict::cm;
  std::optional<PCDecomposition> decomposition;
  std::vector<ClauseRecord> passed;
  std::optional<FailedClause> failure;
  std::optional<std::vector<Vertex>> short_cycle;
  std::optional<Condition2Route> condition2;

  bool condition2_agrees() const {
    return !condition2 || verdict == Verdict::out_of_scope || (verdict == Verdict::cm) == condition2->cm();
  }
};

namespace detail {

inline std::optional<FailedClause> check_clause_a(const OrientedGraph& d, const PCDecomposition& pc,
                                                  std::size_t& checks) {
  const Graph& g = d.underlying();
  for (const Edge& e : pc.pendant_matching) {
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (g.degree(y) != 1) continue;
      ++checks;
      if (d.weight(x) == 1 || d.has_arc(y, x)) continue;
      VertexSet others = d.in_neighbors(x) - VertexSet{y};
      if (!others.empty()) return FailedClause{"a", {x, y, others.front()}, ""};
    }
  }
  return std::nullopt;
}

inline FiveCycle rotate_to(const FiveCycle& c, std::size_t i) {
  CycleView n = CycleView::at(c, i);
  return {n.x, n.y, n.z, n.u, n.v};
}

inline bool cycle_is_unmixed_in(const OrientedGraph& d, const FiveCycle& c) {
  for (std::size_t i = 0; i < 5; ++i)
    if (reducible_at(d, c, i)) return true;
  return false;
}

inline std::optional<FailedClause> check_clause_b_iii(const OrientedGraph& d, const FiveCycle& c,
                                                      std::size_t i) {
  const CycleView n = CycleView::at(c, i);
  if (d.weight(n.x) == 1) return std::nullopt;
  VertexSet outside = d.in_neighbors(n.x) - to_set(c);
  if (outside.empty()) return std::nullopt;
  if (d.has_arc(n.y, n.x) && d.has_arc(n.v, n.x)) return std::nullopt;
  return FailedClause{"b.iii", {n.x, outside.front(), n.y, n.v}, ""};
}

}  // namespace detail

/// Evaluates, on the normalized graph and in this order with the first
/// failure reported: membership in PC (isolated vertices ignored), clause (a)
/// on pendant edges, then over all basic 5-cycles (b.i) cycle unmixed,
/// (b.ii) C \ x unmixed at vertices of degree > 2, (b.iii) in-arcs from
/// outside a weighted x force both cycle arcs into x.
inline Certificate check_condition_3(const OrientedGraph& raw) {
  const OrientedGraph d = normalize(raw);
  const Graph& g = d.underlying();
  Certificate cert;
  if (auto cycle = shortest_cycle(g); cycle && cycle->size() < 5) {
    cert.verdict = Verdict::out_of_scope;
    cert.short_cycle = *cycle;
    return cert;
  }
  auto fail = [&](FailedClause f) {
    cert.verdict = Verdict::not_cm;
    cert.failure = std::move(f);
    return cert;
  };

  PCResult pc = pc_decomposition(g, /*skip_isolated=*/true);
  if (const auto* bad = std::get_if<NotInPC>(&pc)) return fail({"pc", bad->vertices.to_vector(), bad->clause});
  const PCDecomposition& dec = std::get<PCDecomposition>(pc);
  cert.passed.push_back({"pc", 1});

  std::size_t checks = 0;
  if (auto f = detail::check_clause_a(d, dec, checks)) return fail(*f);
  cert.passed.push_back({"a", checks});

  checks = 0;
  for (const FiveCycle& c : dec.basic_cycles) {
    ++checks;
    if (!detail::cycle_is_unmixed_in(d, c)) return fail({"b.i", {c.begin(), c.end()}, ""});
  }
  cert.passed.push_back({"b.i", checks});

  checks = 0;
  for (const FiveCycle& c : dec.basic_cycles)
    for (std::size_t i = 0; i < 5; ++i) {
      if (g.degree(c[i]) <= 2) continue;
      ++checks;
      if (!path3_unmixed_along(d, CycleView::at(c, i).path_without_x())) {
        FiveCycle r = detail::rotate_to(c, i);
        return fail({"b.ii", {r.begin(), r.end()}, ""});
      }
    }
  cert.passed.push_back({"b.ii", checks});

  checks = 0;
  for (const FiveCycle& c : dec.basic_cycles)
    for (std::size_t i = 0; i < 5; ++i) {
      ++checks;
      if (auto f = detail::check_clause_b_iii(d, c, i)) return fail(*f);
    }
  cert.passed.push_back({"b.iii", checks});

  cert.decomposition = dec;
  return cert;
}

/// The "underlying graph Cohen-Macaulay and D unmixed" route, with the
/// underlying graph tested as well-covered and vertex decomposable.
inline Condition2Route condition2_route(const OrientedGraph& d, const EnumerationBounds& bounds = {}) {
  Condition2Route r;
  r.unmixed = is_unmixed(d, bounds);
  r.underlying_cm = r.unmixed.unmixed ? is_vertex_decomposable(d.underlying(), bounds)
                                      : is_well_covered(d.underlying(), bounds) &&
                                            is_vertex_decomposable(d.underlying(), bounds);
  return r;
}

struct ClassifyOptions {
  enum class Route2 { skip, when_within_bounds, required };
  Route2 route2 = Route2::when_within_bounds;
  EnumerationBounds bounds{};
};

/// Classification for underlying girth >= 5; also runs the condition-(2)
/// route when asked so callers can compare the two.
inline Certificate is_cm_girth5(const OrientedGraph& d, const ClassifyOptions& options = {}) {
  d.validate();
  Certificate cert = check_condition_3(d);
  if (cert.verdict == Verdict::out_of_scope || options.route2 == ClassifyOptions::Route2::skip) return cert;
  const std::size_t n = d.vertex_count();
  const bool within = n <= options.bounds.subsets && n <= options.bounds.decomposability;
  if (within || options.route2 == ClassifyOptions::Route2::required)
    cert.condition2 = condition2_route(d, options.bounds);
  return cert;
}

/// Re-evaluates the clause a certificate names on the vertices it names.
/// Returns true when the certificate's claim is reproduced.
inline bool verify_certificate(const OrientedGraph& raw, const Certificate& cert) {
  const OrientedGraph d = normalize(raw);
  const Graph& g = d.underlying();
  if (cert.verdict == Verdict::out_of_scope) {
    if (!cert.short_cycle) return false;
    const auto& c = *cert.short_cycle;
    if (c.size() < 3 || c.size() >= 5) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] >= g.vertex_count() || !g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
    return true;
  }
  if (cert.verdict == Verdict::cm) return check_condition_3(d).verdict == Verdict::cm;
  if (!cert.failure) return false;
  const FailedClause& f = *cert.failure;
  const auto& vs = f.vertices;
  for (Vertex v : vs)
    if (v >= g.vertex_count()) return false;
  auto is_cycle = [&](const FiveCycle& c) {
    for (std::size_t i = 0; i < 5; ++i)
      if (!g.has_edge(c[i], c[(i + 1) % 5])) return false;
    return true;
  };
  if (f.clause == "pc") {
    PCResult pc = pc_decomposition(g, true);
    const auto* bad = std::get_if<NotInPC>(&pc);
    return bad && bad->clause == f.detail;
  }
  if (f.clause == "a") {
    if (vs.size() != 3) return false;
    const Vertex x = vs[0], y = vs[1], z = vs[2];
    return g.has_edge(x, y) && g.degree(y) == 1 && d.weight(x) != 1 && z != y && d.has_arc(z, x) &&
           !d.has_arc(y, x);
  }
  if (f.clause == "b.i" || f.clause == "b.ii" || f.clause == "b.iii") {
    if (f.clause == "b.iii") {
      if (vs.size() != 4) return false;
      const Vertex x = vs[0], w = vs[1], y = vs[2], v = vs[3];
      return g.has_edge(x, y) && g.has_edge(x, v) && y != v && w != y && w != v && d.weight(x) != 1 &&
             d.has_arc(w, x) && !(d.has_arc(y, x) && d.has_arc(v, x));
    }
    if (vs.size() != 5) return false;
    FiveCycle c{vs[0], vs[1], vs[2], vs[3], vs[4]};
    if (!is_cycle(c)) return false;
    if (f.clause == "b.i") return !cycle5_is_cm(induced_subgraph(d, to_set(c)));
    return g.degree(c[0]) > 2 && !path3_unmixed_along(d, CycleView::at(c, 0).path_without_x());
  }
  return false;
}

}  // namespace wog

#endif  // WOG_CLASSIFIER_HPP
