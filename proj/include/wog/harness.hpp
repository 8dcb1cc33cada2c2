#ifndef WOG_HARNESS_HPP
#define WOG_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "wog/classifier.hpp"
#include "wog/cm_oracle.hpp"
#include "wog/errors.hpp"
#include "wog/graph.hpp"
#include "wog/monomial_ideal.hpp"
#include "wog/oriented_graph.hpp"

namespace wog {

// ---------------------------------------------------------------------------
// Canonical forms of small graphs.

inline constexpr std::size_t canonical_vertex_limit = 11;

/// Upper-triangle adjacency bits read row by row, most significant first.
using CanonicalCode = std::uint64_t;

struct CanonicalForm {
  CanonicalCode code = 0;
  std::vector<Vertex> order;  // order[i] is the vertex placed at position i
};

namespace detail {

/// Equitable refinement: splits color classes by the number of neighbors in
/// each class until stable. Colors become 0 .. k-1 in signature order.
inline std::size_t refine(const Graph& g, std::vector<std::uint32_t>& color) {
  const std::size_t n = g.vertex_count();
  const std::set<std::uint32_t> used(color.begin(), color.end());
  const std::vector<std::uint32_t> ranks(used.begin(), used.end());
  for (auto& c : color) c = static_cast<std::uint32_t>(std::lower_bound(ranks.begin(), ranks.end(), c) - ranks.begin());
  std::size_t classes = ranks.size();
  while (true) {
    std::vector<std::vector<std::uint32_t>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].assign(n + 1, 0);
      sig[v][0] = color[v];
      for (Vertex u : g.neighbors(v)) ++sig[v][1 + color[u]];
    }
    std::vector<std::vector<std::uint32_t>> distinct(sig);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v)
      color[v] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    if (distinct.size() == classes) return classes;
    classes = distinct.size();
  }
}

inline CanonicalCode code_of(const Graph& g, const std::vector<Vertex>& order) {
  CanonicalCode code = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) code = (code << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0);
  return code;
}

inline void canonical_search(const Graph& g, std::vector<std::uint32_t> color, CanonicalForm& best, bool& found) {
  const std::size_t n = g.vertex_count();
  if (refine(g, color) == n) {
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[color[v]] = v;
    CanonicalCode code = code_of(g, order);
    if (!found || code < best.code) best = {code, std::move(order)};
    found = true;
    return;
  }
  std::vector<std::size_t> size(n, 0);
  for (auto c : color) ++size[c];
  std::uint32_t target = 0;
  while (size[target] < 2) ++target;
  for (Vertex v = 0; v < n; ++v) {
    if (color[v] != target) continue;
    std::vector<std::uint32_t> next(n);
    for (Vertex u = 0; u < n; ++u) next[u] = 2 * color[u] + ((color[u] == target && u != v) ? 1 : 0);
    canonical_search(g, std::move(next), best, found);
  }
}

}  // namespace detail

/// Canonical labeling by refinement and individualization; isomorphic
/// graphs get equal codes.
inline CanonicalForm canonical_form(const Graph& g) {
  if (g.vertex_count() > canonical_vertex_limit)
    throw BoundExceeded("canonical form vertex count", canonical_vertex_limit, g.vertex_count());
  CanonicalForm best;
  bool found = false;
  if (g.vertex_count() == 0) return best;
  detail::canonical_search(g, std::vector<std::uint32_t>(g.vertex_count(), 0), best, found);
  return best;
}

/// The canonical representative, with default labels v0, v1, ...
inline Graph canonical_graph(const Graph& g) {
  CanonicalForm f = canonical_form(g);
  Graph out(g.vertex_count());
  for (std::size_t i = 0; i < f.order.size(); ++i)
    for (std::size_t j = i + 1; j < f.order.size(); ++j)
      if (g.has_edge(f.order[i], f.order[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return out;
}

// ---------------------------------------------------------------------------
// Graph families.

using GraphFilter = std::function<bool(const Graph&)>;

/// Adds a vertex adjacent to `neighbors`.
inline Graph extend(const Graph& g, VertexSet neighbors) {
  Graph out(g.vertex_count() + 1);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  const Vertex fresh = static_cast<Vertex>(g.vertex_count());
  for (Vertex u : neighbors) out.add_edge(u, fresh);
  return out;
}

/// Isomorphism classes of graphs on 1 .. max_n vertices, by number of
/// vertices (index 0 is empty). `keep` must be hereditary: inherited by
/// induced subgraphs (connected ones, when `connected` is set).
inline std::vector<std::vector<Graph>> enumerate_graphs(std::size_t max_n, bool connected,
                                                        const GraphFilter& keep = {}) {
  if (max_n > canonical_vertex_limit) throw BoundExceeded("enumerated vertex count", canonical_vertex_limit, max_n);
  std::vector<std::vector<Graph>> levels(max_n + 1);
  if (max_n == 0) return levels;
  if (!keep || keep(Graph(1))) levels[1].push_back(Graph(1));
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::map<CanonicalCode, Graph> seen;
    for (const Graph& g : levels[n - 1]) {
      const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
      for (std::uint64_t bits = connected ? 1 : 0; bits < subsets; ++bits) {
        Graph h = extend(g, VertexSet(bits));
        if (keep && !keep(h)) continue;
        CanonicalCode code = canonical_form(h).code;
        if (!seen.count(code)) seen.emplace(code, canonical_graph(h));
      }
    }
    for (auto& [code, g] : seen) levels[n].push_back(std::move(g));
  }
  return levels;
}

inline bool has_girth_at_least(const Graph& g, std::size_t k) { return girth(g) >= k; }

/// Every vertex of `h` receives a new leaf. Leaves are labeled y<i> after
/// the stems x<i>.
inline Graph whiskered(const Graph& h) {
  const std::size_t n = h.vertex_count();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) labels.push_back("y" + std::to_string(i));
  Graph g(labels);
  for (const Edge& e : h.edges()) g.add_edge(e.u, e.v);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, static_cast<Vertex>(i + n));
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, static_cast<Vertex>((i + 1) % n));
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// Uniform draw from [0, bound) with an explicit reduction, so streams
/// replay identically on every standard library.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return bound <= 1 ? 0 : rng() % bound; }

/// Random connected PC graph of girth >= 5 on at most `max_n` (>= 2)
/// vertices: disjoint basic 5-cycles and whiskers joined by random edges
/// between non-leaf vertices, rejected until the result qualifies.
inline Graph random_pc_graph(std::mt19937_64& rng, std::size_t max_n) {
  if (max_n < 2) throw ValidationError("pc-size", "a PC graph needs at least two vertices");
  if (max_n > VertexSet::capacity) throw BoundExceeded("PC graph vertex count", VertexSet::capacity, max_n);
  while (true) {
    const std::size_t cycles = draw(rng, max_n / 5 + 1);
    const std::size_t room = max_n - 5 * cycles;
    const std::size_t whiskers = draw(rng, room / 2 + 1);
    const std::size_t n = 5 * cycles + 2 * whiskers;
    if (cycles + whiskers == 0) continue;
    Graph g(n);
    std::vector<Vertex> core;
    for (std::size_t c = 0; c < cycles; ++c) {
      for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(static_cast<Vertex>(5 * c + i), static_cast<Vertex>(5 * c + (i + 1) % 5));
        core.push_back(static_cast<Vertex>(5 * c + i));
      }
    }
    for (std::size_t w = 0; w < whiskers; ++w) {
      const Vertex stem = static_cast<Vertex>(5 * cycles + 2 * w);
      g.add_edge(stem, stem + 1);
      core.push_back(stem);
    }
    const std::size_t pieces = cycles + whiskers;
    const std::size_t extra = pieces - 1 + draw(rng, 3);
    for (std::size_t attempt = 0, added = 0; attempt < 40 && added < extra; ++attempt) {
      Vertex a = core[draw(rng, core.size())], b = core[draw(rng, core.size())];
      if (a == b || g.has_edge(a, b)) continue;
      Graph trial = g;
      trial.add_edge(a, b);
      if (girth(trial) < 5) continue;
      g = std::move(trial);
      ++added;
    }
    if (is_connected(g) && in_pc(g)) return g;
  }
}

// ---------------------------------------------------------------------------
// Instances.

/// Replayable text form "n|w0,w1,...|t>h,t>h,...".
inline std::string encode(const OrientedGraph& d) {
  std::string out = std::to_string(d.vertex_count()) + "|";
  for (Vertex v = 0; v < d.vertex_count(); ++v) out += (v ? "," : "") + std::to_string(d.weight(v));
  out += "|";
  bool first = true;
  for (const Arc& a : d.arcs()) {
    out += (first ? "" : ",") + std::to_string(a.tail) + ">" + std::to_string(a.head);
    first = false;
  }
  return out;
}

inline OrientedGraph decode(const std::string& text) {
  auto fail = [&](const std::string& why) -> OrientedGraph { throw ParseError(1, "instance '" + text + "': " + why); };
  auto bar1 = text.find('|');
  auto bar2 = bar1 == std::string::npos ? bar1 : text.find('|', bar1 + 1);
  if (bar2 == std::string::npos) return fail("expected two '|' separators");
  auto number = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError(1, "instance '" + text + "': bad number '" + s + "'");
    return std::stoull(s);
  };
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    if (s.empty()) return parts;
    std::istringstream in(s);
    for (std::string p; std::getline(in, p, sep);) parts.push_back(p);
    return parts;
  };
  const std::size_t n = number(text.substr(0, bar1));
  if (n > VertexSet::capacity) throw BoundExceeded("instance vertex count", VertexSet::capacity, n);
  auto weights = split(text.substr(bar1 + 1, bar2 - bar1 - 1), ',');
  if (weights.size() != n) return fail("expected " + std::to_string(n) + " weights");
  std::vector<std::pair<Vertex, Vertex>> arcs;
  Graph g(n);
  for (const auto& a : split(text.substr(bar2 + 1), ',')) {
    auto gt = a.find('>');
    if (gt == std::string::npos) return fail("bad arc '" + a + "'");
    auto t = number(a.substr(0, gt)), h = number(a.substr(gt + 1));
    if (t >= n || h >= n || t == h) return fail("bad arc '" + a + "'");
    g.add_edge(static_cast<Vertex>(t), static_cast<Vertex>(h));
    arcs.push_back({static_cast<Vertex>(t), static_cast<Vertex>(h)});
  }
  OrientedGraph d(std::move(g));
  for (Vertex v = 0; v < n; ++v) d.set_weight(v, number(weights[v]));
  for (auto [t, h] : arcs) d.add_arc(t, h);
  d.validate();
  return d;
}

/// Orientation from bits (bit i set: edge i of edges() points from its
/// smaller to its larger endpoint) and weights.
inline OrientedGraph orient(const Graph& g, std::uint64_t orientation, const std::vector<Weight>& weights) {
  OrientedGraph d(g);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if ((orientation >> i) & 1U) d.add_arc(edges[i].u, edges[i].v);
    else d.add_arc(edges[i].v, edges[i].u);
  }
  for (Vertex v = 0; v < weights.size(); ++v) d.set_weight(v, weights[v]);
  return d;
}

struct InstanceSpec {
  std::vector<Graph> graphs;
  std::optional<std::size_t> sample;  // total draws; every combination when empty
  std::vector<Weight> weights{1, 2};
  std::uint64_t seed = 0;
  bool merge_normalized = false;      // emit each normalized instance once per graph
  std::size_t instance_bound = 50'000'000;
};

inline std::uint64_t exhaustive_count(const InstanceSpec& spec) {
  std::uint64_t total = 0;
  for (const Graph& g : spec.graphs) {
    if (g.edge_count() >= 63) return UINT64_MAX;
    std::uint64_t count = std::uint64_t{1} << g.edge_count();
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      if (count > UINT64_MAX / std::max<std::uint64_t>(spec.weights.size(), 1)) return UINT64_MAX;
      count *= spec.weights.size();
    }
    if (total > UINT64_MAX - count) return UINT64_MAX;
    total += count;
  }
  return total;
}

/// Streams the instances of `spec` in a fixed order: graphs in order, then
/// orientations, then weight vectors (last vertex fastest). Sampling draws
/// graph, orientation, and weights from a seeded generator.
inline void enumerate_oriented(const InstanceSpec& spec, const std::function<void(const OrientedGraph&)>& visit) {
  if (spec.weights.empty()) throw ValidationError("positive-weight", "empty weight alphabet");
  for (Weight w : spec.weights)
    if (w == 0) throw ValidationError("positive-weight", "weight alphabet contains 0");
  std::set<std::pair<std::size_t, std::string>> emitted;
  auto emit = [&](std::size_t graph, const OrientedGraph& d) {
    if (!spec.merge_normalized) return visit(d);
    OrientedGraph nd = normalize(d);
    if (emitted.insert({graph, encode(nd)}).second) visit(nd);
  };
  if (spec.sample) {
    if (spec.graphs.empty()) return;
    std::mt19937_64 rng(spec.seed);
    for (std::size_t k = 0; k < *spec.sample; ++k) {
      const std::size_t gi = draw(rng, spec.graphs.size());
      const Graph& g = spec.graphs[gi];
      const std::uint64_t orientation = g.edge_count() == 0 ? 0 : rng() & ((g.edge_count() >= 64) ? ~0ULL : ((1ULL << g.edge_count()) - 1));
      std::vector<Weight> weights(g.vertex_count());
      for (auto& w : weights) w = spec.weights[draw(rng, spec.weights.size())];
      emit(gi, orient(g, orientation, weights));
    }
    return;
  }
  const std::uint64_t total = exhaustive_count(spec);
  if (total > spec.instance_bound) throw BoundExceeded("instance count", spec.instance_bound, total);
  for (std::size_t gi = 0; gi < spec.graphs.size(); ++gi) {
    const Graph& g = spec.graphs[gi];
    const std::size_t n = g.vertex_count();
    for (std::uint64_t orientation = 0; orientation < (std::uint64_t{1} << g.edge_count()); ++orientation) {
      std::vector<std::size_t> digits(n, 0);
      while (true) {
        std::vector<Weight> weights(n);
        for (std::size_t i = 0; i < n; ++i) weights[i] = spec.weights[digits[i]];
        emit(gi, orient(g, orientation, weights));
        std::size_t i = n;
        while (i > 0 && ++digits[i - 1] == spec.weights.size()) digits[--i] = 0;
        if (i == 0) break;
      }
    }
  }
}

inline std::vector<OrientedGraph> expand(const InstanceSpec& spec) {
  std::vector<OrientedGraph> out;
  enumerate_oriented(spec, [&](const OrientedGraph& d) { out.push_back(d); });
  return out;
}

// ---------------------------------------------------------------------------
// Cross-validation of the three routes.

struct ValidationOptions {
  FieldChoice field = FieldChoice::rationals();
  std::size_t oracle_ambient = 20;  // largest polarized ring the oracle is run on
  EnumerationBounds bounds{};
  unsigned jobs = 1;
};

/// Verdict strings: "CM", "NotCM", "OutOfScope", "skipped", or "error: ...".
struct InstanceRecord {
  std::string encoding;
  std::string condition3;
  std::string condition2;
  std::string oracle;
  bool agree = true;
  std::string first_difference;  // "condition3/oracle" and so on; empty when agreeing
};

struct Discrepancy {
  std::string encoding;
  std::string condition3, condition2, oracle;
  std::string first_difference;
};

struct ValidationReport {
  std::size_t instances = 0, in_scope = 0, out_of_scope = 0, cm = 0, not_cm = 0;
  std::size_t condition2_checked = 0, oracle_checked = 0, oracle_skipped = 0, errors = 0;
  std::vector<InstanceRecord> records;
  std::vector<Discrepancy> discrepancies;
};

inline std::string verdict_word(bool cm) { return cm ? "CM" : "NotCM"; }

/// Oracle verdict on I(d), or nullopt when the polarized ring is too large.
inline std::optional<bool> oracle_verdict(const MonomialIdeal& ideal, const ValidationOptions& options) {
  if (oracle_ambient(ideal) > options.oracle_ambient) return std::nullopt;
  OracleOptions oo;
  oo.ambient_bound = options.oracle_ambient;
  return is_cohen_macaulay(ideal, options.field, oo).cohen_macaulay;
}

inline InstanceRecord evaluate_instance(const OrientedGraph& raw, const ValidationOptions& options = {}) {
  const OrientedGraph d = normalize(raw);
  InstanceRecord r;
  r.encoding = encode(d);
  Certificate cert = check_condition_3(d);
  r.condition3 = to_string(cert.verdict);
  if (cert.verdict == Verdict::out_of_scope) {
    r.condition2 = r.oracle = "skipped";
    return r;
  }
  try {
    r.condition2 = verdict_word(condition2_route(d, options.bounds).cm());
  } catch (const BoundExceeded&) {
    r.condition2 = "skipped";
  } catch (const std::exception& e) {
    r.condition2 = std::string("error: ") + e.what();
  }
  try {
    auto v = oracle_verdict(edge_ideal(d), options);
    r.oracle = v ? verdict_word(*v) : "skipped";
  } catch (const BoundExceeded&) {
    r.oracle = "skipped";
  } catch (const std::exception& e) {
    r.oracle = std::string("error: ") + e.what();
  }
  const std::pair<const char*, const std::string*> routes[] = {
      {"condition3", &r.condition3}, {"condition2", &r.condition2}, {"oracle", &r.oracle}};
  for (std::size_t i = 0; i < 3 && r.agree; ++i)
    for (std::size_t j = i + 1; j < 3 && r.agree; ++j) {
      const std::string &a = *routes[i].second, &b = *routes[j].second;
      if (a == "skipped" || b == "skipped") continue;
      if (a != b) {
        r.agree = false;
        r.first_difference = std::string(routes[i].first) + "/" + routes[j].first;
      }
    }
  return r;
}

/// Runs `work(i)` for i in [0, count) on `jobs` threads.
inline void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& work) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) work(i);
    });
  for (auto& th : pool) th.join();
}

inline ValidationReport cross_validate(const InstanceSpec& spec, const ValidationOptions& options = {}) {
  const std::vector<OrientedGraph> instances = expand(spec);
  ValidationReport report;
  report.records.resize(instances.size());
  parallel_for(instances.size(), options.jobs,
               [&](std::size_t i) { report.records[i] = evaluate_instance(instances[i], options); });
  for (const InstanceRecord& r : report.records) {
    ++report.instances;
    if (r.condition3 == "OutOfScope") {
      ++report.out_of_scope;
      continue;
    }
    ++report.in_scope;
    (r.condition3 == "CM" ? report.cm : report.not_cm) += 1;
    if (r.condition2 == "CM" || r.condition2 == "NotCM") ++report.condition2_checked;
    if (r.oracle == "CM" || r.oracle == "NotCM") ++report.oracle_checked;
    else if (r.oracle == "skipped") ++report.oracle_skipped;
    if (r.condition2.rfind("error", 0) == 0 || r.oracle.rfind("error", 0) == 0) ++report.errors;
    if (!r.agree) report.discrepancies.push_back({r.encoding, r.condition3, r.condition2, r.oracle, r.first_difference});
  }
  return report;
}

inline InstanceRecord replay(const std::string& encoding, const ValidationOptions& options = {}) {
  return evaluate_instance(decode(encoding), options);
}

inline void write_report(std::ostream& out, const ValidationReport& report) {
  for (const InstanceRecord& r : report.records)
    out << r.encoding << "\tcondition3=" << r.condition3 << "\tcondition2=" << r.condition2 << "\toracle=" << r.oracle
        << "\t" << (r.agree ? "agree" : "DISAGREE:" + r.first_difference) << "\n";
  out << "# summary\n"
      << "# instances: " << report.instances << "\n"
      << "# in_scope: " << report.in_scope << "\n"
      << "# out_of_scope: " << report.out_of_scope << "\n"
      << "# cm: " << report.cm << "\n"
      << "# not_cm: " << report.not_cm << "\n"
      << "# condition2_checked: " << report.condition2_checked << "\n"
      << "# oracle_checked: " << report.oracle_checked << "\n"
      << "# oracle_skipped: " << report.oracle_skipped << "\n"
      << "# errors: " << report.errors << "\n"
      << "# discrepancies: " << report.discrepancies.size() << "\n";
}

// ---------------------------------------------------------------------------
// Triangle-free search: does "I(G) CM and D unmixed" predict "I(D) CM"?

struct ConjectureRecord {
  std::string encoding;
  std::string family;  // "girth>=5" (control) or "girth-4"
  bool underlying_cm = false;
  bool unmixed = false;
  bool cm = false;
  std::string flag;  // empty, "predicted-not-cm", or "cm-not-predicted"
};

struct ConjectureReport {
  std::size_t instances = 0, triangle_skipped = 0, oracle_skipped = 0;
  std::size_t control = 0, control_discrepancies = 0;
  std::size_t girth4 = 0, girth4_predicted_not_cm = 0, girth4_cm_not_predicted = 0;
  std::vector<ConjectureRecord> records;
};

inline ConjectureReport conjecture_search(const InstanceSpec& spec, const ValidationOptions& options = {}) {
  const std::vector<OrientedGraph> instances = expand(spec);
  struct Slot {
    std::optional<ConjectureRecord> record;
    bool triangle = false, skipped = false, control_mismatch = false;
  };
  std::vector<Slot> slots(instances.size());
  parallel_for(instances.size(), options.jobs, [&](std::size_t i) {
    const OrientedGraph d = normalize(instances[i]);
    const Graph& g = d.underlying();
    const std::size_t gg = girth(g);
    if (gg == 3) {
      slots[i].triangle = true;
      return;
    }
    auto cm_g = oracle_verdict(edge_ideal(g), options);
    auto cm_d = oracle_verdict(edge_ideal(d), options);
    if (!cm_g || !cm_d) {
      slots[i].skipped = true;
      return;
    }
    ConjectureRecord r;
    r.encoding = encode(d);
    r.family = gg >= 5 ? "girth>=5" : "girth-4";
    r.underlying_cm = *cm_g;
    r.unmixed = is_unmixed(d, options.bounds).unmixed;
    r.cm = *cm_d;
    const bool predicted = r.underlying_cm && r.unmixed;
    if (predicted && !r.cm) r.flag = "predicted-not-cm";
    if (!predicted && r.cm) r.flag = "cm-not-predicted";
    if (gg >= 5) slots[i].control_mismatch = !r.flag.empty() || (check_condition_3(d).verdict == Verdict::cm) != r.cm;
    slots[i].record = std::move(r);
  });
  ConjectureReport report;
  for (Slot& s : slots) {
    ++report.instances;
    if (s.triangle) {
      ++report.triangle_skipped;
      continue;
    }
    if (s.skipped) {
      ++report.oracle_skipped;
      continue;
    }
    ConjectureRecord& r = *s.record;
    if (r.family == "girth>=5") {
      ++report.control;
      report.control_discrepancies += s.control_mismatch;
    } else {
      ++report.girth4;
      report.girth4_predicted_not_cm += r.flag == "predicted-not-cm";
      report.girth4_cm_not_predicted += r.flag == "cm-not-predicted";
    }
    report.records.push_back(std::move(r));
  }
  return report;
}

inline void write_report(std::ostream& out, const ConjectureReport& report) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  for (const ConjectureRecord& r : report.records)
    out << r.encoding << "\t" << r.family << "\tG_cm=" << yn(r.underlying_cm) << "\tunmixed=" << yn(r.unmixed)
        << "\tD_cm=" << yn(r.cm) << "\t" << (r.flag.empty() ? "consistent" : r.flag) << "\n";
  out << "# summary\n"
      << "# instances: " << report.instances << "\n"
      << "# triangle_skipped: " << report.triangle_skipped << "\n"
      << "# oracle_skipped: " << report.oracle_skipped << "\n"
      << "# control: " << report.control << "\n"
      << "# control_discrepancies: " << report.control_discrepancies << "\n"
      << "# girth4: " << report.girth4 << "\n"
      << "# girth4_predicted_not_cm: " << report.girth4_predicted_not_cm << "\n"
      << "# girth4_cm_not_predicted: " << report.girth4_cm_not_predicted << "\n";
}

// ---------------------------------------------------------------------------
// Property checks on oriented 5-cycles and on monomial ideals.

struct PropertyViolation {
  std::string encoding;
  std::string detail;
};

/// If D and D \ x are unmixed, some vertex in {x} or not adjacent to x is
/// reducible. Unmixedness here is the strong-cover enumeration.
inline std::vector<PropertyViolation> check_reducible_not_adjacent(const OrientedGraph& raw) {
  const OrientedGraph d = normalize(raw);
  std::vector<PropertyViolation> out;
  if (!is_unmixed(d).unmixed) return out;
  const Graph& g = d.underlying();
  for (Vertex x : d.vertices()) {
    if (!is_unmixed(remove_vertices(d, VertexSet{x})).unmixed) continue;
    bool found = false;
    for (Vertex r : d.vertices() - g.neighbors(x))
      if (reducible_vertex_at(d, r)) found = true;
    if (!found) out.push_back({encode(d), "no reducible vertex among x=" + std::to_string(x) + " and its non-neighbors"});
  }
  return out;
}

/// If D, D \ x and D \ u are unmixed for non-adjacent x, u, then x or u is
/// reducible or reducible of the second kind.
inline std::vector<PropertyViolation> check_reducible_pair(const OrientedGraph& raw) {
  const OrientedGraph d = normalize(raw);
  std::vector<PropertyViolation> out;
  if (!is_unmixed(d).unmixed) return out;
  const Graph& g = d.underlying();
  std::vector<bool> minus_unmixed(5);
  for (Vertex x = 0; x < 5; ++x) minus_unmixed[x] = is_unmixed(remove_vertices(d, VertexSet{x})).unmixed;
  for (Vertex x = 0; x < 5; ++x)
    for (Vertex u = x + 1; u < 5; ++u) {
      if (g.has_edge(x, u) || !minus_unmixed[x] || !minus_unmixed[u]) continue;
      bool ok = false;
      for (Vertex w : {x, u})
        if (reducible_vertex_at(d, w) || second_kind_vertex_at(d, w)) ok = true;
      if (!ok)
        out.push_back({encode(d), "neither " + std::to_string(x) + " nor " + std::to_string(u) + " qualifies"});
    }
  return out;
}

/// For an unmixed ideal whose generators involve at most two variables and
/// f not in I: whenever x^m y^p and x^n z^q are minimal generators of I : f,
/// no power of x lies in I : f, and y occurs in no other minimal generator,
/// then m >= n. Returns the violating (m, n) descriptions.
inline std::vector<std::string> check_exponent_comparison(const MonomialIdeal& ideal, const Monomial& f) {
  std::vector<std::string> out;
  if (contains(ideal, f)) return out;
  const MonomialIdeal j = colon(ideal, f);
  const auto& gens = j.generators();
  std::set<Variable> pure;
  std::map<Variable, std::size_t> occurrences;
  for (const Monomial& g : gens) {
    if (g.is_pure_power()) pure.insert(g.terms().front().first);
    for (const auto& [x, e] : g.terms()) ++occurrences[x];
  }
  for (const Monomial& g1 : gens) {
    if (g1.support_size() != 2) continue;
    for (const Monomial& g2 : gens) {
      if (&g1 == &g2 || g2.support_size() != 2) continue;
      for (const auto& [x, m] : g1.terms()) {
        const Exponent n = g2.degree(x);
        if (n == 0 || pure.count(x)) continue;
        const Variable y = g1.terms()[0].first == x ? g1.terms()[1].first : g1.terms()[0].first;
        const Variable z = g2.terms()[0].first == x ? g2.terms()[1].first : g2.terms()[0].first;
        if (y == z || occurrences[y] != 1) continue;
        if (m < n)
          out.push_back("x" + std::to_string(x) + ": m=" + std::to_string(m) + " < n=" + std::to_string(n) +
                        " with f=" + to_string(f));
      }
    }
  }
  return out;
}

/// Candidate f's: 1, supports of generators, and products of two supports.
inline std::vector<Monomial> support_products(const MonomialIdeal& ideal) {
  std::set<Monomial> out{Monomial{}};
  const auto& gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out.insert(gens[i].radical());
    for (std::size_t k = i + 1; k < gens.size(); ++k) out.insert(gens[i].radical() * gens[k].radical());
  }
  return {out.begin(), out.end()};
}

/// dim R/I = max(dim R/(I : f), dim R/(I + f)) for f not in I, f != 1.
struct DimensionCheck {
  std::size_t whole, colon_side, sum_side;
  bool holds() const { return whole == std::max(colon_side, sum_side); }
};

inline DimensionCheck check_dimension_identity(const MonomialIdeal& ideal, const Monomial& f) {
  if (f.is_one() || contains(ideal, f)) throw ValidationError("f-not-in-ideal", "f must be a non-unit monomial outside I");
  return {dimension(ideal), dimension(colon(ideal, f)), dimension(sum(ideal, f))};
}

/// A random monomial outside `ideal` on 1..3 variables with exponents 1..3,
/// if one is found within a few draws.
inline std::optional<Monomial> random_monomial_outside(const MonomialIdeal& ideal, std::mt19937_64& rng) {
  if (ideal.ambient() == 0) return std::nullopt;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Monomial::Term> terms;
    const std::size_t k = 1 + draw(rng, 3);
    std::set<Variable> used;
    for (std::size_t i = 0; i < k; ++i) {
      Variable x = static_cast<Variable>(draw(rng, ideal.ambient()));
      Exponent e = 1 + draw(rng, 3);
      if (used.insert(x).second) terms.push_back({x, e});
    }
    std::sort(terms.begin(), terms.end());
    Monomial f(std::move(terms));
    if (!contains(ideal, f)) return f;
  }
  return std::nullopt;
}

}  // namespace wog

#endif  // WOG_HARNESS_HPP
