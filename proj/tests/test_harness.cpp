#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "support/oracles.hpp"
#include "wog/harness.hpp"

using namespace wog;

namespace {

/// Isomorphism classes by minimizing the adjacency code over all n! orders.
std::set<CanonicalCode> classes_by_permutation(std::size_t n, bool connected) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) slots.push_back({i, j});
  std::set<CanonicalCode> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    Graph g(n);
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((bits >> k) & 1U) g.add_edge(slots[k].first, slots[k].second);
    if (connected && !is_connected(g)) continue;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    CanonicalCode best = UINT64_MAX;
    do best = std::min(best, detail::code_of(g, order));
    while (std::next_permutation(order.begin(), order.end()));
    out.insert(best);
  }
  return out;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  Graph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

std::vector<std::size_t> sizes(const std::vector<std::vector<Graph>>& levels) {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n < levels.size(); ++n) out.push_back(levels[n].size());
  return out;
}

}  // namespace

TEST_CASE("enumeration matches permutation dedup", "[harness]") {
  for (bool connected : {false, true}) {
    auto levels = enumerate_graphs(5, connected);
    for (std::size_t n = 1; n <= 5; ++n) {
      std::set<CanonicalCode> mine;
      for (const Graph& g : levels[n]) mine.insert(canonical_form(g).code);
      CHECK(mine.size() == levels[n].size());
      CHECK(levels[n].size() == classes_by_permutation(n, connected).size());
    }
  }
}

TEST_CASE("enumeration counts", "[harness]") {
  CHECK(sizes(enumerate_graphs(7, false)) == std::vector<std::size_t>{1, 2, 4, 11, 34, 156, 1044});
  CHECK(sizes(enumerate_graphs(7, true)) == std::vector<std::size_t>{1, 1, 2, 6, 21, 112, 853});
  auto girth5 = enumerate_graphs(8, true, [](const Graph& g) { return has_girth_at_least(g, 5); });
  CHECK(sizes(girth5) == std::vector<std::size_t>{1, 1, 1, 2, 4, 8, 18, 47});
  for (const auto& level : girth5)
    for (const Graph& g : level) {
      CHECK(is_connected(g));
      CHECK(girth(g) >= 5);
    }
  CHECK_THROWS_AS(enumerate_graphs(12, true), BoundExceeded);
}

TEST_CASE("canonical form is a relabeling invariant", "[harness]") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 10;
    Graph g = oracle::random_graph(rng, n, 15 + rng() % 60);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const CanonicalForm a = canonical_form(g);
    CHECK(a.code == canonical_form(relabel(g, perm)).code);
    CHECK(canonical_form(canonical_graph(g)).code == a.code);
    CHECK(detail::code_of(g, a.order) == a.code);
  }
  CHECK_THROWS_AS(canonical_form(Graph(12)), BoundExceeded);
}

TEST_CASE("non-isomorphic graphs get different codes", "[harness]") {
  Graph c6 = cycle_graph(6);
  Graph two_triangles(6);
  for (Vertex b : {0u, 3u})
    for (Vertex i = 0; i < 3; ++i) two_triangles.add_edge(b + i, b + (i + 1) % 3);
  CHECK(canonical_form(c6).code != canonical_form(two_triangles).code);
}

TEST_CASE("whiskered graphs and simple families", "[harness]") {
  Graph w = whiskered(path_graph(3));
  CHECK(w.vertex_count() == 6);
  CHECK(w.edge_count() == 5);
  CHECK(w.label(0) == "x0");
  CHECK(w.label(4) == "y1");
  CHECK(in_pc(w));
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(path_graph(1).edge_count() == 0);
}

TEST_CASE("random PC graphs", "[harness]") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_pc_graph(rng, 12);
    CHECK(g.vertex_count() <= 12);
    CHECK(is_connected(g));
    CHECK(girth(g) >= 5);
    CHECK(in_pc(g));
  }
  CHECK_THROWS_AS(random_pc_graph(rng, 1), ValidationError);
}

TEST_CASE("instance counts", "[harness]") {
  InstanceSpec c5;
  c5.graphs = {cycle_graph(5)};
  CHECK(exhaustive_count(c5) == 1024);
  CHECK(expand(c5).size() == 1024);

  InstanceSpec edge;
  edge.graphs = {path_graph(2)};
  edge.weights = {1};
  edge.merge_normalized = true;
  CHECK(expand(edge).size() == 1);
  edge.merge_normalized = false;
  CHECK(expand(edge).size() == 2);

  InstanceSpec bad = c5;
  bad.weights = {0, 1};
  CHECK_THROWS_AS(expand(bad), ValidationError);
  InstanceSpec big = c5;
  big.instance_bound = 100;
  CHECK_THROWS_AS(expand(big), BoundExceeded);
}

TEST_CASE("exhaustive instances are distinct", "[harness]") {
  InstanceSpec c5;
  c5.graphs = {cycle_graph(5)};
  std::set<std::string> seen;
  for (const OrientedGraph& d : expand(c5)) seen.insert(encode(d));
  CHECK(seen.size() == 1024);
}

TEST_CASE("sampling is deterministic under a seed", "[harness]") {
  InstanceSpec spec;
  spec.graphs = {cycle_graph(5), whiskered(path_graph(3))};
  spec.sample = 10;
  spec.seed = 99;
  auto encodings = [&](const InstanceSpec& s) {
    std::vector<std::string> out;
    for (const OrientedGraph& d : expand(s)) out.push_back(encode(d));
    return out;
  };
  const auto a = encodings(spec);
  CHECK(a.size() == 10);
  CHECK(a == encodings(spec));
  InstanceSpec other = spec;
  other.seed = 100;
  CHECK(a != encodings(other));
}

TEST_CASE("draw stays in range", "[harness]") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) CHECK(draw(rng, 7) < 7);
  CHECK(draw(rng, 0) == 0);
  CHECK(draw(rng, 1) == 0);
  std::mt19937_64 a(1), b(1);
  for (int i = 0; i < 20; ++i) CHECK(draw(a, 1000) == draw(b, 1000));
}

TEST_CASE("instance encoding round trip", "[harness]") {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 100; ++i) {
    Graph g = oracle::random_graph(rng, 1 + rng() % 8, 40);
    OrientedGraph d = oracle::random_oriented(rng, g, 4);
    CHECK(decode(encode(d)) == d);
  }
  CHECK(encode(orient(path_graph(2), 1, {1, 3})) == "2|1,3|0>1");
  for (const char* bad : {"", "2|1", "2|1|0>1", "2|1,1|0>2", "2|1,1|0-1", "x|1|", "2|1,1|0>0"})
    CHECK_THROWS_AS(decode(bad), ParseError);
  CHECK_THROWS_AS(decode("2|1,0|0>1"), ValidationError);
}

TEST_CASE("cross-validation of the five-cycle sweep", "[harness]") {
  InstanceSpec spec;
  spec.graphs = {cycle_graph(5)};
  ValidationReport r = cross_validate(spec);
  CHECK(r.instances == 1024);
  CHECK(r.in_scope == 1024);
  CHECK(r.oracle_checked == 1024);
  CHECK(r.condition2_checked == 1024);
  CHECK(r.errors == 0);
  CHECK(r.discrepancies.empty());
  CHECK(r.cm + r.not_cm == 1024);
}

TEST_CASE("reports are reproducible byte for byte", "[harness]") {
  InstanceSpec spec;
  spec.graphs = {cycle_graph(5), whiskered(path_graph(3)), cycle_graph(4)};
  spec.sample = 150;
  spec.seed = 17;
  ValidationOptions serial;
  ValidationOptions threaded;
  threaded.jobs = 4;
  std::ostringstream a, b;
  write_report(a, cross_validate(spec, serial));
  write_report(b, cross_validate(spec, threaded));
  CHECK(a.str() == b.str());
  CHECK(a.str().find("# discrepancies: 0\n") != std::string::npos);
  CHECK(a.str().find("OutOfScope") != std::string::npos);
}

TEST_CASE("records replay from their encoding", "[harness]") {
  InstanceSpec spec;
  spec.graphs = {whiskered(path_graph(3))};
  spec.sample = 40;
  spec.seed = 2;
  for (const InstanceRecord& r : cross_validate(spec).records) {
    InstanceRecord again = replay(r.encoding);
    CHECK(again.encoding == r.encoding);
    CHECK(again.condition3 == r.condition3);
    CHECK(again.condition2 == r.condition2);
    CHECK(again.oracle == r.oracle);
  }
}

TEST_CASE("oracle is skipped beyond its ambient bound", "[harness]") {
  ValidationOptions tight;
  tight.oracle_ambient = 4;
  InstanceRecord r = evaluate_instance(orient(cycle_graph(5), 0, {2, 2, 2, 2, 2}), tight);
  CHECK(r.oracle == "skipped");
  CHECK(r.condition3 == "NotCM");
  CHECK(r.agree);
}

TEST_CASE("conjecture search on short cycles", "[harness]") {
  InstanceSpec spec;
  spec.graphs = {cycle_graph(4), cycle_graph(5), cycle_graph(3)};
  ConjectureReport r = conjecture_search(spec);
  CHECK(r.instances == 256 + 1024 + 64);
  CHECK(r.triangle_skipped == 64);
  CHECK(r.control == 1024);
  CHECK(r.control_discrepancies == 0);
  CHECK(r.girth4 == 256);

  std::ostringstream out;
  write_report(out, r);
  CHECK(out.str().find("# control_discrepancies: 0\n") != std::string::npos);

  // All weights one: I(D) = I(G), so the prediction is exact.
  InstanceSpec ones;
  ones.graphs = {cycle_graph(4), cycle_graph(6)};
  ones.weights = {1};
  for (const ConjectureRecord& rec : conjecture_search(ones).records) {
    CHECK(rec.cm == rec.underlying_cm);
    CHECK(rec.flag.empty());
  }
}

TEST_CASE("parallel_for visits every index once", "[harness]") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 8, [&](std::size_t i) { hits[i]++; });
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}

TEST_CASE("dimension identity preconditions", "[harness]") {
  MonomialIdeal I(2, {Monomial{{0, 1}, {1, 2}}});
  CHECK_THROWS_AS(check_dimension_identity(I, Monomial{}), ValidationError);
  CHECK_THROWS_AS(check_dimension_identity(I, Monomial{{0, 1}, {1, 3}}), ValidationError);
  CHECK(check_dimension_identity(I, Monomial{{1, 1}}).holds());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto f = random_monomial_outside(I, rng);
    REQUIRE(f);
    CHECK_FALSE(contains(I, *f));
  }
}

TEST_CASE("support products", "[harness]") {
  MonomialIdeal I(3, {Monomial{{0, 1}, {1, 2}}, Monomial{{1, 1}, {2, 3}}});
  auto fs = support_products(I);
  std::set<Monomial> got(fs.begin(), fs.end());
  CHECK(got == std::set<Monomial>{Monomial{}, Monomial{{0, 1}, {1, 1}}, Monomial{{1, 1}, {2, 1}},
                                  Monomial{{0, 1}, {1, 2}, {2, 1}}});
}
