// Acceptance run: one PASS/FAIL line per criterion, artifacts into argv[1].
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "support/fixtures.hpp"
#include "wog/classifier.hpp"
#include "wog/cm_oracle.hpp"
#include "wog/harness.hpp"
#include "wog/io.hpp"

using namespace wog;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
};

int failures = 0;

void run(int id, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << secs;
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.summary << " [" << t.str() << " s]"
            << std::endl;
  if (!o.pass) ++failures;
}

bool oracle_cm(const MonomialIdeal& I) { return is_cohen_macaulay(I, FieldChoice::rationals()).cohen_macaulay; }

std::vector<OrientedGraph> five_cycle_corpus() {
  InstanceSpec spec;
  spec.graphs = {cycle_graph(5)};
  return expand(spec);
}

std::vector<OrientedGraph> pendant_corpus() {
  std::vector<Graph> coronas;
  for (const auto& level : enumerate_graphs(4, true))
    for (const Graph& h : level) coronas.push_back(whiskered(h));
  InstanceSpec spec;
  spec.graphs = coronas;
  spec.sample = 10'000;
  spec.seed = 20240601;
  return expand(spec);
}

double elapsed_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path artifacts = argc > 1 ? argv[1] : "artifacts";
  std::filesystem::create_directories(artifacts);

  const std::vector<OrientedGraph> c5 = five_cycle_corpus();
  const std::vector<OrientedGraph> pendant = pendant_corpus();

  run(1, [&] {
    const auto t = std::chrono::steady_clock::now();
    std::size_t agree = 0, cm = 0;
    for (const OrientedGraph& d : c5) {
      const bool a = cycle5_is_cm(d);
      const bool b = is_unmixed(d).unmixed;
      const bool c = oracle_cm(edge_ideal(normalize(d)));
      agree += a == b && b == c;
      cm += a;
    }
    const double secs = elapsed_since(t);
    std::ostringstream s;
    s << agree << "/" << c5.size() << " three-way agreement, " << cm << " CM";
    return Outcome{c5.size() == 1024 && agree == c5.size() && secs < 60, s.str()};
  });

  run(2, [&] {
    const auto t = std::chrono::steady_clock::now();
    InstanceSpec spec;
    spec.graphs = {path_graph(4)};
    spec.weights = {1, 2, 3};
    std::size_t total = 0, agree = 0, unmixed = 0;
    enumerate_oriented(spec, [&](const OrientedGraph& d) {
      const bool a = path3_is_unmixed(d);
      ++total;
      agree += a == is_unmixed_ideal(edge_ideal(normalize(d)));
      unmixed += a;
    });
    std::ostringstream s;
    s << agree << "/" << total << " agreement, " << unmixed << " unmixed";
    return Outcome{total == 648 && agree == total && elapsed_since(t) < 10, s.str()};
  });

  run(3, [&] {
    const auto t = std::chrono::steady_clock::now();
    std::size_t agree = 0, cm = 0;
    for (const OrientedGraph& d : pendant) {
      const bool a = pendant_matching_is_cm(d);
      const bool b = is_unmixed(d).unmixed;
      const bool c = oracle_cm(edge_ideal(normalize(d)));
      agree += a == b && b == c;
      cm += a;
    }
    std::ostringstream s;
    s << agree << "/" << pendant.size() << " three-way agreement over coronas of connected graphs on <= 4 vertices, "
      << cm << " CM";
    return Outcome{pendant.size() == 10'000 && agree == pendant.size() && elapsed_since(t) < 600, s.str()};
  });

  run(4, [&] {
    std::size_t total = 0, agree = 0, cm = 0;
    for (const auto& level : enumerate_graphs(9, true, [](const Graph& g) { return has_girth_at_least(g, 5); }))
      for (const Graph& g : level) {
        ++total;
        const bool pc = g.vertex_count() == 1 || in_pc(g);
        const bool wc_vd = is_well_covered(g) && is_vertex_decomposable(g);
        const bool oracle = g.edge_count() == 0 || oracle_cm(edge_ideal(g));
        agree += pc == wc_vd && wc_vd == oracle;
        cm += pc;
      }
    std::ostringstream s;
    s << agree << "/" << total << " connected girth>=5 graphs on <= 9 vertices agree, " << cm << " CM";
    return Outcome{total == 219 && agree == total, s.str()};
  });

  run(5, [&] {
    const OrientedGraph example = fixture::raw("example-two-cycles.wog");
    const Vertex a3 = [&] {
      for (Vertex v : example.vertices())
        if (example.label(v) == "a3") return v;
      throw std::runtime_error("fixture lacks a3");
    }();
    std::mt19937_64 rng(7);
    std::size_t example_ok = 0, oracle_ok = 0, oracle_runs = 0;
    for (int k = 0; k < 100; ++k) {
      OrientedGraph d = example;
      for (Vertex v : d.vertices()) d.set_weight(v, v == a3 ? 1 : static_cast<Weight>(1 + draw(rng, 3)));
      ClassifyOptions opts;
      opts.route2 = ClassifyOptions::Route2::required;
      Certificate c = is_cm_girth5(d, opts);
      const bool ok = c.verdict == Verdict::cm && c.condition2 && c.condition2->cm();
      example_ok += ok;
      if (k % 10 == 0) {
        const MonomialIdeal I = edge_ideal(normalize(d));
        if (oracle_ambient(I) <= 22) {
          ++oracle_runs;
          oracle_ok += oracle_cm(I) == (c.verdict == Verdict::cm);
        }
      }
    }

    std::size_t routes_agree = 0, oracle2_runs = 0, oracle2_ok = 0, cm = 0;
    std::mt19937_64 prng(11);
    for (int k = 0; k < 500; ++k) {
      Graph g = random_pc_graph(prng, 12);
      std::vector<Weight> ws(g.vertex_count());
      for (auto& w : ws) w = static_cast<Weight>(1 + draw(prng, 2));
      OrientedGraph d = orient(g, prng(), ws);
      Certificate c = check_condition_3(d);
      const bool three = c.verdict == Verdict::cm;
      cm += three;
      routes_agree += three == condition2_route(normalize(d)).cm();
      const MonomialIdeal I = edge_ideal(normalize(d));
      if (oracle_ambient(I) <= 20) {
        ++oracle2_runs;
        oracle2_ok += oracle_cm(I) == three;
      }
    }
    std::ostringstream s;
    s << "example " << example_ok << "/100 CM with route 2 agreeing, oracle " << oracle_ok << "/" << oracle_runs
      << "; random PC routes " << routes_agree << "/500 (" << cm << " CM), oracle " << oracle2_ok << "/"
      << oracle2_runs;
    return Outcome{example_ok == 100 && oracle_runs == 10 && oracle_ok == oracle_runs && routes_agree == 500 &&
                       oracle2_ok == oracle2_runs && oracle2_runs > 0,
                   s.str()};
  });

  run(6, [&] {
    std::size_t total = 0, agree = 0;
    for (const auto& level : enumerate_graphs(7, false))
      for (const Graph& g : level) {
        ++total;
        auto covers = minimal_vertex_covers(g);
        std::set<VertexSet> expected(covers.begin(), covers.end());
        // The zero ideal is prime; its only associated prime is (0).
        std::set<VertexSet> primes{VertexSet{}};
        if (g.edge_count() > 0) {
          auto p = associated_primes(edge_ideal(g));
          primes = {p.begin(), p.end()};
        }
        agree += primes == expected;
      }
    std::ostringstream s;
    s << agree << "/" << total << " graphs on <= 7 vertices";
    return Outcome{total == 1252 && agree == total, s.str()};
  });

  run(7, [&] {
    std::size_t violations = 0, hyp10 = 0, hyp11 = 0;
    for (const OrientedGraph& raw : c5) {
      const OrientedGraph d = normalize(raw);
      violations += check_reducible_not_adjacent(d).size() + check_reducible_pair(d).size();
      if (!is_unmixed(d).unmixed) continue;
      std::vector<bool> minus(5);
      for (Vertex x = 0; x < 5; ++x) {
        minus[x] = is_unmixed(remove_vertices(d, VertexSet{x})).unmixed;
        hyp10 += minus[x];
      }
      for (Vertex x = 0; x < 5; ++x)
        for (Vertex u = x + 1; u < 5; ++u) hyp11 += !d.underlying().has_edge(x, u) && minus[x] && minus[u];
    }
    std::ostringstream s;
    s << violations << " violations; hypotheses met " << hyp10 << " times (not adjacent) and " << hyp11
      << " times (pair)";
    return Outcome{violations == 0 && hyp10 > 0 && hyp11 > 0, s.str()};
  });

  std::vector<MonomialIdeal> ideal_corpus;
  {
    std::set<std::pair<std::size_t, std::vector<Monomial>>> seen;
    for (const auto* corpus : {&c5, &pendant})
      for (const OrientedGraph& d : *corpus) {
        MonomialIdeal I = edge_ideal(normalize(d));
        if (seen.insert({I.ambient(), I.generators()}).second) ideal_corpus.push_back(std::move(I));
      }
  }

  run(8, [&] {
    std::size_t ideals = 0, pairs = 0, violations = 0;
    for (const MonomialIdeal& I : ideal_corpus) {
      if (!is_unmixed_ideal(I)) continue;
      ++ideals;
      for (const Monomial& f : support_products(I)) {
        if (contains(I, f)) continue;
        ++pairs;
        violations += check_exponent_comparison(I, f).size();
      }
    }
    std::ostringstream s;
    s << violations << " violations over " << ideals << " unmixed ideals and " << pairs << " (I, f) pairs";
    return Outcome{violations == 0 && pairs > 0, s.str()};
  });

  run(9, [&] {
    std::mt19937_64 rng(13);
    std::size_t pairs = 0, violations = 0;
    while (pairs < 1000) {
      const MonomialIdeal& I = ideal_corpus[draw(rng, ideal_corpus.size())];
      auto f = random_monomial_outside(I, rng);
      if (!f || f->is_one()) continue;
      ++pairs;
      violations += !check_dimension_identity(I, *f).holds();
    }
    std::ostringstream s;
    s << violations << " violations over " << pairs << " seeded (I, f) pairs";
    return Outcome{violations == 0, s.str()};
  });

  run(10, [&] {
    InstanceSpec spec;
    spec.graphs = {cycle_graph(4), cycle_graph(6)};
    ValidationOptions opts;
    opts.jobs = 4;
    ConjectureReport r = conjecture_search(spec, opts);
    const auto path = artifacts / "conjecture-c4-c6.tsv";
    std::ofstream out(path);
    write_report(out, r);
    out.close();
    std::ostringstream s;
    s << r.instances << " instances, control " << r.control << " with " << r.control_discrepancies
      << " discrepancies; girth-4 flags: " << r.girth4_predicted_not_cm << " predicted-not-cm, "
      << r.girth4_cm_not_predicted << " cm-not-predicted; report " << path.string();
    return Outcome{r.instances == 256 + 4096 && r.control == 4096 && r.oracle_skipped == 0 &&
                       r.control_discrepancies == 0 && std::filesystem::file_size(path) > 0,
                   s.str()};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
