#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wog/classifier.hpp"
#include "wog/cm_oracle.hpp"
#include "wog/harness.hpp"
#include "wog/io.hpp"

namespace {

using namespace wog;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_bound = 2;

struct Common {
  std::string input;
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t max_n = 6;
  std::string field = "q";
};

struct SweepFlags {
  std::string family = "c5";
  std::string weights = "1,2";
  std::size_t sample = 0;
  unsigned jobs = 1;
  std::size_t oracle_ambient = 20;
  std::string report;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw CLI::ValidationError("--input", "this command needs --input FILE");
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--input", "cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool is_ideal_document(const std::string& text) { return text.find("wog-ideal") != std::string::npos; }

FieldChoice parse_field(const std::string& s) {
  if (s == "q" || s == "Q") return FieldChoice::rationals();
  if (s.rfind("p:", 0) == 0) {
    try {
      return FieldChoice::gf(std::stoull(s.substr(2)));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw CLI::ValidationError("--field", "expected 'q' or 'p:PRIME', got '" + s + "'");
}

std::vector<Weight> parse_weights(const std::string& s) {
  std::vector<Weight> out;
  std::istringstream in(s);
  for (std::string part; std::getline(in, part, ',');) {
    try {
      std::size_t used = 0;
      Weight w = std::stoull(part, &used);
      if (used != part.size() || w == 0) throw std::invalid_argument(part);
      out.push_back(w);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--weights", "expected positive integers separated by commas, got '" + s + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError("--weights", "empty weight alphabet");
  return out;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int classify(const Common& c) {
  GraphDocument doc = parse_graph_document(read_file(c.input));
  Certificate cert = is_cm_girth5(doc.graph);
  const auto& names = doc.graph.underlying().labels();
  if (c.json) print(to_json(cert, names));
  else std::cout << describe(cert, names);
  return exit_ok;
}

int unmixed(const Common& c) {
  OrientedGraph d = parse_graph(read_file(c.input));
  UnmixedResult r = is_unmixed(d);
  const auto& names = d.underlying().labels();
  if (c.json) {
    print(to_json(r, names));
    return exit_ok;
  }
  std::cout << "unmixed: " << (r.unmixed ? "yes" : "no") << "\n";
  if (const auto* w = std::get_if<NotWellCoveredWitness>(&r.witness))
    std::cout << "underlying graph not well-covered: maximal independent sets of sizes " << w->smaller.size() << " and "
              << w->larger.size() << "\n";
  if (const auto* w = std::get_if<StrongCoverWitness>(&r.witness)) {
    std::cout << "strong vertex cover:";
    for (Vertex v : w->cover) std::cout << " " << names[v];
    std::cout << "\nL3:";
    for (Vertex v : w->l3) std::cout << " " << names[v];
    std::cout << "\n";
  }
  return exit_ok;
}

struct LoadedIdeal {
  MonomialIdeal ideal;
  std::vector<std::string> names;
};

LoadedIdeal load_ideal(const std::string& path) {
  const std::string text = read_file(path);
  if (is_ideal_document(text)) {
    IdealDocument doc = parse_ideal(text);
    return {doc.ideal, doc.variables};
  }
  OrientedGraph d = parse_graph(text);
  return {edge_ideal(d), d.underlying().labels()};
}

int oracle(const Common& c) {
  const FieldChoice field = parse_field(c.field);
  LoadedIdeal li = load_ideal(c.input);
  OracleResult r = is_cohen_macaulay(li.ideal, field);
  if (c.json) {
    print(to_json(r, field, {}));
    return exit_ok;
  }
  std::cout << "cohen-macaulay: " << (r.cohen_macaulay ? "yes" : "no") << "\nfield: " << field.name()
            << "\npolarized variables: " << r.polarized_ambient << "\nfaces: " << r.face_count << "\n";
  if (r.witness) {
    std::cout << "link of face {";
    bool first = true;
    for (Vertex v : r.witness->face) std::cout << (first ? "" : ",") << "p" << v, first = false;
    std::cout << "} has reduced homology of rank " << r.witness->rank << " in dimension "
              << r.witness->homology_dimension << "\n";
  }
  return exit_ok;
}

int decompose(const Common& c) {
  LoadedIdeal li = load_ideal(c.input);
  auto components = irreducible_decomposition(li.ideal);
  auto primes = associated_primes(li.ideal);
  if (c.json) {
    Json p = Json::array();
    for (VertexSet s : primes) p.push_back(labels_json(li.names, s));
    print({{"ideal", to_string(li.ideal, li.names)},
           {"components", to_json(components, li.names)},
           {"associated_primes", p},
           {"height", height(li.ideal)},
           {"unmixed", is_unmixed_ideal(li.ideal)}});
    return exit_ok;
  }
  std::cout << "ideal: " << to_string(li.ideal, li.names) << "\ncomponents:\n";
  for (const auto& comp : components) std::cout << "  " << to_string(comp.as_ideal(li.ideal.ambient()), li.names) << "\n";
  std::cout << "associated primes:\n";
  for (VertexSet s : primes) {
    std::cout << "  (";
    bool first = true;
    for (Vertex v : s) std::cout << (first ? "" : ", ") << li.names[v], first = false;
    std::cout << ")\n";
  }
  std::cout << "height: " << height(li.ideal) << "\nunmixed: " << (is_unmixed_ideal(li.ideal) ? "yes" : "no") << "\n";
  return exit_ok;
}

InstanceSpec family_spec(const std::string& family, const Common& c, const SweepFlags& s) {
  InstanceSpec spec;
  spec.weights = parse_weights(s.weights);
  spec.seed = c.seed;
  if (s.sample) spec.sample = s.sample;
  if (family == "c5") spec.graphs = {cycle_graph(5)};
  else if (family == "path3") spec.graphs = {path_graph(4)};
  else if (family == "cycles") spec.graphs = {cycle_graph(4), cycle_graph(6)};
  else if (family == "whiskered") {
    auto levels = enumerate_graphs(std::max<std::size_t>(1, c.max_n / 2), true);
    for (const auto& level : levels)
      for (const Graph& h : level) spec.graphs.push_back(whiskered(h));
  } else if (family == "girth5") {
    auto levels = enumerate_graphs(c.max_n, true, [](const Graph& g) { return girth(g) >= 5; });
    for (const auto& level : levels) spec.graphs.insert(spec.graphs.end(), level.begin(), level.end());
  } else if (family == "triangle-free") {
    auto levels = enumerate_graphs(c.max_n, true, [](const Graph& g) { return girth(g) >= 4; });
    for (const auto& level : levels) spec.graphs.insert(spec.graphs.end(), level.begin(), level.end());
  } else if (family == "pc-random") {
    std::mt19937_64 rng(c.seed);
    const std::size_t count = s.sample ? s.sample : 100;
    for (std::size_t i = 0; i < count; ++i) spec.graphs.push_back(random_pc_graph(rng, std::max<std::size_t>(c.max_n, 2)));
    spec.sample = count;
  } else if (family == "file") {
    spec.graphs = {parse_graph(read_file(c.input)).underlying()};
  } else {
    throw CLI::ValidationError("--family", "unknown family '" + family + "'");
  }
  return spec;
}

std::ostream& report_stream(const SweepFlags& s, std::ofstream& file) {
  if (s.report.empty() || s.report == "-") return std::cout;
  file.open(s.report);
  if (!file) throw CLI::ValidationError("--report", "cannot write '" + s.report + "'");
  return file;
}

int sweep(const Common& c, const SweepFlags& s) {
  InstanceSpec spec = family_spec(s.family, c, s);
  ValidationOptions options;
  options.field = parse_field(c.field);
  options.jobs = s.jobs;
  options.oracle_ambient = s.oracle_ambient;
  ValidationReport report = cross_validate(spec, options);
  if (c.json) {
    Json disc = Json::array();
    for (const auto& d : report.discrepancies)
      disc.push_back({{"instance", d.encoding},
                      {"condition3", d.condition3},
                      {"condition2", d.condition2},
                      {"oracle", d.oracle},
                      {"first_difference", d.first_difference}});
    print({{"instances", report.instances},
           {"in_scope", report.in_scope},
           {"out_of_scope", report.out_of_scope},
           {"cm", report.cm},
           {"not_cm", report.not_cm},
           {"condition2_checked", report.condition2_checked},
           {"oracle_checked", report.oracle_checked},
           {"oracle_skipped", report.oracle_skipped},
           {"errors", report.errors},
           {"discrepancies", disc}});
    if (!s.report.empty()) {
      std::ofstream file;
      write_report(report_stream(s, file), report);
    }
    return exit_ok;
  }
  std::ofstream file;
  write_report(report_stream(s, file), report);
  return exit_ok;
}

int conjecture(const Common& c, const SweepFlags& s) {
  InstanceSpec spec = family_spec(s.family, c, s);
  ValidationOptions options;
  options.field = parse_field(c.field);
  options.jobs = s.jobs;
  options.oracle_ambient = s.oracle_ambient;
  ConjectureReport report = conjecture_search(spec, options);
  if (c.json) {
    Json flagged = Json::array();
    for (const auto& r : report.records)
      if (!r.flag.empty()) flagged.push_back({{"instance", r.encoding}, {"family", r.family}, {"flag", r.flag}});
    print({{"instances", report.instances},
           {"triangle_skipped", report.triangle_skipped},
           {"oracle_skipped", report.oracle_skipped},
           {"control", report.control},
           {"control_discrepancies", report.control_discrepancies},
           {"girth4", report.girth4},
           {"girth4_predicted_not_cm", report.girth4_predicted_not_cm},
           {"girth4_cm_not_predicted", report.girth4_cm_not_predicted},
           {"flagged", flagged}});
    if (!s.report.empty()) {
      std::ofstream file;
      write_report(report_stream(s, file), report);
    }
    return exit_ok;
  }
  std::ofstream file;
  write_report(report_stream(s, file), report);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay and unmixed tests for edge ideals of weighted oriented graphs"};
  app.require_subcommand(1);
  Common common;
  SweepFlags sweep_flags, conjecture_flags;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", common.input, "graph (.wog) or ideal document");
    sub->add_flag("--json", common.json, "structured output");
    sub->add_option("--seed", common.seed, "random seed");
    sub->add_option("--max-n", common.max_n, "largest enumerated graph");
    sub->add_option("--field", common.field, "coefficient field: q or p:PRIME");
  };
  auto add_sweep = [&](CLI::App* sub, SweepFlags& flags, const std::string& default_family) {
    flags.family = default_family;
    sub->add_option("--family", flags.family,
                    "c5, path3, cycles, whiskered, girth5, triangle-free, pc-random, or file");
    sub->add_option("--weights", flags.weights, "weight alphabet, e.g. 1,2");
    sub->add_option("--sample", flags.sample, "number of sampled instances (0: all)");
    sub->add_option("--jobs", flags.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--oracle-max", flags.oracle_ambient, "largest polarized ring for the oracle");
    sub->add_option("--report", flags.report, "write the line report here");
  };

  auto* classify_cmd = app.add_subcommand("classify", "certificate for the girth >= 5 classification");
  auto* unmixed_cmd = app.add_subcommand("unmixed", "strong vertex cover unmixedness test");
  auto* oracle_cmd = app.add_subcommand("oracle", "Reisner-criterion Cohen-Macaulay test");
  auto* decompose_cmd = app.add_subcommand("decompose", "irreducible components and associated primes");
  auto* sweep_cmd = app.add_subcommand("sweep", "cross-validate the three routes over a family");
  auto* conjecture_cmd = app.add_subcommand("conjecture", "triangle-free search");
  for (auto* sub : {classify_cmd, unmixed_cmd, oracle_cmd, decompose_cmd, sweep_cmd, conjecture_cmd}) add_common(sub);
  add_sweep(sweep_cmd, sweep_flags, "c5");
  add_sweep(conjecture_cmd, conjecture_flags, "cycles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*classify_cmd) return classify(common);
    if (*unmixed_cmd) return unmixed(common);
    if (*oracle_cmd) return oracle(common);
    if (*decompose_cmd) return decompose(common);
    if (*sweep_cmd) return sweep(common, sweep_flags);
    if (*conjecture_cmd) return conjecture(common, conjecture_flags);
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return exit_bound;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return exit_usage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
