#ifndef WOG_IO_HPP
#define WOG_IO_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wog/classifier.hpp"
#include "wog/cm_oracle.hpp"
#include "wog/errors.hpp"
#include "wog/monomial_ideal.hpp"
#include "wog/oriented_graph.hpp"

namespace wog {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Plain-text documents.
//
//   format: wog-graph            format: wog-ideal
//   version: 1                   version: 1
//   name: ...                    [variables]
//   [vertices]                   x y z
//   x 2                          [generators]
//   [edges]                      x*y^2
//   x y                          y*z^2
//   [arcs]
//   x y
//
// '#' starts a comment; blank lines are ignored. Vertex weights default to 1.

namespace detail {

struct Line {
  std::size_t number;
  std::string text;
};

inline std::string trim(std::string_view s) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return std::string(s);
}

inline std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline std::uint64_t parse_unsigned(const std::string& s, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
  return v;
}

/// Header key/values plus named sections of content lines.
struct Document {
  std::map<std::string, std::string> header;
  std::map<std::string, std::vector<Line>> sections;
  std::vector<std::string> section_order;
};

inline Document split_document(std::string_view text, const std::set<std::string>& allowed) {
  Document doc;
  std::string current;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(number, "unterminated section header");
      current = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!allowed.count(current)) throw ParseError(number, "unknown section [" + current + "]");
      if (doc.sections.count(current)) throw ParseError(number, "repeated section [" + current + "]");
      doc.sections[current];
      doc.section_order.push_back(current);
      continue;
    }
    if (current.empty()) {
      auto colon = line.find(':');
      if (colon == std::string::npos) throw ParseError(number, "expected 'key: value'");
      std::string key = trim(std::string_view(line).substr(0, colon));
      if (key.empty()) throw ParseError(number, "empty header key");
      if (doc.header.count(key)) throw ParseError(number, "repeated header key '" + key + "'");
      doc.header[key] = trim(std::string_view(line).substr(colon + 1));
      continue;
    }
    doc.sections[current].push_back({number, line});
  }
  return doc;
}

inline void require_format(const Document& doc, const std::string& format) {
  auto it = doc.header.find("format");
  if (it == doc.header.end()) throw ParseError(1, "missing 'format' header");
  if (it->second != format) throw ParseError(1, "expected format '" + format + "', got '" + it->second + "'");
  auto v = doc.header.find("version");
  if (v == doc.header.end()) throw ParseError(1, "missing 'version' header");
  if (v->second != "1") throw ParseError(1, "unsupported version '" + v->second + "'");
}

inline bool valid_label(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.' || c == '\'';
  });
}

}  // namespace detail

/// A parsed graph document: the graph plus its header metadata.
struct GraphDocument {
  std::map<std::string, std::string> header;
  OrientedGraph graph;
};

struct ParseOptions {
  bool normalize = true;
};

inline GraphDocument parse_graph_document(std::string_view text, const ParseOptions& options = {}) {
  using detail::Line;
  detail::Document doc = detail::split_document(text, {"vertices", "edges", "arcs"});
  detail::require_format(doc, "wog-graph");

  std::vector<std::string> labels;
  std::vector<Weight> weights;
  std::map<std::string, Vertex> ids;
  for (const Line& l : doc.sections["vertices"]) {
    auto w = detail::words(l.text);
    if (w.empty() || w.size() > 2) throw ParseError(l.number, "expected 'label [weight]'");
    if (!detail::valid_label(w[0])) throw ParseError(l.number, "invalid label '" + w[0] + "'");
    if (ids.count(w[0])) throw ValidationError("unique-labels", "label '" + w[0] + "' repeated");
    if (labels.size() >= VertexSet::capacity)
      throw BoundExceeded("vertex count", VertexSet::capacity, labels.size() + 1);
    ids[w[0]] = static_cast<Vertex>(labels.size());
    labels.push_back(w[0]);
    weights.push_back(w.size() == 2 ? detail::parse_unsigned(w[1], l.number, "weight") : 1);
  }

  auto pair_on = [&](const Line& l) {
    auto w = detail::words(l.text);
    if (w.size() != 2) throw ParseError(l.number, "expected two labels");
    for (const auto& s : w)
      if (!ids.count(s)) throw ValidationError("known-labels", "unknown vertex '" + s + "' on line " + std::to_string(l.number));
    return std::make_pair(ids[w[0]], ids[w[1]]);
  };

  Graph g(labels);
  for (const Line& l : doc.sections["edges"]) {
    auto [u, v] = pair_on(l);
    if (u == v) throw ValidationError("no-loops", "loop at '" + labels[u] + "'");
    if (g.has_edge(u, v)) throw ValidationError("no-multi-edges", "edge " + labels[u] + "-" + labels[v] + " repeated");
    g.add_edge(u, v);
  }
  OrientedGraph d(std::move(g));
  for (Vertex v = 0; v < weights.size(); ++v) d.set_weight(v, weights[v]);
  for (const Line& l : doc.sections["arcs"]) {
    auto [u, v] = pair_on(l);
    if (!d.underlying().has_edge(u, v))
      throw ValidationError("arc-on-edge", "arc " + labels[u] + "->" + labels[v] + " has no edge");
    d.add_arc(u, v);
  }
  d.validate();
  return {std::move(doc.header), options.normalize ? normalize(d) : d};
}

inline OrientedGraph parse_graph(std::string_view text, const ParseOptions& options = {}) {
  return parse_graph_document(text, options).graph;
}

/// Writes a graph document; header entries other than format and version
/// are kept in key order.
inline std::string serialize(const OrientedGraph& d, const std::map<std::string, std::string>& header = {}) {
  std::ostringstream out;
  out << "format: wog-graph\nversion: 1\n";
  for (const auto& [k, v] : header)
    if (k != "format" && k != "version") out << k << ": " << v << "\n";
  out << "\n[vertices]\n";
  for (Vertex v : d.vertices()) out << d.label(v) << " " << d.weight(v) << "\n";
  out << "\n[edges]\n";
  for (const Edge& e : d.underlying().edges()) out << d.label(e.u) << " " << d.label(e.v) << "\n";
  out << "\n[arcs]\n";
  for (const Arc& a : d.arcs()) out << d.label(a.tail) << " " << d.label(a.head) << "\n";
  return out.str();
}

/// An ideal together with the names of its variables.
struct IdealDocument {
  std::vector<std::string> variables;
  MonomialIdeal ideal;
};

inline Monomial parse_monomial(const std::string& text, const std::map<std::string, Variable>& ids,
                               std::size_t line) {
  if (text == "1") return Monomial{};
  std::vector<Monomial::Term> terms;
  std::istringstream in(text);
  for (std::string factor; std::getline(in, factor, '*');) {
    factor = detail::trim(factor);
    auto caret = factor.find('^');
    std::string name = factor.substr(0, caret);
    Exponent e = caret == std::string::npos ? 1 : detail::parse_unsigned(factor.substr(caret + 1), line, "exponent");
    auto it = ids.find(name);
    if (it == ids.end()) throw ParseError(line, "unknown variable '" + name + "'");
    if (e > 0) terms.push_back({it->second, e});
  }
  std::sort(terms.begin(), terms.end());
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i].first == terms[i - 1].first) throw ParseError(line, "variable repeated in '" + text + "'");
  return Monomial(std::move(terms));
}

inline IdealDocument parse_ideal(std::string_view text) {
  detail::Document doc = detail::split_document(text, {"variables", "generators"});
  detail::require_format(doc, "wog-ideal");
  IdealDocument out;
  std::map<std::string, Variable> ids;
  for (const auto& l : doc.sections["variables"])
    for (const auto& name : detail::words(l.text)) {
      if (!detail::valid_label(name)) throw ParseError(l.number, "invalid variable '" + name + "'");
      if (ids.count(name)) throw ValidationError("unique-labels", "variable '" + name + "' repeated");
      ids[name] = static_cast<Variable>(out.variables.size());
      out.variables.push_back(name);
    }
  std::vector<Monomial> gens;
  for (const auto& l : doc.sections["generators"])
    for (const auto& word : detail::words(l.text)) gens.push_back(parse_monomial(word, ids, l.number));
  out.ideal = MonomialIdeal(out.variables.size(), std::move(gens));
  return out;
}

inline std::string serialize(const IdealDocument& doc) {
  std::ostringstream out;
  out << "format: wog-ideal\nversion: 1\n\n[variables]\n";
  for (std::size_t i = 0; i < doc.variables.size(); ++i) out << (i ? " " : "") << doc.variables[i];
  out << "\n\n[generators]\n";
  for (const Monomial& m : doc.ideal.generators()) out << to_string(m, doc.variables) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON.

inline Json labels_json(const std::vector<std::string>& names, VertexSet s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(names.at(v));
  return out;
}

inline Json labels_json(const std::vector<std::string>& names, const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(names.at(v));
  return out;
}

inline Json to_json(const PCDecomposition& pc, const std::vector<std::string>& names) {
  Json matching = Json::array();
  for (const Edge& e : pc.pendant_matching) matching.push_back({names.at(e.u), names.at(e.v)});
  Json cycles = Json::array();
  for (const FiveCycle& c : pc.basic_cycles) cycles.push_back(labels_json(names, std::vector<Vertex>(c.begin(), c.end())));
  return {{"pendant_vertices", labels_json(names, pc.pendant_vertices)},
          {"cycle_vertices", labels_json(names, pc.cycle_vertices)},
          {"pendant_matching", matching},
          {"basic_cycles", cycles}};
}

inline Json to_json(const UnmixedResult& r, const std::vector<std::string>& names) {
  Json out{{"unmixed", r.unmixed}};
  if (const auto* w = std::get_if<NotWellCoveredWitness>(&r.witness))
    out["witness"] = {{"kind", "not-well-covered"},
                      {"smaller", labels_json(names, w->smaller)},
                      {"larger", labels_json(names, w->larger)}};
  if (const auto* w = std::get_if<StrongCoverWitness>(&r.witness))
    out["witness"] = {{"kind", "strong-cover"},
                      {"cover", labels_json(names, w->cover)},
                      {"l3", labels_json(names, w->l3)}};
  return out;
}

inline Json to_json(const Certificate& c, const std::vector<std::string>& names) {
  Json out{{"verdict", to_string(c.verdict)}};
  if (c.short_cycle) out["short_cycle"] = labels_json(names, *c.short_cycle);
  if (c.decomposition) out["decomposition"] = to_json(*c.decomposition, names);
  Json passed = Json::array();
  for (const auto& p : c.passed) passed.push_back({{"clause", p.clause}, {"checks", p.checks}});
  out["passed"] = passed;
  if (c.failure) {
    out["failure"] = {{"clause", c.failure->clause}, {"vertices", labels_json(names, c.failure->vertices)}};
    if (!c.failure->detail.empty()) out["failure"]["detail"] = c.failure->detail;
  }
  if (c.condition2) {
    out["condition2"] = {{"underlying_cm", c.condition2->underlying_cm},
                         {"unmixed", to_json(c.condition2->unmixed, names)},
                         {"verdict", c.condition2->cm() ? "CM" : "NotCM"},
                         {"agrees", c.condition2_agrees()}};
  }
  return out;
}

/// Reads back the verdict and witness of a certificate written by to_json;
/// labels are resolved against `names`.
inline Certificate certificate_from_json(const Json& j, const std::vector<std::string>& names) {
  auto id = [&](const std::string& label) {
    auto it = std::find(names.begin(), names.end(), label);
    if (it == names.end()) throw ValidationError("known-labels", "unknown vertex '" + label + "'");
    return static_cast<Vertex>(it - names.begin());
  };
  auto ids = [&](const Json& arr) {
    std::vector<Vertex> out;
    for (const auto& s : arr) out.push_back(id(s.get<std::string>()));
    return out;
  };
  Certificate c;
  const std::string verdict = j.at("verdict").get<std::string>();
  if (verdict == "CM") c.verdict = Verdict::cm;
  else if (verdict == "NotCM") c.verdict = Verdict::not_cm;
  else if (verdict == "OutOfScope") c.verdict = Verdict::out_of_scope;
  else throw ValidationError("verdict", "unknown verdict '" + verdict + "'");
  if (j.contains("short_cycle")) c.short_cycle = ids(j["short_cycle"]);
  if (j.contains("failure"))
    c.failure = FailedClause{j["failure"].at("clause").get<std::string>(), ids(j["failure"].at("vertices")),
                             j["failure"].value("detail", std::string{})};
  if (j.contains("passed"))
    for (const auto& p : j["passed"]) c.passed.push_back({p.at("clause").get<std::string>(), p.at("checks").get<std::size_t>()});
  return c;
}

inline Json to_json(const OracleResult& r, const FieldChoice& field, const std::vector<std::string>& names) {
  Json out{{"cohen_macaulay", r.cohen_macaulay},
           {"field", field.name()},
           {"polarized_ambient", r.polarized_ambient},
           {"face_count", r.face_count}};
  if (r.witness) {
    Json face = Json::array();
    for (Vertex v : r.witness->face) face.push_back(v < names.size() ? names[v] : "p" + std::to_string(v));
    out["witness"] = {{"face", face},
                      {"homology_dimension", r.witness->homology_dimension},
                      {"rank", r.witness->rank}};
  }
  return out;
}

inline Json to_json(const std::vector<IrreducibleComponent>& components, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& c : components) {
    Json gens = Json::array();
    for (const auto& [x, e] : c.entries.terms()) gens.push_back(to_string(Monomial::variable(x, e), names));
    out.push_back(gens);
  }
  return out;
}

/// Human-readable rendering of a certificate.
inline std::string describe(const Certificate& c, const std::vector<std::string>& names) {
  auto list = [&](const std::vector<Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + names.at(vs[i]);
    return s;
  };
  std::ostringstream out;
  out << "verdict: " << to_string(c.verdict) << "\n";
  if (c.short_cycle) out << "short cycle: " << list(*c.short_cycle) << "\n";
  for (const auto& p : c.passed) out << "passed " << p.clause << " (" << p.checks << " checks)\n";
  if (c.failure) {
    out << "failed " << c.failure->clause << ": " << list(c.failure->vertices);
    if (!c.failure->detail.empty()) out << " [" << c.failure->detail << "]";
    out << "\n";
  }
  if (c.decomposition) {
    out << "pendant matching:";
    for (const Edge& e : c.decomposition->pendant_matching) out << " " << names.at(e.u) << "-" << names.at(e.v);
    out << "\nbasic cycles:";
    for (const FiveCycle& cy : c.decomposition->basic_cycles)
      out << " (" << list(std::vector<Vertex>(cy.begin(), cy.end())) << ")";
    out << "\n";
  }
  if (c.condition2)
    out << "underlying CM and unmixed: " << (c.condition2->cm() ? "yes" : "no")
        << (c.condition2_agrees() ? " (agrees)" : " (DISAGREES)") << "\n";
  return out.str();
}

}  // namespace wog

#endif  // WOG_IO_HPP
