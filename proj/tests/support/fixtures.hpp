// Access to the shipped data fixtures.
#ifndef WOG_TEST_FIXTURES_HPP
#define WOG_TEST_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "wog/io.hpp"

namespace fixture {

inline std::string path(const std::string& name) { return std::string(WOG_FIXTURES) + "/" + name; }

inline std::string text(const std::string& name) {
  std::ifstream in(path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

/// The fixture graph as written, before normalization.
inline wog::OrientedGraph raw(const std::string& name) { return wog::parse_graph(text(name), {false}); }

inline wog::OrientedGraph graph(const std::string& name) { return wog::parse_graph(text(name)); }

}  // namespace fixture

#endif  // WOG_TEST_FIXTURES_HPP
