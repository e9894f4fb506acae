#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathhom/digraph.hpp"

namespace pathhom {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Graph JSON: {"vertices": ["a", ...], "edges": [["u","v"], ...]}.
   Text format: lines `v <name>` and `e <u> <v>`, `#` starts a comment.
   Both reject duplicate edges unless lenient; self-edges are dropped with a
   warning in either mode. parse_graph sniffs the format: JSON iff the first
   non-space byte is '{'. */
DiGraph parse_graph_json(const std::string& text, bool lenient,
                         std::vector<std::string>* warnings = nullptr);
DiGraph parse_graph_text(const std::string& text, bool lenient,
                         std::vector<std::string>* warnings = nullptr);
DiGraph parse_graph(const std::string& text, bool lenient,
                    std::vector<std::string>* warnings = nullptr);

std::string graph_to_json(const DiGraph& g);
std::string graph_to_text(const DiGraph& g);

/* Attaching map JSON: {"map": {"a": "b", ...}}. */
std::map<std::string, std::string> parse_vertex_map(const std::string& text);
std::string vertex_map_to_json(const GraphMap& f);

}  // namespace pathhom
