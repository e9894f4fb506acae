#include "pathhom/json_io.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace pathhom {

using nlohmann::json;

namespace {

/* Duplicate edges are an input error unless lenient; the DiGraph constructor
   then collapses them with a warning. */
void check_duplicates(
    const std::vector<std::pair<std::string, std::string>>& edges,
    bool lenient) {
  if (lenient) return;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : edges)
    if (!seen.insert(e).second)
      throw ParseError("duplicate edge " + e.first + " -> " + e.second +
                       " (pass --lenient to collapse)");
}

}  // namespace

DiGraph parse_graph_json(const std::string& text, bool lenient,
                         std::vector<std::string>* warnings) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw ParseError("graph JSON needs \"vertices\" and \"edges\" fields");
  if (!j["vertices"].is_array())
    throw ParseError("field \"vertices\" must be an array of strings");
  if (!j["edges"].is_array())
    throw ParseError("field \"edges\" must be an array of pairs");
  std::vector<std::string> verts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string())
      throw ParseError("field \"vertices\" must contain only strings");
    verts.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_string())
      throw ParseError("field \"edges\" must contain [\"u\",\"v\"] pairs");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  check_duplicates(edges, lenient);
  try {
    return DiGraph(std::move(verts), edges, warnings);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

DiGraph parse_graph_text(const std::string& text, bool lenient,
                         std::vector<std::string>* warnings) {
  std::vector<std::string> verts;
  std::vector<std::pair<std::string, std::string>> edges;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    auto where = [&] { return " at line " + std::to_string(lineno); };
    if (kind == "v") {
      std::string name, extra;
      if (!(ls >> name) || (ls >> extra))
        throw ParseError("expected `v <name>`" + where());
      verts.push_back(name);
    } else if (kind == "e") {
      std::string u, v, extra;
      if (!(ls >> u >> v) || (ls >> extra))
        throw ParseError("expected `e <u> <v>`" + where());
      edges.emplace_back(u, v);
    } else {
      throw ParseError("unknown line kind `" + kind + "`" + where());
    }
  }
  check_duplicates(edges, lenient);
  try {
    return DiGraph(std::move(verts), edges, warnings);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

DiGraph parse_graph(const std::string& text, bool lenient,
                    std::vector<std::string>* warnings) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return parse_graph_json(text, lenient, warnings);
  return parse_graph_text(text, lenient, warnings);
}

std::string graph_to_json(const DiGraph& g) {
  json j;
  j["vertices"] = g.labels();
  auto edges = json::array();
  for (const auto& [u, v] : g.edge_labels())
    edges.push_back(json::array({u, v}));
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

std::string graph_to_text(const DiGraph& g) {
  std::string s;
  for (const auto& l : g.labels()) s += "v " + l + "\n";
  for (const auto& [u, v] : g.edge_labels()) s += "e " + u + " " + v + "\n";
  return s;
}

std::map<std::string, std::string> parse_vertex_map(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("map") || !j["map"].is_object())
    throw ParseError("vertex map JSON needs a \"map\" object");
  std::map<std::string, std::string> m;
  for (const auto& [key, val] : j["map"].items()) {
    if (!val.is_string())
      throw ParseError("vertex map values must be strings");
    m.emplace(key, val.get<std::string>());
  }
  return m;
}

std::string vertex_map_to_json(const GraphMap& f) {
  json m = json::object();
  for (const auto& l : f.domain().labels()) m[l] = f.apply_label(l);
  json j;
  j["map"] = m;
  return j.dump(2) + "\n";
}

}  // namespace pathhom
