#include "pathhom/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pathhom/cofib.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/excision.hpp"
#include "pathhom/field.hpp"
#include "pathhom/harness.hpp"
#include "pathhom/json_io.hpp"
#include "pathhom/omega.hpp"

namespace pathhom {
namespace {

using Json = nlohmann::ordered_json;

struct FieldChoice {
  bool rational = true;
  std::int64_t p = 0;
  std::string text = "q";
};

FieldChoice parse_field_choice(const std::string& s) {
  if (s == "q") return {};
  if (s.rfind("p=", 0) == 0) {
    std::int64_t v = 0;
    std::size_t used = 0;
    try {
      v = std::stoll(s.substr(2), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("field modulus is not a number: " + s);
    }
    if (used != s.size() - 2)
      throw std::invalid_argument("field modulus is not a number: " + s);
    if (v < 2 || v >= (std::int64_t{1} << 31))
      throw std::invalid_argument("field modulus must lie in [2, 2^31): " + s);
    if (!is_prime(v))
      throw std::invalid_argument(
          "field modulus must be prime (rank/nullity need a field): " + s);
    return FieldChoice{false, v, s};
  }
  throw std::invalid_argument("unknown field (expected q or p=<prime>): " + s);
}

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open file: " + path);
  return slurp(f);
}

/* Empty path means stdin, the documented default for --graph. */
DiGraph load_graph(const std::string& path, bool lenient, std::ostream& err) {
  std::vector<std::string> warnings;
  std::string text = path.empty() ? slurp(std::cin) : read_text_file(path);
  DiGraph g = parse_graph(text, lenient, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return g;
}

std::vector<std::string> split_members(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Json graph_as_json(const DiGraph& g) { return Json::parse(graph_to_json(g)); }

Json map_as_json(const GraphMap& f) {
  Json m = Json::object();
  for (const auto& l : f.domain().labels()) m[l] = f.apply_label(l);
  return m;
}

std::string format_generator(const GeneratorChain& terms) {
  std::string out;
  for (const auto& [path, coeff] : terms) {
    bool neg = !coeff.empty() && coeff[0] == '-';
    std::string mag = neg ? coeff.substr(1) : coeff;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != "1") out += mag + "*";
    out += path;
  }
  return out.empty() ? "0" : out;
}

template <class K>
std::string format_chain(const K& k, const DiGraph& g,
                         const Chain<typename K::Elem>& c) {
  GeneratorChain terms;
  for (const auto& [p, coeff] : c)
    terms.emplace_back(path_label(g, p), k.str(coeff));
  return format_generator(terms);
}

Json homology_json(const HomologyTable& t, const std::string& field) {
  Json rows = Json::array();
  Json betti = Json::array();
  Json omega_dims = Json::array();
  for (std::size_t n = 0; n < t.rows.size(); ++n) {
    const auto& r = t.rows[n];
    rows.push_back(Json{{"degree", n},
                        {"dim_omega", r.dim_space},
                        {"rank_d", r.rank_d},
                        {"nullity_d", r.nullity_d},
                        {"dim_h", r.dim_h}});
    betti.push_back(r.dim_h);
    omega_dims.push_back(r.dim_space);
  }
  Json j{{"command", "homology"}, {"field", field}, {"cutoff", t.cutoff},
         {"rows", rows},          {"betti", betti}, {"omega_dims", omega_dims}};
  bool any_gen = false;
  for (const auto& per_degree : t.generators) any_gen |= !per_degree.empty();
  if (any_gen) {
    Json gens = Json::array();
    for (std::size_t n = 0; n < t.generators.size(); ++n)
      for (const auto& chain : t.generators[n]) {
        Json terms = Json::array();
        for (const auto& [path, coeff] : chain)
          terms.push_back(Json::array({path, coeff}));
        gens.push_back(Json{{"degree", n}, {"terms", terms}});
      }
    j["generators"] = gens;
  }
  return j;
}

void homology_table_out(std::ostream& out, const HomologyTable& t,
                        const std::string& field) {
  out << "field " << field << ", cutoff " << t.cutoff << "\n";
  out << "degree  dim_omega  rank_d  nullity_d  dim_h\n";
  for (std::size_t n = 0; n < t.rows.size(); ++n) {
    const auto& r = t.rows[n];
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-7zu %-10zu %-7zu %-10zu %zu\n", n,
                  r.dim_space, r.rank_d, r.nullity_d, r.dim_h);
    out << buf;
  }
  out << "betti:";
  for (const auto& r : t.rows) out << " " << r.dim_h;
  out << "\n";
  for (std::size_t n = 0; n < t.generators.size(); ++n)
    for (std::size_t i = 0; i < t.generators[n].size(); ++i)
      out << "H_" << n << " generator " << i << ": "
          << format_generator(t.generators[n][i]) << "\n";
}

Json verdict_json(const CofibVerdict& v, const DiGraph& g) {
  Json j{{"is_cofibration", v.is_cofibration},
         {"failure", to_string(v.failure)}};
  if (v.edge_witness)
    j["edge_witness"] = Json::array(
        {g.label(v.edge_witness->first), g.label(v.edge_witness->second)});
  if (v.vertex_witness) j["vertex_witness"] = g.label(*v.vertex_witness);
  if (v.metric_witness)
    j["metric_witness"] = Json::array(
        {g.label(v.metric_witness->first), g.label(v.metric_witness->second)});
  if (v.decomposition) {
    Json hts = Json::object();
    Json pi = Json::object();
    for (int x = 0; x < static_cast<int>(g.num_vertices()); ++x) {
      const auto& h = v.decomposition->hts.h[x];
      hts[g.label(x)] = h ? Json(*h) : Json(nullptr);
      if (v.decomposition->pi[x]) pi[g.label(x)] = g.label(*v.decomposition->pi[x]);
    }
    j["heights"] = hts;
    j["pi"] = pi;
  }
  return j;
}

void verdict_table_out(std::ostream& out, const CofibVerdict& v,
                       const DiGraph& g) {
  out << "cofibration: " << (v.is_cofibration ? "yes" : "no") << "\n";
  if (!v.is_cofibration) out << "failure: " << to_string(v.failure) << "\n";
  if (v.edge_witness)
    out << "edge out of the subgraph: " << g.label(v.edge_witness->first)
        << " -> " << g.label(v.edge_witness->second) << "\n";
  if (v.vertex_witness)
    out << "no unique closest member for: " << g.label(*v.vertex_witness)
        << "\n";
  if (v.metric_witness)
    out << "metric violated at (" << g.label(v.metric_witness->first) << ", "
        << g.label(v.metric_witness->second) << ")\n";
  if (v.decomposition) {
    out << "vertex  height  pi\n";
    for (int x = 0; x < static_cast<int>(g.num_vertices()); ++x) {
      const auto& h = v.decomposition->hts.h[x];
      out << g.label(x) << "  " << (h ? std::to_string(*h) : "unreachable")
          << "  "
          << (v.decomposition->pi[x] ? g.label(*v.decomposition->pi[x]) : "-")
          << "\n";
    }
  }
}

Json axiom_report_json(const AxiomReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json jc{{"name", c.name},
            {"attempted", c.attempted},
            {"passed", c.passed},
            {"ok", c.ok}};
    if (!c.note.empty()) jc["note"] = c.note;
    if (!c.failures.empty()) jc["failures"] = c.failures;
    checks.push_back(std::move(jc));
  }
  return Json{{"command", "axioms"},
              {"seed", rep.spec.seed},
              {"instances", rep.instances},
              {"vertex_budget", rep.spec.vertex_budget},
              {"edge_density", rep.spec.edge_density},
              {"cutoff", rep.spec.max_degree},
              {"ok", rep.ok},
              {"checks", checks}};
}

DiGraph generate_named(const std::string& name) {
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char ch : name) {
      if (ch == '_') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    parts.push_back(cur);
  }
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number in graph name: " + name);
    }
    if (used != s.size() || v < 0)
      throw std::invalid_argument("bad number in graph name: " + name);
    return v;
  };
  if (name == "j") return gen_J();
  if (name == "suspension_alt4") return gen_suspension_alt4();
  if (name == "punctured_cube") return gen_punctured_cube();
  if (parts.size() == 2 && parts[0] == "i") return gen_line(num(parts[1]));
  if (parts.size() == 2 && parts[0] == "c") return gen_cycle(num(parts[1]));
  if (parts.size() == 3 && parts[0] == "c")
    return gen_mn_cycle(num(parts[1]), num(parts[2]));
  if (parts.size() == 3 && parts[0] == "alt" && parts[1] == "c")
    return gen_alt_cycle(num(parts[2]));
  if (parts.size() == 2 && parts[0] == "complete") {
    int n = num(parts[1]);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return gen_complete(labels);
  }
  throw std::invalid_argument(
      "unknown graph name: " + name +
      " (expected i_n, c_n, alt_c_2k, c_m_n, j, suspension_alt4, "
      "punctured_cube, complete_n)");
}

struct CommonOpts {
  std::string graph_path;
  std::string field = "q";
  std::string output = "table";
  int cutoff = 5;
  bool lenient = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_field = true) {
  cmd->add_option("--graph", o.graph_path,
                  "graph file (JSON or text); stdin when absent");
  if (with_field)
    cmd->add_option("--field", o.field, "coefficients: q or p=<prime>")
        ->default_val("q");
  cmd->add_option("--output", o.output, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->default_val("table");
  cmd->add_option("--cutoff", o.cutoff, "top degree bound")
      ->check(CLI::PositiveNumber)
      ->default_val(5);
  cmd->add_flag("--lenient", o.lenient, "tolerate duplicate edges in input");
}

template <class Fn>
int with_field(const std::string& spec, Fn&& fn) {
  FieldChoice fc = parse_field_choice(spec);
  if (fc.rational) return fn(RationalField{}, fc.text);
  return fn(PrimeField{fc.p}, fc.text);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"path homology of directed graphs over exact fields"};
  app.require_subcommand(1);
  app.fallthrough();
  bool ci = false;
  app.add_flag("--ci", ci, "randomized commands require an explicit --seed");
  int exit_code = 0;

  // homology
  CommonOpts h_opts;
  bool h_generators = false;
  auto* cmd_h = app.add_subcommand("homology", "homology table of a digraph");
  add_common(cmd_h, h_opts);
  cmd_h->add_flag("--generators", h_generators,
                  "include representative cycles per class");
  cmd_h->callback([&]() {
    DiGraph g = load_graph(h_opts.graph_path, h_opts.lenient, err);
    exit_code = with_field(h_opts.field, [&](auto k, const std::string& ft) {
      auto t = homology(k, g, h_opts.cutoff, h_generators);
      if (h_opts.output == "json")
        emit(out, homology_json(t, ft));
      else
        homology_table_out(out, t, ft);
      return 0;
    });
  });

  // omega
  CommonOpts o_opts;
  int o_degree = -1;
  bool o_matrix = false;
  auto* cmd_o =
      app.add_subcommand("omega", "bases of the path chain spaces");
  add_common(cmd_o, o_opts);
  cmd_o->add_option("--degree", o_degree,
                    "single degree (default: all through the cutoff)");
  cmd_o->add_flag("--matrix", o_matrix, "include labeled boundary matrices");
  cmd_o->callback([&]() {
    DiGraph g = load_graph(o_opts.graph_path, o_opts.lenient, err);
    exit_code = with_field(o_opts.field, [&](auto k, const std::string& ft) {
      std::vector<int> degrees;
      if (o_degree >= 0)
        degrees.push_back(o_degree);
      else
        for (int d = 0; d <= o_opts.cutoff; ++d) degrees.push_back(d);
      Json jd = Json::array();
      for (int d : degrees) {
        auto basis = omega_basis(k, g, d);
        Json entry{{"degree", d}, {"dim", basis.dim()}};
        Json bl = Json::array();
        for (std::size_t j = 0; j < basis.dim(); ++j)
          bl.push_back(format_chain(k, g, basis_chain(k, basis, j)));
        entry["basis"] = bl;
        if (o_matrix && d >= 1) {
          auto lm = omega_boundary_matrix(k, g, d);
          Json entries = Json::array();
          for (std::size_t r = 0; r < lm.mat.rows; ++r)
            for (std::size_t c = 0; c < lm.mat.cols; ++c)
              if (!k.is_zero(lm.mat.at(r, c)))
                entries.push_back(
                    Json::array({r, c, k.str(lm.mat.at(r, c))}));
          entry["matrix"] = Json{{"rows", lm.row_labels},
                                 {"cols", lm.col_labels},
                                 {"entries", entries}};
        }
        jd.push_back(std::move(entry));
      }
      if (o_opts.output == "json") {
        emit(out, Json{{"command", "omega"}, {"field", ft}, {"degrees", jd}});
      } else {
        out << "field " << ft << "\n";
        for (const auto& entry : jd) {
          out << "degree " << entry["degree"] << ": dim " << entry["dim"]
              << "\n";
          std::size_t i = 0;
          for (const auto& b : entry["basis"])
            out << "  w" << entry["degree"] << "_" << i++ << " = "
                << b.get<std::string>() << "\n";
          if (entry.contains("matrix")) {
            out << "  boundary entries (row, col, value):\n";
            for (const auto& e : entry["matrix"]["entries"])
              out << "    "
                  << entry["matrix"]["rows"][e[0].get<std::size_t>()]
                         .get<std::string>()
                  << "  "
                  << entry["matrix"]["cols"][e[1].get<std::size_t>()]
                         .get<std::string>()
                  << "  " << e[2].get<std::string>() << "\n";
          }
        }
      }
      return 0;
    });
  });

  // cofib-check
  CommonOpts c_opts;
  std::string c_members;
  std::string c_subgraph;
  bool c_coerce = false;
  bool c_members_set = false;
  auto* cmd_c = app.add_subcommand(
      "cofib-check", "verify an induced-subgraph inclusion is a cofibration");
  add_common(cmd_c, c_opts, false);
  cmd_c->add_option_function<std::string>(
           "--members",
           [&](const std::string& v) {
             c_members = v;
             c_members_set = true;
           },
           "comma-separated subgraph vertices (may be empty)")
      ->expected(1);
  cmd_c->add_option("--subgraph", c_subgraph,
                    "graph file whose vertices form the subgraph");
  cmd_c->add_flag("--coerce-induced", c_coerce,
                  "replace a non-induced subgraph by its induced closure");
  cmd_c->callback([&]() {
    if (c_members_set == !c_subgraph.empty())
      throw std::invalid_argument(
          "cofib-check needs exactly one of --members or --subgraph");
    DiGraph g = load_graph(c_opts.graph_path, c_opts.lenient, err);
    CofibVerdict v;
    if (!c_subgraph.empty()) {
      DiGraph a =
          parse_graph(read_text_file(c_subgraph), c_opts.lenient, nullptr);
      v = check_cofibration_subgraph(g, a, c_coerce);
    } else {
      v = check_cofibration(VertexSubset(g, split_members(c_members)));
    }
    if (c_opts.output == "json") {
      Json j{{"command", "cofib-check"}};
      j.update(verdict_json(v, g));
      emit(out, j);
    } else {
      verdict_table_out(out, v, g);
    }
    exit_code = v.is_cofibration ? 0 : 1;
  });

  // pushout
  CommonOpts p_opts;
  std::string p_members, p_target, p_map;
  auto* cmd_p = app.add_subcommand(
      "pushout", "pushout of an induced inclusion along an attaching map");
  add_common(cmd_p, p_opts, false);
  cmd_p->add_option("--members", p_members, "subgraph vertices inside X")
      ->required();
  cmd_p->add_option("--target", p_target, "attaching target graph file")
      ->required();
  cmd_p->add_option("--map", p_map, "attaching map JSON file {\"map\": {...}}")
      ->required();
  cmd_p->callback([&]() {
    DiGraph x = load_graph(p_opts.graph_path, p_opts.lenient, err);
    DiGraph b = parse_graph(read_text_file(p_target), p_opts.lenient, nullptr);
    VertexSubset a(x, split_members(p_members));
    GraphMap f(a.induced(), b, parse_vertex_map(read_text_file(p_map)));
    PushoutSquare sq = pushout(a, f);
    if (p_opts.output == "json") {
      emit(out, Json{{"command", "pushout"},
                     {"result", graph_as_json(sq.result)},
                     {"corner_x", map_as_json(sq.corner_x)},
                     {"corner_b", map_as_json(sq.corner_b)}});
    } else {
      out << graph_to_text(sq.result);
      for (const auto& l : x.labels())
        out << "# corner_x " << l << " -> " << sq.corner_x.apply_label(l)
            << "\n";
      for (const auto& l : b.labels())
        out << "# corner_b " << l << " -> " << sq.corner_b.apply_label(l)
            << "\n";
    }
    exit_code = 0;
  });

  // excision-verify
  CommonOpts e_opts;
  std::string e_members, e_target, e_map;
  auto* cmd_e = app.add_subcommand(
      "excision-verify",
      "relative homology of (X, A) vs the pushout (Y, B), with a chain iso");
  add_common(cmd_e, e_opts);
  cmd_e->add_option("--members", e_members, "subgraph vertices inside X")
      ->required();
  cmd_e->add_option("--target", e_target, "attaching target graph file")
      ->required();
  cmd_e->add_option("--map", e_map, "attaching map JSON file {\"map\": {...}}")
      ->required();
  cmd_e->callback([&]() {
    DiGraph x = load_graph(e_opts.graph_path, e_opts.lenient, err);
    DiGraph b = parse_graph(read_text_file(e_target), e_opts.lenient, nullptr);
    VertexSubset a(x, split_members(e_members));
    GraphMap f(a.induced(), b, parse_vertex_map(read_text_file(e_map)));
    PushoutSquare sq = pushout(a, f);
    exit_code = with_field(e_opts.field, [&](auto k, const std::string& ft) {
      auto rep = verify_excision(k, sq, e_opts.cutoff);
      Json j{{"command", "excision-verify"},
             {"field", ft},
             {"cutoff", e_opts.cutoff},
             {"ok", rep.ok},
             {"cofib_base", rep.cofib_base},
             {"dims_equal", rep.dims_equal},
             {"chain_map", rep.chain_map},
             {"chain_iso", rep.chain_iso},
             {"rel_h_x", rep.rel_h_x},
             {"rel_h_y", rep.rel_h_y}};
      if (e_opts.output == "json") {
        emit(out, j);
      } else {
        out << "excision: " << (rep.ok ? "verified" : "FAILED") << "\n"
            << "pushed-out inclusion is a cofibration: "
            << (rep.cofib_base ? "yes" : "no") << "\n"
            << "relative homology dims equal: "
            << (rep.dims_equal ? "yes" : "no") << "\n"
            << "induced chain map commutes: " << (rep.chain_map ? "yes" : "no")
            << "\n"
            << "induced chain map is an iso: "
            << (rep.chain_iso ? "yes" : "no") << "\n";
        out << "rel H(X,A):";
        for (auto d : rep.rel_h_x) out << " " << d;
        out << "\nrel H(Y,B):";
        for (auto d : rep.rel_h_y) out << " " << d;
        out << "\n";
      }
      return rep.ok ? 0 : 1;
    });
  });

  // les-verify
  CommonOpts l_opts;
  std::string l_members;
  auto* cmd_l = app.add_subcommand(
      "les-verify", "exactness of the homology sequence of (X, A)");
  add_common(cmd_l, l_opts);
  cmd_l->add_option("--members", l_members, "subgraph vertices inside X")
      ->required();
  cmd_l->callback([&]() {
    DiGraph x = load_graph(l_opts.graph_path, l_opts.lenient, err);
    VertexSubset a(x, split_members(l_members));
    exit_code = with_field(l_opts.field, [&](auto k, const std::string& ft) {
      auto rep = verify_les(k, a, l_opts.cutoff);
      if (l_opts.output == "json") {
        Json nodes = Json::array();
        for (const auto& n : rep.nodes)
          nodes.push_back(Json{{"degree", n.degree},
                               {"at", n.at},
                               {"dim", n.dim_mid},
                               {"rank_in", n.rank_in},
                               {"rank_out", n.rank_out},
                               {"composite_zero", n.composite_zero},
                               {"exact", n.exact}});
        emit(out, Json{{"command", "les-verify"},
                       {"field", ft},
                       {"cutoff", l_opts.cutoff},
                       {"ok", rep.ok},
                       {"nodes", nodes}});
      } else {
        out << "field " << ft << ", cutoff " << l_opts.cutoff << "\n";
        out << "degree  at   dim  rank_in  rank_out  exact\n";
        for (const auto& n : rep.nodes) {
          char buf[96];
          std::snprintf(buf, sizeof buf, "%-7d %-4s %-4zu %-8zu %-9zu %s\n",
                        n.degree, n.at.c_str(), n.dim_mid, n.rank_in,
                        n.rank_out, n.exact ? "yes" : "NO");
          out << buf;
        }
        out << "exact everywhere: " << (rep.ok ? "yes" : "NO") << "\n";
      }
      return rep.ok ? 0 : 1;
    });
  });

  // factor-codiagonal
  CommonOpts f_opts;
  auto* cmd_f = app.add_subcommand(
      "factor-codiagonal",
      "factor X + X through the box product with the zigzag J");
  add_common(cmd_f, f_opts);
  cmd_f->callback([&]() {
    DiGraph x = load_graph(f_opts.graph_path, f_opts.lenient, err);
    CodiagonalFactorization cf = codiagonal_factorization(x);
    exit_code = with_field(f_opts.field, [&](auto k, const std::string& ft) {
      bool iso = is_homology_iso(k, cf.projection, f_opts.cutoff);
      bool ok = cf.cofib_verdict.is_cofibration && iso;
      if (f_opts.output == "json") {
        emit(out,
             Json{{"command", "factor-codiagonal"},
                  {"field", ft},
                  {"cutoff", f_opts.cutoff},
                  {"ok", ok},
                  {"boundary_cofibration", cf.cofib_verdict.is_cofibration},
                  {"projection_homology_iso", iso},
                  {"boundary", cf.boundary.member_labels()},
                  {"cylinder", graph_as_json(cf.xj)},
                  {"include_left", map_as_json(cf.include_left)},
                  {"include_right", map_as_json(cf.include_right)},
                  {"projection", map_as_json(cf.projection)}});
      } else {
        out << "cylinder X box J: " << cf.xj.num_vertices() << " vertices, "
            << cf.xj.num_edges() << " edges\n"
            << "boundary inclusion is a cofibration: "
            << (cf.cofib_verdict.is_cofibration ? "yes" : "no") << "\n"
            << "projection is a homology iso up to " << f_opts.cutoff << ": "
            << (iso ? "yes" : "no") << "\n"
            << "factorization: " << (ok ? "verified" : "FAILED") << "\n";
      }
      return ok ? 0 : 1;
    });
  });

  // axioms
  CommonOpts a_opts;
  std::uint64_t a_seed = 0;
  int a_instances = 10, a_vertices = 6;
  double a_density = 0.35;
  std::string a_json_path;
  auto* cmd_a = app.add_subcommand(
      "axioms", "cofibration-category axiom suite on seeded instances");
  cmd_a->add_option("--output", a_opts.output, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->default_val("table");
  cmd_a->add_option("--cutoff", a_opts.cutoff, "homological cutoff")
      ->check(CLI::PositiveNumber)
      ->default_val(5);
  auto* seed_opt =
      cmd_a->add_option("--seed", a_seed, "master seed for child instances");
  cmd_a->add_option("--instances", a_instances, "instances per check")
      ->check(CLI::PositiveNumber)
      ->default_val(10);
  cmd_a->add_option("--vertices", a_vertices, "vertex budget per instance")
      ->check(CLI::PositiveNumber)
      ->default_val(6);
  cmd_a->add_option("--density", a_density, "edge density in [0,1]")
      ->check(CLI::Range(0.0, 1.0))
      ->default_val(0.35);
  cmd_a->add_option("--json", a_json_path, "also write the report JSON here");
  cmd_a->callback([&]() {
    if (ci && seed_opt->count() == 0)
      throw std::invalid_argument(
          "axioms is randomized: --ci requires an explicit --seed");
    InstanceSpec spec{a_seed, a_vertices, a_density, a_opts.cutoff};
    AxiomReport rep = axiom_suite(spec, a_instances);
    Json j = axiom_report_json(rep);
    if (!a_json_path.empty()) {
      std::ofstream f(a_json_path);
      if (!f) throw std::invalid_argument("cannot write: " + a_json_path);
      f << j.dump(2) << "\n";
    }
    if (a_opts.output == "json") {
      emit(out, j);
    } else {
      out << "axiom suite: seed " << rep.spec.seed << ", instances "
          << rep.instances << ", vertices " << rep.spec.vertex_budget
          << ", density " << rep.spec.edge_density << ", cutoff "
          << rep.spec.max_degree << "\n";
      for (const auto& c : rep.checks) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%-30s attempted %-4d passed %-4d %s\n",
                      c.name.c_str(), c.attempted, c.passed,
                      c.ok ? "ok" : "FAILED");
        out << buf;
        if (!c.note.empty()) out << "    note: " << c.note << "\n";
        for (const auto& fl : c.failures) out << "    counterexample: " << fl << "\n";
      }
      out << "overall: " << (rep.ok ? "PASS" : "FAIL") << "\n";
    }
    exit_code = rep.ok ? 0 : 1;
  });

  // generate
  std::string g_name;
  std::string g_output = "json";
  auto* cmd_g =
      app.add_subcommand("generate", "emit a named generator graph");
  cmd_g->add_option("name", g_name,
                    "i_n, c_n, alt_c_2k, c_m_n, j, suspension_alt4, "
                    "punctured_cube, complete_n")
      ->required();
  cmd_g->add_option("--output", g_output, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->default_val("json");
  cmd_g->callback([&]() {
    DiGraph g = generate_named(g_name);
    if (g_output == "json")
      out << graph_to_json(g) << "\n";
    else
      out << graph_to_text(g);
    exit_code = 0;
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);  // CLI11 consumes a reversed vector
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace pathhom
