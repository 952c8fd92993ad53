#include "steinergeo/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "steinergeo/catalog.hpp"
#include "steinergeo/relax.hpp"
#include "steinergeo/spanning.hpp"
#include "steinergeo/svg.hpp"
#include "steinergeo/tree_document.hpp"
#include "steinergeo/triangulation.hpp"

namespace steinergeo {

namespace {

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

std::string documents_json(const std::vector<TreeDocument>& docs) {
  std::string out = "[";
  for (size_t i = 0; i < docs.size(); ++i) {
    if (i) out += ',';
    out += "\n";
    out += serialize(docs[i]);
  }
  out += "\n]\n";
  return out;
}

std::string spanning_json(const std::vector<SpanningGroup>& groups) {
  std::string out = "[";
  for (size_t i = 0; i < groups.size(); ++i) {
    const SpanningGroup& g = groups[i];
    if (i) out += ',';
    out += "\n{\"length\":";
    out += format_g15(g.length);
    out += ",\"multiplicity\":" + std::to_string(g.multiplicity);
    out += ",\"q\":" + std::to_string(g.q);
    out += ",\"edges\":[";
    for (size_t e = 0; e < g.representative.edges.size(); ++e) {
      if (e) out += ',';
      out += '[' + std::to_string(g.representative.edges[e].first) + ',' +
             std::to_string(g.representative.edges[e].second) + ']';
    }
    out += "]}";
  }
  out += "\n]\n";
  return out;
}

std::string catalog_json(const std::vector<CatalogEntry>& entries) {
  std::string out = "[";
  for (size_t i = 0; i < entries.size(); ++i) {
    const CatalogEntry& e = entries[i];
    if (i) out += ',';
    out += "\n{\"p\":" + std::to_string(e.p);
    out += ",\"n\":" + std::to_string(e.n);
    out += ",\"q\":" + std::to_string(e.q);
    out += ",\"predicted_length\":";
    out += format_g15(e.predicted_length);
    out += ",\"status\":\"" + to_string(e.status) + "\"";
    if (e.matched_tree) {
      out += ",\"matched_tree\":{\"length\":";
      out += format_g15(e.matched_tree->length);
      out += ",\"p\":" + std::to_string(e.matched_tree->p);
      out += ",\"q\":" + std::to_string(e.matched_tree->q);
      out += ",\"source\":\"";
      out += e.matched_tree->from_spanning ? "spanning" : "relax";
      out += "\"}";
    } else {
      out += ",\"matched_tree\":null";
    }
    if (!e.note.empty()) out += ",\"note\":\"" + e.note + "\"";
    out += "}";
  }
  out += "\n]\n";
  return out;
}

std::string catalog_table(const std::vector<CatalogEntry>& entries) {
  std::string out = "   p   n   q   predicted        status                 matched (p, q)\n";
  char buf[160];
  for (const CatalogEntry& e : entries) {
    std::string matched = "-";
    if (e.matched_tree) {
      matched = "(" + std::to_string(e.matched_tree->p) + ", " + std::to_string(e.matched_tree->q) +
                ") from " + (e.matched_tree->from_spanning ? "spanning" : "relax");
    }
    std::snprintf(buf, sizeof(buf), "%4d%4d%4d   %s   %-20s   %s\n", e.p, e.n, e.q,
                  fixed12(e.predicted_length).c_str(), to_string(e.status).c_str(), matched.c_str());
    out += buf;
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steiner and spanning trees on regular-polygon pin sets"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a named configuration exactly");
  std::string construct_name, construct_json, construct_svg;
  construct->add_option("--name", construct_name, "configuration name")->required();
  construct->add_option("--json", construct_json, "write the tree document to this path");
  construct->add_option("--svg", construct_svg, "write an SVG figure to this path");

  // relax
  auto* relax_cmd = app.add_subcommand("relax", "enumerate and relax Steiner topologies");
  int relax_n = 6, relax_smin = -1, relax_smax = -1, relax_threads = 0;
  double relax_maxlen = -1.0;
  std::string relax_json;
  relax_cmd->add_option("--n", relax_n, "polygon terminal count")->required();
  relax_cmd->add_option("--steiner-min", relax_smin, "minimum Steiner count (default 0)");
  relax_cmd->add_option("--steiner-max", relax_smax, "maximum Steiner count (default n-2)");
  relax_cmd->add_option("--max-length", relax_maxlen, "keep trees up to this length");
  relax_cmd->add_option("--json", relax_json, "write the result list to this path");
  relax_cmd->add_option("--threads", relax_threads, "worker threads (0 = hardware)");

  // spanning
  auto* spanning_cmd = app.add_subcommand("spanning", "exhaustive spanning-tree catalog");
  int spanning_n = 6;
  double spanning_maxlen = 6.0;
  std::string spanning_json_path;
  spanning_cmd->add_option("--n", spanning_n, "polygon terminal count")->required();
  spanning_cmd->add_option("--max-length", spanning_maxlen, "length cap")->required();
  spanning_cmd->add_option("--json", spanning_json_path, "write the JSON list to this path");

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "empirical-formula catalog for the hexagon");
  double catalog_maxlen = 6.0;
  std::string catalog_format = "table";
  int catalog_threads = 0;
  catalog_cmd->add_option("--max-length", catalog_maxlen, "length cap")->required();
  catalog_cmd->add_option("--format", catalog_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  catalog_cmd->add_option("--threads", catalog_threads, "worker threads (0 = hardware)");

  // formula
  auto* formula_cmd = app.add_subcommand("formula", "evaluate the empirical length formula");
  int formula_n = 0, formula_p = 0, formula_q = 0;
  auto* opt_n = formula_cmd->add_option("--n", formula_n, "effective nodal number");
  auto* opt_p = formula_cmd->add_option("--p", formula_p, "Steiner point count");
  formula_cmd->add_option("--q", formula_q, "symmetry parameter")->required();

  // render
  auto* render_cmd = app.add_subcommand("render", "render a tree document as SVG");
  std::string render_input, render_output;
  render_cmd->add_option("--input", render_input, "tree document path")->required();
  render_cmd->add_option("--output", render_output, "SVG output path")->required();

  std::vector<const char*> argv;
  argv.push_back("steinergeo");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  try {
    if (construct->parsed()) {
      const GeometricTree tree = build_configuration(construct_name);
      out << fixed12(tree.total_length) << "\n";
      const TreeDocument doc = to_document(tree, construct_name);
      if (!construct_json.empty()) write_file(construct_json, serialize(doc) + "\n");
      if (!construct_svg.empty()) write_file(construct_svg, emit_svg(doc));
      return 0;
    }
    if (relax_cmd->parsed()) {
      const TerminalSet terminals = regular_polygon(relax_n, 1.0);
      const int smin = relax_smin < 0 ? 0 : relax_smin;
      const int smax = relax_smax < 0 ? relax_n - 2 : relax_smax;
      const double cap = relax_maxlen < 0 ? 1e100 : relax_maxlen;
      const LocalMinimaResult res =
          local_minima_search(terminals, smin, smax, cap, RelaxOptions{}, relax_threads);
      std::vector<TreeDocument> docs;
      for (size_t i = 0; i < res.trees.size(); ++i) {
        char name[64];
        std::snprintf(name, sizeof(name), "relax-n%d-%03zu", relax_n, i);
        docs.push_back(to_document(res.trees[i], name));
      }
      const std::string text = documents_json(docs);
      out << text;
      if (!relax_json.empty()) write_file(relax_json, text);
      return 0;
    }
    if (spanning_cmd->parsed()) {
      const TerminalSet terminals = regular_polygon(spanning_n, 1.0);
      const std::vector<SpanningGroup> groups = spanning_catalog(terminals, spanning_maxlen);
      const std::string text = spanning_json(groups);
      out << text;
      if (!spanning_json_path.empty()) write_file(spanning_json_path, text);
      return 0;
    }
    if (catalog_cmd->parsed()) {
      const std::vector<CatalogEntry> entries = generate_catalog(catalog_maxlen, catalog_threads);
      out << (catalog_format == "json" ? catalog_json(entries) : catalog_table(entries));
      return 0;
    }
    if (formula_cmd->parsed()) {
      const bool has_n = opt_n->count() > 0;
      const bool has_p = opt_p->count() > 0;
      if (has_n == has_p) {
        err << "usage error: formula requires exactly one of --n or --p\n";
        return 2;
      }
      const double L = has_n ? empirical_length(formula_n, formula_q)
                             : empirical_length_p(formula_p, formula_q);
      out << fixed12(L) << "\n";
      return 0;
    }
    if (render_cmd->parsed()) {
      const TreeDocument doc = parse_document(read_file(render_input));
      write_file(render_output, emit_svg(doc));
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand given\n";
  return 2;
}

}  // namespace steinergeo
