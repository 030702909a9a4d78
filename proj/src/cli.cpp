#include "media/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "media/arrangement.hpp"
#include "media/axioms.hpp"
#include "media/error.hpp"
#include "media/graph.hpp"
#include "media/json_io.hpp"
#include "media/linear_orders.hpp"
#include "media/representation.hpp"

namespace media {

namespace {

struct Input {
  std::string text;
  std::string source;
};

Input read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
    return {buf.str(), "<stdin>"};
  }
  std::ifstream file(path);
  if (!file) throw ParseError(path, "cannot open file");
  buf << file.rdbuf();
  return {buf.str(), path};
}

TokenSystem read_token_system(const std::string& path, std::istream& in) {
  Input input = read_input(path, in);
  return token_system_from_json(parse_json_text(input.text, input.source));
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// Writes DOT to `path`, or to `out` for "-". Returns true when stdout was used.
bool write_dot(const std::string& path, const std::string& dot, std::ostream& out) {
  if (path == "-") {
    out << dot;
    return true;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  file << dot;
  return false;
}

struct Caps {
  std::size_t max_states = GraphLimits{}.max_vertices;
  std::size_t max_steps = GraphLimits{}.max_search_steps;
  std::size_t max_nodes = SearchLimits{}.max_nodes;
  int linmedium = 7;

  GraphLimits graph() const { return {max_states, max_steps}; }
  SearchLimits search() const { return {max_nodes}; }
};

int arrangement_pipeline(const Arrangement& arr, const Caps& caps, const std::string& dot,
                         std::ostream& out, Json extra) {
  std::vector<Region> regions = enumerate_regions(arr);
  if (regions.size() > caps.max_states) {
    throw CapError("arrangement has " + std::to_string(regions.size()) + " regions, cap is " +
                   std::to_string(caps.max_states));
  }
  LabeledGraph g = region_adjacency(arr, regions);
  PartialCubeResult cube = is_partial_cube(g, caps.graph());
  TokenSystem ts = arrangement_medium(arr, regions);
  MediumDecision d = decide_medium(ts, caps.graph());
  if (!dot.empty() && write_dot(dot, to_dot(g, "regions"), out)) return d.is_medium ? exit_ok : exit_false;

  Json doc = std::move(extra);
  doc["arrangement"] = to_json(arr);
  doc["regions"] = to_json(arr, regions);
  doc["graph"] = to_json(g, cube);
  doc["medium"] = to_json(ts);
  doc["decision"] = to_json(ts, d);
  write_json(out, doc);
  return d.is_medium && cube.accepted ? exit_ok : exit_false;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Token systems, media, well-graded families and partial cubes", "media-cli"};
  app.require_subcommand(1);
  app.fallthrough();
  Caps caps;
  app.add_option("--max-states", caps.max_states, "State / vertex cap")->envname("MEDIA_CAP_STATES");
  app.add_option("--max-steps", caps.max_steps, "Isomorphism backtracking step cap")
      ->envname("MEDIA_CAP_SEARCH");
  app.add_option("--max-nodes", caps.max_nodes, "Axiom search node cap")->envname("MEDIA_CAP_NODES");

  std::string input, input2, dot, base, kind;
  std::size_t bound = 0;
  int n = 0, radius = 1;

  auto* check = app.add_subcommand("check", "Check the axioms and decide whether a token system is a medium");
  check->add_option("input", input, "Token system JSON (default stdin)");
  check->add_option("--bound", bound, "Message length bound for M3/M4 (default 2 x tokens)")
      ->check(CLI::PositiveNumber);

  auto* represent = app.add_subcommand("represent", "Positive-content family of a medium");
  represent->add_option("input", input, "Token system JSON (default stdin)");
  represent->add_option("--base", base, "State defining the orientation (default: first state)");

  auto* graph = app.add_subcommand("graph", "Graph of a token system");
  graph->add_option("input", input, "Token system JSON (default stdin)");
  graph->add_option("--dot", dot, "Write DOT instead of JSON (\"-\" = stdout)")->expected(0, 1)->default_str("-");

  auto* pcube = app.add_subcommand("pcube", "Partial cube recognition");
  pcube->add_option("input", input, "Graph JSON or edge list (default stdin)");
  pcube->add_option("--dot", dot, "Write DOT instead of JSON (\"-\" = stdout)")->expected(0, 1)->default_str("-");

  auto* iso = app.add_subcommand("iso", "Isomorphism of two media");
  iso->add_option("first", input, "First token system JSON")->required();
  iso->add_option("second", input2, "Second token system JSON")->required();

  auto* lin = app.add_subcommand("linmedium", "Medium of the linear orders on 1..N");
  lin->add_option("n", n, "Number of elements")->required();
  lin->add_option("--cap", caps.linmedium, "Largest accepted N")->envname("MEDIA_CAP_LINMEDIUM");
  lin->add_option("--dot", dot, "Write DOT instead of JSON (\"-\" = stdout)")->expected(0, 1)->default_str("-");

  auto* arrangement = app.add_subcommand("arrangement", "Regions, region graph and medium of a line arrangement");
  arrangement->add_option("input", input, "Arrangement JSON (default stdin)");
  arrangement->add_option("--dot", dot, "Write DOT instead of JSON (\"-\" = stdout)")
      ->expected(0, 1)
      ->default_str("-");

  auto* mosaic = app.add_subcommand("mosaic", "Finite window of a periodic line family");
  mosaic->add_option("kind", kind, "triangular | truncated-square")
      ->required()
      ->check(CLI::IsMember({"triangular", "truncated-square"}));
  mosaic->add_option("--radius", radius, "Window radius (>= 1)")->check(CLI::PositiveNumber);
  mosaic->add_option("--dot", dot, "Write DOT instead of JSON (\"-\" = stdout)")->expected(0, 1)->default_str("-");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parse;
  }

  try {
    if (check->parsed()) {
      TokenSystem ts = read_token_system(input, in);
      AxiomReport report = check_axioms(ts, bound ? bound : default_axiom_bound(ts), caps.search());
      MediumDecision d = decide_medium(ts, caps.graph());
      write_json(out, {{"axioms", to_json(ts, report)}, {"decision", to_json(ts, d)}});
      return d.is_medium ? exit_ok : exit_false;
    }
    if (represent->parsed()) {
      TokenSystem ts = read_token_system(input, in);
      MediumDecision d = decide_medium(ts, caps.graph());
      if (!d.is_medium) {
        write_json(out, to_json(ts, d));
        return exit_false;
      }
      StateIndex s0 = base.empty() ? 0 : ts.state_index(base);
      Orientation o = orient_from_state(ts, s0);
      Json doc = to_json(ts, positive_content_family(ts, o));
      doc["base"] = ts.state_name(s0);
      doc["orientation"] = to_json(ts, o);
      write_json(out, doc);
      return exit_ok;
    }
    if (graph->parsed()) {
      TokenSystem ts = read_token_system(input, in);
      LabeledGraph g = medium_graph(ts);
      if (!dot.empty() && write_dot(dot, to_dot(g, "medium"), out)) return exit_ok;
      write_json(out, to_json(g));
      return exit_ok;
    }
    if (pcube->parsed()) {
      Input text = read_input(input, in);
      LabeledGraph g = graph_from_text(text.text, text.source);
      PartialCubeResult r = is_partial_cube(g, caps.graph());
      if (r.accepted) g.set_vertex_labels(*r.labeling);
      int code = r.accepted ? exit_ok : exit_false;
      if (!dot.empty() && write_dot(dot, to_dot(g, "graph"), out)) return code;
      write_json(out, to_json(g, r));
      return code;
    }
    if (iso->parsed()) {
      TokenSystem a = read_token_system(input, in);
      TokenSystem b = read_token_system(input2, in);
      for (auto [ts, which] : {std::pair{&a, "first"}, std::pair{&b, "second"}}) {
        MediumDecision d = decide_medium(*ts, caps.graph());
        if (!d.is_medium) {
          write_json(out, {{"isomorphic", false}, {"reason", std::string(which) + " input is not a medium: " + d.reason}});
          return exit_false;
        }
      }
      auto found = media_isomorphic(a, b, caps.graph());
      if (!found) {
        write_json(out, {{"isomorphic", false}, {"reason", "not isomorphic"}});
        return exit_false;
      }
      write_json(out, to_json(a, b, *found));
      return exit_ok;
    }
    if (lin->parsed()) {
      if (n > caps.linmedium) {
        throw CapError("linmedium " + std::to_string(n) + " exceeds the cap " + std::to_string(caps.linmedium));
      }
      LinearMedium m = linear_medium(n, caps.linmedium);
      if (!dot.empty()) {
        LabeledGraph g = medium_graph(m.medium);
        g.set_vertex_labels(m.family);
        if (write_dot(dot, to_dot(g, "linear_orders"), out)) return exit_ok;
      }
      Json orders = Json::array();
      for (const auto& l : m.orders) orders.push_back(l.name());
      write_json(out, {{"medium", to_json(m.medium)}, {"family", to_json(m.family)}, {"orders", orders}});
      return exit_ok;
    }
    if (arrangement->parsed()) {
      Input text = read_input(input, in);
      Arrangement arr = arrangement_from_json(parse_json_text(text.text, text.source));
      return arrangement_pipeline(arr, caps, dot, out, Json::object());
    }
    if (mosaic->parsed()) {
      MosaicKind k = *parse_mosaic_kind(kind);
      Arrangement arr = mosaic_window(k, radius);
      return arrangement_pipeline(arr, caps, dot, out, {{"kind", to_string(k)}, {"radius", radius}});
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const CapError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return exit_cap;
  } catch (const DefectError& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_defect;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return exit_parse;
  }
  return exit_parse;
}

}  // namespace media
