#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "media/cli.hpp"
#include "media/json_io.hpp"

using namespace media;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "media-cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("media-cli-test-" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string reduction_pr() {
  std::vector<StateIndex> pr{0, 2};
  return to_json(reduce(corpus::path_pqr(), pr)).dump();
}

}  // namespace

TEST_CASE("check") {
  Run ok = run({"check"}, to_json(corpus::two_state()).dump());
  CHECK(ok.code == exit_ok);
  Json j = Json::parse(ok.out);
  CHECK(j["decision"]["medium"] == true);
  CHECK(j["axioms"]["all_hold"] == true);

  Run pr = run({"check", "-"}, reduction_pr());
  CHECK(pr.code == exit_false);
  Json k = Json::parse(pr.out);
  CHECK(k["decision"]["axiom"] == "M2");
  CHECK(k["axioms"]["axioms"]["M2"]["verdict"] == "fails");

  Run bound = run({"check", "--bound", "3"}, to_json(corpus::three_cycle()).dump());
  CHECK(bound.code == exit_false);
  CHECK(Json::parse(bound.out)["axioms"]["bound"] == 3);

  std::string path = write_temp("hex.json", to_json(family_to_medium(corpus::hexagon_f())).dump());
  CHECK(run({"check", path}).code == exit_ok);
}

TEST_CASE("represent") {
  TokenSystem hex = family_to_medium(corpus::order_images());
  Run r = run({"represent", "--base", "{}"}, to_json(hex).dump());
  CHECK(r.code == exit_ok);
  Json j = Json::parse(r.out);
  CHECK(j["base"] == "{}");
  CHECK(j["family"]["ground"] == Json{"+12", "+13", "+23"});
  CHECK(j["alpha"]["{}"] == Json::array());
  CHECK(j["beta"]["+12"]["polarity"] == "add");

  CHECK(run({"represent"}, to_json(corpus::three_cycle()).dump()).code == exit_false);
  CHECK(run({"represent", "--base", "nowhere"}, to_json(hex).dump()).code == exit_parse);
}

TEST_CASE("linmedium piped into graph --dot") {
  Run lin = run({"linmedium", "3"});
  REQUIRE(lin.code == exit_ok);
  Json j = Json::parse(lin.out);
  CHECK(j["orders"] == Json{"123", "132", "213", "231", "312", "321"});
  CHECK(j["family"]["ground"] == Json{"12", "13", "23"});

  Run dot = run({"graph", "--dot"}, lin.out);
  CHECK(dot.code == exit_ok);
  CHECK(dot.out.rfind("graph \"medium\" {", 0) == 0);
  std::size_t edges = 0;
  for (std::size_t p = dot.out.find(" -- "); p != std::string::npos; p = dot.out.find(" -- ", p + 1)) ++edges;
  CHECK(edges == 6);

  Run graph_json = run({"graph"}, lin.out);
  CHECK(Json::parse(graph_json.out)["edges"].size() == 6);

  Run lin_dot = run({"linmedium", "3", "--dot", "-"});
  CHECK(lin_dot.out.find("tooltip=\"{12,13,23}\"") != std::string::npos);
}

TEST_CASE("pcube") {
  Run k3 = run({"pcube"}, "a b\nb c\nc a\n");
  CHECK(k3.code == exit_false);
  Json j = Json::parse(k3.out);
  CHECK(j["partial_cube"] == false);
  CHECK(j["rejection"] == "odd-cycle");
  CHECK(j["odd_cycle"].size() == 3);

  Run c6 = run({"pcube"}, "1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n");
  CHECK(c6.code == exit_ok);
  Json k = Json::parse(c6.out);
  CHECK(k["partial_cube"] == true);
  CHECK(k["ground"].size() == 3);
  CHECK(k["labels"]["1"] == Json::array());

  CHECK(run({"pcube"}, "a b\nc d\n").code == exit_parse);
  CHECK(run({"pcube"}, "{\"vertices\": [").code == exit_parse);
  CHECK(run({"pcube", "--max-states", "3"}, "1 2\n2 3\n3 4\n4 1\n").code == exit_cap);
}

TEST_CASE("iso") {
  std::string f = write_temp("f.json", to_json(family_to_medium(corpus::hexagon_f())).dump());
  std::string fp = write_temp("fp.json", to_json(family_to_medium(corpus::hexagon_f_prime())).dump());
  std::string lin = write_temp("lin.json", run({"linmedium", "3"}).out);
  std::string cyc = write_temp("cyc.json", to_json(corpus::three_cycle()).dump());

  Run no = run({"iso", f, fp});
  CHECK(no.code == exit_false);
  CHECK(Json::parse(no.out)["isomorphic"] == false);

  Run yes = run({"iso", f, lin});
  CHECK(yes.code == exit_ok);
  Json j = Json::parse(yes.out);
  CHECK(j["isomorphic"] == true);
  CHECK(j["alpha"].size() == 6);
  CHECK(j["beta"].size() == 6);

  CHECK(run({"iso", f, cyc}).code == exit_false);
  CHECK(run({"iso", f}).code == exit_parse);
  CHECK(run({"iso", f, "/nonexistent/path.json"}).code == exit_parse);
}

TEST_CASE("arrangement and mosaic") {
  Run three = run({"arrangement"}, R"({"lines":[{"a":"1","b":"0","c":"0"},{"a":"0","b":"1","c":"0"},{"a":"1","b":"1","c":"0"}]})");
  CHECK(three.code == exit_ok);
  Json j = Json::parse(three.out);
  CHECK(j["regions"].size() == 6);
  CHECK(j["graph"]["edges"].size() == 6);
  CHECK(j["decision"]["medium"] == true);

  Run bad = run({"arrangement"}, R"({"lines":[{"a":"1/0","b":"0","c":"0"}]})");
  CHECK(bad.code == exit_parse);
  CHECK(bad.err.find("$.lines[0].a") != std::string::npos);

  Run tri = run({"mosaic", "triangular", "--radius", "1"});
  CHECK(tri.code == exit_ok);
  Json t = Json::parse(tri.out);
  CHECK(t["kind"] == "triangular");
  CHECK(t["graph"]["partial_cube"] == true);

  CHECK(run({"mosaic", "truncated-square", "--dot"}).out.rfind("graph \"regions\" {", 0) == 0);
  CHECK(run({"mosaic", "penrose"}).code == exit_parse);
  CHECK(run({"mosaic", "triangular", "--radius", "0"}).code == exit_parse);
  CHECK(run({"--max-states", "10", "mosaic", "triangular", "--radius", "2"}).code == exit_cap);
}

TEST_CASE("caps and usage errors") {
  CHECK(run({"linmedium", "8"}).code == exit_cap);
  CHECK(run({"linmedium", "4", "--cap", "3"}).code == exit_cap);
  CHECK(run({"linmedium", "1"}).code == exit_parse);
  CHECK(run({}).code == exit_parse);
  CHECK(run({"frobnicate"}).code == exit_parse);
  CHECK(run({"--help"}).code == exit_ok);
  CHECK(run({"check"}, "{\"states\": [\"S\"").code == exit_parse);
  CHECK(run({"check"}, "{\"states\": [\"S\"").err.find("<stdin>:1:") != std::string::npos);
}

TEST_CASE("outputs are deterministic") {
  std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"check"}, to_json(family_to_medium(corpus::rank_example())).dump()},
      {{"represent"}, to_json(linear_medium(4).medium).dump()},
      {{"graph", "--dot"}, to_json(linear_medium(4).medium).dump()},
      {{"pcube"}, "a b\nb c\nc d\nd a\n"},
      {{"linmedium", "4"}, ""},
      {{"mosaic", "truncated-square"}, ""},
  };
  for (const auto& [args, input] : cases) {
    Run a = run(args, input);
    Run b = run(args, input);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
