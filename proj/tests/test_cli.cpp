#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "refmon/cli.hpp"
#include "refmon/graph.hpp"
#include "refmon/presentation.hpp"

using namespace refmon;

namespace {

  struct Run {
    int         code;
    std::string out, err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream o, e;
    int                c = runCli(args, o, e);
    return {c, o.str(), e.str()};
  }

  std::string data(char const* f) {
    return std::string(REFMON_TEST_DATA) + "/" + f;
  }

  std::string temp(char const* name, std::string const& body) {
    auto          path = std::string(REFMON_TEST_TMP) + "/" + name;
    std::ofstream f(path);
    f << body;
    return path;
  }

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"wild", "M", "eq", "x0 + y0", "x0 + z0"}).code == 0);
  CHECK(run({"wild", "M", "eq", "y0", "z0"}).code == 1);
  CHECK(run({"eq", "M0", "x0 + y0", "x0 + z0"}).code == 0);
  CHECK(run({"check", "M1", "--prop", "CANCELLATIVE", "--max-degree", "3"}).code == 1);
  CHECK(run({"check", "M1", "--prop", "SEPARATIVE", "--max-degree", "3"}).code == 0);
  CHECK(run({"eq", data("m0.pres"), "y0", "z0"}).code == 1);
  CHECK(run({"refine", data("m0.pres"), "x0", "y0", "x0", "z0", "--max-degree", "4"}).code == 1);
  CHECK(run({"check", "M1", "--prop", "NOPE"}).code == 3);
  CHECK(run({"eq", "nofile.pres", "a", "b"}).code == 3);
  CHECK(run({}).code == 3);
}

TEST_CASE("check output names the bound and is deterministic") {
  std::vector<std::string> args{"check", "Mbar1", "--prop", "CANCELLATIVE,ARCHIMEDEAN",
                                "--max-degree", "3", "--format", "json"};
  auto a = run(args), b = run(args);
  auto strip = [](std::string s) { return s.substr(s.find('\n', s.find("timing"))); };
  CHECK((strip(a.out) == strip(b.out)));
  auto j = nlohmann::json::parse(a.out);
  CHECK((j["reports"][0]["verdict"] == "FAILS"));
  CHECK((j["reports"][0]["witnesses"] == nlohmann::json{"xbar0", "ybar0", "zbar0"}));
  CHECK((j["reports"][0]["bound"]["max_degree"] == 3));
  auto t = run({"check", "M1", "--prop", "SEPARATIVE", "--max-degree", "3"});
  CHECK((t.out.find("maxDegree=3") != std::string::npos));
}

TEST_CASE("converters") {
  auto g = run({"graph-monoid", data("e0c0.graph")});
  REQUIRE(g.code == 0);
  auto p = parsePresentation(g.out);
  CHECK(p.relations().size() == 2);
  CHECK((writePresentation(p) == g.out));

  auto t = run({"tilde", data("emitter.graph")});
  REQUIRE(t.code == 0);
  auto spec = parseGraph(t.out);
  CHECK(isRowFinite(spec));
  CHECK(spec.sep.graph.vertices().size() == 4);

  auto q = run({"poset", data("ef.poset")});
  CHECK((q.out == "monoid EF\ngenerators e f\nrelation e + f = f\n"));

  auto bad = temp("bad.graph", "graph B\nvertices v\narrow e v -> w\n");
  auto r   = run({"graph-monoid", bad});
  CHECK(r.code == 3);
  CHECK((r.err.find("line 3") != std::string::npos));
}

TEST_CASE("suite runner") {
  auto empty = temp("empty.json", R"({"name": "empty", "cases": []})");
  auto e     = run({"suite", empty});
  CHECK(e.code == 0);

  auto wrong = temp("wrong.json", R"({"name": "wrong", "cases": [
    {"name": "M cancellative", "comment": "M is wild",
     "args": ["check", "M1", "--prop", "CANCELLATIVE", "--max-degree", "3"],
     "expect": "HOLDS"}]})");
  auto out = std::string(REFMON_TEST_TMP) + "/wrong-report.json";
  auto w   = run({"suite", wrong, "--out", out});
  CHECK(w.code == 1);
  std::ifstream f(out);
  auto          j = nlohmann::json::parse(f);
  CHECK((j["mismatches"] == 1));
  CHECK((j["cases"][0]["got"] == "FAILS"));

  CHECK(run({"suite", temp("broken.json", "{")}).code == 3);
}
