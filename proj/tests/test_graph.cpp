#include <doctest.h>

#include "refmon/exception.hpp"
#include "refmon/graph.hpp"
#include "refmon/wild.hpp"
#include "support.hpp"

using namespace refmon;

namespace {

  char const* const e0c0Text = R"(graph E0C0
vertices u x0 y0 z0
arrow e1 u -> y0
arrow e2 u -> x0
arrow f1 u -> z0
arrow f2 u -> x0
separation u : {e1 e2} {f1 f2}
)";

  char const* const emitterText = R"(graph Em
vertices v z
arrow e1 v -> z
arrow e2 v -> z
arrow e3 v -> z
emitter v : e1 e2 e3 depth 2
)";

  SearchBound wide() {
    return {20, 20000, 5};
  }

}  // namespace

TEST_CASE("parseGraph: separated graph E0C0") {
  auto g = parseGraph(e0c0Text);
  CHECK(g.separated);
  CHECK(g.sep.graph.vertices().size() == 4);
  CHECK(g.sep.graph.arrows().size() == 4);
  REQUIRE(g.sep.classes("u").size() == 2);
  CHECK((g.sep.classes("u")[0] == ArrowSet{"e1", "e2"}));
  CHECK(g.sep.classes("x0").empty());
  CHECK(isRowFinite(g));

  auto again = parseGraph(writeGraph(g));
  CHECK((writeGraph(again) == writeGraph(g)));
}

TEST_CASE("parseGraph: loops and errors") {
  auto g = parseGraph("graph L\nvertices v\narrow e v -> v\n");
  CHECK(!g.separated);
  CHECK(g.sep.classes("v").size() == 1);

  CHECK_THROWS_AS(parseGraph("graph B\nvertices v\narrow e v -> w\n"), ParseError);
  CHECK_THROWS_AS(parseGraph("graph B\nvertices v w\narrow e1 v -> w\n"
                             "arrow e2 v -> w\nseparation v : {e1 e1} {e2}\n"),
                  ParseError);
  CHECK_THROWS_AS(parseGraph("graph B\nvertices v w\narrow e1 v -> w\n"
                             "arrow e2 v -> w\nseparation v : {e1}\n"),
                  ParseError);
  CHECK_THROWS_AS(parseGraph("vertices v\n"), ParseError);
  CHECK_THROWS_AS(parseGraph("graph B\nvertices v w\narrow e1 v -> w\n"
                             "emitter v : e1 e1 depth 1\n"),
                  ParseError);
}

TEST_CASE("unseparation") {
  DirectedGraph g("P");
  g.addVertex("v");
  g.addVertex("w1");
  g.addVertex("w2");
  g.addArrow("e1", "v", "w1");
  g.addArrow("e2", "v", "w2");
  auto sg = unseparation(g);
  REQUIRE(sg.classes("v").size() == 1);
  CHECK((sg.classes("v")[0] == ArrowSet{"e1", "e2"}));
  CHECK(sg.classes("w1").empty());
  auto p = presentFinitelySeparated(sg);
  REQUIRE(p.relations().size() == 1);
  CHECK((p.relationString(0) == "v = w1 + w2"));

  DirectedGraph sinks("S");
  sinks.addVertex("a");
  sinks.addVertex("b");
  CHECK(unseparation(sinks).C.empty());

  auto u = unseparation(builtinGraph(BuiltinGraph::E0C0).graph);
  REQUIRE(u.classes("u").size() == 1);
  CHECK(u.classes("u")[0].size() == 4);
}

TEST_CASE("presentFinitelySeparated: E0C0 and a loop") {
  auto p = presentFinitelySeparated(builtinGraph(BuiltinGraph::E0C0));
  CHECK((p.generators().names() == std::vector<std::string>{"u", "x0", "y0", "z0"}));
  REQUIRE(p.relations().size() == 2);
  CHECK((p.relationString(0) == "u = x0 + y0"));
  CHECK((p.relationString(1) == "u = x0 + z0"));

  auto m0 = parsePresentation("monoid M0\ngenerators x0 y0 z0\n"
                              "relation x0 + y0 = x0 + z0\n");
  std::vector<Word> phi{m0.word("x0 + y0"), m0.word("x0"), m0.word("y0"),
                        m0.word("z0")};
  std::vector<Word> psi{p.word("x0"), p.word("y0"), p.word("z0")};
  auto              rep = compareUnderMaps(p, m0, phi, psi, 4, wide());
  CHECK((rep.overall() == Verdict::holds));

  auto loop = presentFinitelySeparated(
      parseGraph("graph L\nvertices v\narrow e v -> v\n").sep);
  CHECK(loop.relations().empty());
  auto c = enumerateClass(loop, loop.word("3*v"));
  CHECK(c.exhausted);
  CHECK((c.members.size() == 1));
}

TEST_CASE("presentTriple") {
  SSTriple t{builtinGraph(BuiltinGraph::E0C0), {}};
  t.S = {{"e1", "e2"}, {"f1", "f2"}};
  auto p = presentTriple(t, 3);
  CHECK(p.generators().find("q__e1__e2"));
  CHECK(p.generators().find("q__f2"));
  auto fs = presentFinitelySeparated(t.sep);
  // q'_Z -> sum of r(e) over X minus Z; the zero relations keep classes of p
  // infinite under search, so only the two-way maps are compared
  std::vector<Word> phi, psi;
  for (auto const& v : fs.generators().names()) {
    phi.push_back(p.generator(v));
  }
  for (auto const& name : p.generators().names()) {
    if (fs.generators().find(name)) {
      psi.push_back(fs.generator(name));
      continue;
    }
    auto w = fs.zero();
    for (auto const& X : t.sep.classes("u")) {
      if (name.find(X[0]) == std::string::npos && name.find(X[1]) == std::string::npos) {
        continue;
      }
      for (auto const& e : X) {
        if (name.find("__" + e) == std::string::npos) {
          w += fs.generator(t.sep.graph.arrow(e).range);
        }
      }
    }
    psi.push_back(w);
  }
  auto rep = compareUnderMaps(fs, p, phi, psi, 0, wide());
  INFO(rep.detail);
  CHECK((rep.maps == Verdict::holds));

  DirectedGraph g("One");
  g.addVertex("v");
  g.addVertex("w");
  g.addArrow("e", "v", "w");
  SSTriple one{unseparation(g), {}};
  auto     q = presentTriple(one, 3);
  CHECK((q.generators().names() == std::vector<std::string>{"v", "w", "q__e"}));
  REQUIRE(q.relations().size() == 1);
  CHECK((q.relationString(0) == "v = w + q__e"));
  CHECK(decideEqual(q, q.word("q__e"), q.zero(), wide()).isFails());
  CHECK(decideLeq(q, q.word("w"), q.word("v")).isHolds());

  CHECK_THROWS_AS(presentTriple(one, 0), PreconditionError);
  SSTriple bad{unseparation(g), {{"zz"}}};
  CHECK_THROWS(presentTriple(bad, 3));
}

TEST_CASE("tildeConstruction") {
  auto spec = parseGraph(emitterText);
  CHECK(!isRowFinite(spec));
  auto t = tildeConstruction(spec.sep.graph, spec.emitters);
  CHECK((t.vertices() == std::vector<std::string>{"v", "z", "w_v_1", "w_v_2"}));
  CHECK(t.arrows().size() == 4);
  CHECK((t.arrow("e1").source == "v"));
  CHECK((t.arrow("e2").source == "w_v_1"));
  CHECK((t.arrow("e2").range == "z"));
  CHECK(!t.hasArrow("e3"));
  CHECK((t.arrow("t_v_1").range == "w_v_1"));
  CHECK((t.arrow("t_v_2").source == "w_v_1"));
  CHECK(t.isSink("w_v_2"));

  auto rep = compareTildeWithEmitters(spec.sep.graph, spec.emitters, 5, wide());
  CHECK((rep.overall() == Verdict::holds));

  auto plain = builtinGraph(BuiltinGraph::E0C0).graph;
  auto same  = tildeConstruction(plain, {});
  CHECK((same.vertices() == plain.vertices()));
  CHECK(same.arrows().size() == plain.arrows().size());

  CHECK_THROWS(tildeConstruction(spec.sep.graph, {{"v", {"e1", "e2", "e3"}, 0}}));
  CHECK_THROWS(tildeConstruction(spec.sep.graph, {{"v", {"e1", "e2"}, 1}}));
}

TEST_CASE("builtin graphs against the truncations") {
  auto e0 = builtinGraph(BuiltinGraph::E0C0);
  CHECK(e0.graph.vertices().size() == 4);
  CHECK(e0.graph.arrows().size() == 4);
  CHECK(e0.classes("u").size() == 2);

  for (auto which : {BuiltinGraph::EC, BuiltinGraph::EbarCbar}) {
    auto rep = compareWithTruncation(which, 1, 3, wide());
    INFO(rep.detail);
    CHECK((rep.overall() == Verdict::holds));
  }
  auto rep2 = compareWithTruncation(BuiltinGraph::EC, 2, 2, wide());
  CHECK((rep2.maps == Verdict::holds));
}

TEST_CASE("graph monoids: path order and conicality") {
  for (auto sg : {builtinGraph(BuiltinGraph::E0C0), builtinGraph(BuiltinGraph::EC, 2),
                  builtinGraph(BuiltinGraph::EbarCbar, 2)}) {
    auto p = presentFinitelySeparated(sg);
    for (auto const& a : sg.graph.arrows()) {
      auto d = decideLeq(p, p.generator(a.range), p.generator(a.source));
      CHECK(d.isHolds());
    }
    for (auto const& v : sg.graph.vertices()) {
      CHECK(decideEqual(p, p.generator(v), p.zero()).isFails());
    }
  }
}
