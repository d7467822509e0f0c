#include "refmon/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "refmon/exception.hpp"
#include "refmon/wild.hpp"
#include "text.hpp"

namespace refmon {

  void DirectedGraph::addVertex(std::string v) {
    if (!is_identifier(v)) {
      throw Error("invalid vertex name '" + v + "'");
    }
    if (_vindex.count(v) != 0) {
      throw Error("duplicate vertex '" + v + "'");
    }
    _vindex.emplace(v, _vertices.size());
    _vertices.push_back(std::move(v));
  }

  void DirectedGraph::addArrow(std::string        name,
                               std::string const& src,
                               std::string const& rng) {
    if (!is_identifier(name)) {
      throw Error("invalid arrow name '" + name + "'");
    }
    if (_aindex.count(name) != 0) {
      throw Error("duplicate arrow '" + name + "'");
    }
    for (auto const* v : {&src, &rng}) {
      if (!hasVertex(*v)) {
        throw Error("arrow '" + name + "' references unknown vertex '" + *v
                    + "'");
      }
    }
    _aindex.emplace(name, _arrows.size());
    _arrows.push_back({std::move(name), src, rng});
  }

  bool DirectedGraph::hasVertex(std::string_view v) const {
    return _vindex.find(v) != _vindex.end();
  }

  bool DirectedGraph::hasArrow(std::string_view name) const {
    return _aindex.find(name) != _aindex.end();
  }

  Arrow const& DirectedGraph::arrow(std::string_view name) const {
    auto it = _aindex.find(name);
    if (it == _aindex.end()) {
      throw Error("unknown arrow '" + std::string(name) + "'");
    }
    return _arrows[it->second];
  }

  std::vector<std::string> DirectedGraph::outArrows(std::string_view v) const {
    std::vector<std::string> out;
    for (auto const& a : _arrows) {
      if (a.source == v) {
        out.push_back(a.name);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // separated graphs
  ////////////////////////////////////////////////////////////////////////

  void SeparatedGraph::validate() const {
    for (auto const& [v, sets] : C) {
      if (!graph.hasVertex(v)) {
        throw Error("separation at unknown vertex '" + v + "'");
      }
    }
    for (auto const& v : graph.vertices()) {
      auto out = graph.outArrows(v);
      auto it  = C.find(v);
      if (it == C.end() || it->second.empty()) {
        if (!out.empty()) {
          throw Error("C_" + v + " does not cover the arrows leaving " + v);
        }
        continue;
      }
      std::set<std::string> seen;
      for (auto const& X : it->second) {
        if (X.empty()) {
          throw Error("empty member in C_" + v);
        }
        for (auto const& e : X) {
          if (!graph.hasArrow(e) || graph.arrow(e).source != v) {
            throw Error("arrow '" + e + "' in C_" + v + " does not leave " + v);
          }
          if (!seen.insert(e).second) {
            throw Error("arrow '" + e + "' listed twice in C_" + v);
          }
        }
      }
      if (seen.size() != out.size()) {
        throw Error("C_" + v + " does not cover the arrows leaving " + v);
      }
    }
  }

  std::vector<ArrowSet> const&
  SeparatedGraph::classes(std::string_view v) const {
    static std::vector<ArrowSet> const none;
    auto                               it = C.find(v);
    return it == C.end() ? none : it->second;
  }

  void SSTriple::validate() const {
    sep.validate();
    for (auto const& X : S) {
      bool found = false;
      if (!X.empty() && sep.graph.hasArrow(X.front())) {
        auto const& v = sep.graph.arrow(X.front()).source;
        for (auto const& Y : sep.classes(v)) {
          if (std::is_permutation(X.begin(), X.end(), Y.begin(), Y.end())) {
            found = true;
          }
        }
      }
      if (!found) {
        throw Error("member of S is not a member of C");
      }
    }
  }

  SeparatedGraph unseparation(DirectedGraph const& g) {
    SeparatedGraph sg{g, {}};
    for (auto const& v : g.vertices()) {
      auto out = g.outArrows(v);
      if (!out.empty()) {
        sg.C[v] = {out};
      }
    }
    return sg;
  }

  ////////////////////////////////////////////////////////////////////////
  // file format
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::vector<ArrowSet> parseBraces(std::size_t lineno, std::string_view s) {
      std::vector<ArrowSet> out;
      std::size_t           i = 0;
      while (true) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        if (i == s.size()) {
          break;
        }
        if (s[i] != '{') {
          throw ParseError(lineno, "expected '{' in separation");
        }
        auto close = s.find('}', i);
        if (close == std::string_view::npos) {
          throw ParseError(lineno, "unclosed '{' in separation");
        }
        ArrowSet X;
        for (auto tok : detail::split(s.substr(i + 1, close - i - 1))) {
          X.emplace_back(tok);
        }
        if (X.empty()) {
          throw ParseError(lineno, "empty arrow set in separation");
        }
        out.push_back(std::move(X));
        i = close + 1;
      }
      return out;
    }

    // "<v> : rest"
    std::pair<std::string, std::string_view> splitColon(std::size_t      lineno,
                                                        std::string_view line,
                                                        char const*      kw) {
      auto body  = detail::trim(line.substr(std::string_view(kw).size()));
      auto colon = body.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(lineno, std::string("expected '") + kw + " <v> : ...'");
      }
      auto v = detail::trim(body.substr(0, colon));
      if (!is_identifier(v)) {
        throw ParseError(lineno, "invalid vertex '" + std::string(v) + "'");
      }
      return {std::string(v), body.substr(colon + 1)};
    }

  }  // namespace

  GraphSpec parseGraph(std::string_view text) {
    struct Line {
      std::size_t      no;
      std::string_view text;
    };
    std::vector<Line> vertexLines, arrowLines, sepLines, emitterLines;
    std::optional<std::string> name;
    detail::forEachLine(text, [&](std::size_t lineno, std::string_view line) {
      auto tokens = detail::split(line);
      auto kw     = tokens.front();
      if (kw == "graph") {
        if (tokens.size() != 2 || !is_identifier(tokens[1])) {
          throw ParseError(lineno, "expected 'graph <name>'");
        }
        if (name) {
          throw ParseError(lineno, "second 'graph' line");
        }
        name = std::string(tokens[1]);
      } else if (kw == "vertices") {
        vertexLines.push_back({lineno, line});
      } else if (kw == "arrow") {
        arrowLines.push_back({lineno, line});
      } else if (kw == "separation") {
        sepLines.push_back({lineno, line});
      } else if (kw == "emitter") {
        emitterLines.push_back({lineno, line});
      } else {
        throw ParseError(lineno, "unknown keyword '" + std::string(kw) + "'");
      }
    });
    if (!name) {
      throw ParseError(1, "missing 'graph <name>' line");
    }
    GraphSpec spec;
    auto&     g = spec.sep.graph;
    g.rename(*name);
    for (auto const& l : vertexLines) {
      auto tokens = detail::split(l.text);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        try {
          g.addVertex(std::string(tokens[i]));
        } catch (ParseError const&) {
          throw;
        } catch (Error const& e) {
          throw ParseError(l.no, e.what());
        }
      }
    }
    for (auto const& l : arrowLines) {
      auto tokens = detail::split(l.text);
      if (tokens.size() != 5 || tokens[3] != "->") {
        throw ParseError(l.no, "expected 'arrow <id> <v> -> <w>'");
      }
      try {
        g.addArrow(std::string(tokens[1]), std::string(tokens[2]),
                   std::string(tokens[4]));
      } catch (Error const& e) {
        throw ParseError(l.no, e.what());
      }
    }
    for (auto const& l : sepLines) {
      auto [v, rest] = splitColon(l.no, l.text, "separation");
      if (!g.hasVertex(v)) {
        throw ParseError(l.no, "separation at unknown vertex '" + v + "'");
      }
      if (spec.sep.C.count(v) != 0) {
        throw ParseError(l.no, "second separation line for '" + v + "'");
      }
      spec.sep.C[v] = parseBraces(l.no, rest);
    }
    spec.separated = !sepLines.empty();
    for (auto const& v : g.vertices()) {
      if (spec.sep.C.count(v) == 0) {
        auto out = g.outArrows(v);
        if (!out.empty()) {
          spec.sep.C[v] = {out};
        }
      }
    }
    try {
      spec.sep.validate();
    } catch (Error const& e) {
      throw ParseError(sepLines.empty() ? 1 : sepLines.front().no, e.what());
    }
    for (auto const& l : emitterLines) {
      auto [v, rest] = splitColon(l.no, l.text, "emitter");
      auto        tokens = detail::split(rest);
      EmitterSpec em;
      em.vertex = v;
      if (tokens.size() < 3 || tokens[tokens.size() - 2] != "depth") {
        throw ParseError(l.no, "expected 'emitter <v> : <arrow> ... depth <n>'");
      }
      try {
        em.depth = std::stoul(std::string(tokens.back()));
      } catch (std::exception const&) {
        throw ParseError(l.no, "invalid depth");
      }
      for (std::size_t i = 0; i + 2 < tokens.size(); ++i) {
        em.arrows.emplace_back(tokens[i]);
      }
      spec.emitters.push_back(std::move(em));
    }
    try {
      tildeConstruction(g, spec.emitters);
    } catch (Error const& e) {
      throw ParseError(emitterLines.empty() ? 1 : emitterLines.front().no,
                       e.what());
    }
    return spec;
  }

  std::string writeGraph(GraphSpec const& spec) {
    auto const&        g = spec.sep.graph;
    std::ostringstream os;
    os << "graph " << (g.name().empty() ? "G" : g.name()) << "\n";
    os << "vertices";
    for (auto const& v : g.vertices()) {
      os << " " << v;
    }
    os << "\n";
    for (auto const& a : g.arrows()) {
      os << "arrow " << a.name << " " << a.source << " -> " << a.range << "\n";
    }
    if (spec.separated) {
      for (auto const& v : g.vertices()) {
        auto const& cls = spec.sep.classes(v);
        if (cls.empty()) {
          continue;
        }
        os << "separation " << v << " :";
        for (auto const& X : cls) {
          os << " {";
          for (std::size_t i = 0; i < X.size(); ++i) {
            os << (i ? " " : "") << X[i];
          }
          os << "}";
        }
        os << "\n";
      }
    }
    for (auto const& em : spec.emitters) {
      os << "emitter " << em.vertex << " :";
      for (auto const& e : em.arrows) {
        os << " " << e;
      }
      os << " depth " << em.depth << "\n";
    }
    return os.str();
  }

  std::string writeGraph(SeparatedGraph const& g) {
    return writeGraph(GraphSpec{g, true, {}});
  }

  ////////////////////////////////////////////////////////////////////////
  // presentations
  ////////////////////////////////////////////////////////////////////////

  namespace {

    GeneratorSet vertexGenerators(DirectedGraph const& g) {
      GeneratorSet gens;
      for (auto const& v : g.vertices()) {
        gens.add(v);
      }
      return gens;
    }

    std::string presentationName(DirectedGraph const& g) {
      return "M_" + (g.name().empty() ? std::string("G") : g.name());
    }

  }  // namespace

  Presentation presentFinitelySeparated(SeparatedGraph const& sg) {
    sg.validate();
    auto const&  g = sg.graph;
    Presentation p(presentationName(g), vertexGenerators(g));
    for (auto const& v : g.vertices()) {
      for (auto const& X : sg.classes(v)) {
        auto rhs = p.zero();
        for (auto const& e : X) {
          rhs += p.generator(g.arrow(e).range);
        }
        p.addRelation(p.generator(v), rhs);
      }
    }
    return p;
  }

  std::string qPrimeName(ArrowSet const& Z) {
    std::string s = "q";
    for (auto const& e : Z) {
      s += "__" + e;
    }
    return s;
  }

  Presentation presentTriple(SSTriple const& t, std::size_t zCap) {
    if (zCap < 1) {
      throw PreconditionError("zCap must be at least 1");
    }
    t.validate();
    auto const& g = t.sep.graph;
    auto        inS = [&](ArrowSet const& X) {
      return std::any_of(t.S.begin(), t.S.end(), [&](ArrowSet const& Y) {
        return std::is_permutation(X.begin(), X.end(), Y.begin(), Y.end());
      });
    };
    // (vertex, X, subsets Z of X in subset order)
    struct Block {
      std::string           v;
      ArrowSet              X;
      std::vector<ArrowSet> subsets;
    };
    std::vector<Block> blocks;
    GeneratorSet       gens = vertexGenerators(g);
    for (auto const& v : g.vertices()) {
      for (auto const& X : t.sep.classes(v)) {
        Block b{v, X, {}};
        if (X.size() >= 64) {
          throw PreconditionError("member of C too large");
        }
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << X.size());
             ++mask) {
          ArrowSet Z;
          for (std::size_t i = 0; i < X.size(); ++i) {
            if (mask & (std::uint64_t(1) << i)) {
              Z.push_back(X[i]);
            }
          }
          if (Z.size() <= zCap || (Z.size() == X.size() && inS(X))) {
            auto n = qPrimeName(Z);
            if (gens.find(n)) {
              throw Error("generator name clash on '" + n + "'");
            }
            gens.add(n);
            b.subsets.push_back(std::move(Z));
          }
        }
        blocks.push_back(std::move(b));
      }
    }
    Presentation p(presentationName(g), std::move(gens));
    auto         ranges = [&](ArrowSet const& Z, ArrowSet const& minus) {
      auto w = p.zero();
      for (auto const& e : Z) {
        if (std::find(minus.begin(), minus.end(), e) == minus.end()) {
          w += p.generator(g.arrow(e).range);
        }
      }
      return w;
    };
    for (auto const& b : blocks) {
      for (auto const& Z : b.subsets) {
        p.addRelation(p.generator(b.v), p.generator(qPrimeName(Z)) + ranges(Z, {}));
      }
      for (auto const& Z1 : b.subsets) {
        for (auto const& Z2 : b.subsets) {
          if (Z1.size() >= Z2.size()
              || !std::all_of(Z1.begin(), Z1.end(), [&](auto const& e) {
                   return std::find(Z2.begin(), Z2.end(), e) != Z2.end();
                 })) {
            continue;
          }
          p.addRelation(p.generator(qPrimeName(Z1)),
                        p.generator(qPrimeName(Z2)) + ranges(Z2, Z1));
        }
      }
      if (inS(b.X)) {
        p.addRelation(p.generator(qPrimeName(b.X)), p.zero());
      }
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // tilde construction
  ////////////////////////////////////////////////////////////////////////

  std::string tildeVertexName(std::string_view v, std::size_t n) {
    return "w_" + std::string(v) + "_" + std::to_string(n);
  }

  std::string emitterGeneratorName(std::string_view v, std::size_t n) {
    return "q_" + std::string(v) + "_" + std::to_string(n);
  }

  namespace {

    void checkEmitters(DirectedGraph const&            g,
                       std::vector<EmitterSpec> const& emitters) {
      std::set<std::string> seenV;
      for (auto const& em : emitters) {
        if (!g.hasVertex(em.vertex)) {
          throw Error("emitter at unknown vertex '" + em.vertex + "'");
        }
        if (!seenV.insert(em.vertex).second) {
          throw Error("vertex '" + em.vertex + "' designated twice");
        }
        if (em.depth < 1) {
          throw PreconditionError("emitter depth must be at least 1");
        }
        std::set<std::string> seen;
        for (auto const& e : em.arrows) {
          if (!seen.insert(e).second) {
            throw Error("arrow '" + e + "' repeated in emitter enumeration");
          }
          if (!g.hasArrow(e) || g.arrow(e).source != em.vertex) {
            throw Error("arrow '" + e + "' does not leave '" + em.vertex + "'");
          }
        }
        if (seen.size() != g.outArrows(em.vertex).size()) {
          throw Error("emitter enumeration of '" + em.vertex
                      + "' misses an arrow");
        }
        if (em.arrows.size() < em.depth) {
          throw PreconditionError("emitter '" + em.vertex
                                  + "' has fewer arrows than its depth");
        }
      }
    }

    EmitterSpec const* emitterAt(std::vector<EmitterSpec> const& emitters,
                                 std::string_view                v) {
      for (auto const& em : emitters) {
        if (em.vertex == v) {
          return &em;
        }
      }
      return nullptr;
    }

  }  // namespace

  DirectedGraph tildeConstruction(DirectedGraph const&            g,
                                  std::vector<EmitterSpec> const& emitters) {
    checkEmitters(g, emitters);
    DirectedGraph out(g.name().empty() ? "Etilde" : g.name() + "_tilde");
    for (auto const& v : g.vertices()) {
      out.addVertex(v);
    }
    for (auto const& em : emitters) {
      for (std::size_t n = 1; n <= em.depth; ++n) {
        auto w = tildeVertexName(em.vertex, n);
        if (out.hasVertex(w)) {
          throw Error("vertex name clash on '" + w + "'");
        }
        out.addVertex(w);
      }
    }
    for (auto const& a : g.arrows()) {
      if (emitterAt(emitters, a.source) == nullptr) {
        out.addArrow(a.name, a.source, a.range);
      }
    }
    for (auto const& em : emitters) {
      auto const& e1 = g.arrow(em.arrows[0]);
      out.addArrow(e1.name, em.vertex, e1.range);
      auto arrowName = [&](std::size_t n) {
        auto s = "t_" + em.vertex + "_" + std::to_string(n);
        if (g.hasArrow(s)) {
          throw Error("arrow name clash on '" + s + "'");
        }
        return s;
      };
      out.addArrow(arrowName(1), em.vertex, tildeVertexName(em.vertex, 1));
      for (std::size_t n = 1; n < em.depth; ++n) {
        auto const& w = tildeVertexName(em.vertex, n);
        out.addArrow(arrowName(n + 1), w, tildeVertexName(em.vertex, n + 1));
        auto const& e = g.arrow(em.arrows[n]);
        out.addArrow(e.name, w, e.range);
      }
    }
    return out;
  }

  Presentation emitterPresentation(DirectedGraph const&            g,
                                   std::vector<EmitterSpec> const& emitters) {
    checkEmitters(g, emitters);
    GeneratorSet gens = vertexGenerators(g);
    for (auto const& em : emitters) {
      for (std::size_t n = 1; n <= em.depth; ++n) {
        gens.add(emitterGeneratorName(em.vertex, n));
      }
    }
    Presentation p(presentationName(g) + "_q", std::move(gens));
    for (auto const& v : g.vertices()) {
      if (auto const* em = emitterAt(emitters, v)) {
        auto r = [&](std::size_t i) {
          return p.generator(g.arrow(em->arrows[i]).range);
        };
        auto q = [&](std::size_t n) {
          return p.generator(emitterGeneratorName(v, n));
        };
        p.addRelation(p.generator(v), r(0) + q(1));
        for (std::size_t n = 1; n < em->depth; ++n) {
          p.addRelation(q(n), r(n) + q(n + 1));
        }
        continue;
      }
      auto out = g.outArrows(v);
      if (out.empty()) {
        continue;
      }
      auto rhs = p.zero();
      for (auto const& e : out) {
        rhs += p.generator(g.arrow(e).range);
      }
      p.addRelation(p.generator(v), rhs);
    }
    return p;
  }

  bool isRowFinite(GraphSpec const& g) {
    return g.emitters.empty();
  }

  ////////////////////////////////////////////////////////////////////////
  // built-in graphs
  ////////////////////////////////////////////////////////////////////////

  SeparatedGraph builtinGraph(BuiltinGraph which, std::size_t N) {
    auto num = [](std::size_t n) { return std::to_string(n); };
    if (which == BuiltinGraph::E0C0) {
      SeparatedGraph sg{DirectedGraph("E0C0"), {}};
      auto&          g = sg.graph;
      for (auto const* v : {"u", "x0", "y0", "z0"}) {
        g.addVertex(v);
      }
      g.addArrow("e1", "u", "y0");
      g.addArrow("e2", "u", "x0");
      g.addArrow("f1", "u", "z0");
      g.addArrow("f2", "u", "x0");
      sg.C["u"] = {{"e1", "e2"}, {"f1", "f2"}};
      sg.validate();
      return sg;
    }
    if (N < 1) {
      throw PreconditionError("truncation level must be at least 1");
    }
    bool           withA = which == BuiltinGraph::EC;
    SeparatedGraph sg{DirectedGraph((withA ? "EC" : "EbarCbar") + num(N)), {}};
    auto&          g = sg.graph;
    g.addVertex("u");
    for (std::size_t l = 0; l <= N; ++l) {
      if (l >= 1 && withA) {
        g.addVertex("a" + num(l));
      }
      g.addVertex("x" + num(l));
      g.addVertex("y" + num(l));
      g.addVertex("z" + num(l));
    }
    g.addArrow("e1", "u", "y0");
    g.addArrow("e2", "u", "x0");
    g.addArrow("f1", "u", "z0");
    g.addArrow("f2", "u", "x0");
    sg.C["u"] = {{"e1", "e2"}, {"f1", "f2"}};
    for (std::size_t l = 0; l < N; ++l) {
      auto L = num(l), L1 = num(l + 1);
      g.addArrow("yy" + L, "y" + L, "y" + L1);
      g.addArrow("zz" + L, "z" + L, "z" + L1);
      if (withA) {
        g.addArrow("ya" + L, "y" + L, "a" + L1);
        g.addArrow("za" + L, "z" + L, "a" + L1);
        sg.C["y" + L] = {{"yy" + L, "ya" + L}};
        sg.C["z" + L] = {{"zz" + L, "za" + L}};
      } else {
        sg.C["y" + L] = {{"yy" + L}};
        sg.C["z" + L] = {{"zz" + L}};
      }
      g.addArrow("xx" + L, "x" + L, "x" + L1);
      g.addArrow("xy" + L, "x" + L, "y" + L1);
      g.addArrow("xxp" + L, "x" + L, "x" + L1);
      g.addArrow("xz" + L, "x" + L, "z" + L1);
      sg.C["x" + L] = {{"xx" + L, "xy" + L}, {"xxp" + L, "xz" + L}};
    }
    sg.validate();
    return sg;
  }


  EquivalenceReport compareWithTruncation(BuiltinGraph       which,
                                          std::size_t        N,
                                          std::uint64_t      sweepDegree,
                                          SearchBound const& bound) {
    if (which == BuiltinGraph::E0C0) {
      throw PreconditionError("E0C0 has no truncation family");
    }
    bool bar = which == BuiltinGraph::EbarCbar;
    auto gp  = presentFinitelySeparated(builtinGraph(which, N));
    auto tp  = truncationPresentation(N, bar ? WildMonoid::Mbar : WildMonoid::M);
    auto img = [&](std::string const& v) -> std::string {
      if (v == "u") {
        return bar ? "xbar0 + ybar0" : "x0 + y0";
      }
      if (!bar) {
        return v;
      }
      if (v[0] == 'x') {
        return "xbar" + v.substr(1);
      }
      return std::string(1, v[0]) + "bar0";
    };
    std::vector<Word> phi, psi;
    for (auto const& v : gp.generators().names()) {
      phi.push_back(tp.word(img(v)));
    }
    for (auto const& t : tp.generators().names()) {
      auto v = bar ? t.substr(0, 1) + t.substr(4) : t;
      psi.push_back(gp.generator(v));
    }
    return compareUnderMaps(gp, tp, phi, psi, sweepDegree, bound);
  }

  EquivalenceReport compareTildeWithEmitters(DirectedGraph const&            g,
                                             std::vector<EmitterSpec> const& emitters,
                                             std::uint64_t      sweepDegree,
                                             SearchBound const& bound) {
    auto a = presentFinitelySeparated(unseparation(tildeConstruction(g, emitters)));
    auto b = emitterPresentation(g, emitters);
    std::map<std::string, std::string> rename;
    for (auto const& em : emitters) {
      for (std::size_t n = 1; n <= em.depth; ++n) {
        rename[tildeVertexName(em.vertex, n)] = emitterGeneratorName(em.vertex, n);
      }
    }
    auto name = [&](std::string const& s, bool forward) {
      for (auto const& [w, q] : rename) {
        if (forward && s == w) {
          return q;
        }
        if (!forward && s == q) {
          return w;
        }
      }
      return s;
    };
    std::vector<Word> phi, psi;
    for (auto const& v : a.generators().names()) {
      phi.push_back(b.generator(name(v, true)));
    }
    for (auto const& v : b.generators().names()) {
      psi.push_back(a.generator(name(v, false)));
    }
    return compareUnderMaps(a, b, phi, psi, sweepDegree, bound);
  }

}  // namespace refmon
