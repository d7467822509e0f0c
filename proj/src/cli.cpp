#include "refmon/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "refmon/exception.hpp"
#include "refmon/graph.hpp"
#include "refmon/lab.hpp"
#include "refmon/oracle.hpp"
#include "refmon/primitive.hpp"
#include "refmon/report.hpp"
#include "refmon/wild.hpp"

namespace refmon {

  namespace {

    constexpr int usageError = 3;

    std::string readFile(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw Error("cannot open " + path);
      }
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }

    // first keyword of the first non-comment line
    std::string headKeyword(std::string const& text) {
      std::istringstream in(text);
      std::string        line;
      while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string        w;
        if (ls >> w && w[0] != '#') {
          return w;
        }
      }
      return "";
    }

    // builtin name or a presentation / poset / graph file
    std::unique_ptr<MonoidOracle> loadOracle(std::string const& src, SearchBound const& b) {
      if (auto o = builtinOracle(src, b)) {
        return o;
      }
      auto text = readFile(src);
      auto head = headKeyword(text);
      if (head == "poset") {
        return std::make_unique<PrimitiveOracle>(parsePoset(text), b);
      }
      if (head == "graph") {
        auto g = parseGraph(text);
        if (!g.emitters.empty()) {
          return std::make_unique<PresentationOracle>(
              emitterPresentation(g.sep.graph, g.emitters), b);
        }
        return std::make_unique<PresentationOracle>(presentFinitelySeparated(g.sep), b);
      }
      return std::make_unique<PresentationOracle>(parsePresentation(text), b);
    }

    struct BoundFlags {
      std::uint64_t degree = 6, classSize = 20000, coeff = 5;

      void add(CLI::App* app) {
        app->add_option("--max-degree", degree, "degree bound")->capture_default_str();
        app->add_option("--max-class", classSize, "class size bound")->capture_default_str();
        app->add_option("--max-coeff", coeff, "multiplier bound")->capture_default_str();
      }
      SearchBound bound() const {
        SearchBound b{degree, classSize, coeff};
        b.validate();
        return b;
      }
    };

    int verdictExit(Verdict v) {
      return exitCode(std::vector<Verdict>{v});
    }

    template <typename Elem, typename Norm>
    std::string showMatrix(RefinementMatrix<Elem> const& m, Norm norm) {
      std::string s;
      for (std::size_t r = 0; r < 2; ++r) {
        s += "[" + norm(m(r, 0)) + " | " + norm(m(r, 1)) + "]\n";
      }
      return s;
    }

    ////////////////////////////////////////////////////////////////////
    // wild calculator
    ////////////////////////////////////////////////////////////////////

    template <typename Elem>
    struct WildOps;

    template <>
    struct WildOps<MElem> {
      static MElem parse(std::string const& s) {
        return parseMTerm(s);
      }
      static MElem norm(MElem e) {
        return mNormalize(std::move(e));
      }
      static MElem add(MElem const& a, MElem const& b) {
        return mAdd(a, b);
      }
      static bool eq(MElem const& a, MElem const& b) {
        return mEqual(a, b);
      }
      static std::optional<MElem> complement(MElem const& a, MElem const& b) {
        return mComplement(a, b);
      }
      static RefinementMatrix<MElem> refine(MElem const& a, MElem const& b, MElem const& c,
                                            MElem const& d) {
        return mRefine(a, b, c, d);
      }
    };

    template <>
    struct WildOps<MBarElem> {
      static MBarElem parse(std::string const& s) {
        return parseMBarTerm(s);
      }
      static MBarElem norm(MBarElem e) {
        return mbarNormalize(std::move(e));
      }
      static MBarElem add(MBarElem const& a, MBarElem const& b) {
        return mbarAdd(a, b);
      }
      static bool eq(MBarElem const& a, MBarElem const& b) {
        return mbarEqual(a, b);
      }
      static std::optional<MBarElem> complement(MBarElem const& a, MBarElem const& b) {
        return mbarComplement(a, b);
      }
      static RefinementMatrix<MBarElem> refine(MBarElem const& a, MBarElem const& b,
                                               MBarElem const& c, MBarElem const& d) {
        return mbarRefine(a, b, c, d);
      }
    };

    template <typename Elem>
    int wildCalc(std::string const&              op,
                 std::vector<std::string> const& terms,
                 std::string const&              ideal,
                 std::ostream&                   out) {
      using Ops = WildOps<Elem>;
      auto need = [&](std::size_t n) {
        if (terms.size() != n) {
          throw Error(op + " takes " + std::to_string(n) + " terms");
        }
      };
      auto show = [](Elem const& e) { return toString(Ops::norm(e)); };
      std::vector<Elem> xs;
      for (auto const& t : terms) {
        xs.push_back(Ops::parse(t));
      }
      if (op == "norm") {
        need(1);
        out << show(xs[0]) << "\n";
        return 0;
      }
      if (op == "add") {
        Elem s = xs.empty() ? Ops::parse("0") : xs[0];
        for (std::size_t i = 1; i < xs.size(); ++i) {
          s = Ops::add(s, xs[i]);
        }
        out << show(s) << "\n";
        return 0;
      }
      if (op == "eq") {
        need(2);
        bool e = Ops::eq(xs[0], xs[1]);
        out << (e ? "true" : "false") << "\n";
        return e ? 0 : 1;
      }
      if (op == "leq") {
        need(2);
        auto c = Ops::complement(xs[0], xs[1]);
        out << (c ? "true" : "false") << "\n";
        if (c) {
          out << "complement: " << show(*c) << "\n";
        }
        return c ? 0 : 1;
      }
      if (op == "refine") {
        need(4);
        if (!Ops::eq(Ops::add(xs[0], xs[1]), Ops::add(xs[2], xs[3]))) {
          throw PreconditionError("a + b != c + d");
        }
        out << showMatrix(Ops::refine(xs[0], xs[1], xs[2], xs[3]), show);
        return 0;
      }
      if (op == "member" || op == "cong") {
        auto id = parseOIdeal(ideal);
        if (!id) {
          throw Error("unknown ideal '" + ideal + "'");
        }
        if (op == "member") {
          need(1);
          bool m = mIdealMember(xs[0], *id);
          out << (m ? "true" : "false") << "\n";
          return m ? 0 : 1;
        }
        need(2);
        bool c = congModIdeal(xs[0], xs[1], *id);
        out << (c ? "true" : "false") << "\n";
        return c ? 0 : 1;
      }
      if constexpr (std::is_same_v<Elem, MElem>) {
        if (op == "q") {
          need(1);
          out << toString(mbarNormalize(qMap(xs[0]))) << "\n";
          return 0;
        }
      }
      throw Error("unknown wild operation '" + op + "'");
    }

    ////////////////////////////////////////////////////////////////////
    // suite
    ////////////////////////////////////////////////////////////////////

    int runSuite(std::string const& path, std::string const& outPath, std::ostream& out,
                 std::ostream& err) {
      nlohmann::ordered_json manifest;
      try {
        manifest = nlohmann::ordered_json::parse(readFile(path));
      } catch (nlohmann::json::exception const& e) {
        throw ParseError(0, path + ": " + e.what());
      }
      if (!manifest.is_object() || !manifest.contains("cases")
          || !manifest["cases"].is_array()) {
        throw ParseError(0, path + ": expected an object with a \"cases\" array");
      }
      nlohmann::ordered_json results = nlohmann::ordered_json::array();
      int                    bad     = 0;
      auto                   t0      = std::chrono::steady_clock::now();
      for (auto const& c : manifest["cases"]) {
        auto name   = c.at("name").get<std::string>();
        auto args   = c.at("args").get<std::vector<std::string>>();
        auto expect = c.at("expect").get<std::string>();
        std::ostringstream cout, cerr;
        int                code = runCli(args, cout, cerr);
        std::string        got  = code == 0   ? "HOLDS"
                                  : code == 1 ? "FAILS"
                                  : code == 2 ? "UNKNOWN"
                                              : "ERROR";
        bool ok = got == expect;
        bad += ok ? 0 : 1;
        out << (ok ? "ok   " : "FAIL ") << name << ": expected " << expect << ", got " << got
            << "\n";
        if (!ok && !cerr.str().empty()) {
          out << "     " << cerr.str();
        }
        results.push_back({{"name", name},
                           {"comment", c.value("comment", "")},
                           {"args", args},
                           {"expect", expect},
                           {"got", got},
                           {"ok", ok},
                           {"output", cout.str()}});
      }
      auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
      out << results.size() - bad << "/" << results.size() << " cases as expected\n";
      if (!outPath.empty()) {
        nlohmann::ordered_json doc{{"schema", "refmon-suite/1"},
                                   {"manifest", manifest.value("name", path)},
                                   {"mismatches", bad},
                                   {"cases", results}};
        std::ofstream f(outPath);
        if (!f) {
          err << "cannot write " << outPath << "\n";
          return usageError;
        }
        auto body = doc.dump(2);
        f << "{\n  \"timing\": \"" << ms << "ms\"," << body.substr(1) << "\n";
      }
      return bad == 0 ? 0 : 1;
    }

  }  // namespace

  int runCli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"refmon: commutative monoid workbench"};
    app.require_subcommand(1);

    std::string              monoid, fileArg, u, v, fmt = "text", outPath, ideal;
    std::vector<std::string> terms, props;
    std::size_t              zcap  = 0;
    bool                     tilde = false;
    BoundFlags               flags;

    auto* parse = app.add_subcommand("parse", "parse a presentation, poset or graph file and echo it");
    parse->add_option("file", fileArg)->required();

    auto* eq = app.add_subcommand("eq", "decide u = v");
    auto* leq = app.add_subcommand("leq", "decide u <= v");
    for (auto* s : {eq, leq}) {
      s->add_option("monoid", monoid, "builtin name or file")->required();
      s->add_option("u", u)->required();
      s->add_option("v", v)->required();
      flags.add(s);
    }
    auto* refine = app.add_subcommand("refine", "refine a + b = c + d");
    refine->add_option("monoid", monoid)->required();
    refine->add_option("terms", terms, "a b c d")->expected(4)->required();
    flags.add(refine);

    auto* check = app.add_subcommand("check", "bounded property checks");
    check->add_option("monoid", monoid)->required();
    check->add_option("--prop", props, "property ids, or WILD, FURTHER, ALL")
        ->delimiter(',')
        ->required();
    check->add_option("--format", fmt)->check(CLI::IsMember({"json", "text"}));
    flags.add(check);

    auto* graph = app.add_subcommand("graph-monoid", "presentation of a graph file");
    graph->add_option("file", fileArg)->required();
    graph->add_option("--zcap", zcap, "use q'_Z generators with |Z| <= K");
    graph->add_flag("--tilde", tilde, "replace emitters by the tilde graph first");

    auto* tildeCmd = app.add_subcommand("tilde", "row-finite graph replacing emitters");
    tildeCmd->add_option("file", fileArg)->required();

    auto* poset = app.add_subcommand("poset", "presentation of a primitive monoid");
    poset->add_option("file", fileArg)->required();

    auto* wild = app.add_subcommand("wild", "exact calculator for M and Mbar");
    wild->add_option("monoid", monoid)->required()->check(CLI::IsMember({"M", "Mbar"}));
    wild->add_option("op", u, "norm add eq leq refine q member cong")->required();
    wild->add_option("terms", terms);
    wild->add_option("--ideal", ideal, "J1 J2 J2bar Zz0bar");

    auto* suite = app.add_subcommand("suite", "run an acceptance manifest");
    suite->add_option("manifest", fileArg)->required();
    suite->add_option("--out", outPath, "JSON report file");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (CLI::ParseError const& e) {
      err << e.what() << "\n";
      return usageError;
    }

    try {
      if (*parse) {
        auto text = readFile(fileArg);
        auto head = headKeyword(text);
        if (head == "poset") {
          out << writePoset(parsePoset(text));
        } else if (head == "graph") {
          out << writeGraph(parseGraph(text));
        } else {
          out << writePresentation(parsePresentation(text));
        }
        return 0;
      }
      if (*eq || *leq || *refine) {
        auto o = loadOracle(monoid, flags.bound());
        if (*eq) {
          auto r = o->equal(o->parse(u), o->parse(v));
          out << verdictWord(r) << "\n";
          return verdictExit(r);
        }
        if (*leq) {
          auto d = o->leq(o->parse(u), o->parse(v));
          out << verdictWord(d.verdict) << "\n";
          if (d.isHolds() && d.witness.arity() != 0) {
            out << "complement: " << o->show(d.witness) << "\n";
          }
          return verdictExit(d.verdict);
        }
        std::vector<Word> w;
        for (auto const& t : terms) {
          w.push_back(o->parse(t));
        }
        if (o->equal(w[0] + w[1], w[2] + w[3]) == Verdict::fails) {
          throw PreconditionError("a + b != c + d");
        }
        auto d = o->refine(w[0], w[1], w[2], w[3]);
        out << verdictWord(d.verdict) << "\n";
        if (d.isHolds()) {
          out << showMatrix(d.witness, [&](Word const& x) {
            return x.arity() == 0 ? std::string("?") : o->show(x);
          });
        }
        return verdictExit(d.verdict);
      }
      if (*check) {
        auto                        b = flags.bound();
        auto                        o = loadOracle(monoid, b);
        std::vector<PropertyReport> reports;
        for (auto const& p : props) {
          if (p == "ALL" || p == "all") {
            for (auto id : allProperties()) {
              reports.push_back(checkProperty(*o, id, b));
            }
          } else if (p == "WILD" || p == "wild") {
            reports.push_back(wildnessCertificate(*o, b));
          } else if (p == "FURTHER" || p == "further") {
            auto [one, two] = furtherTameChecks(*o, b);
            reports.push_back(one);
            reports.push_back(two);
          } else if (auto id = parsePropertyId(p)) {
            reports.push_back(checkProperty(*o, *id, b));
          } else {
            err << "unknown property id '" << p << "'\n";
            return usageError;
          }
        }
        out << (fmt == "json" ? reportsJson(reports, *o) : reportsText(reports, *o));
        return exitCode(reports);
      }
      if (*graph) {
        auto g = parseGraph(readFile(fileArg));
        if (tilde) {
          auto t = unseparation(tildeConstruction(g.sep.graph, g.emitters));
          out << writePresentation(presentFinitelySeparated(t));
        } else if (!g.emitters.empty()) {
          out << writePresentation(emitterPresentation(g.sep.graph, g.emitters));
        } else if (zcap > 0) {
          SSTriple t{g.sep, {}};
          for (auto const& [vtx, cls] : g.sep.C) {
            t.S.insert(t.S.end(), cls.begin(), cls.end());
          }
          out << writePresentation(presentTriple(t, zcap));
        } else {
          out << writePresentation(presentFinitelySeparated(g.sep));
        }
        return 0;
      }
      if (*tildeCmd) {
        auto g = parseGraph(readFile(fileArg));
        out << writeGraph(unseparation(tildeConstruction(g.sep.graph, g.emitters)));
        return 0;
      }
      if (*poset) {
        out << writePresentation(presentationOf(parsePoset(readFile(fileArg))));
        return 0;
      }
      if (*wild) {
        return monoid == "M" ? wildCalc<MElem>(u, terms, ideal, out)
                             : wildCalc<MBarElem>(u, terms, ideal, out);
      }
      if (*suite) {
        return runSuite(fileArg, outPath, out, err);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return usageError;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return usageError;
    }
    return usageError;
  }

}  // namespace refmon
