#include "refmon/oracle.hpp"

#include <algorithm>
#include <cctype>

#include "refmon/exception.hpp"
#include "refmon/graph.hpp"
#include "refmon/wild.hpp"

namespace refmon {

  ////////////////////////////////////////////////////////////////////////
  // MonoidOracle
  ////////////////////////////////////////////////////////////////////////

  Verdict MonoidOracle::equal(Word const& u, Word const& v) {
    auto ku = key(u);
    auto kv = key(v);
    if (ku && kv) {
      return rawEqual(*ku, *kv) ? Verdict::holds : Verdict::fails;
    }
    return Verdict::unknown;
  }

  Word MonoidOracle::generator(std::string_view name) const {
    return Word::generator(generators().size(), generators().index(name));
  }

  Word MonoidOracle::parse(std::string_view term) const {
    return parseTerm(term, generators());
  }

  std::string MonoidOracle::show(Word const& w) const {
    return toString(w, generators());
  }

  std::vector<Word> MonoidOracle::enumerate(std::uint64_t maxDegree, bool all) {
    std::vector<Word> out;
    std::unordered_map<Word, bool, WordHash, RawEqual> seen;
    auto words = wordsUpToDegree(generators().size(), maxDegree,
                                 all ? _poolGens : _elementGens);
    std::stable_sort(words.begin(), words.end(), [](Word const& a, Word const& b) {
      return a.degree() < b.degree();
    });
    for (auto const& w : words) {
      auto k = key(w);
      if (!k) {
        out.push_back(w);
        continue;
      }
      if (seen.emplace(*k, true).second) {
        out.push_back(w);
      }
    }
    return out;
  }

  std::vector<Word> const& MonoidOracle::elements(std::uint64_t maxDegree) {
    auto it = _elements.find(maxDegree);
    if (it == _elements.end()) {
      it = _elements.emplace(maxDegree, enumerate(maxDegree, false)).first;
    }
    return it->second;
  }

  std::vector<Word> const& MonoidOracle::pool(std::uint64_t maxDegree) {
    auto it = _pool.find(maxDegree);
    if (it == _pool.end()) {
      it = _pool.emplace(maxDegree, enumerate(maxDegree, true)).first;
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // presentations
  ////////////////////////////////////////////////////////////////////////

  PresentationOracle::PresentationOracle(Presentation                p,
                                         SearchBound                 b,
                                         std::vector<CertificateHom> certs)
      : _wp(std::move(p), b, std::move(certs)) {
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < generators().size(); ++i) {
      all.push_back(i);
    }
    setPoolGenerators(all);
    setElementGenerators(std::move(all));
  }

  std::optional<Word> PresentationOracle::key(Word const& w) {
    auto c = _wp.classOf(w);
    if (!c->exhausted) {
      return std::nullopt;
    }
    return c->members.front();
  }

  Verdict PresentationOracle::equal(Word const& u, Word const& v) {
    return _wp.equalVerdict(u, v);
  }

  Decision<Word> PresentationOracle::leq(Word const& u, Word const& v) {
    return _wp.leq(u, v);
  }

  Decision<RefinementMatrix<Word>> PresentationOracle::refine(Word const& a,
                                                              Word const& b,
                                                              Word const& c,
                                                              Word const& d) {
    return _wp.refine(a, b, c, d);
  }

  ////////////////////////////////////////////////////////////////////////
  // M and Mbar
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::size_t levelOf(std::string const& g) {
      std::size_t i = g.size();
      while (i > 0 && std::isdigit(static_cast<unsigned char>(g[i - 1]))) {
        --i;
      }
      return std::stoul(g.substr(i));
    }

    template <typename Elem, typename Conv>
    std::optional<Word> tryWord(Elem const& e, Conv conv) {
      try {
        return conv(e);
      } catch (Error const&) {
        return std::nullopt;
      }
    }

  }  // namespace

  WildOracle::WildOracle(WildMonoid which, std::size_t N)
      : _which(which), _N(N), _p(truncationPresentation(N + 2, which)) {
    std::vector<std::size_t> gens, pool;
    for (std::size_t i = 0; i < _p.generators().size(); ++i) {
      auto l = levelOf(_p.generators().name(i));
      if (l <= N) {
        gens.push_back(i);
      }
      if (l <= N + 1) {
        pool.push_back(i);
      }
    }
    setElementGenerators(std::move(gens));
    setPoolGenerators(std::move(pool));
    if (which == WildMonoid::M) {
      for (auto const* id : {"s", "f", "g", "h", "girr"}) {
        _certs.push_back(standardCertificate(id, N + 2));
      }
      for (auto const* id : {"fbar", "gbar", "t", "psibar"}) {
        _certs.push_back(pullbackAlongQ(standardCertificate(id, N + 2), N + 2));
      }
    } else {
      for (auto const* id : {"t", "fbar", "gbar", "psibar"}) {
        _certs.push_back(standardCertificate(id, N + 2));
      }
    }
  }

  std::string WildOracle::name() const {
    return (_which == WildMonoid::M ? "M" : "Mbar") + std::to_string(_N);
  }

  std::optional<Word> WildOracle::key(Word const& w) {
    if (_which == WildMonoid::M) {
      return toWord(mNormalize(mFromWord(w, _p)), _p);
    }
    return toWord(mbarNormalize(mbarFromWord(w, _p)), _p);
  }

  Decision<Word> WildOracle::leq(Word const& u, Word const& v) {
    if (_which == WildMonoid::M) {
      auto c = mComplement(mFromWord(u, _p), mFromWord(v, _p));
      if (!c) {
        return Decision<Word>::fails({});
      }
      auto w = tryWord(mNormalize(*c), [&](MElem const& e) { return toWord(e, _p); });
      // an empty word marks a complement beyond the named generators
      return Decision<Word>::holds(w ? *w : Word());
    }
    auto c = mbarComplement(mbarFromWord(u, _p), mbarFromWord(v, _p));
    if (!c) {
      return Decision<Word>::fails({});
    }
    auto w = tryWord(mbarNormalize(*c), [&](MBarElem const& e) { return toWord(e, _p); });
    return Decision<Word>::holds(w ? *w : Word());
  }

  Decision<RefinementMatrix<Word>> WildOracle::refine(Word const& a,
                                                      Word const& b,
                                                      Word const& c,
                                                      Word const& d) {
    RefinementMatrix<Word> out;
    auto                   fill = [&](auto const& m, auto conv) {
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t s = 0; s < 2; ++s) {
          auto w = tryWord(m(r, s), conv);
          out(r, s) = w ? *w : Word();
        }
      }
    };
    if (_which == WildMonoid::M) {
      auto m = mRefine(mFromWord(a, _p), mFromWord(b, _p), mFromWord(c, _p),
                       mFromWord(d, _p));
      fill(m, [&](MElem const& e) { return toWord(mNormalize(e), _p); });
    } else {
      auto m = mbarRefine(mbarFromWord(a, _p), mbarFromWord(b, _p),
                          mbarFromWord(c, _p), mbarFromWord(d, _p));
      fill(m, [&](MBarElem const& e) { return toWord(mbarNormalize(e), _p); });
    }
    return Decision<RefinementMatrix<Word>>::holds(out);
  }

  ////////////////////////////////////////////////////////////////////////
  // primitive monoids
  ////////////////////////////////////////////////////////////////////////

  PrimitiveOracle::PrimitiveOracle(PrimePoset p, SearchBound b)
      : _poset(std::move(p)),
        _wp(presentationOf(_poset), b, primSeparatingCertificates(_poset)) {
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < _poset.size(); ++i) {
      all.push_back(i);
    }
    setPoolGenerators(all);
    setElementGenerators(std::move(all));
  }

  std::optional<Word> PrimitiveOracle::key(Word const& w) {
    return toWord(primNormalize(_poset, primFromWord(_poset, w)));
  }

  Decision<Word> PrimitiveOracle::leq(Word const& u, Word const& v) {
    auto c = primComplement(_poset, primFromWord(_poset, u), primFromWord(_poset, v));
    if (!c) {
      return Decision<Word>::fails({});
    }
    return Decision<Word>::holds(toWord(*c));
  }

  Decision<RefinementMatrix<Word>> PrimitiveOracle::refine(Word const& a,
                                                           Word const& b,
                                                           Word const& c,
                                                           Word const& d) {
    return _wp.refine(a, b, c, d);
  }

  ////////////////////////////////////////////////////////////////////////
  // builtins
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::optional<std::size_t> suffixLevel(std::string_view name,
                                           std::string_view prefix) {
      if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size()) {
        return std::nullopt;
      }
      auto rest = name.substr(prefix.size());
      for (char c : rest) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          return std::nullopt;
        }
      }
      auto n = std::stoul(std::string(rest));
      if (n < 1) {
        return std::nullopt;
      }
      return n;
    }
  }  // namespace

  std::unique_ptr<MonoidOracle> builtinOracle(std::string_view   name,
                                              SearchBound const& b) {
    if (name == "M0") {
      return std::make_unique<PresentationOracle>(
          parsePresentation("monoid M0\ngenerators x0 y0 z0\n"
                            "relation x0 + y0 = x0 + z0\n"),
          b);
    }
    if (name == "E0C0") {
      return std::make_unique<PresentationOracle>(
          presentFinitelySeparated(builtinGraph(BuiltinGraph::E0C0)), b);
    }
    if (auto n = suffixLevel(name, "Mbar")) {
      return std::make_unique<WildOracle>(WildMonoid::Mbar, *n);
    }
    if (auto n = suffixLevel(name, "M")) {
      return std::make_unique<WildOracle>(WildMonoid::M, *n);
    }
    if (auto n = suffixLevel(name, "EbarCbar")) {
      return std::make_unique<PresentationOracle>(
          presentFinitelySeparated(builtinGraph(BuiltinGraph::EbarCbar, *n)), b);
    }
    if (auto n = suffixLevel(name, "EC")) {
      return std::make_unique<PresentationOracle>(
          presentFinitelySeparated(builtinGraph(BuiltinGraph::EC, *n)), b);
    }
    return nullptr;
  }

}  // namespace refmon
