#include "refmon/word_problem.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "refmon/exception.hpp"

namespace refmon {

  void SearchBound::validate() const {
    if (maxClassSize < 1) {
      throw PreconditionError("maxClassSize must be at least 1");
    }
    if (maxCoefficient < 1) {
      throw PreconditionError("maxCoefficient must be at least 1");
    }
  }

  std::string toString(SearchBound const& b) {
    std::ostringstream out;
    out << "maxDegree=" << b.maxDegree << " maxClassSize=" << b.maxClassSize
        << " maxCoefficient=" << b.maxCoefficient;
    return out.str();
  }

  bool ClassResult::contains(Word const& w) const {
    return std::binary_search(members.begin(), members.end(), w, DegLexLess());
  }

  bool sameMonoidData(Presentation const& a, Presentation const& b) {
    if (!(a.generators() == b.generators())
        || a.relations().size() != b.relations().size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.relations().size(); ++i) {
      if (!rawEqual(a.relations()[i].lhs, b.relations()[i].lhs)
          || !rawEqual(a.relations()[i].rhs, b.relations()[i].rhs)) {
        return false;
      }
    }
    return true;
  }

  namespace {

    struct Node {
      Word        word;
      std::size_t parent;  // index into nodes; self for the root
      std::size_t relation;
      bool        forward;
    };

    struct Exploration {
      std::vector<Node> nodes;
      bool              exhausted = true;
      std::size_t       target    = static_cast<std::size_t>(-1);
    };

    // BFS over single rewrite steps. Stops early when `stop` is reached.
    Exploration explore(Presentation const& p,
                        Word const&         w,
                        SearchBound const&  b,
                        Word const*         stop) {
      Exploration ex;
      std::unordered_map<Word, std::size_t, WordHash, RawEqual> seen;
      ex.nodes.push_back({w, 0, 0, true});
      seen.emplace(w, 0);
      if (stop != nullptr && rawEqual(w, *stop)) {
        ex.target = 0;
        return ex;
      }
      auto const& rels = p.relations();
      for (std::size_t head = 0; head < ex.nodes.size(); ++head) {
        for (std::size_t r = 0; r < rels.size(); ++r) {
          for (int dir = 0; dir < 2; ++dir) {
            bool        fwd  = dir == 0;
            auto const& from = fwd ? rels[r].lhs : rels[r].rhs;
            auto const& to   = fwd ? rels[r].rhs : rels[r].lhs;
            Word const& cur  = ex.nodes[head].word;
            if (!cur.contains(from)) {
              continue;
            }
            Word next = cur;
            next -= from;
            next += to;
            if (next.degree() > b.maxDegree) {
              ex.exhausted = false;
              continue;
            }
            if (seen.count(next) != 0) {
              continue;
            }
            if (ex.nodes.size() >= b.maxClassSize) {
              ex.exhausted = false;
              return ex;
            }
            seen.emplace(next, ex.nodes.size());
            ex.nodes.push_back({std::move(next), head, r, fwd});
            if (stop != nullptr && rawEqual(ex.nodes.back().word, *stop)) {
              ex.target = ex.nodes.size() - 1;
              return ex;
            }
          }
        }
      }
      return ex;
    }

    std::vector<RewriteStep> pathTo(Exploration const& ex, std::size_t i) {
      std::vector<RewriteStep> out;
      while (i != 0) {
        auto const& n = ex.nodes[i];
        out.push_back({n.relation, n.forward, ex.nodes[n.parent].word, n.word});
        i = n.parent;
      }
      std::reverse(out.begin(), out.end());
      return out;
    }

    // All (s, w - s) with s <= w componentwise; s runs from w down to 0 when
    // `descending`, else from 0 up.
    std::vector<std::pair<Word, Word>> splits(Word const& w, bool descending) {
      std::vector<std::pair<Word, Word>> out;
      Word                               s(w.arity());
      while (true) {
        out.emplace_back(s, w - s);
        std::size_t i = 0;
        while (i < w.arity() && s[i] == w[i]) {
          s[i] = 0;
          ++i;
        }
        if (i == w.arity()) {
          break;
        }
        ++s[i];
      }
      std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
        return degLexLess(x.first, y.first);
      });
      if (descending) {
        std::reverse(out.begin(), out.end());
      }
      return out;
    }

  }  // namespace

  ClassResult enumerateClass(Presentation const& p,
                             Word const&         w,
                             SearchBound const&  b) {
    b.validate();
    if (w.arity() != p.arity()) {
      throw Error("word over the wrong generator set");
    }
    auto        ex = explore(p, w, b, nullptr);
    ClassResult out;
    out.exhausted = ex.exhausted;
    out.members.reserve(ex.nodes.size());
    for (auto& n : ex.nodes) {
      out.members.push_back(std::move(n.word));
    }
    std::sort(out.members.begin(), out.members.end(), DegLexLess());
    return out;
  }

  bool verifyPath(Presentation const&             p,
                  Word const&                     u,
                  Word const&                     v,
                  std::vector<RewriteStep> const& path) {
    Word cur = u;
    for (auto const& s : path) {
      if (s.relation >= p.relations().size() || !rawEqual(s.from, cur)) {
        return false;
      }
      auto const& rel  = p.relations()[s.relation];
      auto const& from = s.forward ? rel.lhs : rel.rhs;
      auto const& to   = s.forward ? rel.rhs : rel.lhs;
      if (!cur.contains(from)) {
        return false;
      }
      cur -= from;
      cur += to;
      if (!rawEqual(cur, s.to)) {
        return false;
      }
    }
    return rawEqual(cur, v);
  }

  WordProblem::WordProblem(Presentation                p,
                           SearchBound                 b,
                           std::vector<CertificateHom> certs)
      : _p(std::move(p)), _b(b), _certs(std::move(certs)) {
    _b.validate();
    for (auto const& h : _certs) {
      if (!sameMonoidData(h.source(), _p)) {
        throw Error("certificate '" + h.name()
                    + "' is over a different presentation");
      }
    }
  }

  std::shared_ptr<ClassResult const> WordProblem::classOf(Word const& w) {
    if (auto it = _cache.find(w); it != _cache.end()) {
      return it->second;
    }
    auto cls = std::make_shared<ClassResult const>(enumerateClass(_p, w, _b));
    if (cls->exhausted) {
      for (auto const& m : cls->members) {
        _cache.emplace(m, cls);
      }
    } else {
      _cache.emplace(w, cls);
    }
    return cls;
  }

  Verdict WordProblem::equalVerdict(Word const& u, Word const& v) {
    if (rawEqual(u, v)) {
      return Verdict::holds;
    }
    for (auto const& h : _certs) {
      if (!(applyHom(h, u) == applyHom(h, v))) {
        return Verdict::fails;
      }
    }
    auto cu = classOf(u);
    if (cu->contains(v)) {
      return Verdict::holds;
    }
    if (cu->exhausted) {
      return Verdict::fails;
    }
    auto cv = classOf(v);
    if (cv->contains(u)) {
      return Verdict::holds;
    }
    if (cv->exhausted) {
      return Verdict::fails;
    }
    return Verdict::unknown;
  }

  std::vector<RewriteStep> WordProblem::pathBetween(Word const& u,
                                                    Word const& v) {
    auto ex = explore(_p, u, _b, &v);
    if (ex.target == static_cast<std::size_t>(-1)) {
      throw Error("internal: no rewrite path between equal words");
    }
    return pathTo(ex, ex.target);
  }

  Decision<EqualityWitness> WordProblem::equal(Word const& u, Word const& v) {
    if (u.arity() != _p.arity() || v.arity() != _p.arity()) {
      throw Error("word over the wrong generator set");
    }
    if (rawEqual(u, v)) {
      return Decision<EqualityWitness>::holds({}, _b);
    }
    for (auto const& h : _certs) {
      auto hu = applyHom(h, u);
      auto hv = applyHom(h, v);
      if (!(hu == hv)) {
        EqualityWitness w;
        w.certificate = h.name();
        w.left        = std::move(hu);
        w.right       = std::move(hv);
        return Decision<EqualityWitness>::fails(std::move(w), _b);
      }
    }
    auto cu = classOf(u);
    auto cv = classOf(v);
    if (cu->contains(v) || cv->contains(u)) {
      EqualityWitness w;
      if (cu->contains(v)) {
        w.path = pathBetween(u, v);
      } else {
        // reverse the path from v
        auto back = pathBetween(v, u);
        for (auto it = back.rbegin(); it != back.rend(); ++it) {
          w.path.push_back({it->relation, !it->forward, it->to, it->from});
        }
      }
      return Decision<EqualityWitness>::holds(std::move(w), _b);
    }
    if (cu->exhausted || cv->exhausted) {
      EqualityWitness w;
      w.disjointClasses = true;
      return Decision<EqualityWitness>::fails(std::move(w), _b);
    }
    return Decision<EqualityWitness>::unknown(_b);
  }

  Decision<Word> WordProblem::leq(Word const& u, Word const& v) {
    if (u.arity() != _p.arity() || v.arity() != _p.arity()) {
      throw Error("word over the wrong generator set");
    }
    if (v.contains(u)) {
      return Decision<Word>::holds(v - u, _b);
    }
    auto cv = classOf(v);
    for (auto const& w : cv->members) {
      if (w.contains(u)) {
        return Decision<Word>::holds(w - u, _b);
      }
    }
    if (cv->exhausted) {
      return Decision<Word>::fails(Word(_p.arity()), _b);
    }
    return Decision<Word>::unknown(_b);
  }

  Decision<RefinementMatrix<Word>> WordProblem::refine(Word const& a,
                                                       Word const& b,
                                                       Word const& c,
                                                       Word const& d) {
    using D = Decision<RefinementMatrix<Word>>;
    if (equalVerdict(a + b, c + d) == Verdict::fails) {
      throw PreconditionError("refinement requested for an equation that "
                              "does not hold");
    }
    auto ca = classOf(a);
    auto cb = classOf(b);
    // Put the given words first so the diagonal answer wins when it exists.
    auto order = [](Word const& w, ClassResult const& cls) {
      std::vector<Word> out{w};
      for (auto const& m : cls.members) {
        if (!rawEqual(m, w)) {
          out.push_back(m);
        }
      }
      return out;
    };
    bool complete = ca->exhausted && cb->exhausted;
    for (auto const& ra : order(a, *ca)) {
      for (auto const& [z11, z12] : splits(ra, true)) {
        for (auto const& rb : order(b, *cb)) {
          for (auto const& [z21, z22] : splits(rb, false)) {
            auto v1 = equalVerdict(z11 + z21, c);
            if (v1 == Verdict::fails) {
              continue;
            }
            auto v2 = equalVerdict(z12 + z22, d);
            if (v1 == Verdict::holds && v2 == Verdict::holds) {
              RefinementMatrix<Word> m;
              m(0, 0) = z11;
              m(0, 1) = z12;
              m(1, 0) = z21;
              m(1, 1) = z22;
              return D::holds(std::move(m), _b);
            }
            if (v2 != Verdict::fails) {
              complete = false;
            }
          }
        }
      }
    }
    if (complete) {
      return D::fails({}, _b);
    }
    return D::unknown(_b);
  }

  Decision<EqualityWitness> decideEqual(Presentation const&                p,
                                        Word const&                        u,
                                        Word const&                        v,
                                        SearchBound const&                 b,
                                        std::vector<CertificateHom> const& certs) {
    WordProblem wp(p, b, certs);
    return wp.equal(u, v);
  }

  Decision<Word> decideLeq(Presentation const& p,
                           Word const&         u,
                           Word const&         v,
                           SearchBound const&  b) {
    WordProblem wp(p, b);
    return wp.leq(u, v);
  }

  Decision<RefinementMatrix<Word>> findRefinement(Presentation const& p,
                                                  Word const&         a,
                                                  Word const&         bw,
                                                  Word const&         c,
                                                  Word const&         d,
                                                  SearchBound const&  b) {
    WordProblem wp(p, b);
    return wp.refine(a, bw, c, d);
  }

}  // namespace refmon
