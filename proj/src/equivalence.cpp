#include <map>
#include <optional>

#include "refmon/exception.hpp"
#include "refmon/word_problem.hpp"

namespace refmon {

  Verdict EquivalenceReport::overall() const {
    if (maps == Verdict::fails || sweep == Verdict::fails) {
      return Verdict::fails;
    }
    if (maps == Verdict::holds && sweep == Verdict::holds) {
      return Verdict::holds;
    }
    return Verdict::unknown;
  }

  Word applyGeneratorMap(std::vector<Word> const& images,
                         Word const&              w,
                         std::size_t              targetArity) {
    if (images.size() != w.arity()) {
      throw Error("generator map has the wrong length");
    }
    Word out(targetArity);
    for (std::size_t i = 0; i < w.arity(); ++i) {
      if (w[i] != 0) {
        out += images[i].times(w[i]);
      }
    }
    return out;
  }

  namespace {

    void worsen(Verdict& v, Verdict by) {
      if (by == Verdict::fails || (by == Verdict::unknown && v == Verdict::holds)) {
        v = by;
      }
    }

    // phi is a homomorphism and psi(phi(g)) = g for every generator g of a
    Verdict checkOneWay(Presentation const&      a,
                        Presentation const&      b,
                        std::vector<Word> const& phi,
                        std::vector<Word> const& psi,
                        WordProblem&             wa,
                        WordProblem&             wb,
                        std::string&             detail) {
      Verdict v = Verdict::holds;
      for (std::size_t r = 0; r < a.relations().size(); ++r) {
        auto const& rel = a.relations()[r];
        auto        got = wb.equalVerdict(applyGeneratorMap(phi, rel.lhs, b.arity()),
                                   applyGeneratorMap(phi, rel.rhs, b.arity()));
        if (got != Verdict::holds && detail.empty()) {
          detail = "relation " + a.relationString(r) + " of " + a.name()
                   + " maps to " + toString(got);
        }
        worsen(v, got);
      }
      for (std::size_t g = 0; g < a.arity(); ++g) {
        auto gen  = Word::generator(a.arity(), g);
        auto back = applyGeneratorMap(psi, phi[g], a.arity());
        auto got  = wa.equalVerdict(gen, back);
        if (got != Verdict::holds && detail.empty()) {
          detail = "generator " + a.generators().name(g) + " of " + a.name()
                   + " returns as " + toString(back, a.generators());
        }
        worsen(v, got);
      }
      return v;
    }

    std::optional<Word> classKey(WordProblem& wp, Word const& w) {
      auto c = wp.classOf(w);
      if (!c->exhausted) {
        return std::nullopt;
      }
      return c->members.front();
    }

    Verdict sweepOneWay(Presentation const&      a,
                        Presentation const&      b,
                        std::vector<Word> const& phi,
                        std::uint64_t            degree,
                        WordProblem&             wa,
                        WordProblem&             wb,
                        std::size_t&             checked,
                        std::string&             detail) {
      Verdict v = Verdict::holds;
      std::map<Word, Word, DegLexLess> ab, ba;
      for (auto const& w : wordsUpToDegree(a.arity(), degree)) {
        ++checked;
        auto img = applyGeneratorMap(phi, w, b.arity());
        auto ka  = classKey(wa, w);
        auto kb  = classKey(wb, img);
        if (!ka || !kb) {
          if (v == Verdict::holds && detail.empty()) {
            detail = "class of " + toString(ka ? img : w, ka ? b.generators() : a.generators())
                     + " not exhausted";
          }
          worsen(v, Verdict::unknown);
          continue;
        }
        auto i = ab.emplace(*ka, *kb).first;
        auto j = ba.emplace(*kb, *ka).first;
        if (!rawEqual(i->second, *kb) || !rawEqual(j->second, *ka)) {
          if (v != Verdict::fails) {
            detail = "partition mismatch at " + toString(w, a.generators())
                     + " in " + a.name();
          }
          v = Verdict::fails;
        }
      }
      return v;
    }

  }  // namespace

  EquivalenceReport compareUnderMaps(Presentation const&      a,
                                     Presentation const&      b,
                                     std::vector<Word> const& phi,
                                     std::vector<Word> const& psi,
                                     std::uint64_t            sweepDegree,
                                     SearchBound const&       bound) {
    if (phi.size() != a.arity() || psi.size() != b.arity()) {
      throw Error("generator map has the wrong length");
    }
    WordProblem       wa(a, bound), wb(b, bound);
    EquivalenceReport rep;
    rep.maps = checkOneWay(a, b, phi, psi, wa, wb, rep.detail);
    worsen(rep.maps, checkOneWay(b, a, psi, phi, wb, wa, rep.detail));
    rep.sweep = sweepOneWay(a, b, phi, sweepDegree, wa, wb, rep.wordsChecked,
                            rep.detail);
    worsen(rep.sweep, sweepOneWay(b, a, psi, sweepDegree, wb, wa,
                                  rep.wordsChecked, rep.detail));
    return rep;
  }

}  // namespace refmon
