#ifndef REFMON_WORD_PROBLEM_HPP_
#define REFMON_WORD_PROBLEM_HPP_

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "refmon/certificate.hpp"
#include "refmon/decision.hpp"
#include "refmon/presentation.hpp"

namespace refmon {

  // Result of a bounded breadth-first closure. When `exhausted` is true the
  // member list is the whole congruence class.
  struct ClassResult {
    std::vector<Word> members;  // degLex order
    bool              exhausted = false;

    bool contains(Word const& w) const;
  };

  ClassResult enumerateClass(Presentation const& p,
                             Word const&         w,
                             SearchBound const&  b = {});

  // One application of a relation inside a word: `to` is `from` with one
  // copy of the relation's lhs replaced by its rhs (forward) or vice versa.
  struct RewriteStep {
    std::size_t relation = 0;
    bool        forward  = true;
    Word        from;
    Word        to;
  };

  // Holds-witness of decideEqual: a chain of single rewrite steps from u to
  // v. Fails-witness: a certificate name with the two differing images, or
  // `disjointClasses` when both classes were exhausted without meeting.
  struct EqualityWitness {
    std::vector<RewriteStep> path;
    std::string              certificate;
    TargetValue              left, right;
    bool                     disjointClasses = false;
  };

  // Re-checks a rewrite path from u to v step by step.
  bool verifyPath(Presentation const&             p,
                  Word const&                     u,
                  Word const&                     v,
                  std::vector<RewriteStep> const& path);

  template <typename T>
  struct RefinementMatrix {
    // entries[r][c]; row sums are the first pair of labels, column sums the
    // second pair.
    std::array<std::array<T, 2>, 2> entries{};

    T const& operator()(std::size_t r, std::size_t c) const {
      return entries[r][c];
    }
    T& operator()(std::size_t r, std::size_t c) {
      return entries[r][c];
    }
  };

  // Memoizing front end for one presentation and bound. Classes are kept
  // keyed by every member of an exhausted class, so repeated queries over a
  // fixed element pool cost one enumeration per class.
  class WordProblem {
   public:
    WordProblem(Presentation p,
                SearchBound  b,
                std::vector<CertificateHom> certs = {});

    Presentation const& presentation() const noexcept {
      return _p;
    }
    SearchBound const& bound() const noexcept {
      return _b;
    }
    std::vector<CertificateHom> const& certificates() const noexcept {
      return _certs;
    }

    std::shared_ptr<ClassResult const> classOf(Word const& w);

    Decision<EqualityWitness> equal(Word const& u, Word const& v);
    Decision<Word>            leq(Word const& u, Word const& v);
    Decision<RefinementMatrix<Word>> refine(Word const& a,
                                            Word const& b,
                                            Word const& c,
                                            Word const& d);

    // Cheaper variant of equal without path reconstruction.
    Verdict equalVerdict(Word const& u, Word const& v);

   private:
    std::vector<RewriteStep> pathBetween(Word const& u, Word const& v);

    Presentation                 _p;
    SearchBound                  _b;
    std::vector<CertificateHom>  _certs;
    std::unordered_map<Word, std::shared_ptr<ClassResult const>, WordHash, RawEqual>
        _cache;
  };

  Decision<EqualityWitness> decideEqual(Presentation const&                p,
                                        Word const&                        u,
                                        Word const&                        v,
                                        SearchBound const&                 b = {},
                                        std::vector<CertificateHom> const& certs
                                        = {});

  // Holds(z) with u + z in the class of v.
  Decision<Word> decideLeq(Presentation const& p,
                           Word const&         u,
                           Word const&         v,
                           SearchBound const&  b = {});

  // Throws PreconditionError if a + bw = c + d is refuted; an Unknown
  // precondition still runs the search.
  Decision<RefinementMatrix<Word>> findRefinement(Presentation const& p,
                                                  Word const&         a,
                                                  Word const&         bw,
                                                  Word const&         c,
                                                  Word const&         d,
                                                  SearchBound const&  b = {});

  // Same generators and relations (names of the presentations may differ).
  bool sameMonoidData(Presentation const& a, Presentation const& b);

  // Comparison of two presentations through generator maps phi: a -> b and
  // psi: b -> a (images of each generator, as words). `maps` covers the
  // homomorphism and inverse checks; `sweep` compares the class partitions
  // of all words of degree <= sweepDegree on both sides.
  struct EquivalenceReport {
    Verdict     maps  = Verdict::unknown;
    Verdict     sweep = Verdict::unknown;
    std::size_t wordsChecked = 0;
    std::string detail;  // first failure or unknown

    Verdict overall() const;
  };

  EquivalenceReport compareUnderMaps(Presentation const&      a,
                                     Presentation const&      b,
                                     std::vector<Word> const& phi,
                                     std::vector<Word> const& psi,
                                     std::uint64_t            sweepDegree,
                                     SearchBound const&       bound);

  // Image of a word under a generator map.
  Word applyGeneratorMap(std::vector<Word> const& images,
                         Word const&              w,
                         std::size_t              targetArity);

}  // namespace refmon

#endif  // REFMON_WORD_PROBLEM_HPP_
