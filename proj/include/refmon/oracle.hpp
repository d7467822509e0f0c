#ifndef REFMON_ORACLE_HPP_
#define REFMON_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "refmon/certificate.hpp"
#include "refmon/decision.hpp"
#include "refmon/presentation.hpp"
#include "refmon/primitive.hpp"
#include "refmon/wild.hpp"
#include "refmon/word_problem.hpp"

namespace refmon {

  // Equality and order on a commutative monoid, with elements written as
  // words over generators(). elements() enumerates only over
  // elementGenerators(); pool() may use every generator (the exact wild
  // oracles keep a level in reserve so top-level elements can split).
  class MonoidOracle {
   public:
    virtual ~MonoidOracle() = default;

    virtual std::string         name() const       = 0;
    virtual GeneratorSet const& generators() const = 0;
    virtual bool                exact() const      = 0;
    virtual std::vector<CertificateHom> const& certificates() const = 0;

    std::vector<std::size_t> const& elementGenerators() const {
      return _elementGens;
    }

    // canonical word of the class, when the oracle can produce one
    virtual std::optional<Word> key(Word const& w) = 0;
    virtual Verdict             equal(Word const& u, Word const& v);
    // Holds(z) with u + z = v
    virtual Decision<Word> leq(Word const& u, Word const& v) = 0;
    // requires a + b = c + d
    virtual Decision<RefinementMatrix<Word>> refine(Word const& a,
                                                    Word const& b,
                                                    Word const& c,
                                                    Word const& d) = 0;

    Word zero() const {
      return Word(generators().size());
    }
    Word        generator(std::string_view name) const;
    Word        parse(std::string_view term) const;
    std::string show(Word const& w) const;

    // one word per class met, lowest degree first (classes with no key
    // keep every word)
    std::vector<Word> const& elements(std::uint64_t maxDegree);
    std::vector<Word> const& pool(std::uint64_t maxDegree);

   protected:
    void setElementGenerators(std::vector<std::size_t> g) {
      _elementGens = std::move(g);
    }
    void setPoolGenerators(std::vector<std::size_t> g) {
      _poolGens = std::move(g);
    }

   private:
    std::vector<Word> enumerate(std::uint64_t maxDegree, bool all);

    std::vector<std::size_t>                            _elementGens, _poolGens;
    std::unordered_map<std::uint64_t, std::vector<Word>> _elements, _pool;
  };

  class PresentationOracle : public MonoidOracle {
   public:
    PresentationOracle(Presentation                p,
                       SearchBound                 b,
                       std::vector<CertificateHom> certs = {});

    std::string name() const override {
      return _wp.presentation().name();
    }
    GeneratorSet const& generators() const override {
      return _wp.presentation().generators();
    }
    bool exact() const override {
      return false;
    }
    std::vector<CertificateHom> const& certificates() const override {
      return _wp.certificates();
    }
    Presentation const& presentation() const {
      return _wp.presentation();
    }

    std::optional<Word> key(Word const& w) override;
    Verdict             equal(Word const& u, Word const& v) override;
    Decision<Word>      leq(Word const& u, Word const& v) override;
    Decision<RefinementMatrix<Word>> refine(Word const& a,
                                            Word const& b,
                                            Word const& c,
                                            Word const& d) override;

   private:
    WordProblem _wp;
  };

  // Exact arithmetic on M or Mbar. Elements use the generators of
  // level <= N; words may use two more levels.
  class WildOracle : public MonoidOracle {
   public:
    WildOracle(WildMonoid which, std::size_t N);

    std::string name() const override;
    GeneratorSet const& generators() const override {
      return _p.generators();
    }
    bool exact() const override {
      return true;
    }
    std::vector<CertificateHom> const& certificates() const override {
      return _certs;
    }
    Presentation const& presentation() const {
      return _p;
    }
    WildMonoid which() const {
      return _which;
    }
    std::size_t level() const {
      return _N;
    }

    std::optional<Word> key(Word const& w) override;
    Decision<Word>      leq(Word const& u, Word const& v) override;
    Decision<RefinementMatrix<Word>> refine(Word const& a,
                                            Word const& b,
                                            Word const& c,
                                            Word const& d) override;

   private:
    WildMonoid                  _which;
    std::size_t                 _N;
    Presentation                _p;
    std::vector<CertificateHom> _certs;
  };

  class PrimitiveOracle : public MonoidOracle {
   public:
    explicit PrimitiveOracle(PrimePoset p, SearchBound b = {});

    std::string name() const override {
      return _poset.name();
    }
    GeneratorSet const& generators() const override {
      return _wp.presentation().generators();
    }
    bool exact() const override {
      return true;
    }
    std::vector<CertificateHom> const& certificates() const override {
      return _wp.certificates();
    }
    PrimePoset const& poset() const {
      return _poset;
    }

    std::optional<Word> key(Word const& w) override;
    Decision<Word>      leq(Word const& u, Word const& v) override;
    Decision<RefinementMatrix<Word>> refine(Word const& a,
                                            Word const& b,
                                            Word const& c,
                                            Word const& d) override;

   private:
    PrimePoset  _poset;
    WordProblem _wp;
  };

  // "M<N>", "Mbar<N>", "M0", "E0C0", "EC<N>", "EbarCbar<N>"; nullptr when
  // the name is not a builtin
  std::unique_ptr<MonoidOracle> builtinOracle(std::string_view name,
                                              SearchBound const& b);

}  // namespace refmon

#endif  // REFMON_ORACLE_HPP_
