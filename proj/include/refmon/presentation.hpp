#ifndef REFMON_PRESENTATION_HPP_
#define REFMON_PRESENTATION_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "refmon/word.hpp"

namespace refmon {

  struct Relation {
    Word lhs;
    Word rhs;
  };

  // A finitely presented commutative monoid <gens | relations>.
  class Presentation {
   public:
    Presentation() = default;
    Presentation(std::string name, GeneratorSet gens);

    std::string const& name() const noexcept {
      return _name;
    }
    GeneratorSet const& generators() const noexcept {
      return _gens;
    }
    std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }
    std::size_t arity() const noexcept {
      return _gens.size();
    }

    void rename(std::string name) {
      _name = std::move(name);
    }

    // Adds lhs = rhs. Returns false (and stores nothing) when the two sides
    // are the same multiset.
    bool addRelation(Word lhs, Word rhs);
    bool addRelation(std::string_view lhs, std::string_view rhs);

    Word word(std::string_view term) const {
      return parseTerm(term, _gens);
    }
    Word zero() const {
      return Word(arity());
    }
    Word generator(std::string_view name) const {
      return Word::generator(arity(), _gens.index(name));
    }

    std::string relationString(std::size_t i) const;

    friend bool operator==(Presentation const& a, Presentation const& b);

   private:
    std::string           _name;
    GeneratorSet          _gens;
    std::vector<Relation> _relations;
  };

  // Reads the line-oriented presentation format:
  //
  //   monoid <name>
  //   generators <id> <id> ...
  //   relation <term> = <term>
  //
  // '#' starts a comment. Throws ParseError with the offending line.
  Presentation parsePresentation(std::string_view text);

  // Inverse of parsePresentation (deterministic output).
  std::string writePresentation(Presentation const& p);

}  // namespace refmon

#endif  // REFMON_PRESENTATION_HPP_
