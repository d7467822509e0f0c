#ifndef REFMON_WORD_HPP_
#define REFMON_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace refmon {

  using exponent_type = std::uint32_t;

  // An ordered list of distinct generator names, indexable both ways.
  class GeneratorSet {
   public:
    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<std::string> names);

    // Appends a generator and returns its index; throws on duplicates or
    // malformed identifiers.
    std::size_t add(std::string name);

    std::size_t size() const noexcept {
      return _names.size();
    }
    std::string const& name(std::size_t i) const {
      return _names.at(i);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index(std::string_view name) const;

    friend bool operator==(GeneratorSet const& a, GeneratorSet const& b) {
      return a._names == b._names;
    }

   private:
    std::vector<std::string>                     _names;
    std::unordered_map<std::string, std::size_t> _index;
  };

  bool is_identifier(std::string_view s);

  // An element of the free commutative monoid on `arity` generators, stored
  // as a dense exponent vector. Comparing two words with rawEqual compares
  // multisets; equality in a presented monoid is a separate question
  // (see decideEqual).
  class Word {
   public:
    Word() = default;
    explicit Word(std::size_t arity) : _exps(arity, 0) {}
    explicit Word(std::vector<exponent_type> exps) : _exps(std::move(exps)) {}

    static Word generator(std::size_t arity, std::size_t i, exponent_type k = 1);

    std::size_t arity() const noexcept {
      return _exps.size();
    }
    exponent_type operator[](std::size_t i) const {
      return _exps[i];
    }
    exponent_type& operator[](std::size_t i) {
      return _exps[i];
    }
    std::vector<exponent_type> const& exponents() const noexcept {
      return _exps;
    }

    std::uint64_t degree() const noexcept;
    bool          is_zero() const noexcept;

    // Componentwise domination: every exponent of `sub` is <= ours.
    bool contains(Word const& sub) const;

    Word& operator+=(Word const& other);
    Word& operator-=(Word const& other);  // requires contains(other)

    Word times(exponent_type k) const;

   private:
    std::vector<exponent_type> _exps;
  };

  // Pointwise sum; throws Error on arity mismatch.
  Word addWords(Word const& u, Word const& v);
  Word operator+(Word const& u, Word const& v);
  // Pointwise difference; requires u.contains(v).
  Word operator-(Word const& u, Word const& v);

  bool rawEqual(Word const& u, Word const& v) noexcept;

  // Degree first, then lexicographic with a larger exponent on an earlier
  // generator coming first. This is the enumeration order used everywhere.
  bool degLexLess(Word const& u, Word const& v) noexcept;

  struct DegLexLess {
    bool operator()(Word const& u, Word const& v) const noexcept {
      return degLexLess(u, v);
    }
  };

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

  struct RawEqual {
    bool operator()(Word const& u, Word const& v) const noexcept {
      return rawEqual(u, v);
    }
  };

  // All words of total degree at most `maxDegree`, in degLex order. When
  // `allowed` is nonempty only those generator indices are used.
  std::vector<Word> wordsUpToDegree(std::size_t                     arity,
                                    std::uint64_t                   maxDegree,
                                    std::vector<std::size_t> const& allowed
                                    = {});

  // "2*x0 + y0"; the zero word prints as "0".
  std::string toString(Word const& w, GeneratorSet const& gens);

  // Parses "k*id + id + ..." (or "0") against a generator set.
  Word parseTerm(std::string_view text, GeneratorSet const& gens);

}  // namespace refmon

#endif  // REFMON_WORD_HPP_
