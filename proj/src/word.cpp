#include "refmon/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

#include "refmon/exception.hpp"

namespace refmon {

  bool is_identifier(std::string_view s) {
    if (s.empty()) {
      return false;
    }
    auto ok_first = [](char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    };
    auto ok_rest = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_'
             || c == '\'';
    };
    return ok_first(s.front()) && std::all_of(s.begin() + 1, s.end(), ok_rest);
  }

  GeneratorSet::GeneratorSet(std::vector<std::string> names) {
    for (auto& n : names) {
      add(std::move(n));
    }
  }

  std::size_t GeneratorSet::add(std::string name) {
    if (!is_identifier(name)) {
      throw Error("invalid generator name '" + name + "'");
    }
    if (_index.count(name) != 0) {
      throw Error("duplicate generator '" + name + "'");
    }
    _index.emplace(name, _names.size());
    _names.push_back(std::move(name));
    return _names.size() - 1;
  }

  std::optional<std::size_t> GeneratorSet::find(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t GeneratorSet::index(std::string_view name) const {
    auto i = find(name);
    if (!i) {
      throw Error("unknown generator '" + std::string(name) + "'");
    }
    return *i;
  }

  Word Word::generator(std::size_t arity, std::size_t i, exponent_type k) {
    if (i >= arity) {
      throw Error("generator index out of range");
    }
    Word w(arity);
    w._exps[i] = k;
    return w;
  }

  std::uint64_t Word::degree() const noexcept {
    return std::accumulate(_exps.begin(), _exps.end(), std::uint64_t(0));
  }

  bool Word::is_zero() const noexcept {
    return std::all_of(
        _exps.begin(), _exps.end(), [](exponent_type e) { return e == 0; });
  }

  bool Word::contains(Word const& sub) const {
    if (sub.arity() != arity()) {
      throw Error("generator-set mismatch");
    }
    for (std::size_t i = 0; i < _exps.size(); ++i) {
      if (sub._exps[i] > _exps[i]) {
        return false;
      }
    }
    return true;
  }

  Word& Word::operator+=(Word const& other) {
    if (other.arity() != arity()) {
      throw Error("generator-set mismatch");
    }
    for (std::size_t i = 0; i < _exps.size(); ++i) {
      _exps[i] += other._exps[i];
    }
    return *this;
  }

  Word& Word::operator-=(Word const& other) {
    if (!contains(other)) {
      throw Error("word subtraction below zero");
    }
    for (std::size_t i = 0; i < _exps.size(); ++i) {
      _exps[i] -= other._exps[i];
    }
    return *this;
  }

  Word Word::times(exponent_type k) const {
    Word w(*this);
    for (auto& e : w._exps) {
      e *= k;
    }
    return w;
  }

  Word addWords(Word const& u, Word const& v) {
    Word w(u);
    w += v;
    return w;
  }

  Word operator+(Word const& u, Word const& v) {
    return addWords(u, v);
  }

  Word operator-(Word const& u, Word const& v) {
    Word w(u);
    w -= v;
    return w;
  }

  bool rawEqual(Word const& u, Word const& v) noexcept {
    return u.exponents() == v.exponents();
  }

  bool degLexLess(Word const& u, Word const& v) noexcept {
    auto du = u.degree(), dv = v.degree();
    if (du != dv) {
      return du < dv;
    }
    auto const& a = u.exponents();
    auto const& b = v.exponents();
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      if (a[i] != b[i]) {
        return a[i] > b[i];
      }
    }
    return a.size() < b.size();
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : w.exponents()) {
      h ^= std::hash<exponent_type>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
    }
    return h;
  }

  namespace {
    void fill_words(std::vector<std::size_t> const& gens,
                    std::size_t                     pos,
                    std::uint64_t                   remaining,
                    Word&                           current,
                    std::vector<Word>&              out) {
      if (pos == gens.size()) {
        out.push_back(current);
        return;
      }
      for (std::uint64_t e = 0; e <= remaining; ++e) {
        current[gens[pos]] = static_cast<exponent_type>(e);
        fill_words(gens, pos + 1, remaining - e, current, out);
      }
      current[gens[pos]] = 0;
    }
  }  // namespace

  std::vector<Word> wordsUpToDegree(std::size_t                     arity,
                                    std::uint64_t                   maxDegree,
                                    std::vector<std::size_t> const& allowed) {
    std::vector<std::size_t> gens = allowed;
    if (gens.empty()) {
      gens.resize(arity);
      std::iota(gens.begin(), gens.end(), 0);
    }
    std::vector<Word> out;
    Word              current(arity);
    fill_words(gens, 0, maxDegree, current, out);
    std::sort(out.begin(), out.end(), DegLexLess{});
    return out;
  }

  std::string toString(Word const& w, GeneratorSet const& gens) {
    std::string out;
    for (std::size_t i = 0; i < w.arity(); ++i) {
      if (w[i] == 0) {
        continue;
      }
      if (!out.empty()) {
        out += " + ";
      }
      if (w[i] != 1) {
        out += std::to_string(w[i]) + "*";
      }
      out += gens.name(i);
    }
    return out.empty() ? "0" : out;
  }

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  Word parseTerm(std::string_view text, GeneratorSet const& gens) {
    Word w(gens.size());
    text = trim(text);
    if (text.empty()) {
      throw Error("empty term");
    }
    if (text == "0") {
      return w;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
      auto plus = text.find('+', start);
      auto part = trim(text.substr(
          start, plus == std::string_view::npos ? plus : plus - start));
      if (part.empty()) {
        throw Error("malformed term '" + std::string(text) + "'");
      }
      exponent_type coeff = 1;
      auto          star  = part.find('*');
      if (star != std::string_view::npos) {
        auto num = trim(part.substr(0, star));
        auto [p, ec]
            = std::from_chars(num.data(), num.data() + num.size(), coeff);
        if (ec != std::errc() || p != num.data() + num.size()) {
          throw Error("bad coefficient '" + std::string(num) + "'");
        }
        part = trim(part.substr(star + 1));
      }
      if (!is_identifier(part)) {
        throw Error("bad identifier '" + std::string(part) + "'");
      }
      auto idx = gens.find(part);
      if (!idx) {
        throw Error("unknown generator '" + std::string(part) + "'");
      }
      w[*idx] += coeff;
      if (plus == std::string_view::npos) {
        break;
      }
      start = plus + 1;
    }
    return w;
  }

}  // namespace refmon
