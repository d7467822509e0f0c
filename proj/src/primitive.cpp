#include "refmon/primitive.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "refmon/exception.hpp"
#include "text.hpp"

namespace refmon {

  std::size_t PrimePoset::index(std::string_view p) const {
    for (std::size_t i = 0; i < _primes.size(); ++i) {
      if (_primes[i] == p) {
        return i;
      }
    }
    throw Error("unknown prime '" + std::string(p) + "'");
  }

  std::vector<std::pair<std::size_t, std::size_t>> PrimePoset::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t e = 0; e < size(); ++e) {
      for (std::size_t f = 0; f < size(); ++f) {
        if (_rel[e][f]) {
          out.emplace_back(e, f);
        }
      }
    }
    return out;
  }

  PrimePoset validatePoset(std::string                                             name,
                           std::vector<std::string>                                D,
                           std::vector<std::pair<std::string, std::string>> const& rel) {
    PrimePoset p;
    p._name = std::move(name);
    std::set<std::string> seen;
    for (auto const& d : D) {
      if (!is_identifier(d)) {
        throw Error("invalid prime name '" + d + "'");
      }
      if (!seen.insert(d).second) {
        throw Error("duplicate prime '" + d + "'");
      }
    }
    p._primes = std::move(D);
    auto n    = p._primes.size();
    p._rel.assign(n, std::vector<bool>(n, false));
    for (auto const& [e, f] : rel) {
      p._rel[p.index(e)][p.index(f)] = true;
    }
    auto const& N = p._primes;
    for (std::size_t e = 0; e < n; ++e) {
      for (std::size_t f = 0; f < n; ++f) {
        if (e != f && p._rel[e][f] && p._rel[f][e]) {
          throw Error("not antisymmetric: " + N[e] + " < " + N[f] + " and " + N[f]
                      + " < " + N[e]);
        }
        for (std::size_t g = 0; g < n; ++g) {
          if (p._rel[e][f] && p._rel[f][g] && !p._rel[e][g]) {
            throw Error("not transitive: " + N[e] + " < " + N[f] + " < " + N[g]
                        + " without " + N[e] + " < " + N[g]);
          }
        }
      }
    }
    return p;
  }

  PrimePoset parsePoset(std::string_view text) {
    std::optional<std::string>                       name;
    std::vector<std::string>                         primes;
    std::vector<std::pair<std::string, std::string>> rel;
    std::size_t                                      lastLine = 1;
    detail::forEachLine(text, [&](std::size_t lineno, std::string_view line) {
      lastLine    = lineno;
      auto tokens = detail::split(line);
      auto kw     = tokens.front();
      if (kw == "poset") {
        if (tokens.size() != 2 || !is_identifier(tokens[1]) || name) {
          throw ParseError(lineno, "expected a single 'poset <name>'");
        }
        name = std::string(tokens[1]);
      } else if (kw == "primes") {
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          primes.emplace_back(tokens[i]);
        }
      } else if (kw == "below") {
        if (tokens.size() != 3) {
          throw ParseError(lineno, "expected 'below <e> <f>'");
        }
        for (std::size_t i = 1; i < 3; ++i) {
          if (std::find(primes.begin(), primes.end(), tokens[i]) == primes.end()) {
            throw ParseError(lineno, "unknown prime '" + std::string(tokens[i]) + "'");
          }
        }
        rel.emplace_back(tokens[1], tokens[2]);
      } else {
        throw ParseError(lineno, "unknown keyword '" + std::string(kw) + "'");
      }
    });
    if (!name) {
      throw ParseError(1, "missing 'poset <name>' line");
    }
    try {
      return validatePoset(*name, primes, rel);
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      throw ParseError(lastLine, e.what());
    }
  }

  std::string writePoset(PrimePoset const& p) {
    std::ostringstream os;
    os << "poset " << (p.name().empty() ? "D" : p.name()) << "\nprimes";
    for (auto const& q : p.primes()) {
      os << " " << q;
    }
    os << "\n";
    for (auto [e, f] : p.pairs()) {
      os << "below " << p.primes()[e] << " " << p.primes()[f] << "\n";
    }
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // elements
  ////////////////////////////////////////////////////////////////////////

  bool PrimElem::isZero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](auto c) { return c == 0; });
  }

  namespace {
    void checkSize(PrimePoset const& p, PrimElem const& e) {
      if (e.coeffs.size() != p.size()) {
        throw PreconditionError("element over a different poset");
      }
    }
  }  // namespace

  PrimElem primNormalize(PrimePoset const& p, PrimElem raw) {
    checkSize(p, raw);
    auto     n = p.size();
    PrimElem out{std::vector<std::uint64_t>(n, 0)};
    for (std::size_t q = 0; q < n; ++q) {
      if (raw.coeffs[q] == 0) {
        continue;
      }
      bool absorbed = false;
      for (std::size_t r = 0; r < n && !absorbed; ++r) {
        absorbed = r != q && raw.coeffs[r] > 0 && p.below(q, r);
      }
      if (!absorbed) {
        out.coeffs[q] = p.idempotent(q) ? 1 : raw.coeffs[q];
      }
    }
    return out;
  }

  PrimElem primAdd(PrimePoset const& p, PrimElem const& a, PrimElem const& b) {
    checkSize(p, a);
    checkSize(p, b);
    PrimElem s = a;
    for (std::size_t i = 0; i < p.size(); ++i) {
      s.coeffs[i] += b.coeffs[i];
    }
    return primNormalize(p, std::move(s));
  }

  bool primEqual(PrimePoset const& p, PrimElem const& a, PrimElem const& b) {
    return primNormalize(p, a) == primNormalize(p, b);
  }

  std::optional<PrimElem> primComplement(PrimePoset const& p,
                                         PrimElem const&   a,
                                         PrimElem const&   b) {
    auto A = primNormalize(p, a);
    auto B = primNormalize(p, b);
    auto n = p.size();
    auto c = B;
    for (std::size_t q = 0; q < n; ++q) {
      if (A.coeffs[q] == 0) {
        continue;
      }
      bool absorbed = false;
      for (std::size_t r = 0; r < n && !absorbed; ++r) {
        absorbed = r != q && B.coeffs[r] > 0 && p.below(q, r);
      }
      if (absorbed || (B.coeffs[q] > 0 && p.idempotent(q))) {
        continue;
      }
      if (B.coeffs[q] < A.coeffs[q]) {
        return std::nullopt;
      }
      c.coeffs[q] = B.coeffs[q] - A.coeffs[q];
    }
    if (!primEqual(p, primAdd(p, A, c), B)) {
      throw Error("complement check failed");
    }
    return c;
  }

  bool primLeq(PrimePoset const& p, PrimElem const& a, PrimElem const& b) {
    return primComplement(p, a, b).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // presentations
  ////////////////////////////////////////////////////////////////////////

  Presentation presentationOf(PrimePoset const& p) {
    Presentation pr(p.name().empty() ? "D" : p.name(), GeneratorSet(p.primes()));
    for (auto [e, f] : p.pairs()) {
      auto lhs = pr.zero();
      lhs[e] += 1;
      lhs[f] += 1;
      pr.addRelation(lhs, Word::generator(p.size(), f));
    }
    return pr;
  }

  Word toWord(PrimElem const& e) {
    std::vector<exponent_type> x;
    for (auto c : e.coeffs) {
      x.push_back(static_cast<exponent_type>(c));
    }
    return Word(std::move(x));
  }

  PrimElem primFromWord(PrimePoset const& p, Word const& w) {
    if (w.arity() != p.size()) {
      throw PreconditionError("word over a different poset");
    }
    PrimElem e;
    for (std::size_t i = 0; i < w.arity(); ++i) {
      e.coeffs.push_back(w[i]);
    }
    return e;
  }

  PrimElem parsePrimTerm(PrimePoset const& p, std::string_view text) {
    return primFromWord(p, parseTerm(text, GeneratorSet(p.primes())));
  }

  std::string toString(PrimePoset const& p, PrimElem const& e) {
    checkSize(p, e);
    return toString(toWord(e), GeneratorSet(p.primes()));
  }

  std::vector<CertificateHom> primSeparatingCertificates(PrimePoset const& p) {
    auto                        pr = presentationOf(p);
    std::vector<CertificateHom> out;
    auto                        n = p.size();
    for (std::size_t q = 0; q < n; ++q) {
      auto const&              name = p.primes()[q];
      auto                     target = TargetMonoid::freeAbelianWithInfinity({name});
      std::vector<TargetValue> phi, chi;
      for (std::size_t r = 0; r < n; ++r) {
        bool strictlyAbove = r != q && p.below(q, r);
        if (r == q) {
          phi.push_back(p.idempotent(q) ? TargetValue::infinity()
                                        : TargetValue::vector({1}));
        } else {
          phi.push_back(strictlyAbove ? TargetValue::infinity()
                                      : TargetValue::vector({0}));
        }
        chi.push_back(strictlyAbove ? TargetValue::infinity()
                                    : TargetValue::vector({0}));
      }
      out.push_back(buildCertificate(pr, target, phi, "phi_" + name));
      out.push_back(buildCertificate(pr, target, chi, "chi_" + name));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // subsystems
  ////////////////////////////////////////////////////////////////////////

  PrimElem Subsystem::apply(PrimePoset const& big, PrimElem const& e) const {
    checkSize(poset, e);
    PrimElem out{std::vector<std::uint64_t>(big.size(), 0)};
    for (std::size_t i = 0; i < inclusion.size(); ++i) {
      out.coeffs.at(inclusion[i]) += e.coeffs[i];
    }
    return primNormalize(big, std::move(out));
  }

  Subsystem finiteSubsystem(PrimePoset const& p, std::vector<std::string> const& X) {
    if (X.empty()) {
      throw PreconditionError("subsystem needs a nonempty set of primes");
    }
    Subsystem s;
    for (auto const& x : X) {
      s.inclusion.push_back(p.index(x));
    }
    std::vector<std::pair<std::string, std::string>> rel;
    for (auto const& e : X) {
      for (auto const& f : X) {
        if (p.below(p.index(e), p.index(f))) {
          rel.emplace_back(e, f);
        }
      }
    }
    s.poset = validatePoset(p.name() + "_sub", X, rel);
    return s;
  }

  std::vector<PrimePoset> allPosets(std::size_t n) {
    if (n > 4) {
      throw PreconditionError("poset enumeration is limited to 4 primes");
    }
    std::vector<std::string> D;
    for (std::size_t i = 0; i < n; ++i) {
      D.push_back("p" + std::to_string(i));
    }
    std::vector<PrimePoset> out;
    std::uint64_t           cells = n * n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << cells); ++mask) {
      std::vector<std::pair<std::string, std::string>> rel;
      for (std::size_t c = 0; c < cells; ++c) {
        if (mask & (std::uint64_t(1) << c)) {
          rel.emplace_back(D[c / n], D[c % n]);
        }
      }
      try {
        out.push_back(validatePoset("D" + std::to_string(n) + "_" + std::to_string(mask),
                                    D, rel));
      } catch (Error const&) {
      }
    }
    return out;
  }

}  // namespace refmon
