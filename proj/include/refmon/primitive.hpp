#ifndef REFMON_PRIMITIVE_HPP_
#define REFMON_PRIMITIVE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "refmon/certificate.hpp"
#include "refmon/presentation.hpp"

namespace refmon {

  // A finite set D of primes with a transitive antisymmetric relation;
  // below(e, f) reads e < f. Self pairs make idempotent primes.
  class PrimePoset {
   public:
    std::string const& name() const noexcept {
      return _name;
    }
    std::vector<std::string> const& primes() const noexcept {
      return _primes;
    }
    std::size_t size() const noexcept {
      return _primes.size();
    }
    std::size_t index(std::string_view p) const;
    bool        below(std::size_t e, std::size_t f) const {
      return _rel[e][f];
    }
    bool idempotent(std::size_t p) const {
      return _rel[p][p];
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    friend PrimePoset validatePoset(
        std::string,
        std::vector<std::string>,
        std::vector<std::pair<std::string, std::string>> const&);

    friend bool operator==(PrimePoset const&, PrimePoset const&) = default;

   private:
    std::string                    _name;
    std::vector<std::string>       _primes;
    std::vector<std::vector<bool>> _rel;
  };

  // Throws Error naming a violating pair or triple.
  PrimePoset validatePoset(std::string                                             name,
                           std::vector<std::string>                                D,
                           std::vector<std::pair<std::string, std::string>> const& rel);

  //   poset <name>
  //   primes <id> ...
  //   below <e> <f>
  PrimePoset  parsePoset(std::string_view text);
  std::string writePoset(PrimePoset const& p);

  struct PrimElem {
    std::vector<std::uint64_t> coeffs;  // indexed like primes()

    bool isZero() const;
    friend bool operator==(PrimElem const&, PrimElem const&) = default;
  };

  // drop q when some q' != q with q < q' occurs, cap idempotent q at 1
  PrimElem primNormalize(PrimePoset const& p, PrimElem raw);
  PrimElem primAdd(PrimePoset const& p, PrimElem const& a, PrimElem const& b);
  bool     primEqual(PrimePoset const& p, PrimElem const& a, PrimElem const& b);
  // some c with a + c = b
  std::optional<PrimElem> primComplement(PrimePoset const& p,
                                         PrimElem const&   a,
                                         PrimElem const&   b);
  bool primLeq(PrimePoset const& p, PrimElem const& a, PrimElem const& b);

  PrimElem    parsePrimTerm(PrimePoset const& p, std::string_view text);
  std::string toString(PrimePoset const& p, PrimElem const& e);

  // <D | e + f = f for e < f>
  Presentation presentationOf(PrimePoset const& p);
  Word         toWord(PrimElem const& e);
  PrimElem     primFromWord(PrimePoset const& p, Word const& w);

  // For each prime q: phi_q counts q (infinity once anything at or above q
  // absorbs it) and chi_q detects a prime strictly above q. Together they
  // separate normal forms.
  std::vector<CertificateHom> primSeparatingCertificates(PrimePoset const& p);

  // M_X for X inside D, and the map M_X -> M_D extending the inclusion.
  struct Subsystem {
    PrimePoset               poset;
    std::vector<std::size_t> inclusion;  // index in X -> index in D

    PrimElem apply(PrimePoset const& big, PrimElem const& e) const;
  };

  Subsystem finiteSubsystem(PrimePoset const& p, std::vector<std::string> const& X);

  // all transitive antisymmetric relations on n unnamed primes p0..p{n-1}
  std::vector<PrimePoset> allPosets(std::size_t n);

}  // namespace refmon

#endif  // REFMON_PRIMITIVE_HPP_
