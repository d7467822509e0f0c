#ifndef REFMON_LAB_HPP_
#define REFMON_LAB_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "refmon/oracle.hpp"

namespace refmon {

  enum class PropertyId {
    conical,
    stably_finite,
    separative,
    strongly_separative,
    cancellative,
    unperforated,
    antisymmetric,
    archimedean,
    refinement,
    riesz_decomposition,
    riesz_interpolation
  };

  // upper case with underscores, e.g. "STABLY_FINITE"
  char const*               toString(PropertyId p);
  std::optional<PropertyId> parsePropertyId(std::string_view s);
  std::vector<PropertyId>   allProperties();

  // How a verdict was reached. `exhaustive` means every instance inside the
  // bound was decided; it says nothing past the bound.
  enum class Basis { none, witness, certificate, exhaustive };
  char const* toString(Basis b);

  struct PropertyReport {
    std::string       property;
    std::string       monoid;
    Verdict           verdict = Verdict::unknown;
    Basis             basis   = Basis::none;
    std::vector<Word> witnesses;
    std::uint64_t     multiplier = 0;
    std::string       detail;
    SearchBound       bound;
    std::size_t       checked  = 0;
    std::size_t       unknowns = 0;
    double            elapsedMs = 0;
  };

  // Quantifiers range over elements() of degree <= maxDegree. Properties
  // with three or four variables bound the degree of each sum instead:
  // cancellative and refinement by the two sides, Riesz decomposition by
  // y1 + y2, Riesz interpolation takes all four of degree <= maxDegree / 2.
  PropertyReport checkProperty(MonoidOracle& o, PropertyId p, SearchBound const& b);

  // Re-runs a Fails witness of checkProperty through the oracle.
  bool replayCounterexample(MonoidOracle& o, PropertyId p, PropertyReport const& r);

  // A bounded three-valued answer with a small witness list.
  struct LabDecision {
    Verdict           verdict = Verdict::unknown;
    Basis             basis   = Basis::none;
    std::vector<Word> witness;
    std::string       detail;
  };

  struct IrreducibleReport {
    std::vector<Word> irreducible;
    std::vector<Word> undecided;
  };

  // Splittings are searched with a pool generator as first summand, which
  // is complete for conical monoids.
  IrreducibleReport irreducibles(MonoidOracle& o, SearchBound const& b);

  struct PedestalReport {
    std::vector<Word> generators;
    Verdict           oIdealCheck = Verdict::unknown;
    std::string       detail;
  };
  PedestalReport pedestal(MonoidOracle& o, SearchBound const& b);

  // The o-ideal generated by gens: x is a member iff x <= k * (sum of gens)
  // for some k. Non-membership needs a certificate with conical image that
  // kills every generator.
  class OIdeal {
   public:
    OIdeal(MonoidOracle& o, std::vector<Word> gens, SearchBound b);

    MonoidOracle& oracle() const {
      return *_o;
    }
    std::vector<Word> const& generators() const {
      return _gens;
    }
    SearchBound const& bound() const {
      return _b;
    }
    // certificates vanishing on the ideal
    std::vector<CertificateHom const*> const& annihilators() const {
      return _ann;
    }

    LabDecision member(Word const& x);
    // members among elements(maxDegree)
    std::vector<Word> const& boundedMembers();

   private:
    MonoidOracle*                      _o;
    std::vector<Word>                  _gens;
    SearchBound                        _b;
    Word                               _top;
    std::vector<CertificateHom const*> _ann;
    std::optional<std::vector<Word>>   _members;
  };

  OIdeal oIdealClosure(MonoidOracle& o, std::vector<Word> gens, SearchBound const& b);

  // x + a = y + b with a, b in J; witness {a, b}
  LabDecision quotientEqual(OIdeal& J, Word const& x, Word const& y);

  // x <= y <= x
  LabDecision maxAntisymEqual(MonoidOracle& o, Word const& x, Word const& y);
  // x + z = y + z for some z; witness {z}
  LabDecision maxCancelEqual(MonoidOracle& o,
                             Word const&   x,
                             Word const&   y,
                             SearchBound const& b);

  // Holds when the monoid is stably finite (certificate or exhaustive) and
  // a cancellation fails, or when separativity or unperforation fails.
  // Never decides tameness; a clean sweep only adds evidence to `detail`.
  PropertyReport wildnessCertificate(MonoidOracle& o, SearchBound const& b);

  // clauses (1) and (2) of the interpolation-type consequences of tameness
  std::pair<PropertyReport, PropertyReport> furtherTameChecks(MonoidOracle& o,
                                                              SearchBound const& b);

}  // namespace refmon

#endif  // REFMON_LAB_HPP_
