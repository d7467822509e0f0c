#ifndef REFMON_WILD_HPP_
#define REFMON_WILD_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "refmon/certificate.hpp"
#include "refmon/presentation.hpp"
#include "refmon/word_problem.hpp"

namespace refmon {

  using coeff_type = std::uint64_t;

  ////////////////////////////////////////////////////////////////////////
  // <x0, y0, z0 | x0 + y0 = x0 + z0>
  ////////////////////////////////////////////////////////////////////////

  struct M0Elem {
    coeff_type m = 0, i = 0, j = 0;
  };

  M0Elem m0Normalize(M0Elem e);
  bool   m0Equal(M0Elem const& a, M0Elem const& b);
  M0Elem m0Add(M0Elem const& a, M0Elem const& b);

  ////////////////////////////////////////////////////////////////////////
  // M: m*x_n + i*y_n + j*z_n + sum_l k_l*a_l, with k of length n
  ////////////////////////////////////////////////////////////////////////

  struct MElem {
    std::size_t             level = 0;
    coeff_type              m = 0, i = 0, j = 0;
    std::vector<coeff_type> k;

    static MElem x(std::size_t n);
    static MElem y(std::size_t n);
    static MElem z(std::size_t n);
    static MElem a(std::size_t n);  // n >= 1
    static MElem u();               // x0 + y0

    bool          isZero() const;
    std::uint64_t degree() const;  // of this representation

    // field-by-field; meaningful for normalized elements only
    friend bool operator==(MElem const&, MElem const&) = default;
  };

  MElem mRaise(MElem const& e, std::size_t targetLevel);
  // least level, j folded into i when m > 0
  MElem mNormalize(MElem e);
  bool  mEqual(MElem const& a, MElem const& b);
  MElem mAdd(MElem const& a, MElem const& b);
  MElem mTimes(MElem const& a, coeff_type n);
  // some c with a + c = b, or nothing when a is not below b
  std::optional<MElem> mComplement(MElem const& a, MElem const& b);
  bool                 mLeq(MElem const& a, MElem const& b);
  // requires a + b = c + d; rows sum to a, b and columns to c, d
  RefinementMatrix<MElem> mRefine(MElem const& a,
                                  MElem const& b,
                                  MElem const& c,
                                  MElem const& d);

  ////////////////////////////////////////////////////////////////////////
  // Mbar: i*ybar0 + j*zbar0 + k*xbar_n
  ////////////////////////////////////////////////////////////////////////

  struct MBarElem {
    std::size_t level = 0;
    coeff_type  i = 0, j = 0, k = 0;

    static MBarElem x(std::size_t n);
    static MBarElem y();
    static MBarElem z();

    bool          isZero() const;
    std::uint64_t degree() const;

    friend bool operator==(MBarElem const&, MBarElem const&) = default;
  };

  MBarElem mbarRaise(MBarElem const& e, std::size_t targetLevel);
  MBarElem mbarNormalize(MBarElem e);
  bool     mbarEqual(MBarElem const& a, MBarElem const& b);
  MBarElem mbarAdd(MBarElem const& a, MBarElem const& b);
  MBarElem mbarTimes(MBarElem const& a, coeff_type n);
  std::optional<MBarElem> mbarComplement(MBarElem const& a, MBarElem const& b);
  bool                    mbarLeq(MBarElem const& a, MBarElem const& b);
  RefinementMatrix<MBarElem> mbarRefine(MBarElem const& a,
                                        MBarElem const& b,
                                        MBarElem const& c,
                                        MBarElem const& d);

  // The quotient map M -> Mbar killing every a_n.
  MBarElem qMap(MElem const& e);

  ////////////////////////////////////////////////////////////////////////
  // o-ideals and their congruences
  ////////////////////////////////////////////////////////////////////////

  enum class OIdealId { J1, J2, J2bar, Zz0bar };

  char const*            toString(OIdealId id);
  std::optional<OIdealId> parseOIdeal(std::string_view s);

  bool mIdealMember(MElem const& e, OIdealId id);
  bool mIdealMember(MBarElem const& e, OIdealId id);

  // (a, b) in the ideal with e1 + a = e2 + b, if any
  std::optional<std::pair<MElem, MElem>>
  congModIdealWitness(MElem const& e1, MElem const& e2, OIdealId id);
  std::optional<std::pair<MBarElem, MBarElem>>
  congModIdealWitness(MBarElem const& e1, MBarElem const& e2, OIdealId id);

  bool congModIdeal(MElem const& e1, MElem const& e2, OIdealId id);
  bool congModIdeal(MBarElem const& e1, MBarElem const& e2, OIdealId id);

  ////////////////////////////////////////////////////////////////////////
  // text terms: "x0 + 3*a3", "xbar2 + 2*ybar0", "u"
  ////////////////////////////////////////////////////////////////////////

  MElem       parseMTerm(std::string_view text);
  MBarElem    parseMBarTerm(std::string_view text);
  std::string toString(MElem const& e);
  std::string toString(MBarElem const& e);

  ////////////////////////////////////////////////////////////////////////
  // truncations and certificates
  ////////////////////////////////////////////////////////////////////////

  enum class WildMonoid { M, Mbar };

  // M: x0 y0 z0 a1 x1 y1 z1 ... aN xN yN zN, 1 + 4N relations.
  // Mbar: xbar0 ybar0 zbar0 xbar1 ... xbarN, 1 + 2N relations.
  Presentation truncationPresentation(std::size_t N, WildMonoid which);

  // Words in the level-N truncation. Elements must have level <= N.
  Word     toWord(MElem const& e, Presentation const& truncation);
  Word     toWord(MBarElem const& e, Presentation const& truncation);
  MElem    mFromWord(Word const& w, Presentation const& truncation);
  MBarElem mbarFromWord(Word const& w, Presentation const& truncation);

  // s, f, g, h, girr over the M truncation; t, fbar, gbar, psibar over the
  // Mbar truncation. Throws Error on an unknown id.
  CertificateHom standardCertificate(std::string_view id, std::size_t N);

  // Separating families: {f, g, h} and {fbar, gbar, t}.
  std::vector<CertificateHom> separatingCertificates(std::size_t N,
                                                     WildMonoid  which);

  // Composite of an Mbar certificate with q, as a certificate on M.
  CertificateHom pullbackAlongQ(CertificateHom const& barCert, std::size_t N);

}  // namespace refmon

#endif  // REFMON_WILD_HPP_
