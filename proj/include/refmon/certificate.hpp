#ifndef REFMON_CERTIFICATE_HPP_
#define REFMON_CERTIFICATE_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "refmon/presentation.hpp"

namespace refmon {

  using BigInt   = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  enum class TargetKind {
    nonneg_rational,           // Q+
    nonneg_integer,            // Z+
    free_abelian,              // Z^d
    free_abelian_with_infinity,  // Z^d with an absorbing infinity
    b_monoid,                  // {(p,q) : q > 0, or q = 0 and p >= 0}
    plane_plus_infinity        // (Z+)^2 with an absorbing infinity
  };

  char const* toString(TargetKind k);

  // The codomain of a certificate homomorphism. Vector-valued kinds carry a
  // basis; the scalar kinds have dimension 1.
  struct TargetMonoid {
    TargetKind               kind = TargetKind::nonneg_integer;
    std::vector<std::string> basis;

    static TargetMonoid rationals();
    static TargetMonoid integers();
    static TargetMonoid freeAbelian(std::vector<std::string> basis);
    static TargetMonoid freeAbelianWithInfinity(std::vector<std::string> basis);
    static TargetMonoid bMonoid();
    static TargetMonoid planePlusInfinity();

    std::size_t dimension() const noexcept {
      return basis.size();
    }
    bool hasInfinity() const noexcept {
      return kind == TargetKind::free_abelian_with_infinity
             || kind == TargetKind::plane_plus_infinity;
    }
    // True when x + y = x + z implies y = z in the target.
    bool cancellative() const noexcept {
      return !hasInfinity();
    }
  };

  // Exact value in a target monoid: an integer/rational coordinate vector,
  // or the absorbing infinity.
  struct TargetValue {
    bool                  infinite = false;
    std::vector<Rational> coords;

    static TargetValue infinity() {
      return {true, {}};
    }
    static TargetValue scalar(Rational r) {
      return {false, {std::move(r)}};
    }
    static TargetValue vector(std::vector<Rational> c) {
      return {false, std::move(c)};
    }

    bool isZero() const;

    friend bool operator==(TargetValue const& a, TargetValue const& b);
  };

  TargetValue zeroValue(TargetMonoid const& t);
  TargetValue add(TargetValue const& a, TargetValue const& b);
  TargetValue scale(TargetValue const& a, std::uint64_t k);
  bool        belongsTo(TargetValue const& v, TargetMonoid const& t);
  std::string toString(TargetValue const& v, TargetMonoid const& t);

  // A monoid homomorphism from a presented monoid into a target, checked
  // against every defining relation when it is built.
  class CertificateHom {
   public:
    Presentation const& source() const noexcept {
      return _source;
    }
    TargetMonoid const& target() const noexcept {
      return _target;
    }
    std::string const& name() const noexcept {
      return _name;
    }
    TargetValue const& image(std::size_t gen) const {
      return _images.at(gen);
    }
    std::vector<TargetValue> const& images() const noexcept {
      return _images;
    }

    // Every generator maps to a nonzero value of a cancellative, conical
    // target: then h^{-1}(0) = {0}, which forces conicality and stable
    // finiteness of the source.
    bool provesStableFiniteness() const;

    // Every generator maps to a strictly positive rational: a faithful
    // state, which also forces the archimedean property.
    bool isPositiveState() const;

    // The image of the source lies in a conical submonoid of the target.
    bool imagesConical() const;

    friend CertificateHom buildCertificate(Presentation const&,
                                           TargetMonoid const&,
                                           std::vector<TargetValue>,
                                           std::string);

   private:
    Presentation             _source;
    TargetMonoid             _target;
    std::vector<TargetValue> _images;
    std::string              _name;
  };

  // Throws CertificateError naming the first relation whose two sides have
  // different images, or an image outside the target.
  CertificateHom buildCertificate(Presentation const&      p,
                                  TargetMonoid const&      target,
                                  std::vector<TargetValue> images,
                                  std::string              name = "h");

  CertificateHom buildCertificate(Presentation const&                       p,
                                  TargetMonoid const&                       target,
                                  std::map<std::string, TargetValue> const& images,
                                  std::string name = "h");

  TargetValue applyHom(CertificateHom const& h, Word const& w);

}  // namespace refmon

#endif  // REFMON_CERTIFICATE_HPP_
