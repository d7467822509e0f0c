#include "refmon/certificate.hpp"

#include <sstream>

#include "refmon/exception.hpp"

namespace refmon {

  char const* toString(TargetKind k) {
    switch (k) {
      case TargetKind::nonneg_rational:
        return "Q+";
      case TargetKind::nonneg_integer:
        return "Z+";
      case TargetKind::free_abelian:
        return "free abelian";
      case TargetKind::free_abelian_with_infinity:
        return "free abelian with infinity";
      case TargetKind::b_monoid:
        return "B";
      case TargetKind::plane_plus_infinity:
        return "(Z+)^2 with infinity";
    }
    return "?";
  }

  TargetMonoid TargetMonoid::rationals() {
    return {TargetKind::nonneg_rational, {"1"}};
  }
  TargetMonoid TargetMonoid::integers() {
    return {TargetKind::nonneg_integer, {"1"}};
  }
  TargetMonoid TargetMonoid::freeAbelian(std::vector<std::string> basis) {
    return {TargetKind::free_abelian, std::move(basis)};
  }
  TargetMonoid
  TargetMonoid::freeAbelianWithInfinity(std::vector<std::string> basis) {
    return {TargetKind::free_abelian_with_infinity, std::move(basis)};
  }
  TargetMonoid TargetMonoid::bMonoid() {
    return {TargetKind::b_monoid, {"p", "q"}};
  }
  TargetMonoid TargetMonoid::planePlusInfinity() {
    return {TargetKind::plane_plus_infinity, {"e1", "e2"}};
  }

  bool TargetValue::isZero() const {
    if (infinite) {
      return false;
    }
    for (auto const& c : coords) {
      if (c != 0) {
        return false;
      }
    }
    return true;
  }

  bool operator==(TargetValue const& a, TargetValue const& b) {
    if (a.infinite || b.infinite) {
      return a.infinite == b.infinite;
    }
    return a.coords == b.coords;
  }

  TargetValue zeroValue(TargetMonoid const& t) {
    return TargetValue::vector(std::vector<Rational>(t.dimension(), 0));
  }

  TargetValue add(TargetValue const& a, TargetValue const& b) {
    if (a.infinite || b.infinite) {
      return TargetValue::infinity();
    }
    if (a.coords.size() != b.coords.size()) {
      throw Error("adding target values of different dimensions");
    }
    TargetValue out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) {
      out.coords[i] += b.coords[i];
    }
    return out;
  }

  TargetValue scale(TargetValue const& a, std::uint64_t k) {
    if (k == 0) {
      return TargetValue::vector(std::vector<Rational>(a.coords.size(), 0));
    }
    if (a.infinite) {
      return a;
    }
    TargetValue out = a;
    for (auto& c : out.coords) {
      c *= k;
    }
    return out;
  }

  namespace {
    bool integral(Rational const& r) {
      return boost::multiprecision::denominator(r) == 1;
    }
  }  // namespace

  bool belongsTo(TargetValue const& v, TargetMonoid const& t) {
    if (v.infinite) {
      return t.hasInfinity();
    }
    if (v.coords.size() != t.dimension()) {
      return false;
    }
    switch (t.kind) {
      case TargetKind::nonneg_rational:
        return v.coords[0] >= 0;
      case TargetKind::nonneg_integer:
        return v.coords[0] >= 0 && integral(v.coords[0]);
      case TargetKind::free_abelian:
      case TargetKind::free_abelian_with_infinity:
        for (auto const& c : v.coords) {
          if (!integral(c)) {
            return false;
          }
        }
        return true;
      case TargetKind::b_monoid:
        return integral(v.coords[0]) && integral(v.coords[1])
               && (v.coords[1] > 0 || (v.coords[1] == 0 && v.coords[0] >= 0));
      case TargetKind::plane_plus_infinity:
        return integral(v.coords[0]) && integral(v.coords[1])
               && v.coords[0] >= 0 && v.coords[1] >= 0;
    }
    return false;
  }

  std::string toString(TargetValue const& v, TargetMonoid const& t) {
    if (v.infinite) {
      return "inf";
    }
    std::ostringstream out;
    switch (t.kind) {
      case TargetKind::nonneg_rational:
      case TargetKind::nonneg_integer:
        out << v.coords[0];
        return out.str();
      case TargetKind::b_monoid:
      case TargetKind::plane_plus_infinity:
        out << "(" << v.coords[0] << "," << v.coords[1] << ")";
        return out.str();
      default:
        break;
    }
    bool first = true;
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
      auto const& c = v.coords[i];
      if (c == 0) {
        continue;
      }
      if (!first) {
        out << (c > 0 ? " + " : " - ");
      } else if (c < 0) {
        out << "-";
      }
      first       = false;
      Rational ac = c < 0 ? Rational(-c) : c;
      if (ac != 1) {
        out << ac << "*";
      }
      out << t.basis[i];
    }
    return first ? "0" : out.str();
  }

  bool CertificateHom::provesStableFiniteness() const {
    if (!_target.cancellative() || !imagesConical()) {
      return false;
    }
    for (auto const& v : _images) {
      if (v.isZero()) {
        return false;
      }
    }
    return true;
  }

  bool CertificateHom::isPositiveState() const {
    if (_target.kind != TargetKind::nonneg_rational
        && _target.kind != TargetKind::nonneg_integer) {
      return false;
    }
    for (auto const& v : _images) {
      if (v.infinite || v.coords[0] <= 0) {
        return false;
      }
    }
    return true;
  }

  bool CertificateHom::imagesConical() const {
    switch (_target.kind) {
      case TargetKind::nonneg_rational:
      case TargetKind::nonneg_integer:
      case TargetKind::b_monoid:
      case TargetKind::plane_plus_infinity:
        return true;
      default:
        break;
    }
    // Inside a group, images in the nonnegative orthant span a conical
    // submonoid.
    for (auto const& v : _images) {
      if (v.infinite) {
        continue;
      }
      for (auto const& c : v.coords) {
        if (c < 0) {
          return false;
        }
      }
    }
    return true;
  }

  TargetValue applyHom(CertificateHom const& h, Word const& w) {
    if (w.arity() != h.source().arity()) {
      throw Error("word over the wrong generator set for certificate '"
                  + h.name() + "'");
    }
    TargetValue acc = zeroValue(h.target());
    for (std::size_t i = 0; i < w.arity(); ++i) {
      if (w[i] != 0) {
        acc = add(acc, scale(h.image(i), w[i]));
        if (acc.infinite) {
          break;
        }
      }
    }
    return acc;
  }

  CertificateHom buildCertificate(Presentation const&      p,
                                  TargetMonoid const&      target,
                                  std::vector<TargetValue> images,
                                  std::string              name) {
    if (images.size() != p.arity()) {
      throw CertificateError("certificate '" + name + "' must define "
                             + std::to_string(p.arity()) + " images, got "
                             + std::to_string(images.size()));
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!belongsTo(images[i], target)) {
        throw CertificateError("certificate '" + name + "': image of "
                               + p.generators().name(i) + " is not in "
                               + toString(target.kind));
      }
    }
    CertificateHom h;
    h._source = p;
    h._target = target;
    h._images = std::move(images);
    h._name   = std::move(name);
    for (std::size_t r = 0; r < p.relations().size(); ++r) {
      auto const& rel = p.relations()[r];
      auto        l   = applyHom(h, rel.lhs);
      auto        rr  = applyHom(h, rel.rhs);
      if (!(l == rr)) {
        throw CertificateError("certificate '" + h._name
                               + "' violates relation " + p.relationString(r)
                               + " (" + toString(l, target)
                               + " != " + toString(rr, target) + ")");
      }
    }
    return h;
  }

  CertificateHom buildCertificate(Presentation const&                       p,
                                  TargetMonoid const&                       target,
                                  std::map<std::string, TargetValue> const& images,
                                  std::string name) {
    std::vector<TargetValue> v(p.arity());
    std::vector<bool>        seen(p.arity(), false);
    for (auto const& [gen, val] : images) {
      auto i = p.generators().find(gen);
      if (!i) {
        throw CertificateError("certificate '" + name
                               + "': unknown generator '" + gen + "'");
      }
      v[*i]    = val;
      seen[*i] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (!seen[i]) {
        throw CertificateError("certificate '" + name + "': no image for "
                               + p.generators().name(i));
      }
    }
    return buildCertificate(p, target, std::move(v), std::move(name));
  }

}  // namespace refmon
