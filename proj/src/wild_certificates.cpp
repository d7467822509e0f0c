#include <string>

#include "refmon/exception.hpp"
#include "refmon/wild.hpp"

namespace refmon {

  namespace {
    std::string num(std::size_t n) {
      return std::to_string(n);
    }
  }  // namespace

  Presentation truncationPresentation(std::size_t N, WildMonoid which) {
    if (N < 1) {
      throw PreconditionError("truncation level must be at least 1");
    }
    GeneratorSet gens;
    if (which == WildMonoid::M) {
      gens.add("x0");
      gens.add("y0");
      gens.add("z0");
      for (std::size_t l = 1; l <= N; ++l) {
        gens.add("a" + num(l));
        gens.add("x" + num(l));
        gens.add("y" + num(l));
        gens.add("z" + num(l));
      }
      Presentation p("M" + num(N), std::move(gens));
      p.addRelation("x0 + y0", "x0 + z0");
      for (std::size_t l = 0; l < N; ++l) {
        auto a  = "a" + num(l + 1);
        auto x1 = "x" + num(l + 1);
        p.addRelation("y" + num(l), "y" + num(l + 1) + " + " + a);
        p.addRelation("z" + num(l), "z" + num(l + 1) + " + " + a);
        p.addRelation("x" + num(l), x1 + " + y" + num(l + 1));
        p.addRelation("x" + num(l), x1 + " + z" + num(l + 1));
      }
      return p;
    }
    gens.add("xbar0");
    gens.add("ybar0");
    gens.add("zbar0");
    for (std::size_t l = 1; l <= N; ++l) {
      gens.add("xbar" + num(l));
    }
    Presentation p("Mbar" + num(N), std::move(gens));
    p.addRelation("xbar0 + ybar0", "xbar0 + zbar0");
    for (std::size_t l = 0; l < N; ++l) {
      p.addRelation("xbar" + num(l), "xbar" + num(l + 1) + " + ybar0");
      p.addRelation("xbar" + num(l), "xbar" + num(l + 1) + " + zbar0");
    }
    return p;
  }

  namespace {

    // basis beta, gamma, alpha1..alphaN
    std::vector<std::string> abBasis(std::size_t N, bool gamma) {
      std::vector<std::string> b{"beta"};
      if (gamma) {
        b.push_back("gamma");
      }
      for (std::size_t l = 1; l <= N; ++l) {
        b.push_back("alpha" + num(l));
      }
      return b;
    }

    CertificateHom mCertificate(std::string_view id, std::size_t N) {
      auto                               p = truncationPresentation(N, WildMonoid::M);
      std::map<std::string, TargetValue> img;
      if (id == "s") {
        for (std::size_t l = 0; l <= N; ++l) {
          Rational v(1, BigInt(1) << l);
          for (char c : std::string("xyza")) {
            if (c == 'a' && l == 0) {
              continue;
            }
            img[c + num(l)] = TargetValue::scalar(v);
          }
        }
        return buildCertificate(p, TargetMonoid::rationals(), img, "s");
      }
      if (id == "f") {
        for (auto const& g : p.generators().names()) {
          img[g] = TargetValue::scalar(g[0] == 'x' ? 1 : 0);
        }
        return buildCertificate(p, TargetMonoid::integers(), img, "f");
      }
      if (id == "g" || id == "h") {
        auto basis = abBasis(N, true);
        auto vec   = [&] { return std::vector<Rational>(basis.size(), 0); };
        // beta = 0, gamma = 1, alpha_l = l + 1
        for (std::size_t l = 0; l <= N; ++l) {
          auto yl = vec();
          yl[0]   = 1;
          for (std::size_t s = 1; s <= l; ++s) {
            yl[s + 1] = 1;
          }
          auto zl = yl;
          if (id == "g") {
            zl[0] = 0;
            zl[1] = 1;
          }
          img["y" + num(l)] = TargetValue::vector(yl);
          img["z" + num(l)] = TargetValue::vector(zl);
          if (id == "g") {
            img["x" + num(l)] = TargetValue::infinity();
          } else {
            auto xl = vec();
            xl[0]   = -Rational(l);
            for (std::size_t s = 1; s <= l; ++s) {
              xl[s + 1] = Rational(s) - Rational(l) - 1;
            }
            img["x" + num(l)] = TargetValue::vector(xl);
          }
          if (l >= 1) {
            auto al           = vec();
            al[l + 1]         = -1;
            img["a" + num(l)] = TargetValue::vector(al);
          }
        }
        auto target = id == "g" ? TargetMonoid::freeAbelianWithInfinity(basis)
                                : TargetMonoid::freeAbelian(basis);
        return buildCertificate(p, target, img, std::string(id));
      }
      if (id == "girr") {
        std::vector<std::string> basis;
        for (std::size_t l = 1; l <= N; ++l) {
          basis.push_back("alpha" + num(l));
        }
        for (std::size_t l = 0; l <= N; ++l) {
          for (char c : std::string("xyz")) {
            img[c + num(l)] = TargetValue::infinity();
          }
          if (l >= 1) {
            std::vector<Rational> al(N, 0);
            al[l - 1]         = 1;
            img["a" + num(l)] = TargetValue::vector(al);
          }
        }
        return buildCertificate(p, TargetMonoid::freeAbelianWithInfinity(basis),
                                img, "girr");
      }
      throw Error("unknown certificate '" + std::string(id) + "'");
    }

    CertificateHom mbarCertificate(std::string_view id, std::size_t N) {
      auto p = truncationPresentation(N, WildMonoid::Mbar);
      std::map<std::string, TargetValue> img;
      if (id == "t") {
        img["ybar0"] = TargetValue::vector({1, 0});
        img["zbar0"] = TargetValue::vector({1, 0});
        for (std::size_t l = 0; l <= N; ++l) {
          img["xbar" + num(l)] = TargetValue::vector({1 - Rational(l), 1});
        }
        return buildCertificate(p, TargetMonoid::bMonoid(), img, "t");
      }
      if (id == "fbar") {
        img["ybar0"] = TargetValue::scalar(0);
        img["zbar0"] = TargetValue::scalar(0);
        for (std::size_t l = 0; l <= N; ++l) {
          img["xbar" + num(l)] = TargetValue::scalar(1);
        }
        return buildCertificate(p, TargetMonoid::integers(), img, "fbar");
      }
      if (id == "gbar") {
        img["ybar0"] = TargetValue::vector({1, 0});
        img["zbar0"] = TargetValue::vector({0, 1});
        for (std::size_t l = 0; l <= N; ++l) {
          img["xbar" + num(l)] = TargetValue::infinity();
        }
        return buildCertificate(p, TargetMonoid::planePlusInfinity(), img,
                                "gbar");
      }
      if (id == "psibar") {
        img["ybar0"] = TargetValue::vector({1});
        img["zbar0"] = TargetValue::vector({0});
        for (std::size_t l = 0; l <= N; ++l) {
          img["xbar" + num(l)] = TargetValue::infinity();
        }
        return buildCertificate(
            p, TargetMonoid::freeAbelianWithInfinity({"y"}), img, "psibar");
      }
      throw Error("unknown certificate '" + std::string(id) + "'");
    }

  }  // namespace

  CertificateHom standardCertificate(std::string_view id, std::size_t N) {
    if (id == "s" || id == "f" || id == "g" || id == "h" || id == "girr") {
      return mCertificate(id, N);
    }
    return mbarCertificate(id, N);
  }

  std::vector<CertificateHom> separatingCertificates(std::size_t N,
                                                     WildMonoid  which) {
    if (which == WildMonoid::M) {
      return {standardCertificate("f", N), standardCertificate("g", N),
              standardCertificate("h", N)};
    }
    return {standardCertificate("fbar", N), standardCertificate("gbar", N),
            standardCertificate("t", N)};
  }

  CertificateHom pullbackAlongQ(CertificateHom const& barCert, std::size_t N) {
    auto const& src = barCert.source();
    if (!sameMonoidData(src, truncationPresentation(N, WildMonoid::Mbar))) {
      throw Error("certificate '" + barCert.name()
                  + "' is not over the Mbar truncation of level "
                  + std::to_string(N));
    }
    auto p     = truncationPresentation(N, WildMonoid::M);
    auto image = [&](std::string const& g) {
      return barCert.image(src.generators().index(g));
    };
    std::map<std::string, TargetValue> img;
    for (std::size_t l = 0; l <= N; ++l) {
      img["x" + num(l)] = image("xbar" + num(l));
      img["y" + num(l)] = image("ybar0");
      img["z" + num(l)] = image("zbar0");
      if (l >= 1) {
        img["a" + num(l)] = zeroValue(barCert.target());
      }
    }
    return buildCertificate(p, barCert.target(), img, barCert.name() + "_q");
  }

}  // namespace refmon
