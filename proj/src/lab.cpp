#include "refmon/lab.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <unordered_map>

#include "refmon/exception.hpp"

namespace refmon {

  namespace {

    struct PropertyName {
      PropertyId  id;
      char const* name;
    };

    constexpr PropertyName propertyNames[] = {
        {PropertyId::conical, "CONICAL"},
        {PropertyId::stably_finite, "STABLY_FINITE"},
        {PropertyId::separative, "SEPARATIVE"},
        {PropertyId::strongly_separative, "STRONGLY_SEPARATIVE"},
        {PropertyId::cancellative, "CANCELLATIVE"},
        {PropertyId::unperforated, "UNPERFORATED"},
        {PropertyId::antisymmetric, "ANTISYMMETRIC"},
        {PropertyId::archimedean, "ARCHIMEDEAN"},
        {PropertyId::refinement, "REFINEMENT"},
        {PropertyId::riesz_decomposition, "RIESZ_DECOMPOSITION"},
        {PropertyId::riesz_interpolation, "RIESZ_INTERPOLATION"},
    };

  }  // namespace

  char const* toString(PropertyId p) {
    for (auto const& n : propertyNames) {
      if (n.id == p) {
        return n.name;
      }
    }
    return "?";
  }

  std::optional<PropertyId> parsePropertyId(std::string_view s) {
    std::string up;
    for (char c : s) {
      up += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    for (auto const& n : propertyNames) {
      if (up == n.name) {
        return n.id;
      }
    }
    return std::nullopt;
  }

  std::vector<PropertyId> allProperties() {
    std::vector<PropertyId> out;
    for (auto const& n : propertyNames) {
      out.push_back(n.id);
    }
    return out;
  }

  char const* toString(Basis b) {
    switch (b) {
      case Basis::witness:
        return "witness";
      case Basis::certificate:
        return "certificate";
      case Basis::exhaustive:
        return "exhaustive";
      default:
        return "none";
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // helpers
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using KeyMap = std::unordered_map<Word, std::size_t, WordHash, RawEqual>;

    // the conical-image certificate with every generator nonzero
    CertificateHom const* conicalCertificate(MonoidOracle& o) {
      for (auto const& h : o.certificates()) {
        if (!h.imagesConical()) {
          continue;
        }
        if (std::none_of(h.images().begin(), h.images().end(),
                         [](TargetValue const& v) { return v.isZero(); })) {
          return &h;
        }
      }
      return nullptr;
    }

    CertificateHom const* stablyFiniteCertificate(MonoidOracle& o) {
      for (auto const& h : o.certificates()) {
        if (h.provesStableFiniteness()) {
          return &h;
        }
      }
      return nullptr;
    }

    CertificateHom const* positiveState(MonoidOracle& o) {
      for (auto const& h : o.certificates()) {
        if (h.isPositiveState()) {
          return &h;
        }
      }
      return nullptr;
    }

    void fail(PropertyReport& r, std::vector<Word> w, std::string detail) {
      r.verdict   = Verdict::fails;
      r.basis     = Basis::witness;
      r.witnesses = std::move(w);
      r.detail    = std::move(detail);
    }

    void holdsBy(PropertyReport& r, CertificateHom const& h, std::string what) {
      r.verdict = Verdict::holds;
      r.basis   = Basis::certificate;
      r.detail  = what + " via certificate " + h.name();
    }

    // a sweep found nothing
    void finish(PropertyReport& r) {
      if (r.verdict == Verdict::fails) {
        return;
      }
      if (r.unknowns == 0) {
        r.verdict = Verdict::holds;
        r.basis   = Basis::exhaustive;
        if (r.detail.empty()) {
          r.detail = "no counterexample inside the bound";
        }
      } else {
        r.verdict = Verdict::unknown;
        r.basis   = Basis::none;
        r.detail  = std::to_string(r.unknowns) + " undecided instances";
      }
    }

    // tri-state helpers counting unknowns
    struct Ask {
      MonoidOracle&   o;
      PropertyReport& r;

      bool eq(Word const& a, Word const& b, bool& decided) {
        auto v  = o.equal(a, b);
        decided = v != Verdict::unknown;
        return v == Verdict::holds;
      }
      // definitely different
      bool apart(Word const& a, Word const& b) {
        auto v = o.equal(a, b);
        if (v == Verdict::unknown) {
          ++r.unknowns;
        }
        return v == Verdict::fails;
      }
      Verdict le(Word const& a, Word const& b) {
        auto v = o.leq(a, b).verdict;
        if (v == Verdict::unknown) {
          ++r.unknowns;
        }
        return v;
      }
    };

    std::string show(MonoidOracle& o, std::vector<Word> const& ws) {
      std::string s;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        s += (i ? "; " : "") + o.show(ws[i]);
      }
      return s;
    }

    std::vector<Word> upToDegree(std::vector<Word> const& E, std::uint64_t d) {
      std::vector<Word> out;
      for (auto const& w : E) {
        if (w.degree() <= d) {
          out.push_back(w);
        }
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////
    // the checks
    ////////////////////////////////////////////////////////////////////

    void checkConical(MonoidOracle& o, PropertyReport& r) {
      Ask ask{o, r};
      for (auto const& x : o.elements(r.bound.maxDegree)) {
        if (x.is_zero()) {
          continue;
        }
        ++r.checked;
        auto d = o.leq(x, o.zero());
        if (d.isUnknown()) {
          ++r.unknowns;
        } else if (d.isHolds() && ask.apart(x, o.zero())) {
          return fail(r, {x, d.witness}, "x + y = 0 with x nonzero");
        }
      }
    }

    void checkStablyFinite(MonoidOracle& o, PropertyReport& r) {
      Ask         ask{o, r};
      auto const& E = o.elements(r.bound.maxDegree);
      for (auto const& x : E) {
        for (auto const& y : E) {
          if (y.is_zero()) {
            continue;
          }
          ++r.checked;
          bool decided;
          if (ask.eq(x + y, x, decided)) {
            if (ask.apart(y, o.zero())) {
              return fail(r, {x, y}, "x + y = x with y nonzero");
            }
          } else if (!decided) {
            ++r.unknowns;
          }
        }
      }
    }

    void checkSeparative(MonoidOracle& o, PropertyReport& r, bool strong) {
      Ask         ask{o, r};
      auto const& E = o.elements(r.bound.maxDegree);
      std::vector<std::optional<Word>> k2(E.size());
      for (std::size_t i = 0; i < E.size(); ++i) {
        k2[i] = o.key(E[i].times(2));
      }
      for (std::size_t i = 0; i < E.size(); ++i) {
        for (std::size_t j = strong ? 0 : i + 1; j < E.size(); ++j) {
          if (i == j) {
            continue;
          }
          ++r.checked;
          auto const& x = E[i];
          auto const& y = E[j];
          if (!strong && k2[i] && k2[j] && !rawEqual(*k2[i], *k2[j])) {
            continue;
          }
          bool decided;
          bool a = ask.eq(x.times(2), x + y, decided);
          if (!decided) {
            ++r.unknowns;
            continue;
          }
          if (!a) {
            continue;
          }
          if (!strong) {
            bool b = ask.eq(y.times(2), x + y, decided);
            if (!decided) {
              ++r.unknowns;
              continue;
            }
            if (!b) {
              continue;
            }
          }
          if (ask.apart(x, y)) {
            return fail(r, {x, y},
                        strong ? "2x = x + y with x != y"
                               : "2x = 2y = x + y with x != y");
          }
        }
      }
    }

    void checkCancellative(MonoidOracle& o, PropertyReport& r) {
      Ask         ask{o, r};
      auto const  D = r.bound.maxDegree;
      auto const& E = o.elements(D);
      for (auto const& z : E) {
        if (z.is_zero()) {
          continue;
        }
        auto   xs = upToDegree(E, D - std::min<std::uint64_t>(D, z.degree()));
        KeyMap seen;
        for (std::size_t i = 0; i < xs.size(); ++i) {
          ++r.checked;
          auto k = o.key(xs[i] + z);
          if (!k) {
            // no canonical form: compare against the earlier ones
            for (std::size_t j = 0; j < i; ++j) {
              bool decided;
              if (ask.eq(xs[i] + z, xs[j] + z, decided)) {
                if (ask.apart(xs[j], xs[i])) {
                  return fail(r, {z, xs[j], xs[i]}, "z + x = z + y with x != y");
                }
              } else if (!decided) {
                ++r.unknowns;
              }
            }
            continue;
          }
          auto [it, fresh] = seen.emplace(*k, i);
          if (!fresh && ask.apart(xs[it->second], xs[i])) {
            return fail(r, {z, xs[it->second], xs[i]}, "z + x = z + y with x != y");
          }
        }
      }
    }

    void checkUnperforated(MonoidOracle& o, PropertyReport& r) {
      auto const& E = o.elements(r.bound.maxDegree);
      for (auto const& x : E) {
        for (auto const& y : E) {
          ++r.checked;
          auto base = o.leq(x, y).verdict;
          if (base == Verdict::holds) {
            continue;
          }
          bool undecided = base == Verdict::unknown;
          for (std::uint64_t m = 2; m <= r.bound.maxCoefficient; ++m) {
            auto v = o.leq(x.times(static_cast<exponent_type>(m)),
                           y.times(static_cast<exponent_type>(m)))
                         .verdict;
            if (v == Verdict::holds && !undecided) {
              r.multiplier = m;
              return fail(r, {x, y}, "m*x <= m*y but not x <= y");
            }
            undecided = undecided || v == Verdict::unknown;
          }
          if (undecided) {
            ++r.unknowns;
          }
        }
      }
    }

    void checkAntisymmetric(MonoidOracle& o, PropertyReport& r) {
      Ask         ask{o, r};
      auto const& E = o.elements(r.bound.maxDegree);
      for (std::size_t i = 0; i < E.size(); ++i) {
        for (std::size_t j = i + 1; j < E.size(); ++j) {
          ++r.checked;
          if (ask.le(E[i], E[j]) == Verdict::holds
              && ask.le(E[j], E[i]) == Verdict::holds && ask.apart(E[i], E[j])) {
            return fail(r, {E[i], E[j]}, "x <= y <= x with x != y");
          }
        }
      }
    }

    // n*x <= y for every n up to the returned bound
    std::uint64_t archimedeanReach(PropertyReport const& r, Word const& y) {
      return std::max<std::uint64_t>(r.bound.maxCoefficient, 2 * y.degree() + 1);
    }

    void checkArchimedean(MonoidOracle& o, PropertyReport& r) {
      if (auto const* h = positiveState(o)) {
        return holdsBy(r, *h, "faithful state");
      }
      auto const& E = o.elements(r.bound.maxDegree);
      for (auto const& x : E) {
        if (x.is_zero() || !o.leq(x, o.zero()).isFails()) {
          continue;
        }
        for (auto const& y : E) {
          ++r.checked;
          auto n   = archimedeanReach(r, y);
          bool all = true;
          for (std::uint64_t k = 1; k <= n && all; ++k) {
            all = o.leq(x.times(static_cast<exponent_type>(k)), y).isHolds();
          }
          if (all) {
            r.multiplier = n;
            fail(r, {x, y}, "n*x <= y for n = 1.." + std::to_string(n) + " with x not invertible");
            return;
          }
        }
      }
      // enumeration alone never proves the property
      r.verdict = Verdict::unknown;
      r.basis   = Basis::none;
      r.detail  = "no family found; no faithful state available";
    }

    void checkRefinement(MonoidOracle& o, PropertyReport& r) {
      auto const  D = r.bound.maxDegree;
      auto const& E = o.elements(D);
      struct Split {
        Word a, b;
      };
      std::unordered_map<Word, std::vector<Split>, WordHash, RawEqual> bySum;
      std::vector<Split>                                              unkeyed;
      for (std::size_t i = 0; i < E.size(); ++i) {
        for (std::size_t j = i; j < E.size(); ++j) {
          if (E[i].degree() + E[j].degree() > D) {
            continue;
          }
          auto k = o.key(E[i] + E[j]);
          if (k) {
            bySum[*k].push_back({E[i], E[j]});
          } else {
            unkeyed.push_back({E[i], E[j]});
          }
        }
      }
      auto tryOne = [&](Split const& p, Split const& q) {
        ++r.checked;
        auto d = o.refine(p.a, p.b, q.a, q.b);
        if (d.isFails()) {
          fail(r, {p.a, p.b, q.a, q.b}, "a + b = c + d has no refinement");
          return true;
        }
        if (d.isUnknown()) {
          ++r.unknowns;
        }
        return false;
      };
      std::vector<Word> keys;
      for (auto const& [k, v] : bySum) {
        keys.push_back(k);
      }
      std::sort(keys.begin(), keys.end(), DegLexLess{});
      for (auto const& k : keys) {
        auto const& splits = bySum[k];
        for (std::size_t i = 0; i < splits.size(); ++i) {
          for (std::size_t j = i + 1; j < splits.size(); ++j) {
            if (tryOne(splits[i], splits[j])) {
              return;
            }
          }
        }
      }
      Ask ask{o, r};
      for (std::size_t i = 0; i < unkeyed.size(); ++i) {
        for (std::size_t j = i + 1; j < unkeyed.size(); ++j) {
          bool decided;
          if (ask.eq(unkeyed[i].a + unkeyed[i].b, unkeyed[j].a + unkeyed[j].b, decided)) {
            if (tryOne(unkeyed[i], unkeyed[j])) {
              return;
            }
          }
        }
      }
    }

    // x = x1 + x2 with x1 <= y1, x2 <= y2
    Verdict decomposes(MonoidOracle& o, Word const& x, Word const& y1, Word const& y2,
                       std::vector<Word> const& E) {
      auto up = o.leq(x, y1 + y2);
      if (!up.isHolds()) {
        return Verdict::holds;  // vacuous
      }
      if (up.witness.arity() == x.arity()) {
        if (o.refine(x, up.witness, y1, y2).isHolds()) {
          return Verdict::holds;
        }
      }
      bool unsure = false;
      for (auto const& x1 : E) {
        auto s = o.leq(x1, x);
        if (s.isUnknown()) {
          unsure = true;
          continue;
        }
        if (!s.isHolds() || s.witness.arity() != x.arity()) {
          unsure = unsure || s.isHolds();
          continue;
        }
        auto a = o.leq(x1, y1).verdict;
        auto b = o.leq(s.witness, y2).verdict;
        if (a == Verdict::holds && b == Verdict::holds) {
          return Verdict::holds;
        }
        unsure = unsure || a == Verdict::unknown || b == Verdict::unknown;
      }
      return unsure ? Verdict::unknown : Verdict::fails;
    }

    void checkDecomposition(MonoidOracle& o, PropertyReport& r) {
      auto const  D = r.bound.maxDegree;
      auto const& E = o.elements(D);
      for (std::size_t i = 0; i < E.size(); ++i) {
        for (std::size_t j = i; j < E.size(); ++j) {
          if (E[i].degree() + E[j].degree() > D) {
            continue;
          }
          for (auto const& x : E) {
            ++r.checked;
            auto v = decomposes(o, x, E[i], E[j], E);
            if (v == Verdict::fails) {
              fail(r, {x, E[i], E[j]}, "x <= y1 + y2 without a matching split of x");
              r.basis = Basis::exhaustive;
              return;
            }
            if (v == Verdict::unknown) {
              ++r.unknowns;
            }
          }
        }
      }
    }

    void checkInterpolation(MonoidOracle& o, PropertyReport& r) {
      auto const  D = r.bound.maxDegree;
      auto const& E = o.elements(D);
      auto        S = upToDegree(E, std::max<std::uint64_t>(1, D / 2));
      auto        n = S.size();
      // le[i][j] for S
      std::vector<std::vector<Verdict>> le(n, std::vector<Verdict>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          le[i][j] = o.leq(S[i], S[j]).verdict;
        }
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
          std::vector<std::size_t> ups;
          for (std::size_t y = 0; y < n; ++y) {
            if (le[a][y] == Verdict::holds && le[b][y] == Verdict::holds) {
              ups.push_back(y);
            }
          }
          // candidates above both x's
          std::vector<Word> zs;
          bool              zsComplete = true;
          for (auto const& z : E) {
            auto va = o.leq(S[a], z).verdict, vb = o.leq(S[b], z).verdict;
            if (va == Verdict::holds && vb == Verdict::holds) {
              zs.push_back(z);
            } else if (va == Verdict::unknown || vb == Verdict::unknown) {
              zsComplete = false;
            }
          }
          for (std::size_t i = 0; i < ups.size(); ++i) {
            for (std::size_t j = i; j < ups.size(); ++j) {
              ++r.checked;
              bool found = false, unsure = !zsComplete;
              for (auto const& z : zs) {
                auto v1 = o.leq(z, S[ups[i]]).verdict;
                auto v2 = o.leq(z, S[ups[j]]).verdict;
                if (v1 == Verdict::holds && v2 == Verdict::holds) {
                  found = true;
                  break;
                }
                unsure = unsure || v1 == Verdict::unknown || v2 == Verdict::unknown;
              }
              if (found) {
                continue;
              }
              if (unsure) {
                ++r.unknowns;
                continue;
              }
              fail(r, {S[a], S[b], S[ups[i]], S[ups[j]]},
                   "x1, x2 <= y1, y2 with nothing in between");
              r.basis = Basis::exhaustive;
              return;
            }
          }
        }
      }
    }

  }  // namespace

  PropertyReport checkProperty(MonoidOracle& o, PropertyId p, SearchBound const& b) {
    b.validate();
    auto           start = std::chrono::steady_clock::now();
    PropertyReport r;
    r.property = toString(p);
    r.monoid   = o.name();
    r.bound    = b;
    switch (p) {
      case PropertyId::conical:
        checkConical(o, r);
        break;
      case PropertyId::stably_finite:
        checkStablyFinite(o, r);
        break;
      case PropertyId::separative:
        checkSeparative(o, r, false);
        break;
      case PropertyId::strongly_separative:
        checkSeparative(o, r, true);
        break;
      case PropertyId::cancellative:
        checkCancellative(o, r);
        break;
      case PropertyId::unperforated:
        checkUnperforated(o, r);
        break;
      case PropertyId::antisymmetric:
        checkAntisymmetric(o, r);
        break;
      case PropertyId::archimedean:
        checkArchimedean(o, r);
        break;
      case PropertyId::refinement:
        checkRefinement(o, r);
        break;
      case PropertyId::riesz_decomposition:
        checkDecomposition(o, r);
        break;
      case PropertyId::riesz_interpolation:
        checkInterpolation(o, r);
        break;
    }
    // sweeps left undecided instances: fall back on a certificate
    if (r.verdict != Verdict::fails && r.unknowns > 0) {
      CertificateHom const* h = nullptr;
      char const*           why = "";
      if (p == PropertyId::conical) {
        h   = conicalCertificate(o);
        why = "every generator has a nonzero image in a conical submonoid";
      } else if (p == PropertyId::stably_finite) {
        h   = stablyFiniteCertificate(o);
        why = "faithful map into a cancellative conical monoid";
      } else if (p == PropertyId::antisymmetric) {
        h   = stablyFiniteCertificate(o);
        why = "stably finite and conical";
      }
      if (h) {
        holdsBy(r, *h, why);
      }
    }
    if (r.basis != Basis::certificate && p != PropertyId::archimedean) {
      finish(r);
    }
    if (r.verdict == Verdict::fails && !r.witnesses.empty()) {
      r.detail += ": " + show(o, r.witnesses);
      if (r.multiplier != 0) {
        r.detail += " (multiplier " + std::to_string(r.multiplier) + ")";
      }
    }
    r.elapsedMs = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return r;
  }

  bool replayCounterexample(MonoidOracle& o, PropertyId p, PropertyReport const& r) {
    if (r.verdict != Verdict::fails) {
      return false;
    }
    auto const& w  = r.witnesses;
    auto        eq = [&](Word const& a, Word const& b) { return o.equal(a, b) == Verdict::holds; };
    auto        ne = [&](Word const& a, Word const& b) { return o.equal(a, b) == Verdict::fails; };
    auto        le = [&](Word const& a, Word const& b) { return o.leq(a, b).isHolds(); };
    auto        nle = [&](Word const& a, Word const& b) { return o.leq(a, b).isFails(); };
    switch (p) {
      case PropertyId::conical:
        return w.size() == 2 && eq(w[0] + w[1], o.zero()) && ne(w[0], o.zero());
      case PropertyId::stably_finite:
        return w.size() == 2 && eq(w[0] + w[1], w[0]) && ne(w[1], o.zero());
      case PropertyId::separative:
        return w.size() == 2 && eq(w[0].times(2), w[0] + w[1])
               && eq(w[1].times(2), w[0] + w[1]) && ne(w[0], w[1]);
      case PropertyId::strongly_separative:
        return w.size() == 2 && eq(w[0].times(2), w[0] + w[1]) && ne(w[0], w[1]);
      case PropertyId::cancellative:
        return w.size() == 3 && eq(w[0] + w[1], w[0] + w[2]) && ne(w[1], w[2]);
      case PropertyId::unperforated: {
        auto m = static_cast<exponent_type>(r.multiplier);
        return w.size() == 2 && le(w[0].times(m), w[1].times(m)) && nle(w[0], w[1]);
      }
      case PropertyId::antisymmetric:
        return w.size() == 2 && le(w[0], w[1]) && le(w[1], w[0]) && ne(w[0], w[1]);
      case PropertyId::archimedean: {
        if (w.size() != 2 || !nle(w[0], o.zero())) {
          return false;
        }
        for (std::uint64_t n = 1; n <= r.multiplier; ++n) {
          if (!le(w[0].times(static_cast<exponent_type>(n)), w[1])) {
            return false;
          }
        }
        return true;
      }
      case PropertyId::refinement:
        return w.size() == 4 && eq(w[0] + w[1], w[2] + w[3])
               && o.refine(w[0], w[1], w[2], w[3]).isFails();
      case PropertyId::riesz_decomposition:
        return w.size() == 3
               && decomposes(o, w[0], w[1], w[2], o.elements(r.bound.maxDegree))
                      == Verdict::fails;
      case PropertyId::riesz_interpolation: {
        if (w.size() != 4) {
          return false;
        }
        for (std::size_t i = 0; i < 2; ++i) {
          for (std::size_t j = 2; j < 4; ++j) {
            if (!le(w[i], w[j])) {
              return false;
            }
          }
        }
        for (auto const& z : o.elements(r.bound.maxDegree)) {
          if (le(w[0], z) && le(w[1], z) && le(z, w[2]) && le(z, w[3])) {
            return false;
          }
        }
        return true;
      }
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // irreducibles and the pedestal
  ////////////////////////////////////////////////////////////////////////

  IrreducibleReport irreducibles(MonoidOracle& o, SearchBound const& b) {
    IrreducibleReport out;
    auto const&       pool = o.pool(1);
    for (auto const& x : o.elements(b.maxDegree)) {
      if (x.is_zero()) {
        continue;
      }
      auto unit = o.leq(x, o.zero());
      if (unit.isHolds()) {
        continue;
      }
      bool reducible = false, unsure = unit.isUnknown();
      for (auto const& g : pool) {
        if (g.is_zero()) {
          continue;
        }
        auto d = o.leq(g, x);
        if (d.isUnknown()) {
          unsure = true;
          continue;
        }
        if (!d.isHolds()) {
          continue;
        }
        auto same = o.equal(g, x);
        if (same == Verdict::fails) {
          reducible = true;
          break;
        }
        if (same == Verdict::unknown) {
          unsure = true;
          continue;
        }
        // x = x + r with r nonzero
        if (d.witness.arity() == x.arity() && o.equal(d.witness, o.zero()) == Verdict::fails) {
          reducible = true;
          break;
        }
      }
      if (reducible) {
        continue;
      }
      (unsure ? out.undecided : out.irreducible).push_back(x);
    }
    return out;
  }

  PedestalReport pedestal(MonoidOracle& o, SearchBound const& b) {
    PedestalReport rep;
    auto           irr = irreducibles(o, b);
    rep.generators     = irr.irreducible;
    if (rep.generators.empty()) {
      rep.oIdealCheck = irr.undecided.empty() ? Verdict::holds : Verdict::unknown;
      rep.detail      = "no irreducible elements inside the bound";
      return rep;
    }
    // sums of at most three irreducibles, and their keys
    std::vector<Word> sums{o.zero()};
    for (int round = 0; round < 3; ++round) {
      std::vector<Word> next;
      for (auto const& s : sums) {
        for (auto const& g : rep.generators) {
          next.push_back(s + g);
        }
      }
      sums.insert(sums.end(), next.begin(), next.end());
    }
    KeyMap keys;
    for (auto const& s : sums) {
      if (auto k = o.key(s)) {
        keys.emplace(*k, 0);
      }
    }
    rep.oIdealCheck = Verdict::holds;
    for (auto const& s : sums) {
      for (auto const& a : o.elements(b.maxDegree)) {
        auto d = o.leq(a, s);
        if (!d.isHolds()) {
          if (d.isUnknown()) {
            rep.oIdealCheck = Verdict::unknown;
          }
          continue;
        }
        auto k = o.key(a);
        if (!k) {
          rep.oIdealCheck = Verdict::unknown;
          continue;
        }
        if (keys.count(*k) == 0 && a.degree() <= 3) {
          rep.oIdealCheck = Verdict::fails;
          rep.detail      = o.show(a) + " lies below " + o.show(s)
                       + " but is not a sum of irreducibles";
          return rep;
        }
      }
    }
    rep.detail = "spot-checked below sums of up to three irreducibles";
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // o-ideals and quotients
  ////////////////////////////////////////////////////////////////////////

  OIdeal::OIdeal(MonoidOracle& o, std::vector<Word> gens, SearchBound b)
      : _o(&o), _gens(std::move(gens)), _b(b), _top(o.zero()) {
    b.validate();
    auto k = static_cast<exponent_type>(std::max(b.maxDegree, b.maxCoefficient));
    for (auto const& g : _gens) {
      _top += g.times(k);
    }
    for (auto const& h : o.certificates()) {
      if (!h.imagesConical()) {
        continue;
      }
      if (std::all_of(_gens.begin(), _gens.end(),
                      [&](Word const& g) { return applyHom(h, g).isZero(); })) {
        _ann.push_back(&h);
      }
    }
  }

  LabDecision OIdeal::member(Word const& x) {
    LabDecision out;
    auto        d = _o->leq(x, _top);
    // exact oracles are cheap: try larger multiples too
    for (exponent_type s = 2; _o->exact() && !d.isHolds() && s <= 16; s *= 2) {
      if (_o->leq(x, _top.times(s)).isHolds()) {
        out.verdict = Verdict::holds;
        out.basis   = Basis::witness;
        out.witness = {_top.times(s)};
        out.detail  = "below " + _o->show(out.witness[0]);
        return out;
      }
    }
    if (d.isHolds()) {
      out.verdict = Verdict::holds;
      out.basis   = Basis::witness;
      out.witness = {_top};
      out.detail  = "below " + _o->show(_top);
      return out;
    }
    for (auto const* h : _ann) {
      if (!applyHom(*h, x).isZero()) {
        out.verdict = Verdict::fails;
        out.basis   = Basis::certificate;
        out.detail  = h->name() + " kills the ideal but not the element";
        return out;
      }
    }
    if (d.isFails() && _o->exact()) {
      // exact order: x is not below any element of the bounded submonoid
      out.verdict = Verdict::fails;
      out.basis   = Basis::exhaustive;
      out.detail  = "not below " + _o->show(_top);
    }
    return out;
  }

  std::vector<Word> const& OIdeal::boundedMembers() {
    if (!_members) {
      _members.emplace();
      for (auto const& w : _o->elements(_b.maxDegree)) {
        if (member(w).verdict == Verdict::holds) {
          _members->push_back(w);
        }
      }
    }
    return *_members;
  }

  OIdeal oIdealClosure(MonoidOracle& o, std::vector<Word> gens, SearchBound const& b) {
    return OIdeal(o, std::move(gens), b);
  }

  LabDecision quotientEqual(OIdeal& J, Word const& x, Word const& y) {
    auto&       o = J.oracle();
    LabDecision out;
    if (o.equal(x, y) == Verdict::holds) {
      out.verdict = Verdict::holds;
      out.basis   = Basis::witness;
      out.witness = {o.zero(), o.zero()};
      return out;
    }
    for (auto const* h : J.annihilators()) {
      if (!(applyHom(*h, x) == applyHom(*h, y))) {
        out.verdict = Verdict::fails;
        out.basis   = Basis::certificate;
        out.detail  = h->name() + " separates the images";
        return out;
      }
    }
    auto const& cand = J.boundedMembers();
    KeyMap      right;
    std::vector<std::size_t> unkeyed;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (auto k = o.key(y + cand[i])) {
        right.emplace(*k, i);
      } else {
        unkeyed.push_back(i);
      }
    }
    for (auto const& a : cand) {
      auto k = o.key(x + a);
      if (k) {
        auto it = right.find(*k);
        if (it != right.end()) {
          out.verdict = Verdict::holds;
          out.basis   = Basis::witness;
          out.witness = {a, cand[it->second]};
          return out;
        }
      }
      for (auto i : unkeyed) {
        if (o.equal(x + a, y + cand[i]) == Verdict::holds) {
          out.verdict = Verdict::holds;
          out.basis   = Basis::witness;
          out.witness = {a, cand[i]};
          return out;
        }
      }
    }
    // x + a = y + b where a is the complement of x below y + b
    for (int side = 0; side < 2; ++side) {
      auto const& lo = side == 0 ? x : y;
      auto const& hi = side == 0 ? y : x;
      for (auto const& b : cand) {
        auto d = o.leq(lo, hi + b);
        if (!d.isHolds() || d.witness.arity() != x.arity()) {
          continue;
        }
        if (J.member(d.witness).verdict == Verdict::holds) {
          out.verdict = Verdict::holds;
          out.basis   = Basis::witness;
          out.witness = side == 0 ? std::vector<Word>{d.witness, b}
                                  : std::vector<Word>{b, d.witness};
          return out;
        }
      }
    }
    out.detail = "no a, b found among " + std::to_string(cand.size()) + " bounded members";
    return out;
  }

  LabDecision maxAntisymEqual(MonoidOracle& o, Word const& x, Word const& y) {
    LabDecision out;
    auto        a = o.leq(x, y);
    auto        b = o.leq(y, x);
    if (a.isHolds() && b.isHolds()) {
      out.verdict = Verdict::holds;
      out.basis   = Basis::witness;
      out.witness = {a.witness, b.witness};
    } else if (a.isFails() || b.isFails()) {
      out.verdict = Verdict::fails;
      out.basis   = o.exact() ? Basis::certificate : Basis::exhaustive;
      out.detail  = a.isFails() ? "x is not below y" : "y is not below x";
    }
    return out;
  }

  LabDecision maxCancelEqual(MonoidOracle&      o,
                             Word const&        x,
                             Word const&        y,
                             SearchBound const& b) {
    LabDecision out;
    bool        unsure = false;
    for (auto const& z : o.elements(b.maxDegree)) {
      auto v = o.equal(x + z, y + z);
      if (v == Verdict::holds) {
        out.verdict = Verdict::holds;
        out.basis   = Basis::witness;
        out.witness = {z};
        return out;
      }
      unsure = unsure || v == Verdict::unknown;
    }
    for (auto const& h : o.certificates()) {
      if (h.target().cancellative() && !(applyHom(h, x) == applyHom(h, y))) {
        out.verdict = Verdict::fails;
        out.basis   = Basis::certificate;
        out.detail  = h.name() + " has a cancellative target and separates them";
        return out;
      }
    }
    if (!unsure) {
      out.verdict = Verdict::fails;
      out.basis   = Basis::exhaustive;
      out.detail  = "no z inside the bound";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // wildness
  ////////////////////////////////////////////////////////////////////////

  PropertyReport wildnessCertificate(MonoidOracle& o, SearchBound const& b) {
    auto           start = std::chrono::steady_clock::now();
    PropertyReport r;
    r.property = "WILD";
    r.monoid   = o.name();
    r.bound    = b;
    auto done  = [&] {
      r.elapsedMs = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      return r;
    };
    auto sf   = checkProperty(o, PropertyId::stably_finite, b);
    auto canc = checkProperty(o, PropertyId::cancellative, b);
    r.checked = sf.checked + canc.checked;
    if (sf.verdict == Verdict::holds && canc.verdict == Verdict::fails) {
      r.verdict   = Verdict::holds;
      r.basis     = sf.basis;
      r.witnesses = canc.witnesses;
      r.detail    = "stably finite (" + sf.detail + ") but not cancellative ("
                 + canc.detail + ")";
      return done();
    }
    for (auto p : {PropertyId::separative, PropertyId::unperforated}) {
      auto c = checkProperty(o, p, b);
      r.checked += c.checked;
      if (c.verdict == Verdict::fails) {
        r.verdict   = Verdict::holds;
        r.basis     = Basis::witness;
        r.witnesses = c.witnesses;
        r.detail    = std::string("not ") + toString(p) + " (" + c.detail + ")";
        return done();
      }
    }
    r.verdict = Verdict::unknown;
    auto con  = checkProperty(o, PropertyId::conical, b);
    auto unp  = checkProperty(o, PropertyId::unperforated, b);
    if (con.verdict == Verdict::holds && sf.verdict == Verdict::holds
        && unp.verdict == Verdict::holds && canc.verdict == Verdict::holds) {
      r.detail = "no wildness found; conical, stably finite, unperforated and "
                 "cancellative inside the bound (evidence of tameness only)";
    } else {
      r.detail = "no wildness found inside the bound";
    }
    return done();
  }

  std::pair<PropertyReport, PropertyReport> furtherTameChecks(MonoidOracle&      o,
                                                              SearchBound const& b) {
    auto const  D = b.maxDegree;
    auto const& E = o.elements(D);
    auto        make = [&](char const* name) {
      PropertyReport r;
      r.property = name;
      r.monoid   = o.name();
      r.bound    = b;
      return r;
    };
    auto one = make("FURTHER_1");
    auto two = make("FURTHER_2");
    auto t0  = std::chrono::steady_clock::now();
    // (1) a + c <= b + c gives a1 with a1 + c = c and a <= b + a1
    for (auto const& a : E) {
      for (auto const& bb : E) {
        for (auto const& c : E) {
          if (one.verdict == Verdict::fails
              || a.degree() + bb.degree() + c.degree() > D) {
            continue;
          }
          auto pre = o.leq(a + c, bb + c).verdict;
          if (pre == Verdict::unknown) {
            ++one.unknowns;
          }
          if (pre != Verdict::holds) {
            continue;
          }
          ++one.checked;
          bool found = false, unsure = false;
          for (auto const& a1 : E) {
            auto v1 = o.equal(a1 + c, c);
            if (v1 != Verdict::holds) {
              unsure = unsure || v1 == Verdict::unknown;
              continue;
            }
            auto v2 = o.leq(a, bb + a1).verdict;
            if (v2 == Verdict::holds) {
              found = true;
              break;
            }
            unsure = unsure || v2 == Verdict::unknown;
          }
          if (!found) {
            if (unsure) {
              ++one.unknowns;
            } else {
              fail(one, {a, bb, c}, "no a1 with a1 + c = c and a <= b + a1");
              one.basis = Basis::exhaustive;
            }
          }
        }
      }
    }
    finish(one);
    auto t1 = std::chrono::steady_clock::now();
    // (2) a <= c + d1, a <= c + d2 gives d with a <= c + d, d <= d1, d2
    for (auto const& a : E) {
      for (auto const& c : E) {
        for (std::size_t i = 0; i < E.size(); ++i) {
          for (std::size_t j = i; j < E.size(); ++j) {
            auto const& d1 = E[i];
            auto const& d2 = E[j];
            if (two.verdict == Verdict::fails
                || a.degree() + c.degree() + d1.degree() + d2.degree() > D) {
              continue;
            }
            auto p1 = o.leq(a, c + d1).verdict;
            auto p2 = o.leq(a, c + d2).verdict;
            if (p1 == Verdict::unknown || p2 == Verdict::unknown) {
              ++two.unknowns;
            }
            if (p1 != Verdict::holds || p2 != Verdict::holds) {
              continue;
            }
            ++two.checked;
            bool found = false, unsure = false;
            for (auto const& d : E) {
              auto v1 = o.leq(d, d1).verdict;
              auto v2 = v1 == Verdict::holds ? o.leq(d, d2).verdict : v1;
              auto v3 = v2 == Verdict::holds ? o.leq(a, c + d).verdict : v2;
              if (v3 == Verdict::holds) {
                found = true;
                break;
              }
              unsure = unsure || v1 == Verdict::unknown || v2 == Verdict::unknown
                       || v3 == Verdict::unknown;
            }
            if (!found) {
              if (unsure) {
                ++two.unknowns;
              } else {
                fail(two, {a, c, d1, d2}, "no d with a <= c + d and d <= d1, d2");
                two.basis = Basis::exhaustive;
              }
            }
          }
        }
      }
    }
    finish(two);
    auto t2       = std::chrono::steady_clock::now();
    one.elapsedMs = std::chrono::duration<double, std::milli>(t1 - t0).count();
    two.elapsedMs = std::chrono::duration<double, std::milli>(t2 - t1).count();
    for (auto* r : {&one, &two}) {
      if (r->verdict == Verdict::fails) {
        r->detail += ": " + show(o, r->witnesses);
      }
    }
    return {one, two};
  }

}  // namespace refmon
