#include "refmon/wild.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "refmon/exception.hpp"
#include "text.hpp"

namespace refmon {

  namespace {
    coeff_type posPart(coeff_type a, coeff_type b) {  // max(a - b, 0)
      return a > b ? a - b : 0;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // M0
  ////////////////////////////////////////////////////////////////////////

  M0Elem m0Normalize(M0Elem e) {
    if (e.m > 0) {
      e.i += e.j;
      e.j = 0;
    }
    return e;
  }

  bool m0Equal(M0Elem const& a, M0Elem const& b) {
    auto x = m0Normalize(a);
    auto y = m0Normalize(b);
    return x.m == y.m && x.i == y.i && x.j == y.j;
  }

  M0Elem m0Add(M0Elem const& a, M0Elem const& b) {
    return m0Normalize({a.m + b.m, a.i + b.i, a.j + b.j});
  }

  ////////////////////////////////////////////////////////////////////////
  // M
  ////////////////////////////////////////////////////////////////////////

  MElem MElem::x(std::size_t n) {
    MElem e;
    e.level = n;
    e.m     = 1;
    e.k.assign(n, 0);
    return e;
  }

  MElem MElem::y(std::size_t n) {
    MElem e = x(n);
    e.m     = 0;
    e.i     = 1;
    return e;
  }

  MElem MElem::z(std::size_t n) {
    MElem e = x(n);
    e.m     = 0;
    e.j     = 1;
    return e;
  }

  MElem MElem::a(std::size_t n) {
    if (n == 0) {
      throw Error("a_n is defined for n >= 1");
    }
    MElem e;
    e.level = n;
    e.k.assign(n, 0);
    e.k[n - 1] = 1;
    return e;
  }

  MElem MElem::u() {
    return mAdd(x(0), y(0));
  }

  bool MElem::isZero() const {
    return m == 0 && i == 0 && j == 0
           && std::all_of(k.begin(), k.end(), [](auto c) { return c == 0; });
  }

  std::uint64_t MElem::degree() const {
    std::uint64_t d = m + i + j;
    for (auto c : k) {
      d += c;
    }
    return d;
  }

  MElem mRaise(MElem const& e, std::size_t targetLevel) {
    if (targetLevel < e.level) {
      throw PreconditionError("cannot raise to a lower level");
    }
    MElem out = e;
    out.k.reserve(targetLevel);
    while (out.level < targetLevel) {
      // x = x' + y', y = y' + a', z = z' + a'
      out.k.push_back(out.i + out.j);
      out.i += out.m;
      ++out.level;
    }
    return out;
  }

  MElem mNormalize(MElem e) {
    if (e.m > 0) {
      e.i += e.j;
      e.j = 0;
    }
    while (e.level > 0) {
      auto kn = e.k.back();
      if (e.m == 0) {
        if (kn != e.i + e.j) {
          break;
        }
      } else {
        if (e.i < e.m || e.i - e.m != kn) {
          break;
        }
        e.i = kn;
      }
      e.k.pop_back();
      --e.level;
    }
    return e;
  }

  namespace {
    bool equalAtLevel(MElem const& a, MElem const& b) {
      if (a.m != b.m || a.k != b.k) {
        return false;
      }
      if (a.m == 0) {
        return a.i == b.i && a.j == b.j;
      }
      return a.i + a.j == b.i + b.j;
    }
  }  // namespace

  bool mEqual(MElem const& a, MElem const& b) {
    auto L = std::max(a.level, b.level);
    return equalAtLevel(mRaise(a, L), mRaise(b, L));
  }

  MElem mAdd(MElem const& a, MElem const& b) {
    auto L = std::max(a.level, b.level);
    auto x = mRaise(a, L);
    auto y = mRaise(b, L);
    x.m += y.m;
    x.i += y.i;
    x.j += y.j;
    for (std::size_t l = 0; l < L; ++l) {
      x.k[l] += y.k[l];
    }
    return mNormalize(std::move(x));
  }

  MElem mTimes(MElem const& a, coeff_type n) {
    MElem out = a;
    out.m *= n;
    out.i *= n;
    out.j *= n;
    for (auto& c : out.k) {
      c *= n;
    }
    return mNormalize(std::move(out));
  }

  std::optional<MElem> mComplement(MElem const& a, MElem const& b) {
    auto L = std::max(a.level, b.level);
    auto A = mRaise(a, L);
    auto B = mRaise(b, L);
    for (std::size_t l = 0; l < L; ++l) {
      if (A.k[l] > B.k[l]) {
        return std::nullopt;
      }
    }
    MElem c;
    c.level = L;
    c.k.resize(L);
    for (std::size_t l = 0; l < L; ++l) {
      c.k[l] = B.k[l] - A.k[l];
    }
    if (B.m == 0) {
      if (A.m != 0 || A.i > B.i || A.j > B.j) {
        return std::nullopt;
      }
      c.i = B.i - A.i;
      c.j = B.j - A.j;
    } else {
      if (A.m > B.m || A.i + A.j > B.i + B.j) {
        return std::nullopt;
      }
      c.m = B.m - A.m;
      c.i = (B.i + B.j) - (A.i + A.j);
    }
    return mNormalize(std::move(c));
  }

  bool mLeq(MElem const& a, MElem const& b) {
    return mComplement(a, b).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // refinement of the x/y/z part (shared by M and Mbar)
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Cut {
      coeff_type m = 0, i = 0, j = 0;
    };
    using CutMatrix = std::array<std::array<Cut, 2>, 2>;

    // entries for b1 + b2 = c1 + c2 in Z+
    std::array<coeff_type, 4> freeRefine(coeff_type b1,
                                         coeff_type b2,
                                         coeff_type c1,
                                         coeff_type /*c2*/) {
      coeff_type z11 = std::min(b1, c1);
      coeff_type z12 = b1 - z11;
      coeff_type z21 = c1 - z11;
      coeff_type z22 = b2 - z21;
      return {z11, z12, z21, z22};
    }

    bool inXY(Cut const& c) {
      return c.m > 0 || c.j == 0;
    }

    coeff_type ceilDiv(coeff_type a, coeff_type b) {
      return (a + b - 1) / b;
    }

    // Fills `out` and returns 0, or returns how many levels all four
    // elements must be raised before the cut can be refined.
    coeff_type refineCut(std::array<Cut, 4> e, CutMatrix& out) {
      for (auto& c : e) {
        if (c.m > 0) {
          c.i += c.j;
          c.j = 0;
        }
      }
      auto& [b1, b2, c1, c2] = e;

      bool allXY = std::all_of(e.begin(), e.end(), inXY);
      bool allYZ = std::all_of(e.begin(), e.end(), [](auto const& c) {
        return c.m == 0;
      });
      if (allXY || allYZ) {
        auto mm = freeRefine(b1.m, b2.m, c1.m, c2.m);
        auto ii = freeRefine(b1.i, b2.i, c1.i, c2.i);
        auto jj = freeRefine(b1.j, b2.j, c1.j, c2.j);
        for (std::size_t r = 0; r < 2; ++r) {
          for (std::size_t c = 0; c < 2; ++c) {
            out[r][c] = {mm[2 * r + c], ii[2 * r + c], jj[2 * r + c]};
          }
        }
        return 0;
      }
      if (b1.m == 0) {
        auto t = refineCut({b2, b1, c1, c2}, out);
        std::swap(out[0], out[1]);
        return t;
      }
      if (c1.m == 0) {
        auto t = refineCut({b1, b2, c2, c1}, out);
        std::swap(out[0][0], out[0][1]);
        std::swap(out[1][0], out[1][1]);
        return t;
      }
      if (inXY(b2)) {
        auto t = refineCut({c1, c2, b1, b2}, out);
        std::swap(out[0][1], out[1][0]);
        return t;
      }
      // b1, c1 have an x; b2 has z but no x
      if (c2.m == 0) {
        auto need = c2.i + c2.j;
        if (b1.i < need) {
          return ceilDiv(need - b1.i, b1.m);
        }
        out[0][0] = {b1.m, b1.i - need, 0};
        out[0][1] = {0, c2.i, c2.j};
        out[1][0] = b2;
        out[1][1] = {};
      } else {
        if (b1.i < c2.i) {
          // the gap closes by c1.m per level
          return ceilDiv(c2.i - b1.i, c1.m);
        }
        out[0][0] = {c1.m, b1.i - c2.i, 0};
        out[0][1] = {c2.m, c2.i, 0};
        out[1][0] = b2;
        out[1][1] = {};
      }
      return 0;
    }

    Cut cutOf(MElem const& e) {
      return {e.m, e.i, e.j};
    }

    Cut cutOf(MBarElem const& e) {
      return {e.k, e.i, e.j};
    }

  }  // namespace

  RefinementMatrix<MElem> mRefine(MElem const& a,
                                  MElem const& b,
                                  MElem const& c,
                                  MElem const& d) {
    if (!mEqual(mAdd(a, b), mAdd(c, d))) {
      throw PreconditionError("mRefine: a + b != c + d");
    }
    RefinementMatrix<MElem> out;
    if (mEqual(a, c) && mEqual(b, d)) {
      out(0, 0) = mNormalize(a);
      out(1, 1) = mNormalize(b);
      return out;
    }
    auto L = std::max({a.level, b.level, c.level, d.level});
    std::array<MElem, 4> e{mRaise(a, L), mRaise(b, L), mRaise(c, L),
                           mRaise(d, L)};
    CutMatrix cm;
    while (true) {
      auto t = refineCut({cutOf(e[0]), cutOf(e[1]), cutOf(e[2]), cutOf(e[3])},
                         cm);
      if (t == 0) {
        break;
      }
      L += t;
      for (auto& x : e) {
        x = mRaise(x, L);
      }
    }
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t col = 0; col < 2; ++col) {
        out(r, col).level = L;
        out(r, col).m     = cm[r][col].m;
        out(r, col).i     = cm[r][col].i;
        out(r, col).j     = cm[r][col].j;
        out(r, col).k.assign(L, 0);
      }
    }
    for (std::size_t l = 0; l < L; ++l) {
      auto z = freeRefine(e[0].k[l], e[1].k[l], e[2].k[l], e[3].k[l]);
      out(0, 0).k[l] = z[0];
      out(0, 1).k[l] = z[1];
      out(1, 0).k[l] = z[2];
      out(1, 1).k[l] = z[3];
    }
    for (auto& row : out.entries) {
      for (auto& x : row) {
        x = mNormalize(std::move(x));
      }
    }
    if (!mEqual(mAdd(out(0, 0), out(0, 1)), a)
        || !mEqual(mAdd(out(1, 0), out(1, 1)), b)
        || !mEqual(mAdd(out(0, 0), out(1, 0)), c)
        || !mEqual(mAdd(out(0, 1), out(1, 1)), d)) {
      throw Error("internal: refinement in M failed to verify");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Mbar
  ////////////////////////////////////////////////////////////////////////

  MBarElem MBarElem::x(std::size_t n) {
    return {n, 0, 0, 1};
  }
  MBarElem MBarElem::y() {
    return {0, 1, 0, 0};
  }
  MBarElem MBarElem::z() {
    return {0, 0, 1, 0};
  }

  bool MBarElem::isZero() const {
    return i == 0 && j == 0 && k == 0;
  }

  std::uint64_t MBarElem::degree() const {
    return i + j + k;
  }

  MBarElem mbarRaise(MBarElem const& e, std::size_t targetLevel) {
    if (targetLevel < e.level) {
      throw PreconditionError("cannot raise to a lower level");
    }
    MBarElem out = e;
    out.i += out.k * (targetLevel - e.level);
    out.level = targetLevel;
    return out;
  }

  MBarElem mbarNormalize(MBarElem e) {
    if (e.k == 0) {
      e.level = 0;
      return e;
    }
    e.i += e.j;
    e.j = 0;
    if (e.level > 0 && e.i >= e.k) {
      auto steps = std::min<coeff_type>(e.level, e.i / e.k);
      e.i -= steps * e.k;
      e.level -= steps;
    }
    return e;
  }

  namespace {
    bool equalAtLevel(MBarElem const& a, MBarElem const& b) {
      if (a.k != b.k) {
        return false;
      }
      if (a.k == 0) {
        return a.i == b.i && a.j == b.j;
      }
      return a.i + a.j == b.i + b.j;
    }
  }  // namespace

  bool mbarEqual(MBarElem const& a, MBarElem const& b) {
    auto L = std::max(a.level, b.level);
    return equalAtLevel(mbarRaise(a, L), mbarRaise(b, L));
  }

  MBarElem mbarAdd(MBarElem const& a, MBarElem const& b) {
    auto L = std::max(a.level, b.level);
    auto x = mbarRaise(a, L);
    auto y = mbarRaise(b, L);
    return mbarNormalize({L, x.i + y.i, x.j + y.j, x.k + y.k});
  }

  MBarElem mbarTimes(MBarElem const& a, coeff_type n) {
    return mbarNormalize({a.level, a.i * n, a.j * n, a.k * n});
  }

  std::optional<MBarElem> mbarComplement(MBarElem const& a,
                                         MBarElem const& b) {
    if (b.k == 0) {
      if (a.k != 0) {
        return std::nullopt;
      }
      if (a.i > b.i || a.j > b.j) {
        return std::nullopt;
      }
      return mbarNormalize({0, b.i - a.i, b.j - a.j, 0});
    }
    if (a.k > b.k) {
      return std::nullopt;
    }
    auto L = std::max(a.level, b.level);
    auto A = mbarRaise(a, L);
    auto B = mbarRaise(b, L);
    if (a.k == b.k) {
      if (A.i + A.j > B.i + B.j) {
        return std::nullopt;
      }
      return mbarNormalize({0, (B.i + B.j) - (A.i + A.j), 0, 0});
    }
    // b has more copies of xbar: raising widens the gap by b.k - a.k
    auto sa = A.i + A.j;
    auto sb = B.i + B.j;
    if (sa > sb) {
      auto t = ceilDiv(sa - sb, b.k - a.k);
      L += t;
      sa += t * a.k;
      sb += t * b.k;
    }
    return mbarNormalize({L, sb - sa, 0, b.k - a.k});
  }

  bool mbarLeq(MBarElem const& a, MBarElem const& b) {
    return mbarComplement(a, b).has_value();
  }

  RefinementMatrix<MBarElem> mbarRefine(MBarElem const& a,
                                        MBarElem const& b,
                                        MBarElem const& c,
                                        MBarElem const& d) {
    if (!mbarEqual(mbarAdd(a, b), mbarAdd(c, d))) {
      throw PreconditionError("mbarRefine: a + b != c + d");
    }
    RefinementMatrix<MBarElem> out;
    if (mbarEqual(a, c) && mbarEqual(b, d)) {
      out(0, 0) = mbarNormalize(a);
      out(1, 1) = mbarNormalize(b);
      return out;
    }
    auto L = std::max({a.level, b.level, c.level, d.level});
    std::array<MBarElem, 4> e{mbarRaise(a, L), mbarRaise(b, L),
                              mbarRaise(c, L), mbarRaise(d, L)};
    CutMatrix cm;
    while (true) {
      auto t = refineCut({cutOf(e[0]), cutOf(e[1]), cutOf(e[2]), cutOf(e[3])},
                         cm);
      if (t == 0) {
        break;
      }
      L += t;
      for (auto& x : e) {
        x = mbarRaise(x, L);
      }
    }
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t col = 0; col < 2; ++col) {
        out(r, col) = mbarNormalize(
            {L, cm[r][col].i, cm[r][col].j, cm[r][col].m});
      }
    }
    if (!mbarEqual(mbarAdd(out(0, 0), out(0, 1)), a)
        || !mbarEqual(mbarAdd(out(1, 0), out(1, 1)), b)
        || !mbarEqual(mbarAdd(out(0, 0), out(1, 0)), c)
        || !mbarEqual(mbarAdd(out(0, 1), out(1, 1)), d)) {
      throw Error("internal: refinement in Mbar failed to verify");
    }
    return out;
  }

  MBarElem qMap(MElem const& e) {
    return mbarNormalize({e.level, e.i, e.j, e.m});
  }

  ////////////////////////////////////////////////////////////////////////
  // o-ideals
  ////////////////////////////////////////////////////////////////////////

  char const* toString(OIdealId id) {
    switch (id) {
      case OIdealId::J1:
        return "J1";
      case OIdealId::J2:
        return "J2";
      case OIdealId::J2bar:
        return "J2bar";
      case OIdealId::Zz0bar:
        return "Zz0bar";
    }
    return "?";
  }

  std::optional<OIdealId> parseOIdeal(std::string_view s) {
    for (auto id :
         {OIdealId::J1, OIdealId::J2, OIdealId::J2bar, OIdealId::Zz0bar}) {
      if (s == toString(id)) {
        return id;
      }
    }
    return std::nullopt;
  }

  namespace {
    void requireM(OIdealId id) {
      if (id != OIdealId::J1 && id != OIdealId::J2) {
        throw PreconditionError(std::string("o-ideal ") + toString(id)
                                + " lives in Mbar, not M");
      }
    }
    void requireMBar(OIdealId id) {
      if (id != OIdealId::J2bar && id != OIdealId::Zz0bar) {
        throw PreconditionError(std::string("o-ideal ") + toString(id)
                                + " lives in M, not Mbar");
      }
    }
  }  // namespace

  bool mIdealMember(MElem const& e, OIdealId id) {
    requireM(id);
    auto n = mNormalize(e);
    if (id == OIdealId::J1) {
      return n.m == 0 && n.i == 0 && n.j == 0;
    }
    return n.m == 0;
  }

  bool mIdealMember(MBarElem const& e, OIdealId id) {
    requireMBar(id);
    if (id == OIdealId::J2bar) {
      return e.k == 0;
    }
    return e.k == 0 && e.i == 0;
  }

  std::optional<std::pair<MElem, MElem>>
  congModIdealWitness(MElem const& e1, MElem const& e2, OIdealId id) {
    requireM(id);
    auto L = std::max(e1.level, e2.level);
    auto A = mRaise(e1, L);
    auto B = mRaise(e2, L);
    if (A.m != B.m) {
      return std::nullopt;
    }
    MElem a, b;
    a.level = b.level = L;
    a.k.assign(L, 0);
    b.k.assign(L, 0);
    if (id == OIdealId::J1) {
      bool same = A.m == 0 ? (A.i == B.i && A.j == B.j)
                           : (A.i + A.j == B.i + B.j);
      if (!same) {
        return std::nullopt;
      }
      for (std::size_t l = 0; l < L; ++l) {
        a.k[l] = posPart(B.k[l], A.k[l]);
        b.k[l] = posPart(A.k[l], B.k[l]);
      }
    } else {
      a.i = B.i;
      a.j = B.j;
      a.k = B.k;
      b.i = A.i;
      b.j = A.j;
      b.k = A.k;
    }
    return std::make_pair(mNormalize(std::move(a)), mNormalize(std::move(b)));
  }

  std::optional<std::pair<MBarElem, MBarElem>>
  congModIdealWitness(MBarElem const& e1, MBarElem const& e2, OIdealId id) {
    requireMBar(id);
    if (e1.k != e2.k) {
      return std::nullopt;
    }
    auto L = std::max(e1.level, e2.level);
    auto A = mbarRaise(e1, L);
    auto B = mbarRaise(e2, L);
    if (id == OIdealId::J2bar) {
      return std::make_pair(mbarNormalize({0, B.i, B.j, 0}),
                            mbarNormalize({0, A.i, A.j, 0}));
    }
    if (A.k == 0) {
      if (A.i != B.i) {
        return std::nullopt;
      }
      return std::make_pair(MBarElem{0, 0, posPart(B.j, A.j), 0},
                            MBarElem{0, 0, posPart(A.j, B.j), 0});
    }
    auto sa = A.i + A.j;
    auto sb = B.i + B.j;
    return std::make_pair(MBarElem{0, 0, posPart(sb, sa), 0},
                          MBarElem{0, 0, posPart(sa, sb), 0});
  }

  bool congModIdeal(MElem const& e1, MElem const& e2, OIdealId id) {
    return congModIdealWitness(e1, e2, id).has_value();
  }

  bool congModIdeal(MBarElem const& e1, MBarElem const& e2, OIdealId id) {
    return congModIdealWitness(e1, e2, id).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // terms
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::optional<std::size_t> parseIndex(std::string_view s) {
      if (s.empty()) {
        return std::nullopt;
      }
      std::size_t n   = 0;
      auto        res = std::from_chars(s.data(), s.data() + s.size(), n);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        return std::nullopt;
      }
      return n;
    }

    std::optional<MElem> mSymbol(std::string_view s) {
      if (s == "u") {
        return MElem::u();
      }
      if (s.empty()) {
        return std::nullopt;
      }
      auto n = parseIndex(s.substr(1));
      if (!n) {
        return std::nullopt;
      }
      switch (s[0]) {
        case 'x':
          return MElem::x(*n);
        case 'y':
          return MElem::y(*n);
        case 'z':
          return MElem::z(*n);
        case 'a':
          if (*n == 0) {
            return std::nullopt;
          }
          return MElem::a(*n);
        default:
          return std::nullopt;
      }
    }

    std::optional<MBarElem> mbarSymbol(std::string_view s) {
      if (s == "u") {
        return mbarAdd(MBarElem::x(0), MBarElem::y());
      }
      if (s.size() < 5 || s.substr(1, 3) != "bar") {
        return std::nullopt;
      }
      auto n = parseIndex(s.substr(4));
      if (!n) {
        return std::nullopt;
      }
      switch (s[0]) {
        case 'x':
          return MBarElem::x(*n);
        case 'y':
          return MBarElem::y();
        case 'z':
          return MBarElem::z();
        default:
          return std::nullopt;
      }
    }

    // calls f(coefficient, symbol) for each summand
    template <typename F>
    void forEachSummand(std::string_view text, F&& f) {
      auto t = detail::trim(text);
      if (t.empty()) {
        throw Error("empty term");
      }
      if (t == "0") {
        return;
      }
      std::size_t pos = 0;
      while (pos <= t.size()) {
        auto plus = t.find('+', pos);
        auto part = detail::trim(
            t.substr(pos, plus == std::string_view::npos ? plus : plus - pos));
        if (part.empty()) {
          throw Error("malformed term '" + std::string(text) + "'");
        }
        coeff_type c    = 1;
        auto       star = part.find('*');
        if (star != std::string_view::npos) {
          auto cs = detail::trim(part.substr(0, star));
          auto cv = parseIndex(cs);
          if (!cv) {
            throw Error("bad coefficient '" + std::string(cs) + "'");
          }
          c    = *cv;
          part = detail::trim(part.substr(star + 1));
        }
        f(c, part);
        if (plus == std::string_view::npos) {
          break;
        }
        pos = plus + 1;
      }
    }

  }  // namespace

  MElem parseMTerm(std::string_view text) {
    MElem acc;
    forEachSummand(text, [&](coeff_type c, std::string_view sym) {
      auto e = mSymbol(sym);
      if (!e) {
        throw Error("unknown symbol '" + std::string(sym) + "' in M");
      }
      acc = mAdd(acc, mTimes(*e, c));
    });
    return mNormalize(acc);
  }

  MBarElem parseMBarTerm(std::string_view text) {
    MBarElem acc;
    forEachSummand(text, [&](coeff_type c, std::string_view sym) {
      auto e = mbarSymbol(sym);
      if (!e) {
        throw Error("unknown symbol '" + std::string(sym) + "' in Mbar");
      }
      acc = mbarAdd(acc, mbarTimes(*e, c));
    });
    return mbarNormalize(acc);
  }

  namespace {
    void emit(std::ostringstream& out,
              bool&               first,
              coeff_type          c,
              std::string const&  sym) {
      if (c == 0) {
        return;
      }
      if (!first) {
        out << " + ";
      }
      first = false;
      if (c != 1) {
        out << c << "*";
      }
      out << sym;
    }
  }  // namespace

  std::string toString(MElem const& e) {
    auto               n = mNormalize(e);
    std::ostringstream out;
    bool               first = true;
    auto               L     = std::to_string(n.level);
    emit(out, first, n.m, "x" + L);
    emit(out, first, n.i, "y" + L);
    emit(out, first, n.j, "z" + L);
    for (std::size_t l = 0; l < n.level; ++l) {
      emit(out, first, n.k[l], "a" + std::to_string(l + 1));
    }
    return first ? "0" : out.str();
  }

  std::string toString(MBarElem const& e) {
    auto               n = mbarNormalize(e);
    std::ostringstream out;
    bool               first = true;
    emit(out, first, n.k, "xbar" + std::to_string(n.level));
    emit(out, first, n.i, "ybar0");
    emit(out, first, n.j, "zbar0");
    return first ? "0" : out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // words in truncations
  ////////////////////////////////////////////////////////////////////////

  Word toWord(MElem const& e, Presentation const& t) {
    Word w(t.arity());
    auto L   = std::to_string(e.level);
    auto put = [&](std::string const& name, coeff_type c) {
      if (c == 0) {
        return;
      }
      auto idx = t.generators().find(name);
      if (!idx) {
        throw Error("element " + toString(e) + " needs generator " + name
                    + ", missing from " + t.name());
      }
      w[*idx] += static_cast<exponent_type>(c);
    };
    put("x" + L, e.m);
    put("y" + L, e.i);
    put("z" + L, e.j);
    for (std::size_t l = 0; l < e.level; ++l) {
      put("a" + std::to_string(l + 1), e.k[l]);
    }
    return w;
  }

  Word toWord(MBarElem const& e, Presentation const& t) {
    Word w(t.arity());
    auto put = [&](std::string const& name, coeff_type c) {
      if (c == 0) {
        return;
      }
      auto idx = t.generators().find(name);
      if (!idx) {
        throw Error("element " + toString(e) + " needs generator " + name
                    + ", missing from " + t.name());
      }
      w[*idx] += static_cast<exponent_type>(c);
    };
    put("xbar" + std::to_string(e.level), e.k);
    put("ybar0", e.i);
    put("zbar0", e.j);
    return w;
  }

  MElem mFromWord(Word const& w, Presentation const& t) {
    MElem acc;
    for (std::size_t g = 0; g < w.arity(); ++g) {
      if (w[g] == 0) {
        continue;
      }
      auto e = mSymbol(t.generators().name(g));
      if (!e) {
        throw Error("generator " + t.generators().name(g) + " is not in M");
      }
      acc = mAdd(acc, mTimes(*e, w[g]));
    }
    return acc;
  }

  MBarElem mbarFromWord(Word const& w, Presentation const& t) {
    MBarElem acc;
    for (std::size_t g = 0; g < w.arity(); ++g) {
      if (w[g] == 0) {
        continue;
      }
      auto e = mbarSymbol(t.generators().name(g));
      if (!e) {
        throw Error("generator " + t.generators().name(g)
                    + " is not in Mbar");
      }
      acc = mbarAdd(acc, mbarTimes(*e, w[g]));
    }
    return acc;
  }

}  // namespace refmon
