#include <doctest.h>

#include <random>

#include "refmon/exception.hpp"
#include "refmon/primitive.hpp"
#include "refmon/word_problem.hpp"
#include "support.hpp"

using namespace refmon;

namespace {

  PrimePoset ef() {
    return validatePoset("EF", {"e", "f"}, {{"e", "f"}});
  }

  PrimElem elem(PrimePoset const& p, char const* t) {
    return parsePrimTerm(p, t);
  }

}  // namespace

TEST_CASE("validatePoset") {
  CHECK_NOTHROW(ef());
  CHECK_THROWS_AS(validatePoset("B", {"e", "f"}, {{"e", "f"}, {"f", "e"}}), Error);
  CHECK_THROWS_AS(validatePoset("B", {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), Error);
  CHECK_NOTHROW(validatePoset("P", {"p"}, {{"p", "p"}}));

  auto p = parsePoset("poset EF\nprimes e f\nbelow e f\n");
  CHECK((p == ef()));
  CHECK((parsePoset(writePoset(p)) == p));
  CHECK_THROWS_AS(parsePoset("poset B\nprimes a b c\nbelow a b\nbelow b c\n"),
                  ParseError);
  CHECK_THROWS_AS(parsePoset("poset B\nprimes a\nbelow a z\n"), ParseError);
}

TEST_CASE("primNormalize and arithmetic") {
  auto p = ef();
  CHECK((toString(p, primNormalize(p, elem(p, "2*e + 3*f"))) == "3*f"));
  auto idem = validatePoset("P", {"p"}, {{"p", "p"}});
  CHECK((toString(idem, primNormalize(idem, elem(idem, "5*p"))) == "p"));
  auto fr = validatePoset("F", {"p", "q"}, {});
  CHECK((toString(fr, primNormalize(fr, elem(fr, "2*p + q"))) == "2*p + q"));

  CHECK((toString(p, primAdd(p, elem(p, "e"), elem(p, "f"))) == "f"));
  CHECK((toString(p, primAdd(p, elem(p, "e"), elem(p, "0"))) == "e"));
  CHECK(primLeq(p, elem(p, "e"), elem(p, "f")));
  CHECK(!primLeq(p, elem(p, "f"), elem(p, "e")));
  CHECK(!primLeq(p, elem(p, "2*e"), elem(p, "e")));
  auto c = primComplement(p, elem(p, "e"), elem(p, "f"));
  REQUIRE(c);
  CHECK(primEqual(p, primAdd(p, elem(p, "e"), *c), elem(p, "f")));
}

TEST_CASE("presentationOf") {
  auto pr = presentationOf(ef());
  REQUIRE(pr.relations().size() == 1);
  CHECK((pr.relationString(0) == "e + f = f"));
  CHECK(presentationOf(validatePoset("F", {"p", "q"}, {})).relations().empty());

  auto idem = validatePoset("P", {"p"}, {{"p", "p"}});
  auto pi   = presentationOf(idem);
  CHECK((pi.relationString(0) == "2*p = p"));
  CHECK(decideEqual(pi, pi.word("3*p"), pi.word("p")).isHolds());
  CHECK(decideEqual(pi, pi.word("p"), pi.zero()).isFails());
}

TEST_CASE("allPosets") {
  CHECK(allPosets(1).size() == 2);
  // 3 antisymmetric transitive relations on 2 points without loops, times 4
  // loop choices
  CHECK(allPosets(2).size() == 12);
}

TEST_CASE("primEqual against the oracle with certificates") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& p : allPosets(n)) {
      WordProblem wp(presentationOf(p), SearchBound{}, primSeparatingCertificates(p));
      auto        words = wordsUpToDegree(n, n == 3 ? 3 : 4);
      for (auto const& u : words) {
        for (auto const& v : words) {
          auto oracle = wp.equalVerdict(u, v);
          REQUIRE((oracle != Verdict::unknown));
          CHECK((oracle == Verdict::holds)
                == primEqual(p, primFromWord(p, u), primFromWord(p, v)));
        }
      }
    }
  }
}

TEST_CASE("primLeq: antisymmetry and oracle") {
  for (auto const& p : allPosets(2)) {
    auto pr    = presentationOf(p);
    auto words = wordsUpToDegree(2, 4);
    for (auto const& u : words) {
      for (auto const& v : words) {
        auto a = primFromWord(p, u), b = primFromWord(p, v);
        bool le = primLeq(p, a, b);
        if (le && primLeq(p, b, a)) {
          CHECK(primEqual(p, a, b));
        }
        auto d = decideLeq(pr, u, v);
        if (d.isHolds()) {
          CHECK(le);
        }
        if (le) {
          CHECK(!d.isFails());
        }
      }
    }
  }
}

TEST_CASE("finiteSubsystem") {
  auto p = ef();
  auto s = finiteSubsystem(p, {"e"});
  CHECK(s.poset.size() == 1);
  CHECK(!s.poset.idempotent(0));
  auto two = s.apply(p, elem(s.poset, "2*e"));
  CHECK(!primEqual(p, two, elem(p, "e")));
  CHECK_THROWS_AS(finiteSubsystem(p, {}), PreconditionError);

  auto id = finiteSubsystem(p, {"e", "f"});
  CHECK((id.apply(p, elem(p, "e + 2*f")) == primNormalize(p, elem(p, "e + 2*f"))));

  // homomorphism law and composition on random elements
  auto big = validatePoset("Big", {"a", "b", "c", "d"},
                           {{"a", "b"}, {"a", "c"}, {"c", "c"}, {"a", "d"}, {"c", "d"}});
  auto xy  = finiteSubsystem(big, {"a", "c"});
  auto yz  = finiteSubsystem(big, {"a", "c", "d"});
  std::mt19937                          rng(7);
  std::uniform_int_distribution<int> dist(0, 3);
  for (int i = 0; i < 100; ++i) {
    PrimElem x{{std::uint64_t(dist(rng)), std::uint64_t(dist(rng))}};
    PrimElem y{{std::uint64_t(dist(rng)), std::uint64_t(dist(rng))}};
    CHECK((xy.apply(big, primAdd(xy.poset, x, y))
           == primAdd(big, xy.apply(big, x), xy.apply(big, y))));
    // X = {a, c} inside Y = {a, c, d}
    PrimElem viaY{{x.coeffs[0], x.coeffs[1], 0}};
    CHECK((yz.apply(big, primNormalize(yz.poset, viaY)) == xy.apply(big, x)));
  }
}
