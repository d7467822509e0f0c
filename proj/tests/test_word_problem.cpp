#include "doctest.h"

#include <random>

#include "refmon/exception.hpp"
#include "refmon/word_problem.hpp"

using namespace refmon;

namespace {
  Presentation m0() {
    return parsePresentation(
        "monoid M0\ngenerators x0 y0 z0\nrelation x0 + y0 = x0 + z0\n");
  }
  Presentation idem() {
    return parsePresentation("monoid I\ngenerators a\nrelation 2*a = a\n");
  }
  // level-1 truncation, written out by hand
  Presentation m1() {
    return parsePresentation(R"(monoid M1
generators x0 y0 z0 a1 x1 y1 z1
relation x0 + y0 = x0 + z0
relation y0 = y1 + a1
relation z0 = z1 + a1
relation x0 = x1 + y1
relation x0 = x1 + z1
)");
  }
}  // namespace

TEST_CASE("enumerateClass") {
  auto p = m0();
  auto c = enumerateClass(p, p.word("y0"));
  CHECK(c.exhausted);
  CHECK(c.members.size() == 1);

  c = enumerateClass(p, p.word("x0 + y0"));
  CHECK(c.exhausted);
  CHECK(c.members.size() == 2);
  CHECK(c.contains(p.word("x0 + z0")));

  auto q = idem();
  c      = enumerateClass(q, q.word("5*a"), {5, 100, 5});
  CHECK_FALSE(c.exhausted);
  CHECK(c.members.size() == 5);
  CHECK(c.contains(q.word("a")));
}

TEST_CASE("class symmetry") {
  auto p = m1();
  for (auto const& w : wordsUpToDegree(p.arity(), 3)) {
    auto c = enumerateClass(p, w);
    if (!c.exhausted) {
      continue;
    }
    for (auto const& v : c.members) {
      auto d = enumerateClass(p, v);
      REQUIRE(d.exhausted);
      REQUIRE(d.members.size() == c.members.size());
      CHECK(d.contains(w));
    }
  }
}

TEST_CASE("decideEqual") {
  auto p = m0();
  auto d = decideEqual(p, p.word("x0 + 2*y0"), p.word("x0 + y0 + z0"));
  REQUIRE(d.isHolds());
  CHECK(d.witness.path.size() == 1);
  CHECK(verifyPath(p, p.word("x0 + 2*y0"), p.word("x0 + y0 + z0"), d.witness.path));

  d = decideEqual(p, p.word("y0"), p.word("z0"));
  CHECK(d.isFails());
  CHECK(d.witness.disjointClasses);

  d = decideEqual(p, p.word("2*y0"), p.word("2*y0"));
  CHECK(d.isHolds());
  CHECK(d.witness.path.empty());

  auto q = idem();
  CHECK(decideEqual(q, q.word("a"), q.word("3*a")).isHolds());
  CHECK(decideEqual(q, q.zero(), q.word("a")).isFails());
}

TEST_CASE("decideLeq") {
  auto p = m0();
  auto d = decideLeq(p, p.zero(), p.word("y0"));
  REQUIRE(d.isHolds());
  CHECK(rawEqual(d.witness, p.word("y0")));
  d = decideLeq(p, p.word("x0"), p.word("x0 + y0"));
  REQUIRE(d.isHolds());
  CHECK(rawEqual(d.witness, p.word("y0")));
  CHECK(decideLeq(p, p.word("x0 + y0"), p.word("y0")).isFails());
}

TEST_CASE("findRefinement") {
  auto p = m0();
  SearchBound b{4, 20000, 5};
  auto d = findRefinement(p, p.word("x0"), p.word("y0"), p.word("x0"),
                          p.word("z0"), b);
  CHECK(d.isFails());

  auto diag = findRefinement(p, p.word("x0+y0"), p.word("z0"),
                             p.word("x0+y0"), p.word("z0"), b);
  REQUIRE(diag.isHolds());
  CHECK(rawEqual(diag.witness(0, 0), p.word("x0+y0")));
  CHECK(diag.witness(0, 1).is_zero());
  CHECK(diag.witness(1, 0).is_zero());
  CHECK(rawEqual(diag.witness(1, 1), p.word("z0")));

  CHECK_THROWS_AS(findRefinement(p, p.word("y0"), p.zero(), p.word("z0"),
                                 p.zero(), b),
                  PreconditionError);

  auto q = m1();
  auto r = findRefinement(q, q.word("x0"), q.word("y0"), q.word("x0"),
                          q.word("z0"));
  REQUIRE(r.isHolds());
  auto const& m = r.witness;
  WordProblem wp(q, {});
  CHECK((wp.equalVerdict(m(0, 0) + m(0, 1), q.word("x0")) == Verdict::holds));
  CHECK((wp.equalVerdict(m(1, 0) + m(1, 1), q.word("y0")) == Verdict::holds));
  CHECK((wp.equalVerdict(m(0, 0) + m(1, 0), q.word("x0")) == Verdict::holds));
  CHECK((wp.equalVerdict(m(0, 1) + m(1, 1), q.word("z0")) == Verdict::holds));
}

TEST_CASE("monotonicity in the bound") {
  auto        p = m1();
  std::mt19937 rng(7);
  auto        ws = wordsUpToDegree(p.arity(), 3);
  std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
  for (int t = 0; t < 200; ++t) {
    auto const& u     = ws[pick(rng)];
    auto const& v     = ws[pick(rng)];
    auto        small = decideEqual(p, u, v, {3, 50, 5}).verdict;
    auto        big   = decideEqual(p, u, v, {8, 20000, 5}).verdict;
    if (small != Verdict::unknown) {
      CHECK((small == big));
    }
  }
}
