#include "doctest.h"

#include "refmon/certificate.hpp"
#include "refmon/exception.hpp"
#include "refmon/presentation.hpp"

using namespace refmon;

namespace {
  char const* m0Text = R"(
monoid M0
generators x0 y0 z0
relation x0 + y0 = x0 + z0
)";
}

TEST_CASE("parse M0") {
  auto p = parsePresentation(m0Text);
  CHECK(p.name() == "M0");
  CHECK(p.arity() == 3);
  CHECK(p.relations().size() == 1);
  CHECK(parsePresentation(writePresentation(p)) == p);
}

TEST_CASE("parse free and trivial relations") {
  auto p = parsePresentation("monoid Free\ngenerators a b\n");
  CHECK(p.arity() == 2);
  CHECK(p.relations().empty());
  auto q = parsePresentation("monoid T\ngenerators a\nrelation a = a\n");
  CHECK(q.relations().empty());
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parsePresentation("monoid X\ngenerators a\n\nrelation a = b\n");
    FAIL("no error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parsePresentation("monoid X\ngenerators a a\n"), ParseError);
  CHECK_THROWS_AS(parsePresentation("monoid X\nfoo\n"), ParseError);
  CHECK_THROWS_AS(parsePresentation("generators a\n"), ParseError);
}

TEST_CASE("word arithmetic") {
  auto p = parsePresentation(m0Text);
  CHECK(rawEqual(p.word("x0 + y0") + p.word("z0"), p.word("x0+y0+z0")));
  CHECK(rawEqual(p.word("2*y0") + p.zero(), p.word("2*y0")));
  auto q = parsePresentation("monoid A\ngenerators a\n");
  CHECK(rawEqual(q.word("2*a") + q.word("3*a"), q.word("5*a")));
  CHECK(toString(p.word("2*x0 + y0"), p.generators()) == "2*x0 + y0");
  CHECK(toString(p.zero(), p.generators()) == "0");
  CHECK_THROWS(addWords(p.zero(), q.zero()));
  CHECK_THROWS(p.word("y0") - p.word("x0"));
}

TEST_CASE("degLex enumeration") {
  auto ws = wordsUpToDegree(2, 2);
  CHECK(ws.size() == 6);
  CHECK(ws.front().is_zero());
  for (std::size_t i = 1; i < ws.size(); ++i) {
    CHECK(degLexLess(ws[i - 1], ws[i]));
  }
}

TEST_CASE("certificates") {
  auto p = parsePresentation(m0Text);
  auto bad = std::map<std::string, TargetValue>{
      {"x0", TargetValue::scalar(1)},
      {"y0", TargetValue::scalar(1)},
      {"z0", TargetValue::scalar(2)}};
  try {
    buildCertificate(p, TargetMonoid::integers(), bad);
    FAIL("no error");
  } catch (CertificateError const& e) {
    CHECK(std::string(e.what()).find("x0 + y0 = x0 + z0") != std::string::npos);
  }
  auto ok = std::map<std::string, TargetValue>{
      {"x0", TargetValue::infinity()},
      {"y0", TargetValue::vector({1, 0})},
      {"z0", TargetValue::vector({0, 1})}};
  auto h = buildCertificate(p, TargetMonoid::planePlusInfinity(), ok, "g");
  CHECK(applyHom(h, p.word("y0")) == TargetValue::vector({1, 0}));
  CHECK(applyHom(h, p.zero()).isZero());
  CHECK(applyHom(h, p.word("x0 + y0")).infinite);
  CHECK_FALSE(h.provesStableFiniteness());
  CHECK_THROWS_AS(buildCertificate(p,
                                   TargetMonoid::bMonoid(),
                                   std::vector<TargetValue>{
                                       TargetValue::vector({-1, 0}),
                                       TargetValue::vector({0, 1}),
                                       TargetValue::vector({0, 1})}),
                  CertificateError);
}
