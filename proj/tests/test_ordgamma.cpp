#include <random>

#include "doctest.h"
#include "hecke/ordgamma.hpp"

using namespace hecke;

namespace {

LaurentElt random_elt(std::mt19937& rng, int dim) {
  std::uniform_int_distribution<int> e(-3, 3), c(-4, 4), k(0, 4);
  std::vector<Term> ts;
  int m = k(rng);
  for (int i = 0; i < m; ++i) {
    GammaVec g(dim);
    for (int j = 0; j < dim; ++j) g[j] = e(rng);
    ts.push_back({g, c(rng)});
  }
  return LaurentElt::from_terms(ts, dim);
}

}  // namespace

TEST_CASE("lex order on Z^2") {
  CHECK(GammaVec{1, -5} > GammaVec{0, 7});
  CHECK(GammaVec{0, 1} > GammaVec{0, 0});
  CHECK(GammaVec{-1, 9}.sign() == -1);
  CHECK(GammaVec{0, 0}.sign() == 0);
  CHECK(max(GammaVec{1, 0}, GammaVec{0, 9}) == GammaVec{1, 0});
  CHECK(to_string(GammaVec{2, -1}) == "(2,-1)");
}

TEST_CASE("Laurent ring axioms on random elements") {
  std::mt19937 rng(11);
  for (int dim : {1, 2}) {
    for (int it = 0; it < 200; ++it) {
      LaurentElt a = random_elt(rng, dim), b = random_elt(rng, dim), c = random_elt(rng, dim);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CHECK(bar(bar(a)) == a);
      CHECK(bar(a * b) == bar(a) * bar(b));
      LaurentElt d = a;
      d.add_product(b, c);
      CHECK(d == a + b * c);
      CHECK(positive_part(a) + negative_part(a) + LaurentElt::constant(a.coeff(GammaVec(dim)), dim) == a);
    }
  }
}

TEST_CASE("text form round trip") {
  std::mt19937 rng(5);
  for (int dim : {1, 2}) {
    for (int it = 0; it < 100; ++it) {
      LaurentElt a = random_elt(rng, dim);
      if (a.is_zero()) continue;
      CHECK(parse_laurent(to_string(a), dim) == a);
    }
  }
  CHECK(to_string(parse_laurent("-3 + V^-1*v^2", 2)) == "V^-1*v^2 - 3");
  CHECK_THROWS_AS(parse_laurent("V^", 2), MalformedError);
  CHECK_THROWS_AS(parse_laurent("", 2), MalformedError);
}

TEST_CASE("positivity cones") {
  CHECK(in_A_gt0(parse_laurent("v + V", 2)));
  CHECK_FALSE(in_A_gt0(parse_laurent("1 + v", 2)));
  CHECK(in_A_geq0(parse_laurent("1 + v", 2)));
  CHECK(in_A_lt0(parse_laurent("V^-1*v^5", 2)));
  CHECK_FALSE(in_A_lt0(parse_laurent("V^-1 + 1", 2)));
}

TEST_CASE("valuation and constant term") {
  LaurentElt num = parse_laurent("2 + V", 2), den = parse_laurent("1 + V^2", 2);
  RatioElt r(num, den);
  Valuation v = valuation(r);
  CHECK(v.r == Rational(2));
  CHECK(*v.gamma == GammaVec{0, 0});
  CHECK(constant_term(r) == Rational(2));
  CHECK(constant_term(RatioElt(parse_laurent("V", 2), den)) == Rational(0));
  CHECK_THROWS_AS(constant_term(RatioElt(parse_laurent("V^-1", 2), den)), NotInValuationRing);
  CHECK(valuation(LaurentElt::zero(2)).infinite());
  CHECK_THROWS_AS(RatioElt(num, LaurentElt::zero(2)), MalformedError);
}

TEST_CASE("small known values") {
  CHECK(GammaVec{1, 0} > GammaVec{0, 5});
  CHECK(GammaVec{1, -3} < GammaVec{1, 2});
  CHECK(parse_laurent("v - v^-1", 2) * parse_laurent("v + v^-1", 2) == parse_laurent("v^2 - v^-2", 2));
  CHECK(bar(parse_laurent("2 + 3*v^2", 2)) == parse_laurent("2 + 3*v^-2", 2));
  Valuation v = valuation(RatioElt(parse_laurent("v - v^-1", 2), parse_laurent("V^2 + 1", 2)));
  CHECK(v.r == Rational(-1));
  CHECK(*v.gamma == GammaVec{0, -1});
  CHECK(constant_term(RatioElt(parse_laurent("1 + v", 2))) == Rational(1));
  CHECK(constant_term(RatioElt(parse_laurent("V*v^-1", 2), parse_laurent("1 + v^2", 2))) == Rational(0));
  CHECK_THROWS_AS(constant_term(RatioElt(parse_laurent("v - v^-1", 2))), NotInValuationRing);
  CHECK(in_A_geq0(parse_laurent("1 + V", 2)));
  CHECK_FALSE(in_A_geq0(parse_laurent("v^-1", 2)));
  CHECK(in_A_geq0(LaurentElt::zero(2)));
}

TEST_CASE("tensor exponents concatenate") {
  LaurentElt t = tensor(parse_laurent("V + v", 2), parse_laurent("V^-1", 2));
  CHECK(t.dim() == 4);
  CHECK(t.coeff(GammaVec{1, 0, -1, 0}) == 1);
  CHECK(t.coeff(GammaVec{0, 1, -1, 0}) == 1);
}
