#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsh/qfield.hpp"

using namespace qsh;

TEST_CASE("laurent polynomials keep canonical form") {
  LaurentPoly a = LaurentPoly::q_power(2) + LaurentPoly(1L);
  CHECK(a.str() == "q^2 + 1");
  CHECK(a.lo_exp() == 0);
  CHECK(a.hi_exp() == 2);

  LaurentPoly b = a - a;
  CHECK(b.is_zero());
  CHECK((a - LaurentPoly(1L)).is_monomial());

  // cancellation inside addition
  LaurentPoly c = LaurentPoly::q_power(2) - LaurentPoly::q_power(-3);
  c += LaurentPoly::q_power(-3);
  CHECK(c == LaurentPoly::q_power(2));
}

TEST_CASE("q-integers") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1).is_one());
  CHECK(qint(2).str() == "q + q^-1");
  CHECK(qint(3).str() == "q^2 + 1 + q^-2");
  CHECK(qint(-3) == -qint(3));
  CHECK(qint(4).eval_one() == 4);
  // [m][n+1] - [m+1][n] = [m-n] telescoping instance
  CHECK(qint(3) * qint(5) - qint(4) * qint(4) == -LaurentPoly(1L));
}

TEST_CASE("multiplication distributes and commutes") {
  std::mt19937 rng(7);
  auto rand_poly = [&](long spread) {
    LaurentPoly p;
    for (int t = 0; t < 5; ++t) {
      const int e = static_cast<int>(rng() % 9) - 4;
      const long c = static_cast<long>(rng() % (2 * spread + 1)) - spread;
      if (c) p += LaurentPoly::q_power(e, Int(c));
    }
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const LaurentPoly a = rand_poly(20), b = rand_poly(20), c = rand_poly(20);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("multiplication with huge coefficients matches the small-path result") {
  // scale one factor by 2^80: the product must scale linearly, tying the
  // arbitrary-precision path to the word-sized fast path
  const LaurentPoly a = qint(5) * qint(7) - LaurentPoly(3L);
  const LaurentPoly b = qint(4) + LaurentPoly::q_power(-6, Int(11));
  Int big(1);
  big <<= 80;
  LaurentPoly bigb = b;
  bigb.scale(big, 0);
  LaurentPoly prod = a * bigb;
  LaurentPoly small = a * b;
  small.scale(big, 0);
  CHECK(prod == small);
}

TEST_CASE("gcd and exact division") {
  const LaurentPoly a = qint(2) * qint(6);
  const LaurentPoly b = qint(2) * qint(2) * LaurentPoly::q_power(3, Int(4));
  const LaurentPoly g = LaurentPoly::gcd(a, b);
  CHECK(a.div_exact(g) * g == a);
  CHECK(b.div_exact(g) * g == b);
  // gcd is normalized: lowest exponent 0, primitive, positive lead
  CHECK(g.lo_exp() == 0);
  CHECK(g.int_content() == 1);
  CHECK(g.terms().front().second > 0);
  CHECK_THROWS_AS((void)qint(3).div_exact(qint(2)), std::domain_error);
}

TEST_CASE("bar involution and evaluation") {
  const LaurentPoly p = LaurentPoly::q_power(2, Int(5)) + LaurentPoly::q_power(-1, Int(-2));
  CHECK(p.bar().bar() == p);
  CHECK(qint(6).bar() == qint(6));  // palindromic
  CHECK(p.eval_one() == 3);
}

TEST_CASE("rational functions normalize to canonical form") {
  CHECK(RatFunc(qint(4), qint(2)) ==
        RatFunc(LaurentPoly::q_power(2) + LaurentPoly::q_power(-2)));
  CHECK(RatFunc(qint(3), qint(3)).is_one());
  const RatFunc r(LaurentPoly(2L), qint(2) * LaurentPoly(2L));
  CHECK(r.is_laurent() == false);
  CHECK(r * RatFunc(qint(2)) == RatFunc(1));
  CHECK((r - r).is_zero());
  CHECK(r.inv() == RatFunc(qint(2)));
  CHECK_THROWS_AS(RatFunc(qint(2), LaurentPoly()), std::domain_error);
  CHECK_THROWS_AS((void)RatFunc().inv(), std::domain_error);
}

TEST_CASE("rational arithmetic") {
  const RatFunc half(LaurentPoly(1L), qint(2));
  const RatFunc a = half + half;
  CHECK(a == RatFunc(LaurentPoly(2L), qint(2)));
  CHECK(a * RatFunc(qint(2)) == RatFunc(2));
  CHECK(RatFunc(qint(3)) / RatFunc(qint(3)) == RatFunc(1));
}

TEST_CASE("scalar grammar round trips") {
  for (const char* s : {"q^-2", "[3]_q", "3*[2]_q", "[2]_q^2", "[2]_q*[3]_q",
                        "(q^2 + 1)/(q + q^-1)", "-2*q^3 + q", "1", "0"}) {
    const RatFunc v = parse_scalar(s);
    CHECK(parse_scalar(v.str()) == v);
    CHECK(parse_scalar(v.pretty()) == v);
  }
  CHECK(parse_scalar("[2]_q") == RatFunc(qint(2)));
  CHECK(parse_scalar("q^2*q^-2").is_one());
  CHECK(parse_scalar(" [4]_q / [2]_q ") == parse_scalar("q^2 + q^-2"));
  CHECK_THROWS_AS((void)parse_scalar("q^^2"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_scalar("[2"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_scalar(""), std::invalid_argument);
}

TEST_CASE("pretty printing folds q-integer shapes") {
  CHECK(RatFunc(qint(3)).pretty() == "[3]_q");
  CHECK(RatFunc(qint(2) * qint(2)).pretty() == "[2]_q^2");
  CHECK(RatFunc(qint(2) * LaurentPoly(3L)).pretty() == "3*[2]_q");
  CHECK(RatFunc(qint(2) * qint(3)).pretty() == "[2]_q*[3]_q");
}
