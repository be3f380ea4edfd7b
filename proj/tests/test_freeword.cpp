#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsh/freeword.hpp"
#include "qsh/qfield.hpp"

using namespace qsh;

TEST_CASE("words parse, print and grade") {
  const Word w = Word::parse("xyxxyy");
  CHECK(w.str() == "xyxxyy");
  CHECK(w.len == 6);
  CHECK(w.bidegree() == std::pair<int, int>{3, 3});
  CHECK(Word().str() == "1");
  CHECK(Word::parse("1").len == 0);
  CHECK_THROWS_AS((void)Word::parse("xz"), std::invalid_argument);
}

TEST_CASE("word surgery") {
  const Word w = Word::parse("xyx");
  CHECK(w.prepend(Letter::y).str() == "yxyx");
  CHECK(w.append(Letter::y).str() == "xyxy");
  CHECK(w.drop_first().str() == "yx");
  CHECK(w.drop_last().str() == "xy");
  CHECK(w.first() == Letter::x);
  CHECK(w.last() == Letter::x);
  CHECK(w.concat(Word::parse("yy")).str() == "xyxyy");
}

TEST_CASE("canonical word order is length then lexicographic") {
  CHECK(Word::parse("x") < Word::parse("y"));
  CHECK(Word::parse("y") < Word::parse("xx"));
  CHECK(Word::parse("xy") < Word::parse("yx"));
  CHECK(Word::parse("xxy") < Word::parse("xyx"));
}

TEST_CASE("word enumeration by bidegree has binomial size") {
  CHECK(words_of_bidegree(0, 0).size() == 1);
  CHECK(words_of_bidegree(2, 1).size() == 3);
  CHECK(words_of_bidegree(3, 3).size() == 20);
  CHECK(words_of_bidegree(4, 2).size() == 15);
  for (const Word& w : words_of_bidegree(3, 2))
    CHECK(w.bidegree() == std::pair<int, int>{3, 2});
}

TEST_CASE("letter exchange, reversal and their composite on a sample word") {
  const Word w = Word::parse("xyxxyy");
  CHECK(w.sigma().str() == "yxyyxx");
  CHECK(w.dagger().str() == "yyxxyx");
  CHECK(w.tau().str() == "xxyyxy");
  // involutions, and tau = sigma after dagger = dagger after sigma
  CHECK(w.sigma().sigma() == w);
  CHECK(w.dagger().dagger() == w);
  CHECK(w.tau().tau() == w);
  CHECK(w.dagger().sigma() == w.tau());
  CHECK(w.sigma().dagger() == w.tau());
}

TEST_CASE("elements hold canonical sorted terms") {
  FreeElement e;
  e.add_term(Word::parse("yx"), RatFunc(1));
  e.add_term(Word::parse("xy"), RatFunc(qint(2)));
  e.add_term(Word::parse("yx"), RatFunc(-1));  // cancels
  CHECK(e.support_size() == 1);
  CHECK(e.begin()->first.str() == "xy");
  CHECK(e.str(true) == "[2]_q * xy");
  CHECK(e.coeff(Word::parse("xy")) == RatFunc(qint(2)));
  CHECK(e.coeff(Word::parse("yx")).is_zero());

  FreeElement z = e - e;
  CHECK(z.is_zero());
  CHECK(z.str() == "0");
  CHECK(FreeElement::unit().str() == "1");
}

TEST_CASE("element arithmetic and concatenation product") {
  const FreeElement x = FreeElement::from_word(Word::parse("x"));
  const FreeElement y = FreeElement::from_word(Word::parse("y"));
  const FreeElement s = x + y;
  CHECK(s.concat_mul(s).str() == "xx + xy + yx + yy");
  CHECK(x.concat_mul(y.concat_mul(x)).str() == "xyx");
  CHECK(s.concat_mul(FreeElement::unit()) == s);
  CHECK(FreeElement::unit().concat_mul(s) == s);

  FreeElement t = s;
  t.scale(RatFunc(qint(2)));
  t.add_scaled(s, RatFunc(-qint(2)));
  CHECK(t.is_zero());

  FreeElement p;
  p.add_prepended(Letter::y, s, RatFunc(parse_scalar("q^-2")));
  CHECK(p.str() == "q^-2 * yx + q^-2 * yy");
}

TEST_CASE("twists extend linearly to elements") {
  const FreeElement e = parse_element("xy + q^-2 * yx");
  CHECK(e.sigma() == parse_element("yx + q^-2 * xy"));
  CHECK(e.dagger() == parse_element("yx + q^-2 * xy"));
  CHECK(e.tau() == e);
}

TEST_CASE("element grammar round trips") {
  for (const char* txt :
       {"xy + q^-2 * yx", "(q^2 + 1) * xx", "1", "0", "x - y",
        "[2]_q * xy - [3]_q * yx + xxyy", "q^3 * 1 + xyx"}) {
    const FreeElement e = parse_element(txt);
    CHECK(parse_element(e.str()) == e);
    CHECK(parse_element(e.str(true)) == e);
  }
  CHECK(parse_element("xy+q^-2*yx").str() == "xy + q^-2 * yx");
  CHECK(parse_element("(q^2 + 1) * xx - y").str() == "-y + (q^2 + 1) * xx");
  CHECK_THROWS_AS((void)parse_element("xy +"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_element("q^2 xy"), std::invalid_argument);
}

TEST_CASE("bidegree detection on elements") {
  const FreeElement e = parse_element("xy + q^-2 * yx");
  REQUIRE(e.bidegree().has_value());
  CHECK(*e.bidegree() == std::pair<int, int>{1, 1});
  CHECK_FALSE(parse_element("x + xy").bidegree().has_value());
  CHECK_FALSE(FreeElement::zero().bidegree().has_value());
}
