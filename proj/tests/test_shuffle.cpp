#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsh/shuffle.hpp"

using namespace qsh;

TEST_CASE("letter pairing") {
  CHECK(pairing(Letter::x, Letter::x) == 2);
  CHECK(pairing(Letter::y, Letter::y) == 2);
  CHECK(pairing(Letter::x, Letter::y) == -2);
  CHECK(pairing_sum(Word::parse("xxy"), Letter::x) == 2);
  CHECK(pairing_sum(Word::parse("xxy"), Letter::y) == -2);
}

TEST_CASE("small products have the expected closed form") {
  Shuffler sh;
  CHECK(sh.shuffle_words(Word::parse("x"), Word::parse("y"))->str() ==
        "xy + q^-2 * yx");
  CHECK(sh.shuffle_words(Word::parse("y"), Word::parse("x"))->str() ==
        "q^-2 * xy + yx");
  CHECK(sh.shuffle_words(Word::parse("x"), Word::parse("x"))->str() ==
        "(q^2 + 1) * xx");
  // unit laws
  const Word w = Word::parse("xyx");
  CHECK(*sh.shuffle_words(Word::empty(), w) == FreeElement::from_word(w));
  CHECK(*sh.shuffle_words(w, Word::empty()) == FreeElement::from_word(w));
}

TEST_CASE("product is noncommutative") {
  Shuffler sh;
  CHECK_FALSE(*sh.shuffle_words(Word::parse("x"), Word::parse("y")) ==
              *sh.shuffle_words(Word::parse("y"), Word::parse("x")));
}

TEST_CASE("left recursion, right recursion and insertion forms agree") {
  Shuffler sh;
  for (const char* a : {"x", "y", "xy", "yx", "xxy", "xyy", "yxy"})
    for (const char* b : {"x", "y", "xx", "xy", "yx", "yyx"}) {
      const Word u = Word::parse(a), v = Word::parse(b);
      CHECK(*sh.shuffle_words(u, v) == shuffle_words_right_rec(u, v));
    }
  for (const char* b : {"x", "y", "xx", "xy", "yx", "xyx", "yxy", "xyxx"}) {
    const Word v = Word::parse(b);
    for (Letter l : {Letter::x, Letter::y}) {
      CHECK(*sh.shuffle_words(Word::letter(l), v) == insert_letter_left(l, v));
      CHECK(*sh.shuffle_words(v, Word::letter(l)) == insert_letter_right(v, l));
    }
  }
}

TEST_CASE("q-Serre residuals vanish") {
  Shuffler sh;
  const auto [rx, ry] = qserre_shuffle_residuals(sh);
  CHECK(rx.is_zero());
  CHECK(ry.is_zero());
}

TEST_CASE("bilinear extension and convenience wrappers") {
  Shuffler sh;
  const FreeElement a = parse_element("x + q * y");
  const FreeElement b = parse_element("xy - yx");
  FreeElement manual;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b)
      manual.add_scaled(*sh.shuffle_words(wa, wb), ca * cb);
  CHECK(sh.shuffle(a, b) == manual);

  const FreeElement e = parse_element("xy + q^-2 * yx");
  CHECK(sh.shuffle_left(Letter::x, e) ==
        sh.shuffle(FreeElement::from_word(Word::parse("x")), e));
  CHECK(sh.shuffle_right(e, Letter::y) ==
        sh.shuffle(e, FreeElement::from_word(Word::parse("y"))));

  CHECK(sh.shuffle(FreeElement::zero(), b).is_zero());
}

TEST_CASE("memo grows under the cap and can be cleared") {
  Shuffler sh(6);
  CHECK(sh.memo_size() == 0);
  (void)sh.shuffle_words(Word::parse("xy"), Word::parse("yx"));
  const std::size_t n = sh.memo_size();
  CHECK(n > 0);
  // repeating the same product adds nothing
  (void)sh.shuffle_words(Word::parse("xy"), Word::parse("yx"));
  CHECK(sh.memo_size() == n);
  sh.clear_memo();
  CHECK(sh.memo_size() == 0);
  // above the cap nothing is stored
  Shuffler tiny(1);
  (void)tiny.shuffle_words(Word::parse("xy"), Word::parse("yx"));
  CHECK(tiny.memo_size() == 0);
}

TEST_CASE("verification suite passes at desk scale") {
  Shuffler sh;
  const Report rep = check_shuffle_algebra(sh, 6, 7, 1);
  INFO(rep.to_text());
  CHECK(rep.all_pass());
  CHECK(rep.results.size() == 6);
}
