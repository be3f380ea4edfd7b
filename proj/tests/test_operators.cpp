#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qsh/operators.hpp"

using namespace qsh;

namespace {
FreeElement ap(const char* name, const char* elem, Shuffler& sh) {
  return apply_op(*op_from_name(name), parse_element(elem), sh);
}
}  // namespace

TEST_CASE("op names round trip") {
  for (int i = 0; i <= static_cast<int>(Op::Tau); ++i) {
    const Op op = static_cast<Op>(i);
    REQUIRE(op_from_name(op_name(op)).has_value());
    CHECK(*op_from_name(op_name(op)) == op);
  }
  CHECK_FALSE(op_from_name("Bogus").has_value());
}

TEST_CASE("scaling maps act by bidegree") {
  Shuffler sh;
  CHECK(ap("X", "xxy", sh) == parse_element("q^2 * xxy"));
  CHECK(ap("Xinv", "xxy", sh) == parse_element("q^-2 * xxy"));
  CHECK(ap("Y", "xxy", sh) == parse_element("q * xxy"));
  // K = X^2 Y^-2: q^(2r - 2s)
  CHECK(ap("K", "xxy", sh) == parse_element("q^2 * xxy"));
  CHECK(ap("Kinv", "xxy", sh) == parse_element("q^-2 * xxy"));
  CHECK(ap("K", "1", sh) == FreeElement::unit());
}

TEST_CASE("starred maps delete one letter or kill") {
  Shuffler sh;
  CHECK(ap("AsL", "xy", sh) == parse_element("y"));
  CHECK(ap("AsL", "yx", sh).is_zero());
  CHECK(ap("BsL", "yx", sh) == parse_element("x"));
  CHECK(ap("AsR", "yx", sh) == parse_element("y"));
  CHECK(ap("BsR", "xy", sh) == parse_element("x"));
  CHECK(ap("BsR", "xy + q^-2 * yx", sh) == parse_element("x"));
  for (const char* m : {"AsL", "BsL", "AsR", "BsR"})
    CHECK(ap(m, "1", sh).is_zero());
}

TEST_CASE("multiplication maps shuffle by a letter") {
  Shuffler sh;
  CHECK(ap("Al", "y", sh) == parse_element("xy + q^-2 * yx"));
  CHECK(ap("Ar", "y", sh) == parse_element("q^-2 * xy + yx"));
  CHECK(ap("Bl", "x", sh) == parse_element("q^-2 * xy + yx"));
  CHECK(ap("Br", "x", sh) == parse_element("xy + q^-2 * yx"));
  CHECK(ap("Al", "1", sh) == parse_element("x"));
}

TEST_CASE("twist maps") {
  Shuffler sh;
  CHECK(ap("Sigma", "xy + q * xx", sh) == parse_element("yx + q * yy"));
  CHECK(ap("Dagger", "xxy", sh) == parse_element("yxx"));
  CHECK(ap("Tau", "xxy", sh) == parse_element("yxx").sigma());
}

TEST_CASE("composition applies right to left") {
  Shuffler sh;
  const FreeElement e = parse_element("xy");
  // K AsL means: first AsL (gives y), then K (scales by q^-2)
  CHECK(apply_word({*op_from_name("K"), *op_from_name("AsL")}, e, sh) ==
        parse_element("q^-2 * y"));
  CHECK(apply_word({}, e, sh) == e);
}

TEST_CASE("relation grammar") {
  CHECK_FALSE(parse_relation_line("").has_value());
  CHECK_FALSE(parse_relation_line("# comment").has_value());

  const auto rel = parse_relation_line("K AsL = q^-4 * AsL K");
  REQUIRE(rel.has_value());
  CHECK(rel->lhs.size() == 1);
  CHECK(rel->rhs.size() == 1);
  CHECK(rel->rhs[0].coeff == parse_scalar("q^-4"));
  CHECK(rel->rhs[0].ops == std::vector<Op>{Op::AstarL, Op::K});

  const auto zero = parse_relation_line("AsL Al - q^2 * Al AsL = I");
  REQUIRE(zero.has_value());
  CHECK(zero->lhs.size() == 2);
  CHECK(zero->rhs.size() == 1);
  CHECK(zero->rhs[0].ops.empty());

  const auto pw = parse_relation_line("X^2 Yinv^2 = K");
  REQUIRE(pw.has_value());
  CHECK(pw->lhs[0].ops ==
        std::vector<Op>{Op::X, Op::X, Op::Yinv, Op::Yinv});

  CHECK_THROWS_AS((void)parse_relation_line("Frob = I"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_relation_line("K AsL"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_relation_line("Y^-2 = Yinv^2"), std::invalid_argument);

  std::istringstream bad("K = K\nwhat = I\n");
  CHECK_THROWS_AS((void)parse_relations(bad), std::invalid_argument);
}

TEST_CASE("relation residual and word sweep") {
  Shuffler sh;
  const auto rel = parse_relation_line("Sigma Sigma = I");
  REQUIRE(rel.has_value());
  CHECK(relation_residual(*rel, parse_element("xy + q * yx"), sh).is_zero());

  const auto fake = parse_relation_line("AsL = BsL");
  REQUIRE(fake.has_value());
  CHECK_FALSE(relation_residual(*fake, parse_element("xy"), sh).is_zero());

  const Report good = check_relations_on_words("t", {*rel}, 4, sh, 1);
  CHECK(good.all_pass());
  const Report bad = check_relations_on_words("t", {*fake}, 4, sh, 1);
  CHECK_FALSE(bad.all_pass());
  CHECK(bad.num_fail() == 1);
}

TEST_CASE("fixture relations hold on words but starred q-Serre needs the submodule") {
  Shuffler sh;
  const auto rels = load_relations("fixtures/appendix_a_global.rel");
  CHECK(rels.size() == 36);
  const Report rep = check_relations_on_words("global", rels, 4, sh, 1);
  INFO(rep.to_text());
  CHECK(rep.all_pass());

  // The two starred-map q-Serre relations hold only on the submodule
  // generated by the empty word, not on the whole free algebra: exhibit a
  // short word where the left-starred residual is nonzero.
  const auto srels = load_relations("fixtures/appendix_a_on_u.rel");
  CHECK(srels.size() == 4);
  bool found = false;
  for (int len = 4; len <= 5 && !found; ++len)
    for (int r = 0; r <= len && !found; ++r)
      for (const Word& w : words_of_bidegree(r, len - r)) {
        FreeElement e = FreeElement::from_word(w);
        for (const OpRelation& rel : srels)
          if (!relation_residual(rel, e, sh).is_zero()) {
            found = true;
            break;
          }
        if (found) break;
      }
  CHECK(found);
}

TEST_CASE("starred deletions reach the empty word") {
  const FreeElement e = parse_element("xy + q^-2 * yx");
  const ReachOne left = reach_one(e, true);
  REQUIRE(left.ok);
  CHECK(left.ops.size() == 2);
  CHECK_FALSE(left.scalar.is_zero());
  const ReachOne right = reach_one(e, false);
  REQUIRE(right.ok);
  CHECK_FALSE(right.scalar.is_zero());
  CHECK_FALSE(reach_one(FreeElement::zero(), true).ok);
  // the unit itself: no ops needed
  const ReachOne triv = reach_one(FreeElement::unit(), true);
  REQUIRE(triv.ok);
  CHECK(triv.ops.empty());
  CHECK(triv.scalar.is_one());
}
