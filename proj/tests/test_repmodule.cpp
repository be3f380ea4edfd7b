#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsh/repmodule.hpp"

using namespace qsh;

TEST_CASE("generator names round trip") {
  for (Gen g : kAllGens) {
    REQUIRE(gen_from_name(gen_name(g)).has_value());
    CHECK(*gen_from_name(gen_name(g)) == g);
  }
  CHECK_FALSE(gen_from_name("E2").has_value());
}

TEST_CASE("principal action on small vectors") {
  Shuffler sh;
  const FreeElement one = FreeElement::unit();
  CHECK(act(0, Gen::F0, one, sh).str() == "x");
  CHECK(act(0, Gen::F1, act(0, Gen::F0, one, sh), sh).str(true) == "[2]_q * xy");
  CHECK(act(0, Gen::E0, one, sh).is_zero());
  CHECK(act(0, Gen::E1, one, sh).is_zero());
  CHECK(act(0, Gen::F1, one, sh).is_zero());
  CHECK(act(0, Gen::K0, one, sh) == parse_element("q * 1"));
  CHECK(act(0, Gen::K1, one, sh) == one);
  CHECK(act(0, Gen::D, one, sh) == one);
  // E1 deletes the trailing y
  CHECK(act(0, Gen::E1, parse_element("xy"), sh) == parse_element("x"));
  // E0 deletes the trailing x
  CHECK(act(0, Gen::E0, parse_element("x"), sh) == one);
  // composition is right to left
  CHECK(act_seq(0, {Gen::E1, Gen::F1}, parse_element("x"), sh) ==
        act(0, Gen::E1, act(0, Gen::F1, parse_element("x"), sh), sh));
}

TEST_CASE("weight eigenvalues on a homogeneous vector") {
  Shuffler sh;
  UCache u(sh);
  const FreeElement v = u.component(2, 1).vec(0);  // bidegree (2, 1)
  FreeElement k0 = act(0, Gen::K0, v, sh);
  FreeElement k1 = act(0, Gen::K1, v, sh);
  FreeElement d = act(0, Gen::D, v, sh);
  FreeElement ref = v;
  ref.scale(parse_scalar("q^-1"));  // q^{2s-2r+1} = q^{-1}
  CHECK(k0 == ref);
  ref = v;
  ref.scale(parse_scalar("q^2"));  // q^{2r-2s} = q^2
  CHECK(k1 == ref);
  ref = v;
  ref.scale(parse_scalar("q^-2"));  // q^{-r} = q^-2
  CHECK(d == ref);
}

TEST_CASE("presentation relations") {
  const auto rels = presentation_relations();
  CHECK(rels.size() == 29);
  Shuffler sh;
  UCache u(sh);
  const Report rep = verify_presentation(u, 3, 0);
  INFO(rep.to_text());
  CHECK(rep.all_pass());
}

TEST_CASE("twisted actions are intertwined") {
  Shuffler sh;
  UCache u(sh);
  for (int v = 0; v < kNumActionTables; ++v) {
    const Report rep = variant_action_check(u, 3, v);
    INFO("variant ", v, "\n", rep.to_text());
    CHECK(rep.all_pass());
  }
  // twist wiring: tables 1..3 carry the three symmetries
  CHECK_FALSE(action_table(0).twist.has_value());
  CHECK(action_table(1).twist == Op::Sigma);
  CHECK(action_table(2).twist == Op::Dagger);
  CHECK(action_table(3).twist == Op::Tau);
}

TEST_CASE("allowed words of the generated submodule") {
  CHECK(bold_allowed_word(Word::empty()));
  CHECK(bold_allowed_word(Word::parse("x")));
  CHECK(bold_allowed_word(Word::parse("xy")));
  CHECK(bold_allowed_word(Word::parse("xyxx")));
  CHECK_FALSE(bold_allowed_word(Word::parse("y")));
  CHECK_FALSE(bold_allowed_word(Word::parse("xx")));
  CHECK_FALSE(bold_allowed_word(Word::parse("yx")));
  CHECK_FALSE(bold_allowed_word(Word::parse("xxy")));
}

TEST_CASE("submodule pieces: intersection route, dimensions, membership") {
  Shuffler sh;
  UCache u(sh);
  BoldUCache bold(u);
  CHECK(bold.route() == BoldRoute::intersection);
  CHECK(bold.dim(0, 0) == 1);
  CHECK(bold.dim(1, 0) == 1);
  CHECK(bold.dim(0, 1) == 0);
  CHECK(bold.dim(1, 1) == 1);
  CHECK(bold.dim(2, 2) == 2);
  CHECK(bold.dim(3, 3) == 3);
  CHECK(bold.member(parse_element("x")));
  CHECK(bold.member(act(0, Gen::F1, parse_element("x"), sh)));
  CHECK_FALSE(bold.member(parse_element("y")));
  // in the ambient subalgebra but not in the submodule
  const FreeElement xx = *sh.shuffle_words(Word::parse("x"), Word::parse("x"));
  CHECK(u.member(xx));
  CHECK_FALSE(bold.member(xx));
}

TEST_CASE("generation route agrees and stays in bounds") {
  Shuffler sh;
  UCache u(sh);
  CHECK(check_bold_routes(u, 4).all_pass());
  BoldUCache gen = BoldUCache::from_generation(u, 4);
  CHECK(gen.route() == BoldRoute::generation);
  CHECK(gen.dim(2, 2) == 2);
  CHECK_THROWS_AS((void)gen.component(6, 6), std::out_of_range);
}

TEST_CASE("submodule dimension formula at a small window") {
  Shuffler sh;
  UCache u(sh);
  BoldUCache bold(u);
  const Report rep = check_bold_dimensions(bold, 5, 2);
  INFO(rep.to_text());
  CHECK(rep.all_pass());
}

TEST_CASE("highest-weight vector") {
  Shuffler sh;
  const Report rep = highest_weight_check(sh);
  INFO(rep.to_text());
  CHECK(rep.all_pass());
}

TEST_CASE("weight eigenvalue sweep") {
  Shuffler sh;
  UCache u(sh);
  BoldUCache bold(u);
  CHECK(weight_eigenvalue_check(u, bold, 4).all_pass());
}

TEST_CASE("nilpotence inside, freedom outside") {
  Shuffler sh;
  UCache u(sh);
  BoldUCache bold(u);
  const Report rep = nonnilpotence_witness(u, bold, 3, 4);
  INFO(rep.to_text());
  CHECK(rep.all_pass());
  CHECK(generation_reach_check(bold, 4).all_pass());
}

TEST_CASE("allowed support is invariant under the module maps") {
  Shuffler sh;
  const Report rep = invariant_space_closure_check(sh, 5, 3, 12345u);
  INFO(rep.to_text());
  CHECK(rep.all_pass());
}

TEST_CASE("golden basis fixture verifies and feeds matrix checks") {
  Shuffler sh;
  UCache u(sh);
  const GradedVectorTable table = load_vector_table("fixtures/appendix_c.txt");
  CHECK(!table.empty());
  const Report rep = verify_appendix_c(table, u);
  INFO(rep.to_text());
  CHECK(rep.all_pass());

  // spot block: F0 maps the (1,1) basis into (2,1) + (1,2) with coordinates (1, 0)
  const CoordBasis dom = CoordBasis::build(table.at({1, 1}));
  const CoordBasis cod21 = CoordBasis::build(table.at({2, 1}));
  const CoordBasis cod12 = CoordBasis::build(table.at({1, 2}));
  const auto f = [&](const FreeElement& e) { return act(0, Gen::F0, e, sh); };
  const BlockResult br = graded_matrix(
      f, {BasisView::of(dom)}, {BasisView::of(cod21), BasisView::of(cod12)});
  REQUIRE(br.ok);
  REQUIRE(br.m.size() == 2);
  CHECK(br.m[0][0] == RatFunc(1));
  CHECK(br.m[1][0] == RatFunc(0));
}

TEST_CASE("matrix fixture verifies") {
  Shuffler sh;
  UCache u(sh);
  const GradedVectorTable table = load_vector_table("fixtures/appendix_c.txt");
  const auto blocks = load_matrix_table("fixtures/appendix_d.txt");
  CHECK(!blocks.empty());
  const Report rep = verify_appendix_d(blocks, table, u);
  INFO(rep.to_text());
  CHECK(rep.all_pass());
}

TEST_CASE("ladder structure of the two Weyl-like pairs") {
  Shuffler sh;
  UCache u(sh);
  const Report rep = check_appendix_e(u, 4);
  INFO(rep.to_text());
  CHECK(rep.all_pass());
}
