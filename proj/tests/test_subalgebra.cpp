#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsh/subalgebra.hpp"

using namespace qsh;

TEST_CASE("component dimensions match the frozen table") {
  Shuffler sh;
  UCache u(sh);
  const int ref[5][5] = {{1, 1, 1, 1, 1},
                         {1, 2, 3, 3, 3},
                         {1, 3, 6, 8, 9},
                         {1, 3, 8, 14, 19},
                         {1, 3, 9, 19, 32}};
  const auto dims = dims_corner(u, 4);
  for (int r = 0; r <= 4; ++r)
    for (int s = 0; s <= 4; ++s)
      CHECK(dims[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] == ref[r][s]);

  const auto tri = dims_triangle(u, 4);
  REQUIRE(tri.size() == 5);
  for (int r = 0; r <= 4; ++r) {
    REQUIRE(tri[static_cast<std::size_t>(r)].size() ==
            static_cast<std::size_t>(5 - r));
    for (int s = 0; r + s <= 4; ++s)
      CHECK(tri[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] ==
            ref[r][s]);
  }
}

TEST_CASE("small components are what they should be") {
  Shuffler sh;
  UCache u(sh);
  CHECK(u.component(0, 0).dim() == 1);
  CHECK(u.component(0, 0).member(FreeElement::unit()));
  // (r, 0) components are spanned by the pure power, the full ambient line
  CHECK(u.component(3, 0).dim() == 1);
  CHECK(u.component(3, 0).member(parse_element("xxx")));
  // (1, 1) is everything
  CHECK(u.dim(1, 1) == 2);
  // (3, 1) is a proper subspace: dimension 3 inside ambient dimension 4
  const EchelonBasis& b31 = u.component(3, 1);
  CHECK(b31.dim() == 3);
  CHECK(b31.ambient_dim() == 4);
  int outside = 0;
  for (const Word& w : words_of_bidegree(3, 1))
    if (!u.member(FreeElement::from_word(w))) ++outside;
  CHECK(outside > 0);
}

TEST_CASE("membership respects the shuffle product") {
  Shuffler sh;
  UCache u(sh);
  const FreeElement a = *sh.shuffle_words(Word::parse("xy"), Word::parse("xx"));
  CHECK(u.member(a));
  const FreeElement b = sh.shuffle(a, *sh.shuffle_words(Word::parse("y"), Word::parse("y")));
  CHECK(u.member(b));
  CHECK(u.member(FreeElement::zero()));
}

TEST_CASE("recursive route equals monomial route") {
  Shuffler sh;
  UCache u(sh);
  const Report rep = check_monomial_route(u, 5);
  INFO(rep.to_text());
  CHECK(rep.all_pass());
  // and one direct spot check
  CHECK(u.component_by_monomials(2, 2) == u.component(2, 2));
}

TEST_CASE("closure under deletions, raisings, grading and symmetry") {
  Shuffler sh;
  UCache u(sh);
  CHECK(check_starred_closure(u, 4).all_pass());
  CHECK(check_raising_closure(u, 4).all_pass());
  CHECK(check_grading_eigenvalues(u, 4).all_pass());
  CHECK(check_symmetry_closure(u, 4).all_pass());
}
