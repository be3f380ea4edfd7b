#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qsh/linalg.hpp"
#include "qsh/shuffle.hpp"

using namespace qsh;

namespace {
std::vector<LaurentPoly> lp_row(std::initializer_list<long> v) {
  std::vector<LaurentPoly> out;
  for (long c : v) out.emplace_back(c);
  return out;
}
}  // namespace

TEST_CASE("echelonizer ranks and rejects dependent rows") {
  Echelonizer e(3);
  CHECK(e.insert(lp_row({1, 2, 3})));
  CHECK(e.insert(lp_row({0, 1, 1})));
  CHECK_FALSE(e.insert(lp_row({1, 3, 4})));  // sum of the first two
  CHECK_FALSE(e.insert(lp_row({0, 0, 0})));
  CHECK(e.rank() == 2);
  CHECK(e.insert(lp_row({5, 0, 1})));
  CHECK(e.rank() == 3);
}

TEST_CASE("finalize yields reduced echelon with unit pivots") {
  Echelonizer e(3, 3);
  // rows carry identity augmentation to track the change of basis
  e.insert(lp_row({2, 4, 0}), lp_row({1, 0, 0}));
  e.insert(lp_row({0, 0, 3}), lp_row({0, 1, 0}));
  e.insert(lp_row({2, 5, 3}), lp_row({0, 0, 1}));
  const auto res = e.finalize();
  REQUIRE(res.pivots == std::vector<int>{0, 1, 2});
  for (std::size_t i = 0; i < res.rows.size(); ++i)
    for (std::size_t j = 0; j < res.rows[i].size(); ++j)
      CHECK(res.rows[i][j] == (i == j ? RatFunc(1) : RatFunc(0)));
  // augmentation must reproduce each unit vector from the inserted rows
  const Matrix inserted = {{RatFunc(2), RatFunc(4), RatFunc(0)},
                           {RatFunc(0), RatFunc(0), RatFunc(3)},
                           {RatFunc(2), RatFunc(5), RatFunc(3)}};
  CHECK(mat_mul(res.aug, inserted) == mat_identity(3));
}

TEST_CASE("reduced form is insertion-order independent") {
  std::vector<std::vector<long>> rows = {{1, 2, 3, 4}, {0, 1, 0, 2}, {5, 0, 1, 0}};
  Echelonizer a(4), b(4);
  for (const auto& r : rows) a.insert(lp_row({r[0], r[1], r[2], r[3]}));
  std::reverse(rows.begin(), rows.end());
  for (const auto& r : rows) b.insert(lp_row({r[0], r[1], r[2], r[3]}));
  const auto ra = a.finalize(), rb = b.finalize();
  CHECK(ra.rows == rb.rows);
  CHECK(ra.pivots == rb.pivots);
}

TEST_CASE("forward rows span the same space") {
  Echelonizer e(4);
  e.insert(lp_row({1, 2, 3, 4}));
  e.insert(lp_row({1, 2, 5, 8}));
  e.insert(lp_row({0, 7, 0, 7}));
  Echelonizer f(4);
  for (auto& row : e.forward_rows()) f.insert(std::move(row));
  CHECK(f.rank() == e.rank());
  CHECK(f.finalize().rows == e.finalize().rows);
}

TEST_CASE("echelon basis from spanning vectors") {
  Shuffler sh;
  const FreeElement xy = *sh.shuffle_words(Word::parse("x"), Word::parse("y"));
  const FreeElement yx = *sh.shuffle_words(Word::parse("y"), Word::parse("x"));
  std::vector<FreeElement> sparse;
  const EchelonBasis b =
      EchelonBasis::from_spanning(1, 1, {xy, yx, xy + yx}, &sparse);
  CHECK(b.dim() == 2);
  CHECK(b.ambient_dim() == 2);
  CHECK(b.member(parse_element("xy")));
  CHECK(b.member(parse_element("q^5 * yx - xy")));
  CHECK_FALSE(b.member(parse_element("x")));  // wrong bidegree

  // sparse output spans the same subspace
  CHECK(EchelonBasis::from_spanning(1, 1, sparse) == b);

  // coordinates invert vec()
  for (int i = 0; i < b.dim(); ++i) {
    const auto c = b.coordinates(b.vec(i));
    REQUIRE(c.has_value());
    for (int j = 0; j < b.dim(); ++j)
      CHECK((*c)[static_cast<std::size_t>(j)] == (i == j ? RatFunc(1) : RatFunc(0)));
  }
}

TEST_CASE("proper subspace membership") {
  // span{x*y} inside the two-dimensional (1,1) component
  Shuffler sh;
  const FreeElement xy = *sh.shuffle_words(Word::parse("x"), Word::parse("y"));
  const EchelonBasis b = EchelonBasis::from_spanning(1, 1, {xy});
  CHECK(b.dim() == 1);
  CHECK(b.member(xy));
  CHECK_FALSE(b.member(parse_element("xy")));
  CHECK_FALSE(b.coordinates(parse_element("yx")).has_value());
  const auto c = b.coordinates(xy);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == RatFunc(1));
}

TEST_CASE("full component and predicate intersection") {
  const EchelonBasis full = EchelonBasis::full_component(2, 1);
  CHECK(full.dim() == 3);
  CHECK(full.ambient_dim() == 3);
  // restrict to words starting with x
  const EchelonBasis sub = intersect_with_predicate(
      full, [](Word w) { return w.first() == Letter::x; });
  CHECK(sub.dim() == 2);
  CHECK(sub.member(parse_element("xxy - q * xyx")));
  CHECK_FALSE(sub.member(parse_element("yxx")));
}

TEST_CASE("dense rows clear denominators") {
  const std::vector<Word> words = words_of_bidegree(1, 1);
  const FreeElement e = parse_element("1/[2]_q * xy + q^-3 * yx");
  const auto row = dense_lp_row(e, words);
  REQUIRE(row.size() == 2);
  // both entries integral, ratio preserved
  CHECK(RatFunc(row[0], row[1]) ==
        parse_scalar("1/[2]_q") / parse_scalar("q^-3"));
  CHECK_THROWS(dense_lp_row(parse_element("x"), words));
}

TEST_CASE("coord basis keeps user order") {
  const FreeElement v0 = parse_element("xy + yx");
  const FreeElement v1 = parse_element("xy - yx");
  const CoordBasis cb = CoordBasis::build({v0, v1});
  CHECK(cb.dim() == 2);
  CHECK(cb.vec(0) == v0);
  const auto c = cb.coordinates(parse_element("2 * xy"));
  REQUIRE(c.has_value());
  CHECK((*c)[0] == RatFunc(1));
  CHECK((*c)[1] == RatFunc(1));
  CHECK_THROWS_AS((void)CoordBasis::build({v0, v0}), std::invalid_argument);
  CHECK_THROWS_AS((void)CoordBasis::build({v0, parse_element("x")}),
                  std::invalid_argument);
}

TEST_CASE("graded matrix follows the column convention") {
  Shuffler sh;
  // f = left shuffle by x : (1,0) -> (2,0), one-dimensional spaces
  const EchelonBasis dom = EchelonBasis::full_component(1, 0);
  const EchelonBasis cod = EchelonBasis::full_component(2, 0);
  const auto f = [&](const FreeElement& e) { return sh.shuffle_left(Letter::x, e); };
  const BlockResult br = graded_matrix(f, {BasisView::of(dom)}, {BasisView::of(cod)});
  REQUIRE(br.ok);
  REQUIRE(br.m.size() == 1);
  REQUIRE(br.m[0].size() == 1);
  CHECK(br.m[0][0] == parse_scalar("q^2 + 1"));

  // image outside the codomain is flagged, not dropped
  const BlockResult bad = graded_matrix(f, {BasisView::of(dom)}, {BasisView::of(dom)});
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.error.empty());
}

TEST_CASE("dense helpers") {
  const Matrix m = {{RatFunc(1), RatFunc(2)}, {RatFunc(2), RatFunc(4)}};
  CHECK(rank_of(m) == 1);
  const Matrix k = kernel_basis(m, 2);
  REQUIRE(k.size() == 1);
  // m * k^T = 0
  for (const auto& row : m)
    CHECK((row[0] * k[0][0] + row[1] * k[0][1]).is_zero());

  // equal row spaces give identical reduced forms
  const Matrix m2 = {{RatFunc(3), RatFunc(6)}};
  CHECK(row_space_rref(m, 2) == row_space_rref(m2, 2));

  const Matrix a = {{RatFunc(1), RatFunc(qint(2))}, {RatFunc(0), RatFunc(1)}};
  const Matrix id = mat_identity(2);
  CHECK(mat_mul(a, id) == a);
  CHECK(mat_sub_scalar(id, RatFunc(1)) ==
        Matrix{{RatFunc(0), RatFunc(0)}, {RatFunc(0), RatFunc(0)}});
}
