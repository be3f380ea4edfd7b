#include "qsh/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsh {

namespace {

// Divide a multiplier pair by its gcd so rows are scaled by the smallest
// factor that keeps the arithmetic integral; this keeps the common-content
// sweep in strip() close to a no-op.
std::pair<LaurentPoly, LaurentPoly> reduced_pair(const LaurentPoly& alpha,
                                                 const LaurentPoly& beta) {
  LaurentPoly g = LaurentPoly::gcd(alpha, beta);
  if (g.is_monomial()) return {alpha, beta};
  return {alpha.div_exact(g), beta.div_exact(g)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Echelonizer

Echelonizer::Echelonizer(int ncols, int naug) : ncols_(ncols), naug_(naug) {}

void Echelonizer::fma(std::vector<LaurentPoly>& a, const LaurentPoly& alpha,
                      const std::vector<LaurentPoly>& b, const LaurentPoly& beta) {
  // a := a * alpha - b * beta
  const bool alpha_one = alpha.is_one();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!alpha_one && !a[i].is_zero()) a[i] *= alpha;
    if (!b[i].is_zero()) a[i] -= b[i] * beta;
  }
}

void Echelonizer::strip(Row& r) const {
  // common integer content, common q-power, then polynomial content
  Int ic = 0;
  int lo = 0;
  bool any = false;
  auto scan = [&](const std::vector<LaurentPoly>& v) {
    for (const auto& p : v) {
      if (p.is_zero()) continue;
      if (!any) {
        lo = p.lo_exp();
        any = true;
      } else {
        lo = std::min(lo, p.lo_exp());
      }
      if (ic != 1) {
        Int c = p.int_content();
        mpz_gcd(ic.get_mpz_t(), ic.get_mpz_t(), c.get_mpz_t());
      }
    }
  };
  scan(r.c);
  scan(r.aug);
  if (!any) return;
  if (ic != 1 || lo != 0) {
    Int inv = 1;  // divide by scaling with exact integer division below
    for (auto* v : {&r.c, &r.aug})
      for (auto& p : *v)
        if (!p.is_zero()) {
          if (ic != 1) p = p.div_exact(LaurentPoly(ic));
          if (lo != 0) p.scale(inv, -lo);
        }
  }
  // polynomial content with early exit once the gcd collapses to a monomial
  LaurentPoly g;
  bool unit = false;
  for (auto* v : {&r.c, &r.aug}) {
    for (auto& p : *v) {
      if (p.is_zero()) continue;
      g = LaurentPoly::gcd(g, p);
      if (g.is_monomial()) {
        unit = true;
        break;
      }
    }
    if (unit) break;
  }
  if (!unit && !g.is_zero() && !g.is_one()) {
    for (auto* v : {&r.c, &r.aug})
      for (auto& p : *v)
        if (!p.is_zero()) p = p.div_exact(g);
  }
  // keep the pivot coefficient's lowest coefficient positive for determinism
  if (r.pivot >= 0 && !r.c[static_cast<std::size_t>(r.pivot)].is_zero()) {
    const auto& lead = r.c[static_cast<std::size_t>(r.pivot)];
    if (lead.terms().front().second < 0)
      for (auto* v : {&r.c, &r.aug})
        for (auto& p : *v) p = -p;
  }
}

bool Echelonizer::insert(std::vector<LaurentPoly> row, std::vector<LaurentPoly> aug) {
  if (static_cast<int>(row.size()) != ncols_) throw std::logic_error("row width mismatch");
  if (aug.empty()) aug.resize(static_cast<std::size_t>(naug_));
  if (static_cast<int>(aug.size()) != naug_) throw std::logic_error("aug width mismatch");
  Row incoming{std::move(row), std::move(aug), -1};
  for (const Row& R : rows_) {
    const LaurentPoly& beta = incoming.c[static_cast<std::size_t>(R.pivot)];
    if (beta.is_zero()) continue;
    const LaurentPoly& alpha = R.c[static_cast<std::size_t>(R.pivot)];
    const auto [am, bm] = reduced_pair(alpha, beta);
    fma(incoming.c, am, R.c, bm);
    fma(incoming.aug, am, R.aug, bm);
    incoming.pivot = -1;
    strip(incoming);
  }
  int piv = -1;
  for (int j = 0; j < ncols_; ++j)
    if (!incoming.c[static_cast<std::size_t>(j)].is_zero()) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  incoming.pivot = piv;
  strip(incoming);  // re-run for the pivot sign convention
  auto it = std::lower_bound(rows_.begin(), rows_.end(), piv,
                             [](const Row& r, int p) { return r.pivot < p; });
  rows_.insert(it, std::move(incoming));
  return true;
}

Echelonizer::Result Echelonizer::finalize() const {
  // Rows are kept in forward-echelon form while inserting (cheap: incoming
  // vectors stay sparse).  The reduced form is produced here in one backward
  // pass.  Working upward, each row is cleared at the pivots of the rows
  // below it; those rows are already reduced, so their supports avoid every
  // other pivot column and the eliminations are independent: scale the row
  // once by the lcm of the pivot coefficients involved, subtract each lower
  // row with an exact-division multiplier, and strip content a single time.
  std::vector<Row> work = rows_;
  for (int i = static_cast<int>(work.size()) - 2; i >= 0; --i) {
    Row& R = work[static_cast<std::size_t>(i)];
    std::vector<std::size_t> used;
    LaurentPoly lcm(1L);
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < work.size(); ++j) {
      if (R.c[static_cast<std::size_t>(work[j].pivot)].is_zero()) continue;
      used.push_back(j);
      const LaurentPoly& lead = work[j].c[static_cast<std::size_t>(work[j].pivot)];
      lcm = lcm.div_exact(LaurentPoly::gcd(lcm, lead)) * lead;
    }
    if (used.empty()) continue;
    if (!lcm.is_one())
      for (auto* v : {&R.c, &R.aug})
        for (auto& p : *v)
          if (!p.is_zero()) p = p * lcm;
    for (std::size_t j : used) {
      const Row& B = work[j];
      const std::size_t pj = static_cast<std::size_t>(B.pivot);
      const LaurentPoly coef = R.c[pj].div_exact(B.c[pj]);
      for (std::size_t m = 0; m < R.c.size(); ++m)
        if (!B.c[m].is_zero()) R.c[m] -= B.c[m] * coef;
      for (std::size_t m = 0; m < R.aug.size(); ++m)
        if (!B.aug[m].is_zero()) R.aug[m] -= B.aug[m] * coef;
    }
    strip(R);
  }
  Result res;
  res.pivots.reserve(work.size());
  for (const Row& R : work) {
    const LaurentPoly& lead = R.c[static_cast<std::size_t>(R.pivot)];
    std::vector<RatFunc> r(static_cast<std::size_t>(ncols_));
    for (int j = 0; j < ncols_; ++j) {
      const auto& p = R.c[static_cast<std::size_t>(j)];
      if (!p.is_zero()) r[static_cast<std::size_t>(j)] = RatFunc(p, lead);
    }
    std::vector<RatFunc> a(static_cast<std::size_t>(naug_));
    for (int j = 0; j < naug_; ++j) {
      const auto& p = R.aug[static_cast<std::size_t>(j)];
      if (!p.is_zero()) a[static_cast<std::size_t>(j)] = RatFunc(p, lead);
    }
    res.rows.push_back(std::move(r));
    if (naug_ > 0) res.aug.push_back(std::move(a));
    res.pivots.push_back(R.pivot);
  }
  return res;
}

std::vector<std::vector<LaurentPoly>> Echelonizer::forward_rows() const {
  std::vector<std::vector<LaurentPoly>> out;
  out.reserve(rows_.size());
  for (const Row& R : rows_) out.push_back(R.c);
  return out;
}

// ---------------------------------------------------------------------------
// EchelonBasis

int word_index(const std::vector<Word>& words, Word w) {
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || !(*it == w)) return -1;
  return static_cast<int>(it - words.begin());
}

std::vector<LaurentPoly> dense_lp_row(const FreeElement& e, const std::vector<Word>& words) {
  std::vector<LaurentPoly> row(words.size());
  // row-wide common denominator
  LaurentPoly den(1L);
  for (const auto& [w, c] : e) {
    if (c.den().is_one()) continue;
    const LaurentPoly g = LaurentPoly::gcd(den, c.den());
    den = den.div_exact(g) * c.den();
  }
  for (const auto& [w, c] : e) {
    const int idx = word_index(words, w);
    if (idx < 0) throw std::invalid_argument("element outside component: " + w.str());
    row[static_cast<std::size_t>(idx)] = c.num() * den.div_exact(c.den());
  }
  return row;
}

void EchelonBasis::rebuild_vecs() {
  vecs_.clear();
  vecs_.reserve(rows_.size());
  for (const auto& row : rows_) {
    FreeElement v;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) v.add_term(words_[j], row[j]);
    vecs_.push_back(std::move(v));
  }
}

EchelonBasis EchelonBasis::from_spanning(int r, int s, const std::vector<FreeElement>& span,
                                         std::vector<FreeElement>* sparse_basis) {
  EchelonBasis b;
  b.r_ = r;
  b.s_ = s;
  b.words_ = words_of_bidegree(r, s);
  Echelonizer e(static_cast<int>(b.words_.size()));
  for (const FreeElement& v : span) {
    if (v.is_zero()) continue;
    const auto d = v.bidegree();
    if (!d || d->first != r || d->second != s)
      throw std::invalid_argument("spanning vector has wrong bidegree");
    e.insert(dense_lp_row(v, b.words_));
  }
  if (sparse_basis) {
    for (const auto& row : e.forward_rows()) {
      FreeElement v;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) v.add_term(b.words_[j], RatFunc(row[j]));
      sparse_basis->push_back(std::move(v));
    }
  }
  auto res = e.finalize();
  b.rows_ = std::move(res.rows);
  b.pivots_ = std::move(res.pivots);
  b.rebuild_vecs();
  return b;
}

EchelonBasis EchelonBasis::full_component(int r, int s) {
  EchelonBasis b;
  b.r_ = r;
  b.s_ = s;
  b.words_ = words_of_bidegree(r, s);
  const int n = static_cast<int>(b.words_.size());
  b.rows_.assign(static_cast<std::size_t>(n), std::vector<RatFunc>(static_cast<std::size_t>(n)));
  b.pivots_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    b.rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = RatFunc(1);
    b.pivots_[static_cast<std::size_t>(i)] = i;
  }
  b.rebuild_vecs();
  return b;
}

std::optional<std::vector<RatFunc>> EchelonBasis::coordinates(const FreeElement& e) const {
  std::vector<RatFunc> coords(rows_.size());
  if (e.is_zero()) return coords;
  const auto d = e.bidegree();
  if (!d || d->first != r_ || d->second != s_) return std::nullopt;
  FreeElement rem = e;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    RatFunc c = rem.coeff(pivot_word(static_cast<int>(i)));
    if (c.is_zero()) continue;
    rem.add_scaled(vecs_[i], -c);
    coords[i] = std::move(c);
  }
  if (!rem.is_zero()) return std::nullopt;
  return coords;
}

bool EchelonBasis::member(const FreeElement& e) const { return coordinates(e).has_value(); }

// ---------------------------------------------------------------------------
// Predicate intersection

EchelonBasis intersect_with_predicate(const EchelonBasis& basis,
                                      const std::function<bool(Word)>& allowed) {
  const auto& words = basis.ambient_words();
  std::vector<int> forbidden;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (!allowed(words[i])) forbidden.push_back(static_cast<int>(i));
  const int k = basis.dim();
  Matrix m(forbidden.size(), std::vector<RatFunc>(static_cast<std::size_t>(k)));
  for (std::size_t f = 0; f < forbidden.size(); ++f)
    for (int j = 0; j < k; ++j)
      m[f][static_cast<std::size_t>(j)] =
          basis.rows()[static_cast<std::size_t>(j)][static_cast<std::size_t>(forbidden[f])];
  Matrix ker = kernel_basis(m, k);
  std::vector<FreeElement> span;
  span.reserve(ker.size());
  for (const auto& lambda : ker) {
    FreeElement v;
    for (int j = 0; j < k; ++j)
      if (!lambda[static_cast<std::size_t>(j)].is_zero())
        v.add_scaled(basis.vec(j), lambda[static_cast<std::size_t>(j)]);
    span.push_back(std::move(v));
  }
  return EchelonBasis::from_spanning(basis.r(), basis.s(), span);
}

// ---------------------------------------------------------------------------
// CoordBasis

CoordBasis CoordBasis::build(const std::vector<FreeElement>& vecs) {
  if (vecs.empty()) throw std::invalid_argument("empty basis list");
  const auto d0 = vecs.front().bidegree();
  if (!d0) throw std::invalid_argument("basis vector not homogeneous");
  CoordBasis cb;
  cb.vecs_ = vecs;
  const auto words = words_of_bidegree(d0->first, d0->second);
  const int k = static_cast<int>(vecs.size());
  Echelonizer e(static_cast<int>(words.size()), k);
  for (int i = 0; i < k; ++i) {
    const auto d = vecs[static_cast<std::size_t>(i)].bidegree();
    if (!d || d != d0) throw std::invalid_argument("basis vectors mix bidegrees");
    std::vector<LaurentPoly> aug(static_cast<std::size_t>(k));
    aug[static_cast<std::size_t>(i)] = LaurentPoly(1L);
    if (!e.insert(dense_lp_row(vecs[static_cast<std::size_t>(i)], words), std::move(aug)))
      throw std::invalid_argument("basis vectors are dependent");
  }
  auto res = e.finalize();
  EchelonBasis eb;
  eb = EchelonBasis::from_spanning(d0->first, d0->second, vecs);
  cb.ech_ = std::move(eb);
  // echelon row i = sum_j res.aug[i][j] * user vector j, so user coordinates
  // of v are (aug^T) * (echelon coordinates of v).
  cb.to_user_.assign(static_cast<std::size_t>(k), std::vector<RatFunc>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      cb.to_user_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          res.aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return cb;
}

std::optional<std::vector<RatFunc>> CoordBasis::coordinates(const FreeElement& e) const {
  auto ec = ech_.coordinates(e);
  if (!ec) return std::nullopt;
  const int k = dim();
  std::vector<RatFunc> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const RatFunc& m = to_user_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!m.is_zero() && !(*ec)[static_cast<std::size_t>(j)].is_zero())
        out[static_cast<std::size_t>(i)] += m * (*ec)[static_cast<std::size_t>(j)];
    }
  return out;
}

// ---------------------------------------------------------------------------
// Graded matrices over direct sums

BasisView BasisView::of(const EchelonBasis& b) {
  return BasisView{
      b.dim(), b.bidegree(), [&b](int i) -> const FreeElement& { return b.vec(i); },
      [&b](const FreeElement& e) { return b.coordinates(e); }};
}

BasisView BasisView::of(const CoordBasis& b) {
  return BasisView{
      b.dim(), b.bidegree(), [&b](int i) -> const FreeElement& { return b.vec(i); },
      [&b](const FreeElement& e) { return b.coordinates(e); }};
}

BlockResult graded_matrix(const std::function<FreeElement(const FreeElement&)>& f,
                          const std::vector<BasisView>& domain,
                          const std::vector<BasisView>& codomain) {
  BlockResult out;
  int nrows = 0, ncols = 0;
  for (const auto& b : codomain) nrows += b.dim;
  for (const auto& b : domain) ncols += b.dim;
  out.m.assign(static_cast<std::size_t>(nrows), std::vector<RatFunc>(static_cast<std::size_t>(ncols)));
  int col = 0;
  for (const auto& db : domain) {
    for (int j = 0; j < db.dim; ++j, ++col) {
      const FreeElement img = f(db.vec(j));
      if (img.is_zero()) continue;
      const auto d = img.bidegree();
      if (!d) {
        out.error = "image is not homogeneous";
        return out;
      }
      int rowoff = 0;
      bool placed = false;
      for (const auto& cb : codomain) {
        if (cb.bidegree == *d) {
          auto coords = cb.coordinates(img);
          if (!coords) {
            out.error = "image of domain vector " + std::to_string(col) +
                        " is outside the codomain span";
            return out;
          }
          for (int i = 0; i < cb.dim; ++i)
            out.m[static_cast<std::size_t>(rowoff + i)][static_cast<std::size_t>(col)] =
                std::move((*coords)[static_cast<std::size_t>(i)]);
          placed = true;
          break;
        }
        rowoff += cb.dim;
      }
      if (!placed) {
        out.error = "nonzero image of domain vector " + std::to_string(col) +
                    " lands in bidegree (" + std::to_string(d->first) + "," +
                    std::to_string(d->second) + ") absent from the codomain";
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

// ---------------------------------------------------------------------------
// Dense helpers

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), m = b.front().size(), k = b.size();
  Matrix r(n, std::vector<RatFunc>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

Matrix mat_identity(int n) {
  Matrix r(static_cast<std::size_t>(n), std::vector<RatFunc>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = RatFunc(1);
  return r;
}

Matrix mat_sub_scalar(const Matrix& a, const RatFunc& lambda) {
  Matrix r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i][i] -= lambda;
  return r;
}

namespace {

Echelonizer::Result rref_of(const Matrix& m, int ncols) {
  Echelonizer e(ncols);
  for (const auto& row : m) {
    // clear denominators row-wide
    LaurentPoly den(1L);
    for (const auto& c : row)
      if (!c.den().is_one()) {
        const LaurentPoly g = LaurentPoly::gcd(den, c.den());
        den = den.div_exact(g) * c.den();
      }
    std::vector<LaurentPoly> lp(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) lp[j] = row[j].num() * den.div_exact(row[j].den());
    e.insert(std::move(lp));
  }
  return e.finalize();
}

}  // namespace

int rank_of(const Matrix& m) {
  if (m.empty()) return 0;
  return static_cast<int>(rref_of(m, static_cast<int>(m.front().size())).rows.size());
}

Matrix kernel_basis(const Matrix& m, int ncols) {
  auto rr = rref_of(m, ncols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int p : rr.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix ker;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<RatFunc> v(static_cast<std::size_t>(ncols));
    v[static_cast<std::size_t>(f)] = RatFunc(1);
    for (std::size_t i = 0; i < rr.rows.size(); ++i)
      v[static_cast<std::size_t>(rr.pivots[i])] = -rr.rows[i][static_cast<std::size_t>(f)];
    ker.push_back(std::move(v));
  }
  return ker;
}

Matrix row_space_rref(const Matrix& m, int ncols) { return rref_of(m, ncols).rows; }

}  // namespace qsh
