#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsh/freeword.hpp"

namespace qsh {

using Matrix = std::vector<std::vector<RatFunc>>;

/// Incremental reduced-row-echelon elimination over Q(q).
///
/// Rows are kept as vectors of integer Laurent polynomials with common
/// content removed after every combination step; denominators only appear
/// when finalize() normalizes each pivot coefficient to 1. Optional
/// augmented columns ride along for change-of-basis tracking.
class Echelonizer {
 public:
  explicit Echelonizer(int ncols, int naug = 0);

  /// Reduce the row against the current basis and adopt it if independent.
  /// Returns true when the rank grew. Rows are dense, width ncols/naug.
  bool insert(std::vector<LaurentPoly> row, std::vector<LaurentPoly> aug = {});

  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }

  struct Result {
    Matrix rows;             // reduced echelon, pivot entries == 1
    Matrix aug;              // augmented columns under the same row operations
    std::vector<int> pivots; // strictly increasing
  };
  Result finalize() const;

  /// Forward-echelon rows as stored (integer, content-stripped, sorted by
  /// pivot). Same row space as the finalized result but typically far
  /// sparser, since no backward elimination has filled them in.
  std::vector<std::vector<LaurentPoly>> forward_rows() const;

 private:
  struct Row {
    std::vector<LaurentPoly> c, aug;
    int pivot = -1;
  };
  void strip(Row& r) const;
  static void fma(std::vector<LaurentPoly>& a, const LaurentPoly& alpha,
                  const std::vector<LaurentPoly>& b, const LaurentPoly& beta);

  int ncols_, naug_;
  std::vector<Row> rows_;  // sorted by pivot column
};

/// Reduced echelon basis of a homogeneous subspace of the free algebra
/// component of bidegree (r, s). Coordinates are taken against the canonical
/// word list of the component; pivot coefficients are 1; the representation
/// of a subspace is unique.
class EchelonBasis {
 public:
  EchelonBasis() = default;

  /// `sparse_basis`, when given, receives the forward-echelon rows as
  /// elements: a basis of the same span that is usually much sparser than
  /// the reduced rows, suited for feeding further spanning constructions.
  static EchelonBasis from_spanning(int r, int s, const std::vector<FreeElement>& span,
                                    std::vector<FreeElement>* sparse_basis = nullptr);
  /// The full component: identity rows over every word of bidegree (r, s).
  static EchelonBasis full_component(int r, int s);

  int r() const { return r_; }
  int s() const { return s_; }
  std::pair<int, int> bidegree() const { return {r_, s_}; }
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return static_cast<int>(words_.size()); }
  const std::vector<Word>& ambient_words() const { return words_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Word pivot_word(int i) const { return words_[static_cast<std::size_t>(pivots_[i])]; }
  const Matrix& rows() const { return rows_; }
  const FreeElement& vec(int i) const { return vecs_[static_cast<std::size_t>(i)]; }
  const std::vector<FreeElement>& vecs() const { return vecs_; }

  /// e must be zero or homogeneous of bidegree (r, s) to be a member.
  bool member(const FreeElement& e) const;
  /// Coordinates wrt the basis vectors, nullopt when e is not in the span.
  std::optional<std::vector<RatFunc>> coordinates(const FreeElement& e) const;

  bool operator==(const EchelonBasis& o) const {
    return r_ == o.r_ && s_ == o.s_ && rows_ == o.rows_;
  }

 private:
  int r_ = 0, s_ = 0;
  std::vector<Word> words_;
  Matrix rows_;
  std::vector<int> pivots_;
  std::vector<FreeElement> vecs_;
  void rebuild_vecs();
};

/// Index of w in the canonical word list of its component.
int word_index(const std::vector<Word>& words, Word w);

/// Dense integer-Laurent row for e over the component word list (denominators
/// cleared row-wide). Throws if e has support outside the list.
std::vector<LaurentPoly> dense_lp_row(const FreeElement& e, const std::vector<Word>& words);

/// Members of the basis span whose coefficients vanish on every word failing
/// the predicate; returned as an echelon basis (kernel of the projection onto
/// the forbidden coordinates).
EchelonBasis intersect_with_predicate(const EchelonBasis& basis,
                                      const std::function<bool(Word)>& allowed);

/// Ordered basis (not necessarily echelon) with tracked change of basis, so
/// coordinates can be taken against the vectors exactly as listed.
class CoordBasis {
 public:
  /// Throws std::invalid_argument if the vectors are dependent or mix
  /// bidegrees; r/s are inferred from the first vector.
  static CoordBasis build(const std::vector<FreeElement>& vecs);

  int dim() const { return static_cast<int>(vecs_.size()); }
  std::pair<int, int> bidegree() const { return ech_.bidegree(); }
  const FreeElement& vec(int i) const { return vecs_[static_cast<std::size_t>(i)]; }
  const EchelonBasis& echelon() const { return ech_; }

  std::optional<std::vector<RatFunc>> coordinates(const FreeElement& e) const;

 private:
  std::vector<FreeElement> vecs_;
  EchelonBasis ech_;
  Matrix to_user_;  // user coords = to_user_ * echelon coords
};

/// Matrix of a linear map against ordered direct sums of graded bases.
/// Entry [i][j] = coefficient of codomain vector i in f(domain vector j);
/// columns enumerate the domain. Images must be zero or homogeneous and lie
/// in the listed codomain (images landing in an absent bidegree must vanish).
struct BlockResult {
  Matrix m;
  bool ok = false;
  std::string error;
};

/// Non-owning view used to mix EchelonBasis / CoordBasis in direct sums.
struct BasisView {
  int dim;
  std::pair<int, int> bidegree;
  std::function<const FreeElement&(int)> vec;
  std::function<std::optional<std::vector<RatFunc>>(const FreeElement&)> coordinates;

  static BasisView of(const EchelonBasis& b);
  static BasisView of(const CoordBasis& b);
};

BlockResult graded_matrix(const std::function<FreeElement(const FreeElement&)>& f,
                          const std::vector<BasisView>& domain,
                          const std::vector<BasisView>& codomain);

// Small dense helpers over Q(q) used by spectral/kernel checks.
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_identity(int n);
/// a - lambda * I
Matrix mat_sub_scalar(const Matrix& a, const RatFunc& lambda);
int rank_of(const Matrix& m);
/// Basis of the right kernel {x : m x = 0}, deterministic (free columns in
/// ascending order, each normalized with a 1 in its free coordinate).
Matrix kernel_basis(const Matrix& m, int ncols);
/// Unique reduced row-echelon form of the row space of m; equal row spaces
/// give equal results, so subspace comparisons reduce to operator==.
Matrix row_space_rref(const Matrix& m, int ncols);

}  // namespace qsh
