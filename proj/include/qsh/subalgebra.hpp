#pragma once

#include <map>
#include <vector>

#include "qsh/linalg.hpp"
#include "qsh/operators.hpp"
#include "qsh/shuffle.hpp"

namespace qsh {

/// Graded components of the subalgebra generated by x and y under the
/// shuffle product. Component (r, s) is built recursively as the span of
/// x * B(r-1, s) together with y * B(r, s-1) over the echelon bases B of the
/// smaller components; since every shuffle monomial in the letters starts
/// with an x- or y-multiplication, this spans the same subspace as the full
/// monomial set, and the reduced echelon form is the same either way.
class UCache {
 public:
  explicit UCache(Shuffler& sh) : sh_(sh) {}

  const EchelonBasis& component(int r, int s);
  int dim(int r, int s) { return component(r, s).dim(); }

  /// Zero or homogeneous e; true iff e lies in the component of its bidegree.
  bool member(const FreeElement& e);

  /// Direct route: echelonize all C(r+s, r) shuffle monomials of bidegree
  /// (r, s), enumerated in canonical order of their letter sequences.
  /// Exponential in r + s; kept as the cross-check oracle.
  EchelonBasis component_by_monomials(int r, int s);

  Shuffler& shuffler() { return sh_; }

 private:
  Shuffler& sh_;
  std::map<std::pair<int, int>, EchelonBasis> cache_;
  // Forward-echelon basis of each component: same span as the reduced
  // basis but far sparser, so the recursion shuffles these instead of the
  // (dense) reduced basis rows.
  std::map<std::pair<int, int>, std::vector<FreeElement>> gens_;
};

/// dims[r][s] for r + s <= maxtotal (ragged rows; row r has maxtotal-r+1
/// entries).
std::vector<std::vector<int>> dims_triangle(UCache& u, int maxtotal);

/// dims[r][s] for 0 <= r, s <= corner (full square; builds components of
/// total degree up to 2*corner).
std::vector<std::vector<int>> dims_corner(UCache& u, int corner);

/// Recursive spanning route and direct monomial route produce identical
/// echelon bases for every r + s <= maxtotal.
Report check_monomial_route(UCache& u, int maxtotal);

/// The four starred deletion maps send each component into the component one
/// matching letter down, for all r + s <= maxtotal.
Report check_starred_closure(UCache& u, int maxtotal);

/// Left/right shuffle multiplications by a letter send each component into
/// the raised component, for all r + s < maxtotal.
Report check_raising_closure(UCache& u, int maxtotal);

/// X, Y, K act on component (r, s) by q^r, q^s, q^(2r-2s).
Report check_grading_eigenvalues(UCache& u, int maxtotal);

/// The letter swap, reversal, and their composition map the basis of (r, s)
/// into the component of the image bidegree.
Report check_symmetry_closure(UCache& u, int maxtotal);

}  // namespace qsh
