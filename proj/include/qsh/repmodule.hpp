#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsh/linalg.hpp"
#include "qsh/operators.hpp"
#include "qsh/report.hpp"
#include "qsh/subalgebra.hpp"

namespace qsh {

/// Chevalley-style generators of the level-one presentation that acts on the
/// shuffle-algebra submodule: raising/lowering pairs for the two nodes, the
/// Cartan elements with inverses, and the degree operator with inverse.
enum class Gen { E0, F0, K0, K0inv, E1, F1, K1, K1inv, D, Dinv };
inline constexpr int kNumGens = 10;
extern const std::array<Gen, kNumGens> kAllGens;

const char* gen_name(Gen g);
std::optional<Gen> gen_from_name(std::string_view name);

/// One module structure on the shuffle algebra: every generator expands to a
/// shuffle-operator expression, acts homogeneously with the stated bidegree
/// shift, and (for tables 1..3) is intertwined with table 0 by the recorded
/// twist map.
struct ActionTable {
  std::string name;
  std::array<OpExpr, kNumGens> expr;
  std::array<std::pair<int, int>, kNumGens> shift;
  std::optional<Op> twist;  // intertwiner carrying table 0 to this table
};

inline constexpr int kNumActionTables = 4;
/// Table 0 is the principal structure; tables 1..3 are its twists by the
/// letter-exchange, reversal, and combined symmetries.
const ActionTable& action_table(int variant);

FreeElement act(int variant, Gen g, const FreeElement& e, Shuffler& sh);
/// Generators compose right to left: act_seq({a, b}, e) = a(b(e)).
FreeElement act_seq(int variant, const std::vector<Gen>& gens,
                    const FreeElement& e, Shuffler& sh);

/// Formal polynomial in the generators, used to state defining relations.
struct GenTerm {
  RatFunc coeff;
  std::vector<Gen> gens;  // applied right to left; empty = identity
};
using GenExpr = std::vector<GenTerm>;

struct GenRelation {
  std::string text;
  GenExpr lhs, rhs;
};

/// Defining relations of the presentation: inverse pairs, Cartan
/// commutations, Cartan conjugation of E/F, degree-operator conjugations,
/// E-F commutators, and the q-Serre relations among the E's and the F's.
std::vector<GenRelation> presentation_relations();

FreeElement gen_expr_apply(int variant, const GenExpr& expr,
                           const FreeElement& e, Shuffler& sh);

/// Every presentation relation on every basis vector of every graded
/// component with r + s <= window, under the given action table.
Report verify_presentation(UCache& u, int window, int variant);

/// verify_presentation for the variant plus, for variants 1..3, the
/// intertwiner identity twist(g . v) = g' . twist(v) on the same window
/// (g acting by table 0 on the left, by the variant table on the right).
Report variant_action_check(UCache& u, int window, int variant);

/// Words allowed in the submodule generated by the empty word: the empty
/// word, the single letter x, and any word beginning xy (equivalently, no
/// leading y and no leading xx).
bool bold_allowed_word(Word w);

/// Graded piece of that submodule, cut out of the ambient component as the
/// subspace supported on allowed words.
EchelonBasis bold_u_by_intersection(UCache& u, int r, int s);

enum class BoldRoute { intersection, generation };

/// Cache of the submodule's graded pieces keyed by bidegree. The default
/// route intersects ambient components on demand; the generation route is
/// precomputed by iterated closure and serves only the region it filled.
class BoldUCache {
 public:
  explicit BoldUCache(UCache& u);
  static BoldUCache from_generation(UCache& u, int window, int margin = 2);

  BoldRoute route() const { return route_; }
  /// Throws std::out_of_range outside a generation-route region.
  const EchelonBasis& component(int r, int s);
  int dim(int r, int s);
  bool member(const FreeElement& e);
  UCache& ambient() { return u_; }

 private:
  UCache& u_;
  BoldRoute route_ = BoldRoute::intersection;
  int window_ = -1;  // generation route: filled region r + s <= window_
  std::map<std::pair<int, int>, EchelonBasis> cache_;
};

/// Iterated closure from the empty word under E0, E1, F0, F1 of table 0:
/// adopted vectors are queued breadth-first and their images echelonized
/// into target components until nothing new appears inside the working
/// region r + s <= window + margin. Components with r + s <= window are
/// returned. Throws std::runtime_error if the closure fails to stabilize
/// within the iteration bound (it cannot, short of a defect).
std::map<std::pair<int, int>, EchelonBasis> bold_u_by_generation(
    Shuffler& sh, int window, int margin = 2);

/// Intersection and generation routes produce identical echelon bases on
/// every bidegree with r + s <= window.
Report check_bold_routes(UCache& u, int window);

/// Dimension of the (r, s) piece equals p_{r-(r-s)^2} when r >= (r-s)^2 and
/// 0 otherwise, with partition numbers from the recurrence oracle, over the
/// triangle r + s <= window and the square 0 <= r, s <= corner; the 7 x 7
/// corner is also compared against the frozen reference table.
Report check_bold_dimensions(BoldUCache& bold, int window, int corner = 6);

/// The empty word is a highest-weight vector: K0 1 = q 1, K1 1 = 1, D 1 = 1,
/// E0 1 = 0, F0^2 1 = 0, E1 1 = 0, F1 1 = 0, and F0 1 = x is nonzero.
Report highest_weight_check(Shuffler& sh);

/// On every ambient and submodule basis vector of bidegree (r, s) in the
/// window: K0 acts by q^{2s-2r+1}, K1 by q^{2r-2s}, D by q^{-r}; E/F images
/// land in the shifted components and have Laurent coefficients.
Report weight_eigenvalue_check(UCache& u, BoldUCache& bold, int window);

/// F0^k(xx) and F1^k(y) stay nonzero for all k <= n, while on every
/// submodule basis vector with r + s <= window each of E0, E1, F0, F1
/// iterates to zero; the vanishing orders are reported.
Report nonnilpotence_witness(UCache& u, BoldUCache& bold, int n, int window);

/// Repeated right-delete maps carry every nonzero submodule basis vector
/// back to a multiple of the empty word (r + s <= window).
Report generation_reach_check(BoldUCache& bold, int window);

/// Random elements supported on allowed words (not required to lie in the
/// ambient subalgebra) keep allowed support under X, Y, K and their
/// inverses, the right delete maps, and the two table-0 F expressions.
Report invariant_space_closure_check(Shuffler& sh, int window, int trials,
                                     unsigned seed);

/// Golden basis tables keyed by bidegree, vectors in file order.
using GradedVectorTable = std::map<std::pair<int, int>, std::vector<FreeElement>>;

/// Parse a fixture of graded vectors: '@ r s' headers, one element per
/// line, '#' comments. Throws std::runtime_error on malformed input.
GradedVectorTable load_vector_table(const std::string& path);

/// Each fixture vector lies in the ambient component, is supported on
/// allowed words, and each (r, s) batch is independent of cardinality equal
/// to the computed submodule dimension - hence a basis of the (r, s) piece.
Report verify_appendix_c(const GradedVectorTable& table, UCache& u);

/// One displayed matrix block: a generator against ordered direct sums of
/// fixture bases. Diagonal displays have equal from/to lists.
struct MatrixFixture {
  std::string gen;
  std::vector<std::pair<int, int>> from;
  std::vector<std::pair<int, int>> to;
  Matrix entries;
};

/// Parse a fixture of matrix blocks: '@ GEN from r,s[+r,s...] to
/// r,s[+r,s...]' headers, one comma-separated row per line, '#' comments.
std::vector<MatrixFixture> load_matrix_table(const std::string& path);

/// Every block reproduces the table-0 action matrix entrywise against the
/// golden bases taken in listed order.
Report verify_appendix_d(const std::vector<MatrixFixture>& blocks,
                         const GradedVectorTable& table, UCache& u);

/// Ladder structure of the two Weyl-like pairs (left x-delete with left
/// x-multiply, left y-delete with left y-multiply) on graded blocks with
/// r + s <= window: the raising map is injective, the lowering map is
/// surjective, ST - q^2 TS = I holds blockwise, the eigen-kernels
/// V_n = ker(ST - q^n [n+1]_q I) = ker(TS - q^{n-1} [n]_q I) decompose each
/// component, and ker(S^{n+1}) = V_0 + ... + V_n on every truncation.
Report check_appendix_e(UCache& u, int window);

}  // namespace qsh
