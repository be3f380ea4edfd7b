#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsh/report.hpp"
#include "qsh/shuffle.hpp"

namespace qsh {

/// The seventeen basic maps on the free algebra:
///  - X, Y scale a word by q^(x-count) resp. q^(y-count); K = X^2 Y^-2.
///  - AstarL/BstarL delete a leading x/y (zero otherwise); AstarR/BstarR
///    delete a trailing x/y. All four kill the empty word.
///  - Aell/Bell shuffle-multiply by x/y on the left, Ar/Br on the right.
///  - Sigma exchanges letters, Dagger reverses words, Tau does both.
enum class Op {
  X, Xinv, Y, Yinv, K, Kinv,
  AstarL, BstarL, AstarR, BstarR,
  Aell, Bell, Ar, Br,
  Sigma, Dagger, Tau,
};

const char* op_name(Op op);
std::optional<Op> op_from_name(std::string_view name);

FreeElement apply_op(Op op, const FreeElement& e, Shuffler& sh);

/// Composition word applied right to left: apply_word({A,B}, e) = A(B(e)).
FreeElement apply_word(const std::vector<Op>& ops, const FreeElement& e, Shuffler& sh);

struct OpTerm {
  RatFunc coeff;
  std::vector<Op> ops;  // empty = identity
};
using OpExpr = std::vector<OpTerm>;

FreeElement apply_expr(const OpExpr& expr, const FreeElement& e, Shuffler& sh);

/// One relation "lhs = rhs" between operator expressions.
struct OpRelation {
  std::string text;  // source line, used in report names
  OpExpr lhs, rhs;
};

/// Parse a relation line. Grammar, whitespace-separated:
///   side     := '0' | term (('+'|'-') term)*
///   term     := [scalar '*'] opword
///   opword   := 'I' | opfactor+         (I = identity)
///   opfactor := opname ['^' uint]
/// where scalar uses the qfield grammar (no bare '*' inside; parenthesize).
/// Lines starting with '#' and blank lines yield nullopt.
std::optional<OpRelation> parse_relation_line(std::string_view line);

/// Parse a whole fixture stream; throws std::invalid_argument with the line
/// number on malformed input.
std::vector<OpRelation> parse_relations(std::istream& in);
std::vector<OpRelation> load_relations(const std::string& path);

/// Evaluate lhs - rhs on e; empty means the relation holds on e.
FreeElement relation_residual(const OpRelation& rel, const FreeElement& e, Shuffler& sh);

/// One CheckResult per relation, tested on every word of length <= maxlen
/// (including the empty word). Sweeps are parallelized over words.
Report check_relations_on_words(const std::string& title,
                                const std::vector<OpRelation>& rels, int maxlen,
                                Shuffler& sh, int threads);

/// One CheckResult per relation, tested on the given elements; labels name
/// the elements in failure details.
Report check_relations_on_elements(const std::string& title,
                                   const std::vector<OpRelation>& rels,
                                   const std::vector<FreeElement>& elems,
                                   const std::vector<std::string>& labels,
                                   Shuffler& sh, int threads);

/// Certificate that repeated left- (or right-) starred deletions reach the
/// span of the empty word: the maps applied (in application order) and the
/// final multiple of 1. ok is false only for e == 0.
struct ReachOne {
  bool ok = false;
  std::vector<Op> ops;
  RatFunc scalar;
};
ReachOne reach_one(const FreeElement& e, bool from_left);

}  // namespace qsh
