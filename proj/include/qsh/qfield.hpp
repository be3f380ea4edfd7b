#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsh {

using Int = mpz_class;

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Canonical form: terms sorted by ascending exponent, no zero coefficients.
/// Two values are equal iff their term lists are identical.
class LaurentPoly {
 public:
  using Term = std::pair<int, Int>;  // (exponent, coefficient)

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor) scalar embed
  explicit LaurentPoly(Int c);

  /// c * q^e
  static LaurentPoly q_power(int e, Int c = Int(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Single term c*q^e?
  bool is_monomial() const { return terms_.size() == 1; }

  /// Lowest/highest exponent. Pre: !is_zero().
  int lo_exp() const;
  int hi_exp() const;

  const std::vector<Term>& terms() const { return terms_; }
  /// Coefficient of q^e (zero if absent).
  Int coeff(int e) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  /// In-place a += b * (c * q^e). Fused hot-path op.
  void add_scaled(const LaurentPoly& b, const Int& c, int e);

  /// Append a nonzero term whose exponent exceeds hi_exp(). Pre: ascending.
  void append_term(int e, Int c);

  /// Multiply by c * q^e in place.
  void scale(const Int& c, int e);

  /// gcd of the integer coefficients, always > 0. Pre: !is_zero().
  Int int_content() const;

  /// Exact division by d; throws std::domain_error if not exact.
  LaurentPoly div_exact(const LaurentPoly& d) const;

  /// Laurent gcd, normalized: lowest exponent 0, primitive over Z,
  /// positive lowest coefficient. gcd(0,b) = normalized b.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  /// Value at q = 1.
  Int eval_one() const;

  /// Substitute q -> q^-1 (exponent negation).
  LaurentPoly bar() const;

  /// Canonical text form, descending exponents: "q^2 + 1 + q^-2", "-2*q^3 + q".
  std::string str() const;

  /// Total order (for use as map key); refines equality.
  bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

 private:
  std::vector<Term> terms_;
  void trim();
  friend class RatFunc;
};

/// q-integer [n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n); [0]_q = 0.
/// Negative n gives -[(-n)]_q.
LaurentPoly qint(int n);

/// Rational function in q over the integers, kept in canonical form:
///  - num/den reduced by their polynomial gcd,
///  - den has lowest exponent 0 and positive lowest coefficient,
///  - gcd(int_content(num), int_content(den)) = 1,
///  - zero is 0/1.
/// Equality of values is equality of representations.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1L) {}
  RatFunc(long c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly n);                 // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly n, LaurentPoly d);  // throws std::domain_error if d == 0

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when den == 1, i.e. the value is a Laurent polynomial.
  bool is_laurent() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc inv() const;  // throws std::domain_error on zero
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator<(const RatFunc& o) const;

  /// Deterministic sign used when joining printed terms: sign of the
  /// lowest-exponent numerator coefficient (0 for zero).
  int print_sign() const;

  /// Canonical text form: Laurent form when den == 1, else "(num)/(den)".
  std::string str() const;

  /// Pretty form folding q-integer shapes: "[3]_q", "2*[2]_q", "[2]_q^2",
  /// "[2]_q*[3]_q", "[3]_q^2*[4]_q". Falls back to str(). Parses back.
  std::string pretty() const;

 private:
  LaurentPoly num_, den_;
  void normalize();
};

/// Parse the scalar grammar:
///   ratfunc := sum ('/' sum)?
///   sum     := ['+'|'-'] product (('+'|'-') product)*
///   product := factor ('*' factor)*
///   factor  := atom ('^' int)?
///   atom    := uint | 'q' | '[' int ']' ['_q'] | '(' sum ')'
/// Whitespace is insignificant. Throws std::invalid_argument on bad input.
RatFunc parse_scalar(std::string_view s);

/// Prefix-parsing variant used by element/relation parsers: consumes a scalar
/// starting at s[pos], leaves pos one past its end.
RatFunc parse_scalar_prefix(std::string_view s, std::size_t& pos);

}  // namespace qsh
