#pragma once

#include <vector>

#include "qsh/qfield.hpp"
#include "qsh/report.hpp"

namespace qsh {

/// Bivariate power series in (t, u) truncated by total degree <= cap.
/// Coefficients are exact integers; entries beyond the cap are discarded.
class BiSeries {
 public:
  explicit BiSeries(int cap);
  static BiSeries one(int cap);
  /// 1 / (1 - t^a u^b), truncated. Pre: a + b >= 1.
  static BiSeries geometric(int a, int b, int cap);

  int cap() const { return cap_; }
  const Int& coeff(int r, int s) const;
  void set(int r, int s, Int v);
  bool in_window(int r, int s) const { return r >= 0 && s >= 0 && r + s <= cap_; }

  BiSeries& operator*=(const BiSeries& o);
  friend BiSeries operator*(BiSeries a, const BiSeries& b) { return a *= b; }
  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  bool operator==(const BiSeries& o) const = default;

  /// Substitute (t,u) -> (u,t).
  BiSeries swapped() const;
  /// Set u = 1: returns coefficients of t^r for r <= cap (row sums).
  std::vector<Int> at_u_one() const;

 private:
  int cap_;
  std::vector<std::vector<Int>> c_;  // c_[r][s], r + s <= cap
  static const Int kZero;
};

/// Product over n >= 1 of 1/((1-t^n u^(n-1))(1-t^n u^n)(1-t^(n-1) u^n)):
/// the bigraded dimension series of the whole positive-part subalgebra.
BiSeries expand_phi(int cap);

/// Product over n >= 1 of 1/((1-t^n u^(n-1))(1-t^n u^n)(1-t^n u^(n+1))).
BiSeries expand_delta(int cap);

/// Coefficients of prod_{n>=1} 1/(1-t^n) up to degree cap (product route).
std::vector<Int> expand_p(int cap);

/// Partition counts via Euler's pentagonal-number recurrence; the independent
/// oracle for expand_p and for the graded dimension formula.
std::vector<Int> partition_numbers(int cap);

/// Coefficients of p(t)^3 up to degree cap: the row-stabilization values.
std::vector<Int> expand_mu(int cap);

/// Theta-like weight sum: sum over integer n of t^(n^2) u^(n^2-n), truncated.
BiSeries expand_phi_weight(int cap);

/// Coefficient table of p(t u) * (phi weight series): the graded dimension series of
/// the submodule generated by the empty word.
BiSeries bold_dimension_series(int cap);

/// Structural identities of the series window:
///   - Phi(t,u) = Phi(u,t);
///   - Delta(t,u) = Phi(t,u)(1-u) and Delta(u,t) = Phi(t,u)(1-t);
///   - all Delta coefficients nonnegative, hence the Phi table is weakly
///     increasing along rows and columns (checked directly as well);
///   - Delta(t,1) = p(t)^3 on rows complete inside the window;
///   - the product expansion of p agrees with the pentagonal recurrence.
Report check_delta_identities(int cap);

/// Row/column stabilization of the Phi table: a line counts as stabilized
/// when its last three in-window entries coincide and the matching Delta
/// entries vanish from there on; stabilized lines must equal the p(t)^3
/// coefficient. Non-stabilized lines are skipped with a notice.
Report check_max(int cap);

/// Compares dims[r][s] (r + s <= window) against the coefficients of
/// p(t u) * (phi weight series) entrywise.
Report check_bold_dimension_series(int window,
                                   const std::vector<std::vector<Int>>& dims);

}  // namespace qsh
