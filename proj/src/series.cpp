#include "qsh/series.hpp"

#include <cassert>
#include <sstream>

namespace qsh {

const Int BiSeries::kZero = 0;

BiSeries::BiSeries(int cap) : cap_(cap) {
  assert(cap >= 0);
  c_.resize(cap_ + 1);
  for (int r = 0; r <= cap_; ++r) c_[r].assign(cap_ - r + 1, Int(0));
}

BiSeries BiSeries::one(int cap) {
  BiSeries s(cap);
  s.c_[0][0] = 1;
  return s;
}

BiSeries BiSeries::geometric(int a, int b, int cap) {
  assert(a >= 0 && b >= 0 && a + b >= 1);
  BiSeries s = one(cap);
  for (int k = 1; k * (a + b) <= cap; ++k) s.c_[k * a][k * b] = 1;
  return s;
}

const Int& BiSeries::coeff(int r, int s) const {
  if (!in_window(r, s)) return kZero;
  return c_[r][s];
}

void BiSeries::set(int r, int s, Int v) {
  assert(in_window(r, s));
  c_[r][s] = std::move(v);
}

BiSeries& BiSeries::operator*=(const BiSeries& o) {
  assert(cap_ == o.cap_);
  BiSeries out(cap_);
  for (int r1 = 0; r1 <= cap_; ++r1) {
    for (int s1 = 0; s1 + r1 <= cap_; ++s1) {
      const Int& a = c_[r1][s1];
      if (a == 0) continue;
      for (int r2 = 0; r1 + r2 <= cap_; ++r2) {
        for (int s2 = 0; r1 + s1 + r2 + s2 <= cap_; ++s2) {
          const Int& b = o.c_[r2][s2];
          if (b == 0) continue;
          out.c_[r1 + r2][s1 + s2] += a * b;
        }
      }
    }
  }
  *this = std::move(out);
  return *this;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  assert(cap_ == o.cap_);
  for (int r = 0; r <= cap_; ++r)
    for (int s = 0; s + r <= cap_; ++s) c_[r][s] += o.c_[r][s];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  assert(cap_ == o.cap_);
  for (int r = 0; r <= cap_; ++r)
    for (int s = 0; s + r <= cap_; ++s) c_[r][s] -= o.c_[r][s];
  return *this;
}

BiSeries BiSeries::swapped() const {
  BiSeries out(cap_);
  for (int r = 0; r <= cap_; ++r)
    for (int s = 0; s + r <= cap_; ++s) out.c_[s][r] = c_[r][s];
  return out;
}

std::vector<Int> BiSeries::at_u_one() const {
  std::vector<Int> sums(cap_ + 1, Int(0));
  for (int r = 0; r <= cap_; ++r)
    for (int s = 0; s + r <= cap_; ++s) sums[r] += c_[r][s];
  return sums;
}

BiSeries expand_phi(int cap) {
  BiSeries s = BiSeries::one(cap);
  // Factor group n first contributes at total degree 2n - 1 (from t^n u^(n-1)).
  for (int n = 1; 2 * n - 1 <= cap; ++n) {
    s *= BiSeries::geometric(n, n - 1, cap);
    s *= BiSeries::geometric(n, n, cap);
    s *= BiSeries::geometric(n - 1, n, cap);
  }
  return s;
}

BiSeries expand_delta(int cap) {
  BiSeries s = BiSeries::one(cap);
  for (int n = 1; 2 * n - 1 <= cap; ++n) {
    s *= BiSeries::geometric(n, n - 1, cap);
    s *= BiSeries::geometric(n, n, cap);
    s *= BiSeries::geometric(n, n + 1, cap);
  }
  return s;
}

std::vector<Int> expand_p(int cap) {
  // Product route: multiply the geometric series for each part size in turn.
  std::vector<Int> p(cap + 1, Int(0));
  p[0] = 1;
  for (int n = 1; n <= cap; ++n)
    for (int j = n; j <= cap; ++j) p[j] += p[j - n];
  return p;
}

std::vector<Int> partition_numbers(int cap) {
  // Independent route: Euler's pentagonal-number recurrence.
  std::vector<Int> p(cap + 1, Int(0));
  p[0] = 1;
  for (int n = 1; n <= cap; ++n) {
    Int acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      if (k % 2 == 1) {
        acc += p[n - g1];
        if (g2 <= n) acc += p[n - g2];
      } else {
        acc -= p[n - g1];
        if (g2 <= n) acc -= p[n - g2];
      }
    }
    p[n] = acc;
  }
  return p;
}

std::vector<Int> expand_mu(int cap) {
  const std::vector<Int> p = expand_p(cap);
  std::vector<Int> sq(cap + 1, Int(0)), cube(cap + 1, Int(0));
  for (int i = 0; i <= cap; ++i)
    for (int j = 0; i + j <= cap; ++j) sq[i + j] += p[i] * p[j];
  for (int i = 0; i <= cap; ++i)
    for (int j = 0; i + j <= cap; ++j) cube[i + j] += sq[i] * p[j];
  return cube;
}

BiSeries expand_phi_weight(int cap) {
  BiSeries s(cap);
  for (int n = 0; n * n <= cap; ++n) {
    // n and -n give exponent pairs (n^2, n^2 - n) and (n^2, n^2 + n).
    if (s.in_window(n * n, n * n - n)) {
      s.set(n * n, n * n - n, s.coeff(n * n, n * n - n) + 1);
    }
    if (n > 0 && s.in_window(n * n, n * n + n)) {
      s.set(n * n, n * n + n, s.coeff(n * n, n * n + n) + 1);
    }
  }
  return s;
}

BiSeries bold_dimension_series(int cap) {
  BiSeries ptu(cap);
  const std::vector<Int> p = expand_p(cap);
  for (int k = 0; 2 * k <= cap; ++k) ptu.set(k, k, p[k]);
  return ptu * expand_phi_weight(cap);
}

namespace {

std::string first_mismatch(const BiSeries& a, const BiSeries& b) {
  for (int r = 0; r <= a.cap(); ++r) {
    for (int s = 0; s + r <= a.cap(); ++s) {
      if (a.coeff(r, s) != b.coeff(r, s)) {
        std::ostringstream os;
        os << "first mismatch at (t^" << r << ", u^" << s
           << "): " << a.coeff(r, s).get_str() << " vs "
           << b.coeff(r, s).get_str();
        return os.str();
      }
    }
  }
  return "";
}

}  // namespace

Report check_delta_identities(int cap) {
  Report rep{"series-identities (total degree <= " + std::to_string(cap) + ")"};
  const BiSeries phi = expand_phi(cap);
  const BiSeries delta = expand_delta(cap);

  BiSeries one_minus_u(cap);
  one_minus_u.set(0, 0, 1);
  if (one_minus_u.in_window(0, 1)) one_minus_u.set(0, 1, -1);
  BiSeries one_minus_t(cap);
  one_minus_t.set(0, 0, 1);
  if (one_minus_t.in_window(1, 0)) one_minus_t.set(1, 0, -1);

  {
    const std::string why = first_mismatch(phi, phi.swapped());
    rep.add("phi(t,u) = phi(u,t)", why.empty(), why);
  }
  {
    const std::string why = first_mismatch(delta, phi * one_minus_u);
    rep.add("delta(t,u) = phi(t,u) * (1 - u)", why.empty(), why);
  }
  {
    const std::string why = first_mismatch(delta.swapped(), phi * one_minus_t);
    rep.add("delta(u,t) = phi(t,u) * (1 - t)", why.empty(), why);
  }
  {
    bool ok = true;
    std::string why;
    for (int r = 0; ok && r <= cap; ++r) {
      for (int s = 0; ok && s + r <= cap; ++s) {
        if (delta.coeff(r, s) < 0) {
          ok = false;
          why = "negative delta coefficient at (t^" + std::to_string(r) +
                ", u^" + std::to_string(s) + ")";
        }
      }
    }
    rep.add("delta coefficients nonnegative", ok, why);
  }
  {
    bool ok = true;
    std::string why;
    for (int r = 0; ok && r <= cap; ++r) {
      for (int s = 0; ok && s + r <= cap; ++s) {
        if (s >= 1 && phi.coeff(r, s - 1) > phi.coeff(r, s)) {
          ok = false;
          why = "row " + std::to_string(r) + " decreases at u^" +
                std::to_string(s);
        }
        if (r >= 1 && phi.coeff(r - 1, s) > phi.coeff(r, s)) {
          ok = false;
          why = "column " + std::to_string(s) + " decreases at t^" +
                std::to_string(r);
        }
      }
    }
    rep.add("phi table weakly increasing along rows and columns", ok, why);
  }
  {
    // Row r of delta is complete inside the window once 2r <= cap - r, so the
    // u = 1 specialization is exact for r <= cap / 3.
    const std::vector<Int> row_sums = delta.at_u_one();
    const std::vector<Int> mu = expand_mu(cap);
    bool ok = true;
    std::string why;
    int rows = 0;
    for (int r = 0; 3 * r <= cap; ++r, ++rows) {
      if (row_sums[r] != mu[r]) {
        ok = false;
        std::ostringstream os;
        os << "row " << r << ": " << row_sums[r].get_str() << " vs p(t)^3 coeff "
           << mu[r].get_str();
        why = os.str();
        break;
      }
    }
    if (ok) why = "rows 0.." + std::to_string(rows - 1) + " agree";
    rep.add("delta(t,1) = p(t)^3", ok, why);
  }
  {
    const bool ok = expand_p(cap) == partition_numbers(cap);
    rep.add("p(t) product expansion = pentagonal recurrence", ok,
            ok ? "degrees 0.." + std::to_string(cap) : "sequence mismatch");
  }
  return rep;
}

namespace {

// Shared by the row and column passes; `phi` rows are scanned, `delta` holds
// the successive differences of those rows.
void stabilization_pass(const BiSeries& phi, const BiSeries& delta,
                        const std::vector<Int>& mu, const char* what,
                        Report& rep) {
  const int cap = phi.cap();
  bool ok = true;
  std::string why;
  int verified = 0, skipped = 0;
  for (int r = 0; r <= cap; ++r) {
    const int smax = cap - r;
    // Detector: the last three in-window entries coincide and the matching
    // delta entries (= successive differences) vanish. Lines of delta carry
    // second-index degree at most 2r, so once the window reaches past 2r the
    // tail is provably constant; shorter lines are skipped.
    bool stabilized = smax >= 2 && smax >= 2 * r &&
                      phi.coeff(r, smax) == phi.coeff(r, smax - 1) &&
                      phi.coeff(r, smax - 1) == phi.coeff(r, smax - 2);
    for (int s = smax - 2; stabilized && s <= smax; ++s)
      stabilized = delta.coeff(r, s) == 0;
    if (!stabilized) {
      ++skipped;
      continue;
    }
    ++verified;
    for (int s = 2 * r; s <= smax && ok; ++s) {
      if (phi.coeff(r, s) != mu[r]) {
        ok = false;
        std::ostringstream os;
        os << what << " " << r << " entry " << s << ": "
           << phi.coeff(r, s).get_str() << " vs p(t)^3 coeff "
           << mu[r].get_str();
        why = os.str();
      }
    }
  }
  if (ok) {
    why = std::to_string(verified) + " stabilized and match p(t)^3; " +
          std::to_string(skipped) + " skipped (window too short)";
  }
  rep.add(std::string("stabilized phi ") + what + "s equal p(t)^3 coefficients",
          ok, why);
}

}  // namespace

Report check_max(int cap) {
  Report rep{"phi-stabilization (total degree <= " + std::to_string(cap) + ")"};
  const BiSeries phi = expand_phi(cap);
  const BiSeries delta = expand_delta(cap);
  const std::vector<Int> mu = expand_mu(cap);
  stabilization_pass(phi, delta, mu, "row", rep);
  // Columns of phi are rows of the swap. The differences down column r are
  // phi[s][r] - phi[s-1][r], and delta(u,t) = phi(t,u)(1-t) identifies these
  // with the row-r entries of delta itself.
  stabilization_pass(phi.swapped(), delta, mu, "column", rep);
  return rep;
}

Report check_bold_dimension_series(int window,
                                   const std::vector<std::vector<Int>>& dims) {
  Report rep{"bold-dimension-series (total degree <= " +
             std::to_string(window) + ")"};
  const BiSeries want = bold_dimension_series(window);
  bool ok = true;
  std::string why;
  for (int r = 0; ok && r <= window; ++r) {
    for (int s = 0; ok && s + r <= window; ++s) {
      const Int got = dims[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
      if (got != want.coeff(r, s)) {
        ok = false;
        std::ostringstream os;
        os << "(r,s) = (" << r << "," << s << "): dim " << got.get_str()
           << " vs series coefficient " << want.coeff(r, s).get_str();
        why = os.str();
      }
    }
  }
  if (ok)
    why = "all " + std::to_string((window + 1) * (window + 2) / 2) +
          " window entries agree with p(tu)*phi(t,u)";
  rep.add("dim table = p(tu) * phi(t,u) coefficients", ok, why);
  return rep;
}

}  // namespace qsh
