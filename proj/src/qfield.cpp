#include "qsh/qfield.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qsh {

namespace {

// Dense polynomial over Z with ascending coefficients, c[0] = constant term.
// Helper representation for gcd / exact division; callers keep it trimmed.
using ZPoly = std::vector<Int>;

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Int zcontent(const ZPoly& p) {
  Int g = 0;
  for (const Int& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;  // 0 only for the zero polynomial
}

void zdiv_int(ZPoly& p, const Int& d) {
  for (Int& c : p) {
    Int r;
    mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    if (r != 0) throw std::domain_error("non-exact integer division in polynomial");
  }
}

// Primitive part with positive leading coefficient.
void zprimitive(ZPoly& p) {
  if (p.empty()) return;
  Int c = zcontent(p);
  if (p.back() < 0) c = -c;
  if (c != 1) zdiv_int(p, c);
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0): lc(b)^(da-db+1) * a mod b.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  const int db = zdeg(b);
  const Int& lb = b.back();
  while (zdeg(a) >= db) {
    const int da = zdeg(a);
    Int la = a.back();
    for (Int& c : a) c *= lb;
    // subtract la * x^(da-db) * b
    for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    ztrim(a);
    if (a.empty()) break;
  }
  return a;
}

// gcd over Z via primitive PRS; result primitive with positive leading coeff.
ZPoly zgcd(ZPoly a, ZPoly b) {
  ztrim(a);
  ztrim(b);
  if (a.empty()) {
    zprimitive(b);
    return b;
  }
  if (b.empty()) {
    zprimitive(a);
    return a;
  }
  zprimitive(a);
  zprimitive(b);
  if (zdeg(a) < zdeg(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = zprem(a, b);
    zprimitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Exact division a / b over Z; throws if not exact.
ZPoly zdiv_exact(ZPoly a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  ZPoly q(std::max<std::size_t>(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0), Int(0));
  const int db = zdeg(b);
  const Int& lb = b.back();
  while (zdeg(a) >= db && !a.empty()) {
    const int da = zdeg(a);
    Int qc, r;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    if (r != 0) throw std::domain_error("non-exact polynomial division");
    q[da - db] = qc;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= qc * b[i];
    ztrim(a);
  }
  if (!a.empty()) throw std::domain_error("non-exact polynomial division");
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace_back(0, Int(c));
}

LaurentPoly::LaurentPoly(Int c) {
  if (c != 0) terms_.emplace_back(0, std::move(c));
}

LaurentPoly LaurentPoly::q_power(int e, Int c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(e, std::move(c));
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

int LaurentPoly::lo_exp() const {
  if (is_zero()) throw std::domain_error("lo_exp of zero");
  return terms_.front().first;
}

int LaurentPoly::hi_exp() const {
  if (is_zero()) throw std::domain_error("hi_exp of zero");
  return terms_.back().first;
}

Int LaurentPoly::coeff(int e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return Int(0);
}

void LaurentPoly::trim() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) { return t.second == 0; }),
               terms_.end());
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.cbegin();
  while (a != terms_.end() && b != o.terms_.cend()) {
    if (a->first < b->first) {
      out.push_back(std::move(*a));
      ++a;
    } else if (b->first < a->first) {
      out.push_back(*b++);
    } else {
      Int c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  out.insert(out.end(), b, o.terms_.cend());
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, Int(-1), 0);
  return *this;
}

void LaurentPoly::add_scaled(const LaurentPoly& b, const Int& c, int e) {
  if (b.is_zero() || c == 0) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  auto p = terms_.begin();
  auto r = b.terms_.begin();
  while (p != terms_.end() && r != b.terms_.end()) {
    const int re = r->first + e;
    if (p->first < re) {
      out.push_back(std::move(*p));
      ++p;
    } else if (re < p->first) {
      out.emplace_back(re, r->second * c);
      ++r;
    } else {
      Int v = p->second;
      v += r->second * c;
      if (v != 0) out.emplace_back(p->first, std::move(v));
      ++p;
      ++r;
    }
  }
  for (; p != terms_.end(); ++p) out.push_back(std::move(*p));
  for (; r != b.terms_.end(); ++r) out.emplace_back(r->first + e, r->second * c);
  terms_ = std::move(out);
}

void LaurentPoly::append_term(int e, Int c) {
  assert(terms_.empty() || terms_.back().first < e);
  assert(c != 0);
  terms_.emplace_back(e, std::move(c));
}

void LaurentPoly::scale(const Int& c, int e) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) {
    t.first += e;
    if (c != 1) t.second *= c;
  }
}

namespace {

// All coefficients fit comfortably in a machine word?
bool word_sized(const LaurentPoly& p) {
  constexpr long kBound = 1L << 31;
  for (const auto& t : p.terms()) {
    if (!mpz_fits_slong_p(t.second.get_mpz_t())) return false;
    const long v = mpz_get_si(t.second.get_mpz_t());
    if (v >= kBound || v <= -kBound) return false;
  }
  return true;
}

Int int_from_i128(__int128 v) {
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max())
    return Int(static_cast<long>(v));
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                            : static_cast<unsigned __int128>(v);
  Int r(static_cast<unsigned long>(u >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(u);
  return neg ? Int(-r) : r;
}

}  // namespace

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.is_monomial()) {
    r = b;
    r.scale(a.terms()[0].second, a.terms()[0].first);
    return r;
  }
  if (b.is_monomial()) {
    r = a;
    r.scale(b.terms()[0].second, b.terms()[0].first);
    return r;
  }
  // dense accumulation over the combined exponent range
  const int lo = a.lo_exp() + b.lo_exp();
  const int hi = a.hi_exp() + b.hi_exp();
  const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  if (word_sized(a) && word_sized(b)) {
    // machine-word path: |products| < 2^62, so a 128-bit accumulator has
    // dozens of bits of headroom over any realistic number of summands
    std::vector<__int128> acc(width, 0);
    std::vector<std::pair<int, long>> bw;
    bw.reserve(b.terms().size());
    for (const auto& tb : b.terms())
      bw.emplace_back(tb.first - lo, mpz_get_si(tb.second.get_mpz_t()));
    for (const auto& ta : a.terms()) {
      const long ca = mpz_get_si(ta.second.get_mpz_t());
      for (const auto& [eb, cb] : bw)
        acc[static_cast<std::size_t>(ta.first + eb)] +=
            static_cast<__int128>(ca) * cb;
    }
    for (int e = lo; e <= hi; ++e) {
      const __int128 c = acc[static_cast<std::size_t>(e - lo)];
      if (c != 0) r.append_term(e, int_from_i128(c));
    }
    return r;
  }
  std::vector<Int> acc(width, Int(0));
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      acc[static_cast<std::size_t>(ta.first + tb.first - lo)] += ta.second * tb.second;
  for (int e = lo; e <= hi; ++e) {
    Int& c = acc[static_cast<std::size_t>(e - lo)];
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

Int LaurentPoly::int_content() const {
  if (is_zero()) throw std::domain_error("content of zero");
  Int g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

// Laurent -> (shift, dense ordinary poly with nonzero constant term)
std::pair<int, ZPoly> to_zpoly(const LaurentPoly& p) {
  const int lo = p.lo_exp();
  ZPoly z(static_cast<std::size_t>(p.hi_exp() - lo + 1), Int(0));
  for (const auto& t : p.terms()) z[static_cast<std::size_t>(t.first - lo)] = t.second;
  return {lo, z};
}

LaurentPoly from_zpoly(const ZPoly& z, int shift) {
  // exponents ascend, so the terms can be appended directly
  LaurentPoly p;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] != 0) p.append_term(static_cast<int>(i) + shift, z[i]);
  return p;
}

}  // namespace

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  if (d.is_monomial()) {
    LaurentPoly r = *this;
    const Int& c = d.terms()[0].second;
    for (auto& t : r.terms_) {
      t.first -= d.terms()[0].first;
      if (c != 1) {
        Int rem;
        mpz_tdiv_qr(t.second.get_mpz_t(), rem.get_mpz_t(), t.second.get_mpz_t(),
                    c.get_mpz_t());
        if (rem != 0) throw std::domain_error("non-exact polynomial division");
      }
    }
    return r;
  }
  auto [sa, za] = to_zpoly(*this);
  auto [sd, zd] = to_zpoly(d);
  ZPoly q = zdiv_exact(std::move(za), zd);
  return from_zpoly(q, sa - sd);
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  auto norm = [](const LaurentPoly& p) {
    auto [s, z] = to_zpoly(p);
    (void)s;
    Int c = zcontent(z);
    if (z[0] < 0) c = -c;  // positive lowest coefficient
    if (c != 1) zdiv_int(z, c);
    return from_zpoly(z, 0);
  };
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return norm(b);
  if (b.is_zero()) return norm(a);
  auto [sa, za] = to_zpoly(a);
  auto [sb, zb] = to_zpoly(b);
  (void)sa;
  (void)sb;
  ZPoly g = zgcd(std::move(za), std::move(zb));
  if (g[0] < 0) {  // zgcd normalizes the leading coeff; we pin the lowest
    for (Int& c : g) c = -c;
  }
  return from_zpoly(g, 0);
}

Int LaurentPoly::eval_one() const {
  Int s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.emplace_back(-it->first, it->second);
  return r;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Int& c = it->second;
    const bool neg = c < 0;
    Int a = neg ? Int(-c) : c;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const int e = it->first;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << 'q';
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

LaurentPoly qint(int n) {
  if (n < 0) return -qint(-n);
  LaurentPoly p;
  for (int k = 0; k < n; ++k) p += LaurentPoly::q_power(n - 1 - 2 * k);
  return p;
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(LaurentPoly n) : num_(std::move(n)), den_(1L) { normalize(); }

RatFunc::RatFunc(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1L);
    return;
  }
  // Push the Laurent shift entirely into num; den becomes ordinary with
  // nonzero constant term.
  const int shift = den_.lo_exp();
  den_.scale(Int(1), -shift);
  num_.scale(Int(1), -shift);
  if (!den_.is_one()) {
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (!g.is_one()) {
      // gcd is normalized to lowest exponent 0; dividing keeps den ordinary.
      num_ = num_.div_exact(g);
      den_ = den_.div_exact(g);
      const int s2 = den_.lo_exp();
      if (s2 != 0) {
        den_.scale(Int(1), -s2);
        num_.scale(Int(1), -s2);
      }
    }
  }
  Int cn = num_.int_content();
  Int cd = den_.int_content();
  Int g;
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cn.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cd.get_mpz_t());
  if (g > 1) {
    num_ = num_.div_exact(LaurentPoly(g));
    den_ = den_.div_exact(LaurentPoly(g));
  }
  if (den_.terms().front().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = -o;
  if (den_ == o.den_) {
    num_ -= o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

bool RatFunc::operator<(const RatFunc& o) const {
  if (num_ < o.num_) return true;
  if (o.num_ < num_) return false;
  return den_ < o.den_;
}

int RatFunc::print_sign() const {
  if (is_zero()) return 0;
  return num_.terms().front().second < 0 ? -1 : 1;
}

std::string RatFunc::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

// Bounded recognition of q-integer product shapes for pretty output.
std::string try_fold_qint(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  if (p.terms().size() == 1 && p.terms()[0].first == 0)
    return p.terms()[0].second.get_str();
  constexpr int kMaxN = 24;
  for (int n = 2; n <= kMaxN; ++n)
    if (p == qint(n)) return "[" + std::to_string(n) + "]_q";
  for (int n = 2; n <= 12; ++n) {
    LaurentPoly b = qint(n);
    for (int k = 2; k <= 4; ++k) {
      b *= qint(n);
      if (p == b) return "[" + std::to_string(n) + "]_q^" + std::to_string(k);
    }
  }
  for (int n = 2; n <= kMaxN; ++n) {
    for (int c = 2; c <= 12; ++c) {
      LaurentPoly b = qint(n);
      b.scale(Int(c), 0);
      if (p == b) return std::to_string(c) + "*[" + std::to_string(n) + "]_q";
    }
  }
  for (int a = 2; a <= 12; ++a)
    for (int b = a; b <= 12; ++b)
      if (p == qint(a) * qint(b))
        return "[" + std::to_string(a) + "]_q*[" + std::to_string(b) + "]_q";
  for (int a = 2; a <= 8; ++a)
    for (int b = 2; b <= 8; ++b)
      if (p == qint(a) * qint(a) * qint(b))
        return "[" + std::to_string(a) + "]_q^2*[" + std::to_string(b) + "]_q";
  return {};
}

}  // namespace

std::string RatFunc::pretty() const {
  if (is_laurent()) {
    std::string s = try_fold_qint(num_);
    if (!s.empty()) return s;
    LaurentPoly n = -num_;
    s = try_fold_qint(n);
    if (!s.empty()) return "-" + s;
    return num_.str();
  }
  return str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct ScalarParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool consume(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("scalar parse error at position " + std::to_string(pos) +
                                ": " + what);
  }

  long parse_int() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected integer");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000) fail("integer too large");
      ++pos;
    }
    return neg ? -v : v;
  }

  RatFunc parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    const char c = s[pos];
    if (c == '(') {
      ++pos;
      RatFunc r = parse_sum();
      if (!consume(')')) fail("expected ')'");
      return r;
    }
    if (c == 'q') {
      ++pos;
      return RatFunc(LaurentPoly::q_power(1));
    }
    if (c == '[') {
      ++pos;
      const long n = parse_int();
      if (!consume(']')) fail("expected ']'");
      skip_ws();
      if (pos + 1 < s.size() && s[pos] == '_' && s[pos + 1] == 'q') pos += 2;
      return RatFunc(qint(static_cast<int>(n)));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long v = parse_int();
      return RatFunc(v);
    }
    fail("expected atom");
  }

  RatFunc parse_factor() {
    RatFunc base = parse_atom();
    skip_ws();
    if (consume('^')) {
      const long e = parse_int();
      if (base.is_laurent() && base.num().is_monomial()) {
        const auto& t = base.num().terms()[0];
        if (t.second == 1)
          return RatFunc(LaurentPoly::q_power(static_cast<int>(e) * t.first));
      }
      RatFunc r = 1;
      RatFunc b = e < 0 ? base.inv() : base;
      for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
      return r;
    }
    return base;
  }

  RatFunc parse_product() {
    RatFunc r = parse_factor();
    while (consume('*')) r *= parse_factor();
    return r;
  }

  RatFunc parse_sum() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      neg = s[pos] == '-';
      ++pos;
    }
    RatFunc r = parse_product();
    if (neg) r = -r;
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (s[pos] == '+') {
        ++pos;
        r += parse_product();
      } else if (s[pos] == '-') {
        ++pos;
        r -= parse_product();
      } else {
        break;
      }
    }
    return r;
  }

  RatFunc parse_ratfunc() {
    RatFunc r = parse_sum();
    if (consume('/')) {
      RatFunc d = parse_sum();
      r /= d;
    }
    return r;
  }
};

}  // namespace

RatFunc parse_scalar(std::string_view s) {
  ScalarParser p{s};
  RatFunc r = p.parse_ratfunc();
  p.skip_ws();
  if (p.pos != s.size())
    throw std::invalid_argument("scalar parse error: trailing input at position " +
                                std::to_string(p.pos));
  return r;
}

RatFunc parse_scalar_prefix(std::string_view s, std::size_t& pos) {
  ScalarParser p{s, pos};
  RatFunc r = p.parse_ratfunc();
  pos = p.pos;
  return r;
}

}  // namespace qsh
