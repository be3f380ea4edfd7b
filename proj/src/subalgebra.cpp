#include "qsh/subalgebra.hpp"

#include <sstream>
#include <stdexcept>

namespace qsh {

const EchelonBasis& UCache::component(int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("component: negative bidegree");
  const auto key = std::make_pair(r, s);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  std::vector<FreeElement> span;
  if (r == 0 && s == 0) {
    span.push_back(FreeElement::unit());
  } else {
    if (r > 0) {
      component(r - 1, s);
      for (const FreeElement& v : gens_.at({r - 1, s}))
        span.push_back(sh_.shuffle_left(Letter::x, v));
    }
    if (s > 0) {
      component(r, s - 1);
      for (const FreeElement& v : gens_.at({r, s - 1}))
        span.push_back(sh_.shuffle_left(Letter::y, v));
    }
  }
  std::vector<FreeElement> sparse;
  auto [it, inserted] =
      cache_.emplace(key, EchelonBasis::from_spanning(r, s, span, &sparse));
  gens_[key] = std::move(sparse);
  return it->second;
}

bool UCache::member(const FreeElement& e) {
  if (e.is_zero()) return true;
  const auto bd = e.bidegree();
  if (!bd) return false;
  return component(bd->first, bd->second).member(e);
}

EchelonBasis UCache::component_by_monomials(int r, int s) {
  std::vector<FreeElement> span;
  for (Word arrangement : words_of_bidegree(r, s)) {
    FreeElement m = FreeElement::unit();
    for (int i = 0; i < arrangement.size(); ++i)
      m = sh_.shuffle_right(m, arrangement.at(i));
    span.push_back(std::move(m));
  }
  return EchelonBasis::from_spanning(r, s, span);
}

std::vector<std::vector<int>> dims_triangle(UCache& u, int maxtotal) {
  std::vector<std::vector<int>> dims(static_cast<std::size_t>(maxtotal) + 1);
  for (int r = 0; r <= maxtotal; ++r)
    for (int s = 0; r + s <= maxtotal; ++s)
      dims[static_cast<std::size_t>(r)].push_back(u.dim(r, s));
  return dims;
}

std::vector<std::vector<int>> dims_corner(UCache& u, int corner) {
  std::vector<std::vector<int>> dims(static_cast<std::size_t>(corner) + 1);
  for (int r = 0; r <= corner; ++r)
    for (int s = 0; s <= corner; ++s)
      dims[static_cast<std::size_t>(r)].push_back(u.dim(r, s));
  return dims;
}

Report check_monomial_route(UCache& u, int maxtotal) {
  Report rep{"subalgebra spanning routes (total degree <= " +
             std::to_string(maxtotal) + ")"};
  for (int n = 0; n <= maxtotal; ++n) {
    bool ok = true;
    std::string why;
    for (int r = 0; r <= n && ok; ++r) {
      const int s = n - r;
      if (!(u.component(r, s) == u.component_by_monomials(r, s))) {
        ok = false;
        why = "echelon bases differ at (" + std::to_string(r) + "," +
              std::to_string(s) + ")";
      }
    }
    rep.add("recursive = monomial spanning at total degree " +
                std::to_string(n),
            ok, why);
  }
  return rep;
}

namespace {

/// Images of every basis vector of every component with r + s <= maxtotal
/// under `op` lie in the component shifted by `dr`, `ds` (out-of-range images
/// must vanish). `skip_empty_total` skips total degree 0 (deletion maps kill
/// the empty word trivially, which member() already accepts).
void closure_pass(UCache& u, int maxtotal, Op op, int dr, int ds, Report& rep) {
  bool ok = true;
  std::string why;
  int checked = 0;
  for (int n = 0; n <= maxtotal && ok; ++n) {
    for (int r = 0; r <= n && ok; ++r) {
      const int s = n - r;
      const EchelonBasis& basis = u.component(r, s);
      for (int i = 0; i < basis.dim() && ok; ++i) {
        const FreeElement img = apply_op(op, basis.vec(i), u.shuffler());
        ++checked;
        bool good;
        if (img.is_zero()) {
          good = true;
        } else if (r + dr < 0 || s + ds < 0) {
          good = false;
        } else {
          good = u.component(r + dr, s + ds).member(img);
        }
        if (!good) {
          ok = false;
          std::ostringstream os;
          os << op_name(op) << " image of basis vector " << i << " of ("
             << r << "," << s << ") not in (" << r + dr << "," << s + ds
             << ")";
          why = os.str();
        }
      }
    }
  }
  if (ok) why = std::to_string(checked) + " basis vectors checked";
  std::ostringstream name;
  name << op_name(op) << " maps (r,s) into (r" << (dr >= 0 ? "+" : "") << dr
       << ",s" << (ds >= 0 ? "+" : "") << ds << ")";
  rep.add(name.str(), ok, why);
}

}  // namespace

Report check_starred_closure(UCache& u, int maxtotal) {
  Report rep{"starred deletion closure (total degree <= " +
             std::to_string(maxtotal) + ")"};
  closure_pass(u, maxtotal, Op::AstarL, -1, 0, rep);
  closure_pass(u, maxtotal, Op::BstarL, 0, -1, rep);
  closure_pass(u, maxtotal, Op::AstarR, -1, 0, rep);
  closure_pass(u, maxtotal, Op::BstarR, 0, -1, rep);
  return rep;
}

Report check_raising_closure(UCache& u, int maxtotal) {
  Report rep{"letter multiplication closure (total degree <= " +
             std::to_string(maxtotal) + ")"};
  closure_pass(u, maxtotal - 1, Op::Aell, +1, 0, rep);
  closure_pass(u, maxtotal - 1, Op::Bell, 0, +1, rep);
  closure_pass(u, maxtotal - 1, Op::Ar, +1, 0, rep);
  closure_pass(u, maxtotal - 1, Op::Br, 0, +1, rep);
  return rep;
}

Report check_grading_eigenvalues(UCache& u, int maxtotal) {
  Report rep{"grading eigenvalues (total degree <= " + std::to_string(maxtotal) +
             ")"};
  bool ok = true;
  std::string why;
  int checked = 0;
  for (int n = 0; n <= maxtotal && ok; ++n) {
    for (int r = 0; r <= n && ok; ++r) {
      const int s = n - r;
      const EchelonBasis& basis = u.component(r, s);
      const struct {
        Op op;
        int exp;
      } cases[] = {{Op::X, r}, {Op::Y, s}, {Op::K, 2 * r - 2 * s}};
      for (int i = 0; i < basis.dim() && ok; ++i) {
        for (const auto& c : cases) {
          FreeElement want = basis.vec(i);
          want.scale(RatFunc(LaurentPoly::q_power(c.exp)));
          if (!(apply_op(c.op, basis.vec(i), u.shuffler()) == want)) {
            ok = false;
            why = std::string(op_name(c.op)) + " eigenvalue mismatch on (" +
                  std::to_string(r) + "," + std::to_string(s) + ") vector " +
                  std::to_string(i);
          }
          ++checked;
        }
      }
    }
  }
  if (ok) why = std::to_string(checked) + " evaluations";
  rep.add("X = q^r, Y = q^s, K = q^(2r-2s) on each component", ok, why);
  return rep;
}

Report check_symmetry_closure(UCache& u, int maxtotal) {
  Report rep{"symmetry closure (total degree <= " + std::to_string(maxtotal) +
             ")"};
  const struct {
    Op op;
    bool swaps;
  } cases[] = {{Op::Sigma, true}, {Op::Dagger, false}, {Op::Tau, true}};
  for (const auto& c : cases) {
    bool ok = true;
    std::string why;
    int checked = 0;
    for (int n = 0; n <= maxtotal && ok; ++n) {
      for (int r = 0; r <= n && ok; ++r) {
        const int s = n - r;
        const EchelonBasis& basis = u.component(r, s);
        const int tr = c.swaps ? s : r;
        const int ts = c.swaps ? r : s;
        for (int i = 0; i < basis.dim() && ok; ++i) {
          ++checked;
          if (!u.component(tr, ts).member(
                  apply_op(c.op, basis.vec(i), u.shuffler()))) {
            ok = false;
            why = std::string(op_name(c.op)) + " image of (" +
                  std::to_string(r) + "," + std::to_string(s) + ") vector " +
                  std::to_string(i) + " not in (" + std::to_string(tr) + "," +
                  std::to_string(ts) + ")";
          }
        }
      }
    }
    if (ok) why = std::to_string(checked) + " basis vectors checked";
    rep.add(std::string(op_name(c.op)) + " preserves the subalgebra", ok, why);
  }
  return rep;
}

}  // namespace qsh
