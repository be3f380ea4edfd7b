#include "qsh/repmodule.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qsh/series.hpp"

namespace qsh {

const std::array<Gen, kNumGens> kAllGens = {
    Gen::E0, Gen::F0, Gen::K0, Gen::K0inv, Gen::E1,
    Gen::F1, Gen::K1, Gen::K1inv, Gen::D,  Gen::Dinv};

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::E0: return "E0";
    case Gen::F0: return "F0";
    case Gen::K0: return "K0";
    case Gen::K0inv: return "K0inv";
    case Gen::E1: return "E1";
    case Gen::F1: return "F1";
    case Gen::K1: return "K1";
    case Gen::K1inv: return "K1inv";
    case Gen::D: return "D";
    case Gen::Dinv: return "Dinv";
  }
  return "?";
}

std::optional<Gen> gen_from_name(std::string_view name) {
  for (Gen g : kAllGens)
    if (name == gen_name(g)) return g;
  return std::nullopt;
}

namespace {

RatFunc qp(int e) { return RatFunc(LaurentPoly::q_power(e)); }

// 1 / (q - q^-1)
RatFunc inv_qdiff() {
  static const RatFunc v(LaurentPoly(1L),
                         LaurentPoly::q_power(1) - LaurentPoly::q_power(-1));
  return v;
}

OpExpr op_word(std::vector<Op> ops) {
  return {OpTerm{RatFunc(1), std::move(ops)}};
}

OpExpr op_scaled(RatFunc c, std::vector<Op> ops) {
  return {OpTerm{std::move(c), std::move(ops)}};
}

// (alpha * a . b - beta * c . d) / (q - q^-1): the common raising-operator
// shape; single operator factors pass an empty second slot.
OpExpr raising_expr(int alpha_exp, Op a, Op b, int beta_exp, Op c) {
  OpExpr e;
  e.push_back(OpTerm{inv_qdiff() * qp(alpha_exp), {a, b}});
  e.push_back(OpTerm{-(inv_qdiff() * qp(beta_exp)), {c}});
  return e;
}

constexpr std::pair<int, int> kShiftNone{0, 0};
constexpr std::pair<int, int> kShiftXup{1, 0};
constexpr std::pair<int, int> kShiftXdown{-1, 0};
constexpr std::pair<int, int> kShiftYup{0, 1};
constexpr std::pair<int, int> kShiftYdown{0, -1};

ActionTable make_table(int variant) {
  ActionTable t;
  auto set = [&t](Gen g, OpExpr e, std::pair<int, int> sh) {
    t.expr[static_cast<std::size_t>(g)] = std::move(e);
    t.shift[static_cast<std::size_t>(g)] = sh;
  };
  switch (variant) {
    case 0:
      t.name = "principal";
      t.twist = std::nullopt;
      set(Gen::E0, op_word({Op::AstarR}), kShiftXdown);
      set(Gen::F0, raising_expr(1, Op::Ar, Op::Kinv, -1, Op::Aell), kShiftXup);
      set(Gen::K0, op_scaled(qp(1), {Op::Kinv}), kShiftNone);
      set(Gen::K0inv, op_scaled(qp(-1), {Op::K}), kShiftNone);
      set(Gen::E1, op_word({Op::BstarR}), kShiftYdown);
      set(Gen::F1, raising_expr(0, Op::Br, Op::K, 0, Op::Bell), kShiftYup);
      set(Gen::K1, op_word({Op::K}), kShiftNone);
      set(Gen::K1inv, op_word({Op::Kinv}), kShiftNone);
      set(Gen::D, op_word({Op::Xinv}), kShiftNone);
      set(Gen::Dinv, op_word({Op::X}), kShiftNone);
      break;
    case 1:
      t.name = "letter-exchange twist";
      t.twist = Op::Sigma;
      set(Gen::E0, op_word({Op::BstarR}), kShiftYdown);
      set(Gen::F0, raising_expr(1, Op::Br, Op::K, -1, Op::Bell), kShiftYup);
      set(Gen::K0, op_scaled(qp(1), {Op::K}), kShiftNone);
      set(Gen::K0inv, op_scaled(qp(-1), {Op::Kinv}), kShiftNone);
      set(Gen::E1, op_word({Op::AstarR}), kShiftXdown);
      set(Gen::F1, raising_expr(0, Op::Ar, Op::Kinv, 0, Op::Aell), kShiftXup);
      set(Gen::K1, op_word({Op::Kinv}), kShiftNone);
      set(Gen::K1inv, op_word({Op::K}), kShiftNone);
      set(Gen::D, op_word({Op::Yinv}), kShiftNone);
      set(Gen::Dinv, op_word({Op::Y}), kShiftNone);
      break;
    case 2:
      t.name = "reversal twist";
      t.twist = Op::Dagger;
      set(Gen::E0, op_word({Op::AstarL}), kShiftXdown);
      set(Gen::F0, raising_expr(1, Op::Aell, Op::Kinv, -1, Op::Ar), kShiftXup);
      set(Gen::K0, op_scaled(qp(1), {Op::Kinv}), kShiftNone);
      set(Gen::K0inv, op_scaled(qp(-1), {Op::K}), kShiftNone);
      set(Gen::E1, op_word({Op::BstarL}), kShiftYdown);
      set(Gen::F1, raising_expr(0, Op::Bell, Op::K, 0, Op::Br), kShiftYup);
      set(Gen::K1, op_word({Op::K}), kShiftNone);
      set(Gen::K1inv, op_word({Op::Kinv}), kShiftNone);
      set(Gen::D, op_word({Op::Xinv}), kShiftNone);
      set(Gen::Dinv, op_word({Op::X}), kShiftNone);
      break;
    case 3:
      t.name = "combined twist";
      t.twist = Op::Tau;
      set(Gen::E0, op_word({Op::BstarL}), kShiftYdown);
      set(Gen::F0, raising_expr(1, Op::Bell, Op::K, -1, Op::Br), kShiftYup);
      set(Gen::K0, op_scaled(qp(1), {Op::K}), kShiftNone);
      set(Gen::K0inv, op_scaled(qp(-1), {Op::Kinv}), kShiftNone);
      set(Gen::E1, op_word({Op::AstarL}), kShiftXdown);
      set(Gen::F1, raising_expr(0, Op::Aell, Op::Kinv, 0, Op::Ar), kShiftXup);
      set(Gen::K1, op_word({Op::Kinv}), kShiftNone);
      set(Gen::K1inv, op_word({Op::K}), kShiftNone);
      set(Gen::D, op_word({Op::Yinv}), kShiftNone);
      set(Gen::Dinv, op_word({Op::Y}), kShiftNone);
      break;
    default:
      throw std::out_of_range("action table variant out of range");
  }
  return t;
}

std::string pair_str(int r, int s) {
  std::ostringstream os;
  os << "(" << r << "," << s << ")";
  return os.str();
}

}  // namespace

const ActionTable& action_table(int variant) {
  static const std::array<ActionTable, kNumActionTables> tables = {
      make_table(0), make_table(1), make_table(2), make_table(3)};
  return tables.at(static_cast<std::size_t>(variant));
}

FreeElement act(int variant, Gen g, const FreeElement& e, Shuffler& sh) {
  return apply_expr(action_table(variant).expr[static_cast<std::size_t>(g)], e,
                    sh);
}

FreeElement act_seq(int variant, const std::vector<Gen>& gens,
                    const FreeElement& e, Shuffler& sh) {
  FreeElement cur = e;
  for (auto it = gens.rbegin(); it != gens.rend(); ++it)
    cur = act(variant, *it, cur, sh);
  return cur;
}

FreeElement gen_expr_apply(int variant, const GenExpr& expr,
                           const FreeElement& e, Shuffler& sh) {
  FreeElement out;
  for (const auto& term : expr)
    out.add_scaled(act_seq(variant, term.gens, e, sh), term.coeff);
  return out;
}

std::vector<GenRelation> presentation_relations() {
  std::vector<GenRelation> rels;
  auto word = [](std::vector<Gen> gs) {
    return GenExpr{GenTerm{RatFunc(1), std::move(gs)}};
  };
  auto scaled = [](RatFunc c, std::vector<Gen> gs) {
    return GenExpr{GenTerm{std::move(c), std::move(gs)}};
  };

  // Inverse pairs.
  const std::array<std::pair<Gen, Gen>, 3> invs = {
      std::make_pair(Gen::K0, Gen::K0inv), std::make_pair(Gen::K1, Gen::K1inv),
      std::make_pair(Gen::D, Gen::Dinv)};
  for (auto [a, b] : invs) {
    rels.push_back({std::string(gen_name(a)) + "*" + gen_name(b) + " = 1",
                    word({a, b}), word({})});
    rels.push_back({std::string(gen_name(b)) + "*" + gen_name(a) + " = 1",
                    word({b, a}), word({})});
  }

  // Cartan elements commute with each other and with the degree operator.
  const std::array<std::pair<Gen, Gen>, 3> comm = {
      std::make_pair(Gen::K0, Gen::K1), std::make_pair(Gen::D, Gen::K0),
      std::make_pair(Gen::D, Gen::K1)};
  for (auto [a, b] : comm)
    rels.push_back({std::string(gen_name(a)) + "*" + gen_name(b) + " = " +
                        gen_name(b) + "*" + gen_name(a),
                    word({a, b}), word({b, a})});

  // Cartan conjugation: Ki Ej Ki^-1 = q^{A_ij} Ej, Ki Fj Ki^-1 = q^{-A_ij} Fj
  // with Cartan matrix A = [[2, -2], [-2, 2]].
  const int cartan[2][2] = {{2, -2}, {-2, 2}};
  const Gen Ks[2] = {Gen::K0, Gen::K1};
  const Gen Kinvs[2] = {Gen::K0inv, Gen::K1inv};
  const Gen Es[2] = {Gen::E0, Gen::E1};
  const Gen Fs[2] = {Gen::F0, Gen::F1};
  auto qexp_str = [](int e) {
    std::ostringstream os;
    if (e == 1)
      os << "q";
    else
      os << "q^" << e;
    return os.str();
  };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      rels.push_back({std::string(gen_name(Ks[i])) + "*" + gen_name(Es[j]) +
                          "*" + gen_name(Kinvs[i]) + " = " +
                          qexp_str(cartan[i][j]) + "*" + gen_name(Es[j]),
                      word({Ks[i], Es[j], Kinvs[i]}),
                      scaled(qp(cartan[i][j]), {Es[j]})});
      rels.push_back({std::string(gen_name(Ks[i])) + "*" + gen_name(Fs[j]) +
                          "*" + gen_name(Kinvs[i]) + " = " +
                          qexp_str(-cartan[i][j]) + "*" + gen_name(Fs[j]),
                      word({Ks[i], Fs[j], Kinvs[i]}),
                      scaled(qp(-cartan[i][j]), {Fs[j]})});
    }

  // Degree-operator conjugation.
  rels.push_back({"D*E0*Dinv = q*E0", word({Gen::D, Gen::E0, Gen::Dinv}),
                  scaled(qp(1), {Gen::E0})});
  rels.push_back({"D*F0*Dinv = q^-1*F0", word({Gen::D, Gen::F0, Gen::Dinv}),
                  scaled(qp(-1), {Gen::F0})});
  rels.push_back({"D*E1 = E1*D", word({Gen::D, Gen::E1}),
                  word({Gen::E1, Gen::D})});
  rels.push_back({"D*F1 = F1*D", word({Gen::D, Gen::F1}),
                  word({Gen::F1, Gen::D})});

  // E-F commutators.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      GenExpr lhs;
      lhs.push_back(GenTerm{RatFunc(1), {Es[i], Fs[j]}});
      lhs.push_back(GenTerm{RatFunc(-1), {Fs[j], Es[i]}});
      GenExpr rhs;
      std::string text = std::string(gen_name(Es[i])) + "*" + gen_name(Fs[j]) +
                         " - " + gen_name(Fs[j]) + "*" + gen_name(Es[i]);
      if (i == j) {
        rhs.push_back(GenTerm{inv_qdiff(), {Ks[i]}});
        rhs.push_back(GenTerm{-inv_qdiff(), {Kinvs[i]}});
        text += std::string(" = (") + gen_name(Ks[i]) + " - " +
                gen_name(Kinvs[i]) + ")/(q - q^-1)";
      } else {
        text += " = 0";
      }
      rels.push_back({std::move(text), std::move(lhs), std::move(rhs)});
    }

  // q-Serre relations: a^3 b - [3]_q a^2 b a + [3]_q a b a^2 - b a^3 = 0
  // for {a, b} = {E0, E1} and {F0, F1}, both orders.
  const RatFunc three(LaurentPoly(qint(3)));
  auto serre = [&](Gen a, Gen b) {
    GenExpr lhs;
    lhs.push_back(GenTerm{RatFunc(1), {a, a, a, b}});
    lhs.push_back(GenTerm{-three, {a, a, b, a}});
    lhs.push_back(GenTerm{three, {a, b, a, a}});
    lhs.push_back(GenTerm{RatFunc(-1), {b, a, a, a}});
    std::string an = gen_name(a), bn = gen_name(b);
    rels.push_back({an + "^3*" + bn + " - [3]_q*" + an + "^2*" + bn + "*" +
                        an + " + [3]_q*" + an + "*" + bn + "*" + an +
                        "^2 - " + bn + "*" + an + "^3 = 0",
                    std::move(lhs), GenExpr{}});
  };
  serre(Gen::E0, Gen::E1);
  serre(Gen::E1, Gen::E0);
  serre(Gen::F0, Gen::F1);
  serre(Gen::F1, Gen::F0);

  return rels;
}

Report verify_presentation(UCache& u, int window, int variant) {
  const ActionTable& table = action_table(variant);
  Shuffler& sh = u.shuffler();
  Report rep;
  {
    std::ostringstream os;
    os << "presentation relations, table " << variant << " (" << table.name
       << "), components r+s <= " << window;
    rep.title = os.str();
  }
  const auto rels = presentation_relations();
  for (const auto& rel : rels) {
    bool pass = true;
    std::string details;
    int nvec = 0;
    for (int total = 0; total <= window && pass; ++total)
      for (int r = 0; r <= total && pass; ++r) {
        const int s = total - r;
        const EchelonBasis& basis = u.component(r, s);
        for (int i = 0; i < basis.dim(); ++i) {
          const FreeElement lhs = gen_expr_apply(variant, rel.lhs, basis.vec(i), sh);
          const FreeElement rhs = gen_expr_apply(variant, rel.rhs, basis.vec(i), sh);
          if (!(lhs == rhs)) {
            pass = false;
            std::ostringstream os;
            os << "fails on basis vector " << i << " of " << pair_str(r, s)
               << ": lhs - rhs = " << (lhs - rhs).str(true);
            details = os.str();
            break;
          }
          ++nvec;
        }
      }
    if (pass) {
      std::ostringstream os;
      os << nvec << " vectors";
      details = os.str();
    }
    rep.add(rel.text, pass, details);
  }
  return rep;
}

Report variant_action_check(UCache& u, int window, int variant) {
  Report rep = verify_presentation(u, window, variant);
  const ActionTable& table = action_table(variant);
  {
    std::ostringstream os;
    os << "action table " << variant << " (" << table.name
       << "): presentation and intertwiner, r+s <= " << window;
    rep.title = os.str();
  }
  if (!table.twist) return rep;
  Shuffler& sh = u.shuffler();
  const Op phi = *table.twist;
  for (Gen g : kAllGens) {
    bool pass = true;
    std::string details;
    int nvec = 0;
    for (int total = 0; total <= window && pass; ++total)
      for (int r = 0; r <= total && pass; ++r) {
        const int s = total - r;
        const EchelonBasis& basis = u.component(r, s);
        for (int i = 0; i < basis.dim(); ++i) {
          const FreeElement& v = basis.vec(i);
          const FreeElement lhs = apply_op(phi, act(0, g, v, sh), sh);
          const FreeElement rhs = act(variant, g, apply_op(phi, v, sh), sh);
          if (!(lhs == rhs)) {
            pass = false;
            std::ostringstream os;
            os << "fails on basis vector " << i << " of " << pair_str(r, s);
            details = os.str();
            break;
          }
          ++nvec;
        }
      }
    if (pass) {
      std::ostringstream os;
      os << nvec << " vectors";
      details = os.str();
    }
    rep.add(std::string(op_name(phi)) + " intertwines " + gen_name(g), pass,
            details);
  }
  return rep;
}

bool bold_allowed_word(Word w) {
  if (w.is_empty()) return true;
  if (w.first() != Letter::x) return false;
  return w.size() == 1 || w.at(1) == Letter::y;
}

EchelonBasis bold_u_by_intersection(UCache& u, int r, int s) {
  return intersect_with_predicate(u.component(r, s), bold_allowed_word);
}

BoldUCache::BoldUCache(UCache& u) : u_(u) {}

BoldUCache BoldUCache::from_generation(UCache& u, int window, int margin) {
  BoldUCache b(u);
  b.route_ = BoldRoute::generation;
  b.window_ = window;
  b.cache_ = bold_u_by_generation(u.shuffler(), window, margin);
  return b;
}

const EchelonBasis& BoldUCache::component(int r, int s) {
  const auto key = std::make_pair(r, s);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  if (route_ == BoldRoute::generation)
    throw std::out_of_range("component " + pair_str(r, s) +
                            " outside the generated region");
  it = cache_.emplace(key, bold_u_by_intersection(u_, r, s)).first;
  return it->second;
}

int BoldUCache::dim(int r, int s) { return component(r, s).dim(); }

bool BoldUCache::member(const FreeElement& e) {
  if (e.is_zero()) return true;
  const auto bd = e.bidegree();
  if (!bd) return false;
  return component(bd->first, bd->second).member(e);
}

std::map<std::pair<int, int>, EchelonBasis> bold_u_by_generation(
    Shuffler& sh, int window, int margin) {
  struct GenComp {
    std::vector<Word> words;
    Echelonizer ech;
    std::vector<FreeElement> adopted;
    GenComp(int r, int s)
        : words(words_of_bidegree(r, s)),
          ech(static_cast<int>(words.size())) {}
  };
  const int region = window + margin;
  std::map<std::pair<int, int>, GenComp> comps;
  std::deque<FreeElement> queue;

  comps.try_emplace({0, 0}, 0, 0);
  {
    auto& root = comps.at({0, 0});
    const FreeElement one = FreeElement::unit();
    root.ech.insert(dense_lp_row(one, root.words));
    root.adopted.push_back(one);
    queue.push_back(one);
  }

  const std::array<Gen, 4> moves = {Gen::E0, Gen::E1, Gen::F0, Gen::F1};
  std::size_t pops = 0;
  while (!queue.empty()) {
    if (++pops > 200000)
      throw std::runtime_error("generation closure failed to stabilize");
    const FreeElement v = std::move(queue.front());
    queue.pop_front();
    for (Gen g : moves) {
      FreeElement img = act(0, g, v, sh);
      if (img.is_zero()) continue;
      const auto bd = *img.bidegree();
      if (bd.first + bd.second > region) continue;
      auto [it, fresh] = comps.try_emplace(bd, bd.first, bd.second);
      (void)fresh;
      GenComp& c = it->second;
      if (c.ech.insert(dense_lp_row(img, c.words))) {
        c.adopted.push_back(img);
        queue.push_back(std::move(img));
      }
    }
  }

  std::map<std::pair<int, int>, EchelonBasis> out;
  for (int total = 0; total <= window; ++total)
    for (int r = 0; r <= total; ++r) {
      const int s = total - r;
      const auto it = comps.find({r, s});
      out.emplace(std::make_pair(r, s),
                  EchelonBasis::from_spanning(
                      r, s, it == comps.end() ? std::vector<FreeElement>{}
                                              : it->second.adopted));
    }
  return out;
}

Report check_bold_routes(UCache& u, int window) {
  Report rep;
  {
    std::ostringstream os;
    os << "submodule routes agree (intersection vs generation), r+s <= "
       << window;
    rep.title = os.str();
  }
  const auto gen = bold_u_by_generation(u.shuffler(), window);
  for (int total = 0; total <= window; ++total)
    for (int r = 0; r <= total; ++r) {
      const int s = total - r;
      const EchelonBasis inter = bold_u_by_intersection(u, r, s);
      const EchelonBasis& grown = gen.at({r, s});
      const bool pass = inter == grown;
      std::ostringstream os;
      if (pass)
        os << "dim " << inter.dim();
      else
        os << "intersection dim " << inter.dim() << ", generation dim "
           << grown.dim() << (inter.dim() == grown.dim() ? " (bases differ)"
                                                         : "");
      rep.add("routes agree at " + pair_str(r, s), pass, os.str());
    }
  return rep;
}

Report check_bold_dimensions(BoldUCache& bold, int window, int corner) {
  Report rep;
  {
    std::ostringstream os;
    os << "submodule dimensions: partition formula on r+s <= " << window
       << " and the " << corner + 1 << "x" << corner + 1 << " corner";
    rep.title = os.str();
  }
  const auto p = partition_numbers(std::max(window, 2 * corner) + 1);
  auto formula = [&p](int r, int s) -> Int {
    const int n = r - (r - s) * (r - s);
    return n >= 0 ? p[static_cast<std::size_t>(n)] : Int(0);
  };

  {
    bool pass = true;
    std::string details;
    int count = 0;
    for (int total = 0; total <= window && pass; ++total)
      for (int r = 0; r <= total; ++r) {
        const int s = total - r;
        if (formula(r, s) != bold.dim(r, s)) {
          pass = false;
          std::ostringstream os;
          os << "at " << pair_str(r, s) << ": dim " << bold.dim(r, s)
             << ", formula " << formula(r, s).get_str();
          details = os.str();
          break;
        }
        ++count;
      }
    if (pass) {
      std::ostringstream os;
      os << count << " components";
      details = os.str();
    }
    rep.add("triangle matches partition formula", pass, details);
  }

  {
    bool pass = true;
    std::string details;
    for (int r = 0; r <= corner && pass; ++r)
      for (int s = 0; s <= corner; ++s)
        if (formula(r, s) != bold.dim(r, s)) {
          pass = false;
          std::ostringstream os;
          os << "at " << pair_str(r, s) << ": dim " << bold.dim(r, s)
             << ", formula " << formula(r, s).get_str();
          details = os.str();
          break;
        }
    rep.add("corner matches partition formula", pass, details);
  }

  // Frozen reference for the 7 x 7 corner of the dimension table.
  static const int kRef[7][7] = {
      {1, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0, 0}, {0, 1, 2, 1, 0, 0, 0},
      {0, 0, 2, 3, 2, 0, 0}, {0, 0, 1, 3, 5, 3, 1}, {0, 0, 0, 1, 5, 7, 5},
      {0, 0, 0, 0, 2, 7, 11}};
  {
    const int lim = std::min(corner, 6);
    bool pass = true;
    std::string details;
    for (int r = 0; r <= lim && pass; ++r)
      for (int s = 0; s <= lim; ++s)
        if (bold.dim(r, s) != kRef[r][s]) {
          pass = false;
          std::ostringstream os;
          os << "at " << pair_str(r, s) << ": dim " << bold.dim(r, s)
             << ", reference " << kRef[r][s];
          details = os.str();
          break;
        }
    rep.add("corner matches frozen reference table", pass, details);
  }
  return rep;
}

Report highest_weight_check(Shuffler& sh) {
  Report rep;
  rep.title = "highest-weight data at the empty word";
  const FreeElement one = FreeElement::unit();
  const FreeElement xel = FreeElement::from_word(Word::letter(Letter::x));

  auto expect = [&rep, &sh](const std::string& name, const FreeElement& got,
                            const FreeElement& want) {
    const bool pass = got == want;
    rep.add(name, pass,
            pass ? "" : "got " + got.str(true) + ", want " + want.str(true));
  };

  FreeElement k0 = act(0, Gen::K0, one, sh);
  FreeElement q_one = one;
  q_one.scale(qp(1));
  expect("K0 1 = q 1", k0, q_one);
  expect("K1 1 = 1", act(0, Gen::K1, one, sh), one);
  expect("D 1 = 1", act(0, Gen::D, one, sh), one);
  expect("E0 1 = 0", act(0, Gen::E0, one, sh), FreeElement::zero());
  const FreeElement f0one = act(0, Gen::F0, one, sh);
  expect("F0 1 = x", f0one, xel);
  expect("F0^2 1 = 0", act(0, Gen::F0, f0one, sh), FreeElement::zero());
  expect("E1 1 = 0", act(0, Gen::E1, one, sh), FreeElement::zero());
  expect("F1 1 = 0", act(0, Gen::F1, one, sh), FreeElement::zero());
  return rep;
}

namespace {

// Eigenvalue and shift checks shared by the ambient and submodule sweeps.
// target(g) gives the shifted bidegree; membership is tested against the
// caller's space.
bool weight_checks_on_basis(
    const EchelonBasis& basis, Shuffler& sh,
    const std::function<bool(const FreeElement&)>& member, std::string& why) {
  const int r = basis.r(), s = basis.s();
  const std::array<std::pair<Gen, int>, 3> eig = {
      std::make_pair(Gen::K0, 2 * s - 2 * r + 1),
      std::make_pair(Gen::K1, 2 * r - 2 * s), std::make_pair(Gen::D, -r)};
  const std::array<Gen, 4> shifts = {Gen::E0, Gen::F0, Gen::E1, Gen::F1};
  for (int i = 0; i < basis.dim(); ++i) {
    const FreeElement& v = basis.vec(i);
    for (auto [g, e] : eig) {
      FreeElement want = v;
      want.scale(qp(e));
      if (!(act(0, g, v, sh) == want)) {
        std::ostringstream os;
        os << gen_name(g) << " eigenvalue fails on vector " << i;
        why = os.str();
        return false;
      }
    }
    for (Gen g : shifts) {
      const FreeElement img = act(0, g, v, sh);
      const auto sh_pair =
          action_table(0).shift[static_cast<std::size_t>(g)];
      const int tr = r + sh_pair.first, ts = s + sh_pair.second;
      if (tr < 0 || ts < 0) {
        if (!img.is_zero()) {
          std::ostringstream os;
          os << gen_name(g) << " image nonzero below the grading on vector "
             << i;
          why = os.str();
          return false;
        }
        continue;
      }
      for (const auto& [w, c] : img) {
        (void)w;
        if (!c.is_laurent()) {
          std::ostringstream os;
          os << gen_name(g) << " image has a non-Laurent coefficient on vector "
             << i;
          why = os.str();
          return false;
        }
      }
      if (!member(img)) {
        std::ostringstream os;
        os << gen_name(g) << " image leaves the space on vector " << i;
        why = os.str();
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Report weight_eigenvalue_check(UCache& u, BoldUCache& bold, int window) {
  Report rep;
  {
    std::ostringstream os;
    os << "weights and grading shifts, r+s <= " << window;
    rep.title = os.str();
  }
  Shuffler& sh = u.shuffler();
  for (int total = 0; total <= window; ++total)
    for (int r = 0; r <= total; ++r) {
      const int s = total - r;
      std::string why;
      bool pass = weight_checks_on_basis(
          u.component(r, s), sh,
          [&u](const FreeElement& e) { return u.member(e); }, why);
      std::ostringstream os;
      os << u.dim(r, s) << " vectors";
      rep.add("ambient " + pair_str(r, s), pass, pass ? os.str() : why);
    }
  for (int total = 0; total <= window; ++total)
    for (int r = 0; r <= total; ++r) {
      const int s = total - r;
      std::string why;
      bool pass = weight_checks_on_basis(
          bold.component(r, s), sh,
          [&bold](const FreeElement& e) { return bold.member(e); }, why);
      std::ostringstream os;
      os << bold.dim(r, s) << " vectors";
      rep.add("submodule " + pair_str(r, s), pass, pass ? os.str() : why);
    }
  return rep;
}

Report nonnilpotence_witness(UCache& u, BoldUCache& bold, int n, int window) {
  Report rep;
  {
    std::ostringstream os;
    os << "free iteration vs nilpotence on the submodule, powers to " << n
       << ", r+s <= " << window;
    rep.title = os.str();
  }
  Shuffler& sh = u.shuffler();

  {
    FreeElement cur = FreeElement::from_word(Word::parse("xx"));
    bool pass = true;
    for (int k = 1; k <= n && pass; ++k) {
      cur = act(0, Gen::F0, cur, sh);
      if (cur.is_zero()) {
        std::ostringstream os;
        os << "vanishes at k = " << k;
        rep.add("F0^k(xx) != 0 for k <= " + std::to_string(n), false, os.str());
        pass = false;
      }
    }
    if (pass)
      rep.add("F0^k(xx) != 0 for k <= " + std::to_string(n), true,
              "last support size " + std::to_string(cur.support_size()));
  }
  {
    FreeElement cur = FreeElement::from_word(Word::parse("y"));
    bool pass = true;
    for (int k = 1; k <= n && pass; ++k) {
      cur = act(0, Gen::F1, cur, sh);
      if (cur.is_zero()) {
        std::ostringstream os;
        os << "vanishes at k = " << k;
        rep.add("F1^k(y) != 0 for k <= " + std::to_string(n), false, os.str());
        pass = false;
      }
    }
    if (pass)
      rep.add("F1^k(y) != 0 for k <= " + std::to_string(n), true,
              "last support size " + std::to_string(cur.support_size()));
  }

  {
    const FreeElement xel = FreeElement::from_word(Word::letter(Letter::x));
    const FreeElement f1 = act(0, Gen::F1, xel, sh);
    const FreeElement f2 = act(0, Gen::F1, f1, sh);
    const FreeElement f3 = act(0, Gen::F1, f2, sh);
    rep.add("F1^2 x != 0", !f2.is_zero(), f2.str(true));
    rep.add("F1^3 x = 0", f3.is_zero(), f3.is_zero() ? "" : f3.str(true));
  }

  const std::array<Gen, 4> gens = {Gen::E0, Gen::E1, Gen::F0, Gen::F1};
  const int bail = 2 * window + 6;
  for (int total = 0; total <= window; ++total)
    for (int r = 0; r <= total; ++r) {
      const int s = total - r;
      const EchelonBasis& basis = bold.component(r, s);
      if (basis.dim() == 0) continue;
      bool pass = true;
      std::ostringstream det;
      for (std::size_t gi = 0; gi < gens.size() && pass; ++gi) {
        int order = 0;
        for (int i = 0; i < basis.dim() && pass; ++i) {
          FreeElement cur = basis.vec(i);
          int k = 0;
          while (!cur.is_zero() && k <= bail) {
            cur = act(0, gens[gi], cur, sh);
            ++k;
          }
          if (!cur.is_zero()) {
            pass = false;
            det.str("");
            det << gen_name(gens[gi]) << " not nilpotent on vector " << i
                << " within " << bail << " steps";
          }
          order = std::max(order, k);
        }
        if (pass)
          det << (gi ? ", " : "") << gen_name(gens[gi]) << "<=" << order;
      }
      rep.add("nilpotent on submodule " + pair_str(r, s), pass, det.str());
    }
  return rep;
}

Report generation_reach_check(BoldUCache& bold, int window) {
  Report rep;
  {
    std::ostringstream os;
    os << "right-delete maps reach the empty word, r+s <= " << window;
    rep.title = os.str();
  }
  for (int total = 0; total <= window; ++total)
    for (int r = 0; r <= total; ++r) {
      const int s = total - r;
      const EchelonBasis& basis = bold.component(r, s);
      if (basis.dim() == 0) continue;
      bool pass = true;
      std::size_t longest = 0;
      std::string why;
      for (int i = 0; i < basis.dim(); ++i) {
        const ReachOne rc = reach_one(basis.vec(i), /*from_left=*/false);
        if (!rc.ok) {
          pass = false;
          why = "vector " + std::to_string(i) + " never reaches the empty word";
          break;
        }
        longest = std::max(longest, rc.ops.size());
      }
      std::ostringstream os;
      os << basis.dim() << " vectors, longest descent " << longest;
      rep.add("reach empty word from " + pair_str(r, s), pass,
              pass ? os.str() : why);
    }
  return rep;
}

Report invariant_space_closure_check(Shuffler& sh, int window, int trials,
                                     unsigned seed) {
  Report rep;
  {
    std::ostringstream os;
    os << "allowed-support closure on random elements, r+s <= " << window
       << ", " << trials << " trials per component, seed " << seed;
    rep.title = os.str();
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  const std::array<Op, 8> plain_ops = {Op::X,    Op::Xinv, Op::Y,
                                       Op::Yinv, Op::K,    Op::Kinv,
                                       Op::AstarR, Op::BstarR};
  auto all_allowed = [](const FreeElement& e) {
    for (const auto& [w, c] : e) {
      (void)c;
      if (!bold_allowed_word(w)) return false;
    }
    return true;
  };
  for (int total = 0; total <= window; ++total)
    for (int r = 0; r <= total; ++r) {
      const int s = total - r;
      std::vector<Word> allowed;
      for (Word w : words_of_bidegree(r, s))
        if (bold_allowed_word(w)) allowed.push_back(w);
      if (allowed.empty()) continue;
      bool pass = true;
      std::string why;
      for (int t = 0; t < trials && pass; ++t) {
        FreeElement v;
        for (Word w : allowed) v.add_term(w, RatFunc(dist(rng)));
        if (v.is_zero()) v.add_term(allowed.front(), RatFunc(1));
        for (Op op : plain_ops) {
          if (!all_allowed(apply_op(op, v, sh))) {
            pass = false;
            why = std::string(op_name(op)) + " breaks allowed support";
            break;
          }
        }
        if (pass && !all_allowed(act(0, Gen::F0, v, sh))) {
          pass = false;
          why = "F0 breaks allowed support";
        }
        if (pass && !all_allowed(act(0, Gen::F1, v, sh))) {
          pass = false;
          why = "F1 breaks allowed support";
        }
      }
      std::ostringstream os;
      os << allowed.size() << " allowed words";
      rep.add("closure at " + pair_str(r, s), pass, pass ? os.str() : why);
    }
  return rep;
}

GradedVectorTable load_vector_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  GradedVectorTable table;
  std::optional<std::pair<int, int>> key;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "@") {
      int r, s;
      if (!(ls >> r >> s))
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": malformed bidegree header");
      key = std::make_pair(r, s);
      table[*key];  // record the section even if empty
      continue;
    }
    if (!key)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": vector before any bidegree header");
    try {
      table[*key].push_back(parse_element(line));
    } catch (const std::exception& ex) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " +
                               ex.what());
    }
  }
  return table;
}

Report verify_appendix_c(const GradedVectorTable& table, UCache& u) {
  Report rep;
  rep.title = "golden basis tables";
  int max_total = 0;
  for (const auto& [key, vecs] : table) {
    (void)vecs;
    max_total = std::max(max_total, key.first + key.second);
  }
  for (const auto& [key, vecs] : table) {
    const auto [r, s] = key;
    bool pass = true;
    std::string why;
    for (std::size_t i = 0; i < vecs.size() && pass; ++i) {
      const FreeElement& v = vecs[i];
      const auto bd = v.bidegree();
      if (!bd || *bd != key) {
        pass = false;
        why = "vector " + std::to_string(i) + " is not homogeneous of " +
              pair_str(r, s);
      } else if (!u.member(v)) {
        pass = false;
        why = "vector " + std::to_string(i) + " lies outside the subalgebra";
      } else {
        for (const auto& [w, c] : v) {
          (void)c;
          if (!bold_allowed_word(w)) {
            pass = false;
            why = "vector " + std::to_string(i) + " touches forbidden word " +
                  w.str();
            break;
          }
        }
      }
    }
    if (pass) {
      try {
        CoordBasis::build(vecs);
      } catch (const std::exception&) {
        pass = false;
        why = "vectors are linearly dependent";
      }
    }
    int want = 0;
    if (pass) {
      want = bold_u_by_intersection(u, r, s).dim();
      if (static_cast<int>(vecs.size()) != want) {
        pass = false;
        why = "lists " + std::to_string(vecs.size()) + " vectors, dimension is " +
              std::to_string(want);
      }
    }
    std::ostringstream os;
    os << vecs.size() << " vectors, dim " << want;
    rep.add("basis of " + pair_str(r, s), pass, pass ? os.str() : why);
  }
  {
    bool pass = true;
    std::string why;
    for (int total = 0; total <= max_total && pass; ++total)
      for (int r = 0; r <= total; ++r) {
        const int s = total - r;
        if (table.count({r, s})) continue;
        if (bold_u_by_intersection(u, r, s).dim() != 0) {
          pass = false;
          why = "nonzero component " + pair_str(r, s) + " missing";
          break;
        }
      }
    std::ostringstream os;
    os << "all nonzero components to r+s = " << max_total << " listed";
    rep.add("coverage", pass, pass ? os.str() : why);
  }
  return rep;
}

std::vector<MatrixFixture> load_matrix_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  std::vector<MatrixFixture> blocks;
  std::string line;
  int lineno = 0;
  auto parse_bidegrees = [&](const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::istringstream ts(text);
    std::string part;
    while (std::getline(ts, part, '+')) {
      const auto comma = part.find(',');
      if (comma == std::string::npos)
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": malformed bidegree list '" + text + "'");
      out.emplace_back(std::stoi(part.substr(0, comma)),
                       std::stoi(part.substr(comma + 1)));
    }
    if (out.empty())
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": empty bidegree list");
    return out;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "@") {
      MatrixFixture b;
      std::string kw, fromlist, tolist;
      if (!(ls >> b.gen >> kw))
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": malformed block header");
      if (kw == "on") {
        if (!(ls >> fromlist))
          throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                   ": malformed block header");
        b.from = parse_bidegrees(fromlist);
        b.to = b.from;
      } else if (kw == "from") {
        std::string tokw;
        if (!(ls >> fromlist >> tokw >> tolist) || tokw != "to")
          throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                   ": malformed block header");
        b.from = parse_bidegrees(fromlist);
        b.to = parse_bidegrees(tolist);
      } else {
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": expected 'on' or 'from'");
      }
      blocks.push_back(std::move(b));
      continue;
    }
    if (blocks.empty())
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": matrix row before any block header");
    std::vector<RatFunc> row;
    std::istringstream rs(line);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      try {
        row.push_back(parse_scalar(cell));
      } catch (const std::exception& ex) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " +
                                 ex.what());
      }
    }
    if (row.empty())
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": empty matrix row");
    blocks.back().entries.push_back(std::move(row));
  }
  return blocks;
}

namespace {

std::string bidegree_list_str(const std::vector<std::pair<int, int>>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << "+";
    os << v[i].first << "," << v[i].second;
  }
  return os.str();
}

}  // namespace

Report verify_appendix_d(const std::vector<MatrixFixture>& blocks,
                         const GradedVectorTable& table, UCache& u) {
  Report rep;
  rep.title = "golden action matrices";
  Shuffler& sh = u.shuffler();
  std::map<std::pair<int, int>, CoordBasis> bases;
  auto basis_view = [&](std::pair<int, int> key,
                        std::string& err) -> std::optional<BasisView> {
    auto it = bases.find(key);
    if (it == bases.end()) {
      const auto tit = table.find(key);
      if (tit == table.end() || tit->second.empty()) {
        err = "no fixture basis for " + pair_str(key.first, key.second);
        return std::nullopt;
      }
      it = bases.emplace(key, CoordBasis::build(tit->second)).first;
    }
    return BasisView::of(it->second);
  };
  for (const auto& block : blocks) {
    std::string name = block.gen + (block.from == block.to ? " on " : " from ") +
                       bidegree_list_str(block.from);
    if (!(block.from == block.to)) name += " to " + bidegree_list_str(block.to);
    const auto g = gen_from_name(block.gen);
    if (!g) {
      rep.add(name, false, "unknown generator " + block.gen);
      continue;
    }
    std::string err;
    std::vector<BasisView> dom, cod;
    bool ok = true;
    try {
      for (auto key : block.from) {
        if (auto v = basis_view(key, err)) {
          dom.push_back(*v);
        } else {
          ok = false;
          break;
        }
      }
      for (auto key : block.to) {
        if (!ok) break;
        if (auto v = basis_view(key, err)) {
          cod.push_back(*v);
        } else {
          ok = false;
          break;
        }
      }
    } catch (const std::exception& ex) {
      ok = false;
      err = ex.what();
    }
    if (!ok) {
      rep.add(name, false, err);
      continue;
    }
    const BlockResult br = graded_matrix(
        [&](const FreeElement& e) { return act(0, *g, e, sh); }, dom, cod);
    if (!br.ok) {
      rep.add(name, false, br.error);
      continue;
    }
    bool pass = br.m.size() == block.entries.size();
    std::string why = pass ? "" : "row count differs";
    for (std::size_t i = 0; pass && i < br.m.size(); ++i) {
      if (br.m[i].size() != block.entries[i].size()) {
        pass = false;
        why = "column count differs in row " + std::to_string(i);
        break;
      }
      for (std::size_t j = 0; j < br.m[i].size(); ++j)
        if (!(br.m[i][j] == block.entries[i][j])) {
          pass = false;
          std::ostringstream os;
          os << "entry (" << i << "," << j << "): computed "
             << br.m[i][j].pretty() << ", fixture "
             << block.entries[i][j].pretty();
          why = os.str();
          break;
        }
    }
    std::ostringstream os;
    os << br.m.size() << "x" << (br.m.empty() ? 0 : br.m.front().size());
    rep.add(name, pass, pass ? os.str() : why);
  }
  return rep;
}

Report check_appendix_e(UCache& u, int window) {
  Report rep;
  {
    std::ostringstream os;
    os << "ladder structure of the Weyl-like pairs, r+s <= " << window;
    rep.title = os.str();
  }
  Shuffler& sh = u.shuffler();

  struct Ladder {
    Op S, T;      // lowering delete map, raising multiply map
    int dr, ds;   // bidegree shift of S (T shifts by the negative)
    const char* tag;
  };
  const std::array<Ladder, 2> ladders = {
      Ladder{Op::AstarL, Op::Aell, -1, 0, "x-pair"},
      Ladder{Op::BstarL, Op::Bell, 0, -1, "y-pair"}};

  for (const auto& lad : ladders) {
    // Graded block of a single operator out of (r, s); empty when the target
    // bidegree leaves the grading.
    auto block = [&](Op op, int r, int s, int tr,
                     int ts) -> std::optional<Matrix> {
      if (tr < 0 || ts < 0) return std::nullopt;
      const BlockResult br = graded_matrix(
          [&](const FreeElement& e) { return apply_op(op, e, sh); },
          {BasisView::of(u.component(r, s))},
          {BasisView::of(u.component(tr, ts))});
      if (!br.ok) throw std::runtime_error(br.error);
      return br.m;
    };
    auto s_block = [&](int r, int s) {
      return block(lad.S, r, s, r + lad.dr, s + lad.ds);
    };
    auto t_block = [&](int r, int s) {
      return block(lad.T, r, s, r - lad.dr, s - lad.ds);
    };

    for (int total = 0; total <= window; ++total)
      for (int r = 0; r <= total; ++r) {
        const int s = total - r;
        const int d = u.dim(r, s);
        const EchelonBasis& basis = u.component(r, s);
        bool pass = true;
        std::ostringstream det;
        std::string why;
        try {

        const auto Mt = t_block(r, s);            // (r,s) raised
        const auto Ms = s_block(r, s);            // (r,s) lowered, if any
        const auto Ms_in = s_block(r - lad.dr, s - lad.ds);  // raised -> (r,s)

        // Raising map injective.
        if (!kernel_basis(*Mt, d).empty()) {
          pass = false;
          why = "raising block has a kernel";
        }

        // Lowering map surjective onto the lower component; at the grading
        // floor the map must vanish identically.
        if (pass) {
          if (Ms) {
            const int target = u.dim(r + lad.dr, s + lad.ds);
            if (rank_of(*Ms) != target) {
              pass = false;
              why = "lowering block is not surjective";
            }
          } else {
            for (int i = 0; i < d && pass; ++i)
              if (!apply_op(lad.S, basis.vec(i), sh).is_zero()) {
                pass = false;
                why = "lowering map nonzero at the grading floor";
              }
          }
        }

        // Blockwise ST - q^2 TS = I.
        Matrix A, B;
        if (pass) {
          A = mat_mul(*Ms_in, *Mt);
          if (Ms) {
            const auto Mt_in = t_block(r + lad.dr, s + lad.ds);
            B = mat_mul(*Mt_in, *Ms);
          } else {
            B.assign(static_cast<std::size_t>(d),
                     std::vector<RatFunc>(static_cast<std::size_t>(d)));
          }
          const RatFunc q2 = qp(2);
          Matrix C = A;
          for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
              C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                  C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                  q2 * B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (!(C == mat_identity(d))) {
            pass = false;
            why = "ST - q^2 TS differs from the identity";
          }
        }

        // Eigen-kernels V_n of ST, matched against TS, summing to the whole
        // component; ker(S^{k+1}) = V_0 + ... + V_k along the way.
        if (pass) {
          const int nmax = lad.dr != 0 ? r : s;
          std::vector<Matrix> vs;
          int dimsum = 0;
          det << "d=" << d << ", V dims [";
          for (int n = 0; n <= nmax && pass; ++n) {
            const RatFunc lam_st(LaurentPoly::q_power(n) * qint(n + 1));
            Matrix Vn = kernel_basis(mat_sub_scalar(A, lam_st), d);
            const RatFunc lam_ts =
                n == 0 ? RatFunc() : RatFunc(LaurentPoly::q_power(n - 1) * qint(n));
            Matrix Wn = kernel_basis(mat_sub_scalar(B, lam_ts), d);
            if (!(row_space_rref(Vn, d) == row_space_rref(Wn, d))) {
              pass = false;
              why = "ST and TS eigen-kernels differ at n = " + std::to_string(n);
              break;
            }
            dimsum += static_cast<int>(Vn.size());
            det << (n ? "," : "") << Vn.size();
            vs.push_back(std::move(Vn));
          }
          det << "]";
          if (pass && dimsum != d) {
            pass = false;
            why = "eigen-kernel dimensions do not sum to the component";
          }
          if (pass) {
            Matrix all;
            for (const auto& v : vs) all.insert(all.end(), v.begin(), v.end());
            if (!(row_space_rref(all, d) == mat_identity(d))) {
              pass = false;
              why = "eigen-kernels do not fill the component";
            }
          }
          if (pass && Ms) {
            Matrix P = *Ms;
            Matrix acc = vs.empty() ? Matrix{} : vs.front();
            int cr = r + lad.dr, cs = s + lad.ds;
            for (int k = 1; pass; ++k) {
              if (!(row_space_rref(kernel_basis(P, d), d) ==
                    row_space_rref(acc, d))) {
                pass = false;
                why = "ker(S^" + std::to_string(k) +
                      ") differs from the eigen-kernel sum";
                break;
              }
              const auto next = s_block(cr, cs);
              if (!next || k >= nmax) break;
              P = mat_mul(*next, P);
              cr += lad.dr;
              cs += lad.ds;
              acc.insert(acc.end(), vs[static_cast<std::size_t>(k)].begin(),
                         vs[static_cast<std::size_t>(k)].end());
            }
          }
        }
        } catch (const std::exception& ex) {
          pass = false;
          why = ex.what();
        }
        rep.add(std::string(lad.tag) + " at " + pair_str(r, s), pass,
                pass ? det.str() : why);
      }
  }
  return rep;
}

}  // namespace qsh
