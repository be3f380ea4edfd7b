#include "qsh/operators.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qsh/parallel.hpp"

namespace qsh {

namespace {

constexpr std::array<const char*, 17> kOpNames = {
    "X",   "Xinv", "Y",   "Yinv", "K",  "Kinv", "AsL", "BsL", "AsR",
    "BsR", "Al",   "Bl",  "Ar",   "Br", "Sigma", "Dagger", "Tau"};

FreeElement scale_by_degree(const FreeElement& e, int per_x, int per_y) {
  FreeElement r;
  for (const auto& [w, c] : e) {
    auto [nx, ny] = w.bidegree();
    RatFunc f = c * RatFunc(LaurentPoly::q_power(per_x * nx + per_y * ny));
    r.add_term(w, f);
  }
  return r;
}

FreeElement delete_first(const FreeElement& e, Letter l) {
  FreeElement r;
  for (const auto& [w, c] : e)
    if (!w.is_empty() && w.first() == l) r.add_term(w.drop_first(), c);
  return r;
}

FreeElement delete_last(const FreeElement& e, Letter l) {
  FreeElement r;
  for (const auto& [w, c] : e)
    if (!w.is_empty() && w.last() == l) r.add_term(w.drop_last(), c);
  return r;
}

}  // namespace

const char* op_name(Op op) { return kOpNames[static_cast<std::size_t>(op)]; }

std::optional<Op> op_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kOpNames.size(); ++i)
    if (name == kOpNames[i]) return static_cast<Op>(i);
  return std::nullopt;
}

FreeElement apply_op(Op op, const FreeElement& e, Shuffler& sh) {
  switch (op) {
    case Op::X: return scale_by_degree(e, 1, 0);
    case Op::Xinv: return scale_by_degree(e, -1, 0);
    case Op::Y: return scale_by_degree(e, 0, 1);
    case Op::Yinv: return scale_by_degree(e, 0, -1);
    case Op::K: return scale_by_degree(e, 2, -2);
    case Op::Kinv: return scale_by_degree(e, -2, 2);
    case Op::AstarL: return delete_first(e, Letter::x);
    case Op::BstarL: return delete_first(e, Letter::y);
    case Op::AstarR: return delete_last(e, Letter::x);
    case Op::BstarR: return delete_last(e, Letter::y);
    case Op::Aell: return sh.shuffle_left(Letter::x, e);
    case Op::Bell: return sh.shuffle_left(Letter::y, e);
    case Op::Ar: return sh.shuffle_right(e, Letter::x);
    case Op::Br: return sh.shuffle_right(e, Letter::y);
    case Op::Sigma: return e.sigma();
    case Op::Dagger: return e.dagger();
    case Op::Tau: return e.tau();
  }
  throw std::logic_error("unknown operator");
}

FreeElement apply_word(const std::vector<Op>& ops, const FreeElement& e, Shuffler& sh) {
  FreeElement r = e;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) r = apply_op(*it, r, sh);
  return r;
}

FreeElement apply_expr(const OpExpr& expr, const FreeElement& e, Shuffler& sh) {
  FreeElement r;
  for (const OpTerm& t : expr) {
    if (t.coeff.is_zero()) continue;
    FreeElement v = apply_word(t.ops, e, sh);
    r.add_scaled(v, t.coeff);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Relation parsing

namespace {

std::string_view trim_view(std::string_view v) {
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
  return v;
}

std::vector<std::string_view> split_terms(std::string_view side) {
  std::vector<std::string_view> parts;
  int depth = 0;
  char prev = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < side.size(); ++i) {
    const char c = side[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    const bool operand_end = std::isalnum(static_cast<unsigned char>(prev)) ||
                             prev == ')' || prev == ']';
    if ((c == '+' || c == '-') && depth == 0 && operand_end && prev != '^') {
      parts.push_back(side.substr(start, i - start));
      start = i;
    }
    prev = c;
  }
  parts.push_back(side.substr(start));
  return parts;
}

OpExpr parse_side(std::string_view side) {
  side = trim_view(side);
  if (side == "0") return {};
  OpExpr expr;
  for (std::string_view term : split_terms(side)) {
    term = trim_view(term);
    if (term.empty()) throw std::invalid_argument("empty term");
    RatFunc sign(1);
    if (term.front() == '+' || term.front() == '-') {
      if (term.front() == '-') sign = RatFunc(-1);
      term = trim_view(term.substr(1));
    }
    // first '*' at depth 0 separates an optional scalar from the op word
    int depth = 0;
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 0; i < term.size() && split == std::string_view::npos; ++i) {
      if (term[i] == '(' || term[i] == '[') ++depth;
      if (term[i] == ')' || term[i] == ']') --depth;
      if (term[i] == '*' && depth == 0) split = i;
    }
    OpTerm t;
    t.coeff = sign;
    std::string_view opspart = term;
    if (split != std::string_view::npos) {
      t.coeff = sign * parse_scalar(trim_view(term.substr(0, split)));
      opspart = trim_view(term.substr(split + 1));
    }
    // whitespace-separated op factors
    std::istringstream is{std::string(opspart)};
    std::string tok;
    bool any = false;
    while (is >> tok) {
      any = true;
      if (tok == "I") continue;  // identity factor
      int rep = 1;
      std::string base = tok;
      if (auto caret = tok.find('^'); caret != std::string::npos) {
        base = tok.substr(0, caret);
        rep = std::stoi(tok.substr(caret + 1));
        if (rep < 0) throw std::invalid_argument("negative operator power: " + tok);
      }
      auto op = op_from_name(base);
      if (!op) throw std::invalid_argument("unknown operator: " + base);
      for (int k = 0; k < rep; ++k) t.ops.push_back(*op);
    }
    if (!any) {
      // scalar-only term acts as scalar * identity
      if (split == std::string_view::npos)
        throw std::invalid_argument("term without operators: " + std::string(term));
    }
    expr.push_back(std::move(t));
  }
  return expr;
}

}  // namespace

std::optional<OpRelation> parse_relation_line(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  line = trim_view(line);
  if (line.empty()) return std::nullopt;
  const auto eq = line.find('=');
  if (eq == std::string_view::npos)
    throw std::invalid_argument("relation line without '='");
  OpRelation rel;
  rel.text = std::string(trim_view(line));
  rel.lhs = parse_side(line.substr(0, eq));
  rel.rhs = parse_side(line.substr(eq + 1));
  return rel;
}

std::vector<OpRelation> parse_relations(std::istream& in) {
  std::vector<OpRelation> rels;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    try {
      if (auto rel = parse_relation_line(line)) rels.push_back(std::move(*rel));
    } catch (const std::exception& ex) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + ex.what());
    }
  }
  return rels;
}

std::vector<OpRelation> load_relations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open relation fixture: " + path);
  return parse_relations(in);
}

FreeElement relation_residual(const OpRelation& rel, const FreeElement& e, Shuffler& sh) {
  FreeElement l = apply_expr(rel.lhs, e, sh);
  l -= apply_expr(rel.rhs, e, sh);
  return l;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

std::vector<Word> words_up_to(int maxlen) {
  std::vector<Word> out;
  out.push_back(Word::empty());
  for (int n = 1; n <= maxlen; ++n)
    for (int r = n; r >= 0; --r)
      for (Word w : words_of_bidegree(r, n - r)) out.push_back(w);
  return out;
}

}  // namespace

Report check_relations_on_words(const std::string& title,
                                const std::vector<OpRelation>& rels, int maxlen,
                                Shuffler& sh, int threads) {
  Report rep;
  rep.title = title;
  const std::vector<Word> words = words_up_to(maxlen);
  for (const OpRelation& rel : rels) {
    std::vector<int> fail(words.size(), 0);
    std::vector<std::string> why(words.size());
    parallel_for(words.size(), threads, [&](std::size_t i) {
      FreeElement res = relation_residual(rel, FreeElement::from_word(words[i]), sh);
      if (!res.is_zero()) {
        fail[i] = 1;
        why[i] = "on " + words[i].str() + ": residual " + res.str();
      }
    });
    std::string details = "all " + std::to_string(words.size()) + " words of length <= " +
                          std::to_string(maxlen);
    bool pass = true;
    for (std::size_t i = 0; i < words.size(); ++i)
      if (fail[i]) {
        pass = false;
        details = why[i];
        break;
      }
    rep.add(rel.text, pass, details);
  }
  return rep;
}

Report check_relations_on_elements(const std::string& title,
                                   const std::vector<OpRelation>& rels,
                                   const std::vector<FreeElement>& elems,
                                   const std::vector<std::string>& labels,
                                   Shuffler& sh, int threads) {
  Report rep;
  rep.title = title;
  for (const OpRelation& rel : rels) {
    std::vector<int> fail(elems.size(), 0);
    std::vector<std::string> why(elems.size());
    parallel_for(elems.size(), threads, [&](std::size_t i) {
      FreeElement res = relation_residual(rel, elems[i], sh);
      if (!res.is_zero()) {
        fail[i] = 1;
        why[i] = "on " + (i < labels.size() ? labels[i] : elems[i].str()) +
                 ": residual " + res.str();
      }
    });
    std::string details = "all " + std::to_string(elems.size()) + " vectors";
    bool pass = true;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (fail[i]) {
        pass = false;
        details = why[i];
        break;
      }
    rep.add(rel.text, pass, details);
  }
  return rep;
}

ReachOne reach_one(const FreeElement& e, bool from_left) {
  ReachOne out;
  if (e.is_zero()) return out;
  FreeElement cur = e;
  Shuffler sh(0);  // starred maps never shuffle; context unused
  const Op a = from_left ? Op::AstarL : Op::AstarR;
  const Op b = from_left ? Op::BstarL : Op::BstarR;
  while (true) {
    // done when cur is a multiple of the empty word
    if (cur.support_size() == 1 && cur.begin()->first.is_empty()) {
      out.ok = true;
      out.scalar = cur.begin()->second;
      return out;
    }
    FreeElement na = apply_op(a, cur, sh);
    if (!na.is_zero()) {
      out.ops.push_back(a);
      cur = std::move(na);
      continue;
    }
    FreeElement nb = apply_op(b, cur, sh);
    if (nb.is_zero()) return out;  // only reachable from 0
    out.ops.push_back(b);
    cur = std::move(nb);
  }
}

}  // namespace qsh
