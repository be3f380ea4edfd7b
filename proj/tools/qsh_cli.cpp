// Command-line front end: exact computations in the q-shuffle algebra and
// the verification suites, with text or JSON output.
//
// Data commands print their result object; verification commands print one
// line per check and exit 0 only when everything passes (1 on failure, 2 on
// usage errors). Output is deterministic for identical inputs.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsh/parallel.hpp"
#include "qsh/repmodule.hpp"
#include "qsh/series.hpp"
#include "qsh/subalgebra.hpp"

using json = nlohmann::ordered_json;
using namespace qsh;

namespace {

constexpr int kMaxCap = 12;

struct Config {
  int max = 0;  // 0 = per-command default
  int maxlen = 0;
  int row = -1;  // presentation table filter, -1 = all
  int corner = -1;
  int threads = 1;
  std::string format = "text";
  std::string fixtures;
  std::string space = "U";
};

std::string fixture_dir(const Config& cfg) {
  if (!cfg.fixtures.empty()) return cfg.fixtures;
  if (const char* env = std::getenv("QSH_FIXTURES")) return env;
  return "fixtures";
}

int window_or(const Config& cfg, int dflt, int cap = kMaxCap) {
  const int w = cfg.max > 0 ? cfg.max : dflt;
  return w < cap ? w : cap;
}

json report_json(const std::string& command, const json& params, const Report& rep) {
  json results = json::array();
  for (const auto& r : rep.results)
    results.push_back({{"name", r.name},
                       {"status", r.pass ? "pass" : "fail"},
                       {"details", r.details}});
  return {{"command", command}, {"params", params}, {"results", results}};
}

int emit_report(const std::string& command, const json& params, const Report& rep,
                const Config& cfg) {
  if (cfg.format == "json")
    std::cout << report_json(command, params, rep).dump(2) << "\n";
  else
    std::cout << rep.to_text();
  return rep.all_pass() ? 0 : 1;
}

int emit_data(const json& obj, const std::string& text, const Config& cfg) {
  if (cfg.format == "json")
    std::cout << obj.dump(2) << "\n";
  else
    std::cout << text;
  return 0;
}

// --- verify targets --------------------------------------------------------

Report verify_shuffle(Shuffler& sh, const Config& cfg) {
  const int pair = window_or(cfg, 8);
  const int tri = cfg.max > 0 ? (cfg.max + 1 < 9 ? cfg.max + 1 : 9) : 9;
  return check_shuffle_algebra(sh, pair, tri, cfg.threads);
}

Report verify_appendix_a(UCache& u, const Config& cfg) {
  const std::string dir = fixture_dir(cfg);
  const int maxlen = cfg.maxlen > 0 ? (cfg.maxlen < 8 ? cfg.maxlen : 8)
                                    : window_or(cfg, 6, 8);
  const int window = window_or(cfg, 6, 8);
  Report rep;
  rep.title = "operator relations";
  rep.merge(check_relations_on_words(
      "global, words of length <= " + std::to_string(maxlen),
      load_relations(dir + "/appendix_a_global.rel"), maxlen, u.shuffler(),
      cfg.threads));
  const auto on_u = load_relations(dir + "/appendix_a_on_u.rel");
  std::vector<FreeElement> elems;
  std::vector<std::string> labels;
  for (int r = 0; r <= window; ++r)
    for (int s = 0; r + s <= window; ++s) {
      const EchelonBasis& b = u.component(r, s);
      for (int i = 0; i < b.dim(); ++i) {
        elems.push_back(b.vec(i));
        labels.push_back("basis(" + std::to_string(r) + "," + std::to_string(s) +
                         ")[" + std::to_string(i) + "]");
      }
    }
  rep.merge(check_relations_on_elements(
      "subalgebra bases, r+s <= " + std::to_string(window), on_u, elems, labels,
      u.shuffler(), cfg.threads));
  return rep;
}

Report verify_intertwiners(UCache& u, const Config& cfg) {
  const int maxlen = cfg.maxlen > 0 ? (cfg.maxlen < 8 ? cfg.maxlen : 8)
                                    : window_or(cfg, 7, 8);
  return check_relations_on_words(
      "intertwiners, words of length <= " + std::to_string(maxlen),
      load_relations(fixture_dir(cfg) + "/intertwiners.rel"), maxlen,
      u.shuffler(), cfg.threads);
}

Report verify_presentation_cmd(UCache& u, const Config& cfg) {
  const int window = window_or(cfg, 6);
  Report rep;
  rep.title = "presentation, window " + std::to_string(window);
  for (int v = 0; v < kNumActionTables; ++v) {
    if (cfg.row >= 0 && v != cfg.row) continue;
    rep.merge(variant_action_check(u, window, v));
  }
  return rep;
}

Report verify_basic_module(UCache& u, const Config& cfg) {
  const int window = window_or(cfg, 8);
  Report rep;
  rep.title = "basic module, window " + std::to_string(window);
  rep.merge(check_bold_routes(u, window));
  BoldUCache bold(u);
  rep.merge(check_bold_dimensions(bold, window, 6));
  rep.merge(highest_weight_check(u.shuffler()));
  rep.merge(weight_eigenvalue_check(u, bold, window));
  rep.merge(nonnilpotence_witness(u, bold, 4, window));
  rep.merge(generation_reach_check(bold, window));
  rep.merge(invariant_space_closure_check(u.shuffler(), window < 6 ? window : 6,
                                          3, 12345));
  return rep;
}

Report verify_appendix_c_cmd(UCache& u, const Config& cfg) {
  return verify_appendix_c(
      load_vector_table(fixture_dir(cfg) + "/appendix_c.txt"), u);
}

Report verify_appendix_d_cmd(UCache& u, const Config& cfg) {
  const std::string dir = fixture_dir(cfg);
  return verify_appendix_d(load_matrix_table(dir + "/appendix_d.txt"),
                           load_vector_table(dir + "/appendix_c.txt"), u);
}

Report verify_appendix_e_cmd(UCache& u, const Config& cfg) {
  return check_appendix_e(u, window_or(cfg, 7, 8));
}

Report verify_series(UCache& u, const Config& cfg) {
  const int cap = window_or(cfg, 12);
  Report rep;
  rep.title = "series identities, order " + std::to_string(cap);
  rep.merge(check_delta_identities(cap));
  rep.merge(check_max(cap));
  // The submodule-dimension identity needs the algebraic dims up to the
  // window; default to 8 unless a window was requested explicitly.
  const int window = cfg.max > 0 ? cap : (cap < 8 ? cap : 8);
  std::vector<std::vector<Int>> dims;
  BoldUCache bold(u);
  for (int r = 0; r <= window; ++r) {
    dims.emplace_back();
    for (int s = 0; r + s <= window; ++s)
      dims.back().push_back(Int(bold.dim(r, s)));
  }
  rep.merge(check_bold_dimension_series(window, dims));
  return rep;
}

Report verify_target(const std::string& target, UCache& u, const Config& cfg) {
  if (target == "shuffle") return verify_shuffle(u.shuffler(), cfg);
  if (target == "appendix-a") return verify_appendix_a(u, cfg);
  if (target == "intertwiners") return verify_intertwiners(u, cfg);
  if (target == "presentation") return verify_presentation_cmd(u, cfg);
  if (target == "basic-module") return verify_basic_module(u, cfg);
  if (target == "appendix-c") return verify_appendix_c_cmd(u, cfg);
  if (target == "appendix-d") return verify_appendix_d_cmd(u, cfg);
  if (target == "appendix-e") return verify_appendix_e_cmd(u, cfg);
  if (target == "series") return verify_series(u, cfg);
  // target == "all"
  Report rep;
  rep.title = "all suites";
  rep.merge(verify_shuffle(u.shuffler(), cfg));
  rep.merge(verify_appendix_a(u, cfg));
  rep.merge(verify_intertwiners(u, cfg));
  rep.merge(verify_presentation_cmd(u, cfg));
  rep.merge(verify_basic_module(u, cfg));
  rep.merge(verify_appendix_c_cmd(u, cfg));
  rep.merge(verify_appendix_d_cmd(u, cfg));
  rep.merge(verify_appendix_e_cmd(u, cfg));
  rep.merge(verify_series(u, cfg));
  return rep;
}

// --- data commands ---------------------------------------------------------

std::string dims_text(const std::vector<std::vector<int>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t s = 0; s < row.size(); ++s)
      out += (s ? " " : "") + std::to_string(row[s]);
    out += "\n";
  }
  return out;
}

int run_dims(UCache& u, const Config& cfg) {
  const int window = window_or(cfg, 8);
  const bool bold_space = cfg.space == "bold-U";
  BoldUCache bold(u);
  std::vector<std::vector<int>> rows;
  if (cfg.corner >= 0) {
    for (int r = 0; r <= cfg.corner; ++r) {
      rows.emplace_back();
      for (int s = 0; s <= cfg.corner; ++s)
        rows.back().push_back(bold_space ? bold.dim(r, s) : u.dim(r, s));
    }
  } else {
    for (int r = 0; r <= window; ++r) {
      rows.emplace_back();
      for (int s = 0; r + s <= window; ++s)
        rows.back().push_back(bold_space ? bold.dim(r, s) : u.dim(r, s));
    }
  }
  json params{{"space", cfg.space}};
  if (cfg.corner >= 0)
    params["corner"] = cfg.corner;
  else
    params["max"] = window;
  return emit_data({{"command", "dims"}, {"params", params}, {"dims", rows}},
                   dims_text(rows), cfg);
}

int run_basis(UCache& u, int r, int s, const Config& cfg) {
  const bool bold_space = cfg.space == "bold-U";
  BoldUCache bold(u);
  const EchelonBasis& b = bold_space ? bold.component(r, s) : u.component(r, s);
  if (cfg.format == "latex") {
    std::string out = "\\begin{aligned}\n";
    for (int i = 0; i < b.dim(); ++i)
      out += "v_{" + std::to_string(i) + "} &= " + b.vec(i).str(true) + " \\\\\n";
    out += "\\end{aligned}\n";
    std::cout << out;
    return 0;
  }
  json vectors = json::array();
  std::string text;
  for (int i = 0; i < b.dim(); ++i) {
    json terms = json::array();
    for (const auto& [w, c] : b.vec(i)) terms.push_back({w.str(), c.str()});
    vectors.push_back(terms);
    text += b.vec(i).str(true) + "\n";
  }
  return emit_data({{"r", r}, {"s", s}, {"dim", b.dim()}, {"vectors", vectors}},
                   text, cfg);
}

std::vector<std::pair<int, int>> parse_bidegree_list(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find('+', pos);
    if (next == std::string::npos) next = s.size();
    const std::string part = s.substr(pos, next - pos);
    const std::size_t comma = part.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("bidegree list: expected r,s in '" + part + "'");
    out.emplace_back(std::stoi(part.substr(0, comma)),
                     std::stoi(part.substr(comma + 1)));
    pos = next + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty bidegree list");
  return out;
}

int run_matrix(UCache& u, const std::string& gen, const std::string& from,
               const std::string& to, const Config& cfg) {
  const auto g = gen_from_name(gen);
  if (!g) throw CLI::ValidationError("--gen", "unknown generator '" + gen + "'");
  const auto table = load_vector_table(fixture_dir(cfg) + "/appendix_c.txt");
  auto views = [&](const std::string& list) {
    std::vector<CoordBasis> owners;
    for (auto [r, s] : parse_bidegree_list(list)) {
      auto it = table.find({r, s});
      if (it == table.end())
        throw CLI::ValidationError(
            "matrix", "no golden basis for (" + std::to_string(r) + "," +
                          std::to_string(s) + ")");
      owners.push_back(CoordBasis::build(it->second));
    }
    return owners;
  };
  const auto dom_owners = views(from);
  const auto cod_owners = views(to);
  std::vector<BasisView> dom, cod;
  for (const auto& b : dom_owners) dom.push_back(BasisView::of(b));
  for (const auto& b : cod_owners) cod.push_back(BasisView::of(b));
  Shuffler& sh = u.shuffler();
  const BlockResult block = graded_matrix(
      [&](const FreeElement& e) { return act(0, *g, e, sh); }, dom, cod);
  if (!block.ok) {
    std::cerr << "matrix: " << block.error << "\n";
    return 1;
  }
  json rows = json::array();
  std::string text;
  for (const auto& row : block.m) {
    json jrow = json::array();
    for (std::size_t j = 0; j < row.size(); ++j) {
      jrow.push_back(row[j].pretty());
      text += (j ? ", " : "") + row[j].pretty();
    }
    rows.push_back(jrow);
    text += "\n";
  }
  return emit_data({{"command", "matrix"},
                    {"params", {{"gen", gen}, {"from", from}, {"to", to}}},
                    {"entries", rows}},
                   text, cfg);
}

int run_genfunc(const std::string& which, const Config& cfg) {
  const int cap = window_or(cfg, 8);
  json data;
  std::string text;
  auto bi_out = [&](const BiSeries& f) {
    json rows = json::array();
    for (int r = 0; r <= cap; ++r) {
      json row = json::array();
      for (int s = 0; r + s <= cap; ++s) {
        row.push_back(f.coeff(r, s).get_str());
        text += (s ? " " : "") + f.coeff(r, s).get_str();
      }
      rows.push_back(row);
      text += "\n";
    }
    data = rows;
  };
  auto uni_out = [&](const std::vector<Int>& v) {
    json row = json::array();
    for (int n = 0; n <= cap; ++n) {
      row.push_back(v[static_cast<std::size_t>(n)].get_str());
      text += (n ? " " : "") + v[static_cast<std::size_t>(n)].get_str();
    }
    text += "\n";
    data = row;
  };
  if (which == "phi")
    bi_out(expand_phi(cap));
  else if (which == "delta")
    bi_out(expand_delta(cap));
  else if (which == "phi-weight")
    bi_out(expand_phi_weight(cap));
  else if (which == "p")
    uni_out(expand_p(cap));
  else
    uni_out(expand_mu(cap));  // "mu"
  return emit_data({{"command", "genfunc"},
                    {"params", {{"series", which}, {"max", cap}}},
                    {"coefficients", data}},
                   text, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-shuffle algebra computations and verification"};
  app.require_subcommand(1);

  Config cfg;
  std::string elem_a, elem_b, gen, from, to, target = "all", series = "phi";
  int br = 0, bs = 0;

  auto add_common = [&cfg](CLI::App* cmd, bool with_latex = false) {
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember(with_latex
                                  ? std::vector<std::string>{"text", "json", "latex"}
                                  : std::vector<std::string>{"text", "json"}));
    cmd->add_option("--max", cfg.max,
                    "Total-degree window (0 = per-command default)")
        ->check(CLI::Range(0, kMaxCap));
    cmd->add_option("--threads", cfg.threads, "Worker threads for sweeps")
        ->check(CLI::Range(1, 64));
    cmd->add_option("--fixtures", cfg.fixtures,
                    "Directory with the golden data files (default: env "
                    "QSH_FIXTURES, then ./fixtures)");
  };

  CLI::App* c_shuffle = app.add_subcommand("shuffle", "Shuffle product of two elements");
  c_shuffle->add_option("a", elem_a, "First element")->required();
  c_shuffle->add_option("b", elem_b, "Second element")->required();
  add_common(c_shuffle);

  CLI::App* c_apply = app.add_subcommand("apply", "Apply a generator or basic map");
  c_apply->add_option("--gen", gen, "Generator (E0,F0,K0,...) or map (AsL,Al,...)")
      ->required();
  c_apply->add_option("--to", elem_a, "Element to act on")->required();
  add_common(c_apply);

  CLI::App* c_dims = app.add_subcommand("dims", "Graded dimension table");
  c_dims->add_option("--space", cfg.space, "U or bold-U")
      ->check(CLI::IsMember({"U", "bold-U"}));
  c_dims->add_option("--corner", cfg.corner, "Print the (corner+1)^2 square instead")
      ->check(CLI::Range(0, kMaxCap / 2));
  add_common(c_dims);

  CLI::App* c_basis = app.add_subcommand("basis", "Echelon basis of one component");
  c_basis->add_option("--space", cfg.space, "U or bold-U")
      ->check(CLI::IsMember({"U", "bold-U"}));
  c_basis->add_option("--r", br, "x-degree")->required()->check(CLI::Range(0, kMaxCap));
  c_basis->add_option("--s", bs, "y-degree")->required()->check(CLI::Range(0, kMaxCap));
  add_common(c_basis, /*with_latex=*/true);

  CLI::App* c_matrix =
      app.add_subcommand("matrix", "Generator matrix against the golden bases");
  c_matrix->add_option("--gen", gen, "Generator name")->required();
  c_matrix->add_option("--from", from, "Domain bidegrees, e.g. \"2,1+1,2\"")->required();
  c_matrix->add_option("--to", to, "Codomain bidegrees")->required();
  add_common(c_matrix);

  CLI::App* c_genfunc = app.add_subcommand("genfunc", "Generating series tables");
  c_genfunc->add_option("series", series, "phi|delta|p|mu|phi-weight")
      ->required()
      ->check(CLI::IsMember({"phi", "delta", "p", "mu", "phi-weight"}));
  add_common(c_genfunc);

  CLI::App* c_verify = app.add_subcommand("verify", "Run a verification suite");
  c_verify->add_option("target", target,
                       "shuffle|appendix-a|intertwiners|presentation|basic-module|"
                       "appendix-c|appendix-d|appendix-e|series|all")
      ->required()
      ->check(CLI::IsMember({"shuffle", "appendix-a", "intertwiners", "presentation",
                             "basic-module", "appendix-c", "appendix-d", "appendix-e",
                             "series", "all"}));
  c_verify->add_option("--maxlen", cfg.maxlen, "Word-length cap for exhaustive sweeps")
      ->check(CLI::Range(0, 8));
  c_verify->add_option("--row", cfg.row, "Restrict presentation to one action table")
      ->check(CLI::Range(0, kNumActionTables - 1));
  add_common(c_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Shuffler sh;
    UCache u(sh);
    if (c_shuffle->parsed()) {
      const FreeElement prod = sh.shuffle(parse_element(elem_a), parse_element(elem_b));
      return emit_data({{"command", "shuffle"},
                        {"params", {{"a", elem_a}, {"b", elem_b}}},
                        {"product", prod.str(true)}},
                       prod.str(true) + "\n", cfg);
    }
    if (c_apply->parsed()) {
      const FreeElement e = parse_element(elem_a);
      FreeElement img;
      if (const auto g = gen_from_name(gen))
        img = act(0, *g, e, sh);
      else if (const auto op = op_from_name(gen))
        img = apply_op(*op, e, sh);
      else
        throw CLI::ValidationError("--gen", "unknown name '" + gen + "'");
      return emit_data({{"command", "apply"},
                        {"params", {{"gen", gen}, {"to", elem_a}}},
                        {"image", img.str(true)}},
                       img.str(true) + "\n", cfg);
    }
    if (c_dims->parsed()) return run_dims(u, cfg);
    if (c_basis->parsed()) return run_basis(u, br, bs, cfg);
    if (c_matrix->parsed()) return run_matrix(u, gen, from, to, cfg);
    if (c_genfunc->parsed()) return run_genfunc(series, cfg);
    // verify
    const Report rep = verify_target(target, u, cfg);
    json params{{"target", target}};
    if (cfg.max > 0) params["max"] = cfg.max;
    if (cfg.maxlen > 0) params["maxlen"] = cfg.maxlen;
    if (cfg.row >= 0) params["row"] = cfg.row;
    return emit_report("verify", params, rep, cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
