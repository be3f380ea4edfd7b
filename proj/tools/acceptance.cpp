// Acceptance gate: the twelve exact criteria the artifact must satisfy, one
// PASS/FAIL line each. All comparisons are symbolic over Q(q) or integer;
// there are no tolerances. Exit status 0 only when every criterion passes.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qsh/repmodule.hpp"
#include "qsh/series.hpp"
#include "qsh/shuffle.hpp"
#include "qsh/subalgebra.hpp"

using namespace qsh;

namespace {

std::string first_failure(const Report& rep) {
  for (const auto& r : rep.results)
    if (!r.pass) {
      std::string s = r.name;
      if (!r.details.empty()) s += ": " + r.details;
      return s;
    }
  return {};
}

bool from_report(const Report& rep, std::string& why) {
  why = first_failure(rep);
  return rep.all_pass();
}

// Frozen 7x7 corner of the subalgebra dimension table.
const int kDimRef[7][7] = {
    {1, 1, 1, 1, 1, 1, 1},      {1, 2, 3, 3, 3, 3, 3},
    {1, 3, 6, 8, 9, 9, 9},      {1, 3, 8, 14, 19, 21, 22},
    {1, 3, 9, 19, 32, 42, 48},  {1, 3, 9, 21, 42, 66, 87},
    {1, 3, 9, 22, 48, 87, 134}};

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "fixtures";

  Shuffler sh;
  UCache u(sh);
  BoldUCache bold(u);

  struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
  };

  const std::vector<Criterion> criteria = {
      {"subalgebra dimension table: window 8 vs series, 7x7 corner vs frozen",
       [&](std::string& why) {
         const BiSeries phi = expand_phi(8);
         for (int r = 0; r <= 8; ++r)
           for (int s = 0; r + s <= 8; ++s)
             if (phi.coeff(r, s) != u.dim(r, s)) {
               why = "series mismatch at (" + std::to_string(r) + "," +
                     std::to_string(s) + ")";
               return false;
             }
         for (int r = 0; r <= 6; ++r)
           for (int s = 0; s <= 6; ++s)
             if (u.dim(r, s) != kDimRef[r][s]) {
               why = "corner mismatch at (" + std::to_string(r) + "," +
                     std::to_string(s) + "): dim " + std::to_string(u.dim(r, s)) +
                     ", reference " + std::to_string(kDimRef[r][s]);
               return false;
             }
         return true;
       }},
      {"submodule dimension table: partition formula on window 8, frozen 7x7 corner",
       [&](std::string& why) {
         return from_report(check_bold_dimensions(bold, 8, 6), why);
       }},
      {"submodule routes: intersection = generation on window 8",
       [&](std::string& why) { return from_report(check_bold_routes(u, 8), why); }},
      {"shuffle algebra: q-Serre residuals, dual recursions, associativity <= 9",
       [&](std::string& why) {
         return from_report(check_shuffle_algebra(sh, 8, 9, 1), why);
       }},
      {"operator relations: global on words <= 6, starred Serre on bases <= 6",
       [&](std::string& why) {
         Report rep = check_relations_on_words(
             "global", load_relations(dir + "/appendix_a_global.rel"), 6, sh, 1);
         const auto on_u = load_relations(dir + "/appendix_a_on_u.rel");
         std::vector<FreeElement> elems;
         std::vector<std::string> labels;
         for (int r = 0; r <= 6; ++r)
           for (int s = 0; r + s <= 6; ++s) {
             const EchelonBasis& b = u.component(r, s);
             for (int i = 0; i < b.dim(); ++i) {
               elems.push_back(b.vec(i));
               labels.push_back("basis(" + std::to_string(r) + "," +
                                std::to_string(s) + ")[" + std::to_string(i) + "]");
             }
           }
         rep.merge(check_relations_on_elements("on bases", on_u, elems, labels, sh, 1));
         return from_report(rep, why);
       }},
      {"presentation: all relations on bases <= 6, all four action tables + twists",
       [&](std::string& why) {
         Report rep;
         for (int v = 0; v < kNumActionTables; ++v)
           rep.merge(variant_action_check(u, 6, v));
         return from_report(rep, why);
       }},
      {"highest-weight data and weight eigenvalues on window 8",
       [&](std::string& why) {
         Report rep = highest_weight_check(sh);
         rep.merge(weight_eigenvalue_check(u, bold, 8));
         return from_report(rep, why);
       }},
      {"golden basis tables: parse, membership, support, independence, dimension",
       [&](std::string& why) {
         return from_report(
             verify_appendix_c(load_vector_table(dir + "/appendix_c.txt"), u), why);
       }},
      {"golden action matrices: every block entrywise in the listed bases",
       [&](std::string& why) {
         return from_report(
             verify_appendix_d(load_matrix_table(dir + "/appendix_d.txt"),
                               load_vector_table(dir + "/appendix_c.txt"), u),
             why);
       }},
      {"ladder pairs: surjective deletions, injective raisings, kernel towers <= 7",
       [&](std::string& why) { return from_report(check_appendix_e(u, 7), why); }},
      {"generating series: factorizations, stabilization, golden rows, dim identity to order 12",
       [&](std::string& why) {
         Report rep = check_delta_identities(12);
         rep.merge(check_max(12));
         {
           const std::vector<long> p_ref = {1, 1, 2, 3, 5, 7, 11};
           const std::vector<long> mu_ref = {1, 3, 9, 22, 51, 108, 221};
           const auto p = expand_p(6);
           const auto pr = partition_numbers(6);
           const auto mu = expand_mu(6);
           bool ok = true;
           for (int n = 0; n <= 6 && ok; ++n)
             ok = p[static_cast<std::size_t>(n)] == p_ref[static_cast<std::size_t>(n)] &&
                  pr[static_cast<std::size_t>(n)] == p_ref[static_cast<std::size_t>(n)] &&
                  mu[static_cast<std::size_t>(n)] == mu_ref[static_cast<std::size_t>(n)];
           rep.add("golden partition and cube rows", ok);
         }
         {
           const BiSeries w = expand_phi_weight(10);
           bool ok = true;
           for (int r = 0; r <= 10 && ok; ++r)
             for (int s = 0; r + s <= 10; ++s) {
               const bool leading = (r == 0 && s == 0) || (r == 1 && s == 0) ||
                                    (r == 1 && s == 2) || (r == 4 && s == 2) ||
                                    (r == 4 && s == 6);
               if (w.coeff(r, s) != (leading ? 1 : 0)) {
                 ok = false;
                 break;
               }
             }
           rep.add("weight-series leading terms", ok);
         }
         {
           std::vector<std::vector<Int>> dims;
           for (int r = 0; r <= 12; ++r) {
             dims.emplace_back();
             for (int s = 0; r + s <= 12; ++s) dims.back().push_back(Int(bold.dim(r, s)));
           }
           rep.merge(check_bold_dimension_series(12, dims));
         }
         return from_report(rep, why);
       }},
      {"nilpotence on the submodule vs free iteration outside it (k <= 4, window 8)",
       [&](std::string& why) {
         Report rep = nonnilpotence_witness(u, bold, 4, 8);
         rep.merge(generation_reach_check(bold, 8));
         return from_report(rep, why);
       }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string why;
    bool ok = false;
    try {
      ok = criteria[i].run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("%s  %2zu  %s%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                why.empty() ? "" : " -- ", why.c_str());
    std::fflush(stdout);
  }
  if (failures) std::printf("%d of 12 criteria failed\n", failures);
  else std::printf("all 12 criteria passed\n");
  return failures ? 1 : 0;
}
