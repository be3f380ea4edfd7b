// Benchmark comparing the serial reference path of the sweep kernels with
// the OpenMP path, on the relation sweeps and the shuffle-associativity
// sweep. Both paths must produce identical reports; timings are printed for
// each thread count.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qsh/operators.hpp"
#include "qsh/parallel.hpp"
#include "qsh/shuffle.hpp"

using namespace qsh;
using Clock = std::chrono::steady_clock;

namespace {

double run_relations(const std::vector<OpRelation>& rels, int maxlen, int threads,
                     std::string* digest) {
  Shuffler sh;  // fresh memo so every run does the same work
  const auto t0 = Clock::now();
  const Report rep = check_relations_on_words("sweep", rels, maxlen, sh, threads);
  const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  *digest = rep.to_text();
  return dt;
}

double run_shuffle(int pair_len, int tri_len, int threads, std::string* digest) {
  Shuffler sh;
  const auto t0 = Clock::now();
  const Report rep = check_shuffle_algebra(sh, pair_len, tri_len, threads);
  const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  *digest = rep.to_text();
  return dt;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "fixtures";
  const auto rels = load_relations(dir + "/appendix_a_global.rel");
  const int hw = hardware_threads();
  std::printf("hardware threads: %d\n", hw);

  bool ok = true;
  {
    std::string serial, parallel;
    const double t1 = run_relations(rels, 7, 1, &serial);
    const double tn = run_relations(rels, 7, hw, &parallel);
    ok = ok && serial == parallel;
    std::printf("relation sweep (36 relations, words <= 7): serial %.2f s, %d threads %.2f s, speedup %.2fx, reports %s\n",
                t1, hw, tn, t1 / tn, serial == parallel ? "identical" : "DIFFER");
  }
  {
    std::string serial, parallel;
    const double t1 = run_shuffle(7, 8, 1, &serial);
    const double tn = run_shuffle(7, 8, hw, &parallel);
    ok = ok && serial == parallel;
    std::printf("shuffle suite (pairs <= 7, triples <= 8): serial %.2f s, %d threads %.2f s, speedup %.2fx, reports %s\n",
                t1, hw, tn, t1 / tn, serial == parallel ? "identical" : "DIFFER");
  }
  return ok ? 0 : 1;
}
