#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <vector>

#include "qsh/operators.hpp"
#include "qsh/parallel.hpp"
#include "qsh/shuffle.hpp"

using namespace qsh;

TEST_CASE("thread count is sane") { CHECK(hardware_threads() >= 1); }

TEST_CASE("every index runs exactly once on both paths") {
  for (int threads : {1, 4}) {
    std::vector<std::atomic<int>> hits(101);
    for (auto& h : hits) h = 0;
    parallel_for(hits.size(), threads, [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) CHECK(h == 1);
  }
  // empty sweep is a no-op
  parallel_for(0, 4, [](std::size_t) { REQUIRE(false); });
}

TEST_CASE("relation sweeps give byte-identical reports on both paths") {
  const auto rels = load_relations("fixtures/appendix_a_global.rel");
  Shuffler sh1, sh4;
  const Report serial = check_relations_on_words("sweep", rels, 5, sh1, 1);
  const Report threaded = check_relations_on_words("sweep", rels, 5, sh4, 4);
  CHECK(serial.all_pass());
  CHECK(serial.to_text() == threaded.to_text());
}

TEST_CASE("shuffle verification gives byte-identical reports on both paths") {
  Shuffler sh1, sh4;
  const Report serial = check_shuffle_algebra(sh1, 5, 6, 1);
  const Report threaded = check_shuffle_algebra(sh4, 5, 6, 4);
  CHECK(serial.all_pass());
  CHECK(serial.to_text() == threaded.to_text());
}
