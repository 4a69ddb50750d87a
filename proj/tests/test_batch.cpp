#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "momo/batch.hpp"

using momo::batch::parallel_map;
using momo::batch::resolve_jobs;

TEST_CASE("worker-count resolution") {
  CHECK(resolve_jobs(1) == 1);
  CHECK(resolve_jobs(3) == 3);
  CHECK(resolve_jobs(0) >= 1);  // all cores
  CHECK(resolve_jobs(-2) >= 1);
}

TEST_CASE("results land in input order regardless of worker count") {
  const int n = 500;
  std::function<std::string(int)> fn = [](int i) {
    // stagger the fast and slow items so threads finish out of order
    volatile double sink = 0;
    for (int k = 0; k < (i % 7) * 1000; ++k) sink += k;
    return "item-" + std::to_string(i);
  };
  const auto serial = parallel_map<std::string>(n, 1, fn);
  const auto threaded = parallel_map<std::string>(n, 4, fn);
  REQUIRE(serial.size() == n);
  CHECK(serial == threaded);
  CHECK(serial[17] == "item-17");

  CHECK(parallel_map<int>(0, 4, [](int) { return 1; }).empty());
}

TEST_CASE("first failure by index is rethrown") {
  std::function<int(int)> fn = [](int i) -> int {
    if (i == 3 || i == 40) throw std::runtime_error("boom " + std::to_string(i));
    return i;
  };
  for (int jobs : {1, 4}) {
    CHECK_THROWS_WITH_AS(parallel_map<int>(50, jobs, fn), "boom 3",
                         std::runtime_error);
  }
}
