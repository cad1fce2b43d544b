#include "doctest.h"
#include "thyp/selftest.hpp"

using namespace thyp;

TEST_CASE("selftest suites pass at reduced scale") {
  for (std::uint64_t seed : {1u, 2u}) {
    for (const CheckResult& r : run_selftest({seed, 0.05})) {
      INFO(r.suite << " " << r.name << " " << r.first_failure);
      CHECK(r.passed());
    }
  }
}
