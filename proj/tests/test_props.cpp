#include <doctest.h>

#include <cstdlib>
#include <string>

#include "property_suite.hpp"

using namespace hilden;

TEST_CASE("randomized word-problem invariants hold") {
  PropertyConfig cfg;
  if (const char* seed = std::getenv("HILDEN_PROP_SEED"))
    cfg.seed = std::strtoull(seed, nullptr, 0);
  if (const char* iters = std::getenv("HILDEN_PROP_ITERS"))
    cfg.iterations = std::strtoll(iters, nullptr, 0);
  PropertyResult res = run_property_suite(cfg);
  CHECK(res.iterations == cfg.iterations);
  CHECK_MESSAGE(res.violations == 0, res.first_failure);
}
