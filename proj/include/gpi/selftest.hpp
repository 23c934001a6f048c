#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gpi/grading.hpp"
#include "gpi/scalar.hpp"

namespace gpi {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string message;  // first failure, or a note when a suite was scaled down
};

struct SelftestOptions {
  std::uint64_t seed = 1;
  CoeffRing ring = CoeffRing::rationals();
  std::size_t random_words = 300;
  std::size_t random_polynomials = 120;
  std::size_t exhaustive_degree = 4;
  std::size_t exhaustive_budget = 200'000;  // words, per exhaustive suite
};

/// Property suites of every module against one grading. Deterministic given the options.
std::vector<SuiteResult> run_selftest(const Grading& grading, const SelftestOptions& options = {});

}  // namespace gpi
