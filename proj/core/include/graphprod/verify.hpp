#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "graphprod/graph.hpp"
#include "graphprod/kernels.hpp"

namespace gp {

struct SuiteOptions {
  int radius = -1;        // ball radius; per-suite default when negative
  int max_word_len = -1;  // raw word length for the normal-form suite
  int d_max = -1;
  double eps = 0.25;
  const PhiTables* phi = nullptr;  // nullptr: phi identically 1
  unsigned seed = 0;
  std::size_t max_ball = 200000;
};

struct CheckResult {
  std::string claim;
  bool pass = false;
  double measured = 0;
  double bound = 0;
  double tolerance = 0;
};

struct SuiteReport {
  std::string suite;
  std::string instance;
  std::vector<CheckResult> checks;
  double runtime_seconds = 0;

  bool passed() const;
  std::string to_json() const;
};

extern const std::vector<std::string> kSuiteNames;

/// Runs one named verification suite against a loaded instance.
/// Throws SpecError for unknown suite names.
SuiteReport run_suite(const std::string& name, const ProductSpec& spec,
                      const SuiteOptions& opts = {});

}  // namespace gp
