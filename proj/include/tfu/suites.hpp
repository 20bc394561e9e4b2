#pragma once

// Batch verification suites behind `tfu verify --suite`.
//
//   lemmas    Moyal, Parseval, engine equivalence and its convergence, the
//             moment conversion identities, classical bounds and the
//             covariance ordering on random phase fields
//   theorems  the four distribution-domain bounds and their case dispatch
//   flandrin  the weak functional, its lower bound and kernel refusal
//   all       the three in order

#include <cstdint>
#include <string>

#include "tfu/report.hpp"

namespace tfu {

struct SuiteOptions {
  GridSpec grid;
  std::uint64_t seed = 7;
  double tol = 1e-3;
};

// Throws FormatError for an unknown suite name.
Report run_suite(const std::string& name, const SuiteOptions& opts);

// Individual suites append to an existing report.
void lemma_checks(Report& r, const SuiteOptions& opts);
void theorem_checks(Report& r, const SuiteOptions& opts);
void flandrin_checks(Report& r, const SuiteOptions& opts);

}  // namespace tfu
