#include <catch_amalgamated.hpp>

#include <cmath>

#include "oracle_values.hpp"
#include "tfu/catalog.hpp"
#include "tfu/error.hpp"
#include "tfu/theorems.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinRel;

namespace {

const tfu::Grid kGrid = tfu::uniform_grid(256, -8.0, 8.0);
const std::vector<double> kZero(256, 0.0);

}  // namespace

TEST_CASE("case names", "[theorems]") {
  CHECK(tfu::to_string(tfu::TheoremCase::T3) == "T3");
  CHECK(tfu::parse_theorem_case("T4") == tfu::TheoremCase::T4);
  CHECK_THROWS_AS(tfu::parse_theorem_case("T5"), tfu::FormatError);
  CHECK(tfu::to_string(tfu::Verdict::equality) == "equality");
  CHECK_THAT(tfu::real_bound(1), WithinRel(oracle::kBoundReal, 1e-15));
  CHECK_THAT(tfu::real_bound(2), WithinRel(4.0 * oracle::kBoundReal, 1e-15));
}

TEST_CASE("T1 equality for the optimal Gaussian", "[theorems]") {
  const tfu::BoundReport b =
      tfu::verify_theorem(tfu::TheoremCase::T1, tfu::catalog::gaussian(kGrid), tfu::Kernel::unit(), kZero, kZero);
  CHECK(b.verdict == tfu::Verdict::equality);
  CHECK_THAT(b.theorem_bound_abscov, WithinRel(oracle::kT1Bound, 1e-12));
  CHECK_THAT(b.measured_product_C, WithinRel(oracle::kT1Bound, 1e-9));
  CHECK(b.tol == tfu::kEqualityTol);
}

TEST_CASE("T1 strict for Hermite-1", "[theorems]") {
  const tfu::BoundReport b =
      tfu::verify_theorem(tfu::TheoremCase::T1, tfu::catalog::hermite1(kGrid), tfu::Kernel::unit(), kZero, kZero);
  CHECK(b.verdict == tfu::Verdict::pass);
  CHECK(b.slack > 0.1 * b.theorem_bound_abscov);
}

TEST_CASE("T2 to T4 extremal pairs", "[theorems]") {
  const tfu::ChirpSignal chirp = tfu::catalog::gaussian_chirp(kGrid, 1.0);
  const tfu::Kernel c1 = tfu::kernels::chirp(1.0);
  const tfu::Kernel c2 = tfu::kernels::chirp(2.0);
  const auto g1 = tfu::kernel_phase_gradient(c1, kGrid);
  const auto g2 = tfu::kernel_phase_gradient(c2, kGrid);

  const tfu::BoundReport t2 = tfu::verify_theorem(tfu::TheoremCase::T2, chirp.signal, c2, chirp.grad_phase, g2);
  CHECK(t2.verdict == tfu::Verdict::equality);
  CHECK_THAT(t2.measured_product_C, WithinRel(oracle::kT2Product, 1e-9));

  const tfu::BoundReport t3 =
      tfu::verify_theorem(tfu::TheoremCase::T3, tfu::catalog::gaussian(kGrid), c2, kZero, g2);
  CHECK(t3.verdict == tfu::Verdict::equality);
  CHECK_THAT(t3.theorem_bound_abscov, WithinRel(oracle::kT3Bound, 1e-9));

  const tfu::BoundReport t4 = tfu::verify_theorem(tfu::TheoremCase::T4, chirp.signal, c1, chirp.grad_phase, g1);
  CHECK(t4.verdict == tfu::Verdict::equality);
  CHECK_THAT(t4.theorem_bound_abscov, WithinRel(oracle::kT4Bound, 1e-9));
  CHECK(t4.theorem_bound_cov <= t4.theorem_bound_abscov);
}

TEST_CASE("mismatched pairs name the failed precondition", "[theorems]") {
  const tfu::ChirpSignal chirp = tfu::catalog::gaussian_chirp(kGrid, 1.0);
  const tfu::Signal gauss = tfu::catalog::gaussian(kGrid);
  const tfu::Kernel c1 = tfu::kernels::chirp(1.0);
  const tfu::Kernel c2 = tfu::kernels::chirp(2.0);
  const auto g1 = tfu::kernel_phase_gradient(c1, kGrid);
  const auto g2 = tfu::kernel_phase_gradient(c2, kGrid);
  using tfu::TheoremCase;
  CHECK_THROWS_WITH(tfu::verify_theorem(TheoremCase::T1, chirp.signal, tfu::Kernel::unit(), chirp.grad_phase, kZero),
                    ContainsSubstring("T1 precondition failed"));
  CHECK_THROWS_WITH(tfu::verify_theorem(TheoremCase::T2, gauss, c2, kZero, g2), ContainsSubstring("T2"));
  CHECK_THROWS_WITH(tfu::verify_theorem(TheoremCase::T2, chirp.signal, c1, chirp.grad_phase, g1), ContainsSubstring("T2"));
  CHECK_THROWS_WITH(tfu::verify_theorem(TheoremCase::T3, gauss, tfu::kernels::constant(-1.0), kZero, kZero),
                    ContainsSubstring("T3"));
  CHECK_THROWS_WITH(tfu::verify_theorem(TheoremCase::T4, chirp.signal, c2, chirp.grad_phase, g2), ContainsSubstring("T4"));
  CHECK_THROWS_AS(tfu::verify_theorem(TheoremCase::T1, gauss, tfu::Kernel::page(), kZero, kZero), tfu::CaseViolation);
}

TEST_CASE("T1 accepts the negated constant kernel", "[theorems]") {
  const tfu::BoundReport b = tfu::verify_theorem(tfu::TheoremCase::T1, tfu::catalog::gaussian(kGrid),
                                                 tfu::kernels::constant(-1.0), kZero, kZero);
  CHECK(b.verdict == tfu::Verdict::equality);
}
