#pragma once

// Lower bounds on the distribution-domain uncertainty product for
// time-multiplier kernels, in four cases by whether f and f conj(phi_t) are
// real or complex:
//
//   T1  f real, phi_t = +-1                      bound  B / 4
//   T2  f complex, phi_t != +-exp(2 pi i phase_f) bound (b_f + b_fphi) / 8
//   T3  f real, phi_t != +-1                      bound (B + b_fphi) / 8
//   T4  phi_t = +-exp(2 pi i phase_f)             bound (b_f + B) / 8
//
// with B = N^2 / (16 pi^2) and b_g = B + Cov_g^2 (or B + COV_g^2 for the
// tighter absolute-covariance bound).

#include <span>
#include <string>

#include "tfu/engine.hpp"
#include "tfu/kernels.hpp"

namespace tfu {

enum class TheoremCase { T1, T2, T3, T4 };
enum class Verdict { pass, fail, equality };

std::string to_string(TheoremCase c);
std::string to_string(Verdict v);
// Throws FormatError for anything but T1..T4.
TheoremCase parse_theorem_case(const std::string& s);

struct BoundReport {
  TheoremCase kase = TheoremCase::T1;
  double b_real = 0.0;
  double b_cov_f = 0.0;
  double b_abscov_f = 0.0;
  double b_cov_fphi = 0.0;
  double b_abscov_fphi = 0.0;
  double theorem_bound_cov = 0.0;
  double theorem_bound_abscov = 0.0;
  double measured_product_C = 0.0;
  double slack = 0.0;  // measured - theorem_bound_abscov
  Verdict verdict = Verdict::fail;
  double tol = 0.0;
};

// Realness threshold relative to the peak magnitude.
inline constexpr double kRealTol = 1e-9;
// Pointwise tolerance for phi_t = +-exp(2 pi i phase_f).
inline constexpr double kPhaseMatchTol = 1e-6;
inline constexpr double kEqualityTol = 1e-3;

double real_bound(std::size_t dim);

// Checks the case preconditions (CaseViolation naming the failed one), then
// measures the product of cctfd(f, k) and assembles the bounds. grad_f is
// the phase gradient of f, grad_phi that of the kernel; f conj(phi_t) has
// gradient grad_f - grad_phi. The verdict is judged against the
// absolute-covariance bound: equality when |slack| <= tol x bound, pass when
// slack >= -tol x bound.
BoundReport verify_theorem(TheoremCase c, const Signal& f, const Kernel& k, std::span<const double> grad_f,
                           std::span<const double> grad_phi, double tol = kEqualityTol, EngineOptions opts = {});

}  // namespace tfu
