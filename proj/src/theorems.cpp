#include "tfu/theorems.hpp"

#include <cmath>
#include <numbers>

#include "tfu/analysis.hpp"
#include "tfu/error.hpp"

namespace tfu {

std::string to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::T1:
      return "T1";
    case TheoremCase::T2:
      return "T2";
    case TheoremCase::T3:
      return "T3";
    case TheoremCase::T4:
      return "T4";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::equality:
      return "equality";
  }
  return "?";
}

TheoremCase parse_theorem_case(const std::string& s) {
  if (s == "T1") return TheoremCase::T1;
  if (s == "T2") return TheoremCase::T2;
  if (s == "T3") return TheoremCase::T3;
  if (s == "T4") return TheoremCase::T4;
  throw FormatError("unknown theorem case '" + s + "' (expected T1..T4)");
}

double real_bound(std::size_t dim) {
  const auto n = static_cast<double>(dim);
  return n * n / (16.0 * std::numbers::pi * std::numbers::pi);
}

namespace {

bool is_real(const Signal& f) {
  double worst = 0.0;
  for (const cplx& v : f.samples()) worst = std::max(worst, std::abs(v.imag()));
  return worst <= kRealTol * f.peak();
}

// +1 or -1 when phi_t is that constant on every node of f's grid, else 0.
int constant_sign(const Kernel& k, const Grid& g) {
  std::vector<double> t(g.dim());
  int sign = 0;
  for (std::size_t i = 0; i < g.total(); ++i) {
    g.node(i, t);
    const cplx v = k.time_value(t);
    const int s = std::abs(v - 1.0) <= kRealTol ? 1 : std::abs(v + 1.0) <= kRealTol ? -1 : 0;
    if (s == 0 || (sign != 0 && s != sign)) return 0;
    sign = s;
  }
  return sign;
}

// phi_t conj(f / |f|) is the same constant +1 or -1 wherever f is
// non-negligible.
bool kernel_matches_phase(const Kernel& k, const Signal& f) {
  const Grid& g = f.grid();
  const double floor = kPhaseMaskThreshold * f.peak();
  std::vector<double> t(g.dim());
  int sign = 0;
  for (std::size_t i = 0; i < g.total(); ++i) {
    const double a = std::abs(f[i]);
    if (a <= floor) continue;
    g.node(i, t);
    const cplx r = k.time_value(t) * std::conj(f[i] / a);
    const int s = std::abs(r - 1.0) <= kPhaseMatchTol ? 1 : std::abs(r + 1.0) <= kPhaseMatchTol ? -1 : 0;
    if (s == 0 || (sign != 0 && s != sign)) return false;
    sign = s;
  }
  return sign != 0;
}

void require(bool ok, TheoremCase c, const std::string& what) {
  if (!ok) throw CaseViolation(to_string(c) + " precondition failed: " + what);
}

}  // namespace

BoundReport verify_theorem(TheoremCase c, const Signal& f, const Kernel& k, std::span<const double> grad_f,
                           std::span<const double> grad_phi, double tol, EngineOptions opts) {
  if (!k.has_time_form()) {
    throw CaseViolation(to_string(c) + " precondition failed: kernel '" + k.tag() + "' is not a time multiplier");
  }
  if (grad_f.size() != grad_phi.size()) throw DimensionError("phase gradients of f and the kernel differ in size");
  const bool f_real = is_real(f);
  switch (c) {
    case TheoremCase::T1:
      require(f_real, c, "f must be real-valued");
      require(constant_sign(k, f.grid()) != 0, c, "kernel must be the constant +1 or -1");
      break;
    case TheoremCase::T2:
      require(!f_real, c, "f must be complex-valued");
      require(!kernel_matches_phase(k, f), c, "kernel must differ from +-exp(2 pi i phase_f)");
      break;
    case TheoremCase::T3:
      require(f_real, c, "f must be real-valued");
      require(constant_sign(k, f.grid()) == 0, c, "kernel must not be the constant +1 or -1");
      break;
    case TheoremCase::T4:
      require(kernel_matches_phase(k, f), c, "kernel must equal +-exp(2 pi i phase_f)");
      break;
  }

  const Signal g = conjugate_multiplier(k, f);
  std::vector<double> grad_g(grad_f.size());
  for (std::size_t i = 0; i < grad_g.size(); ++i) grad_g[i] = grad_f[i] - grad_phi[i];

  BoundReport r;
  r.kase = c;
  r.tol = tol;
  r.b_real = real_bound(f.grid().dim());
  r.b_cov_f = r.b_real + std::pow(covariance(f, grad_f), 2);
  r.b_abscov_f = r.b_real + std::pow(abs_covariance(f, grad_f), 2);
  r.b_cov_fphi = r.b_real + std::pow(covariance(g, grad_g), 2);
  r.b_abscov_fphi = r.b_real + std::pow(abs_covariance(g, grad_g), 2);
  switch (c) {
    case TheoremCase::T1:
      r.theorem_bound_cov = r.theorem_bound_abscov = r.b_real / 4.0;
      break;
    case TheoremCase::T2:
      r.theorem_bound_cov = (r.b_cov_f + r.b_cov_fphi) / 8.0;
      r.theorem_bound_abscov = (r.b_abscov_f + r.b_abscov_fphi) / 8.0;
      break;
    case TheoremCase::T3:
      r.theorem_bound_cov = (r.b_real + r.b_cov_fphi) / 8.0;
      r.theorem_bound_abscov = (r.b_real + r.b_abscov_fphi) / 8.0;
      break;
    case TheoremCase::T4:
      r.theorem_bound_cov = (r.b_cov_f + r.b_real) / 8.0;
      r.theorem_bound_abscov = (r.b_abscov_f + r.b_real) / 8.0;
      break;
  }
  r.measured_product_C = distribution_moments(cctfd(f, k, opts)).product_C;
  r.slack = r.measured_product_C - r.theorem_bound_abscov;
  const double band = tol * r.theorem_bound_abscov;
  r.verdict = std::abs(r.slack) <= band ? Verdict::equality : r.slack >= -band ? Verdict::pass : Verdict::fail;
  return r;
}

}  // namespace tfu
