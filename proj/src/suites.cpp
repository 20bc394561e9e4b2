#include "tfu/suites.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "tfu/analysis.hpp"
#include "tfu/catalog.hpp"
#include "tfu/engine.hpp"
#include "tfu/error.hpp"
#include "tfu/theorems.hpp"

namespace tfu {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::pair<std::string, Kernel>> unit_modulus_kernels() {
  return {{"unit", Kernel::unit()},
          {"krd", Kernel::kirkwood_rihaczek()},
          {"page", Kernel::page()},
          {"chirp(1)", kernels::chirp(1.0)}};
}

// 1 when `fn` throws CaseViolation, 0 when it returns normally.
double rejects(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const CaseViolation&) {
    return 1.0;
  }
  return 0.0;
}

double refuses(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const PreconditionError&) {
    return 1.0;
  }
  return 0.0;
}

Grid widened(const GridSpec& spec, double half_span) {
  const double h = std::max({half_span, std::abs(spec.lo), std::abs(spec.hi)});
  const double scale = h / std::max(std::abs(spec.lo), std::abs(spec.hi));
  return uniform_grid(spec.count, spec.lo * scale, spec.hi * scale);
}

}  // namespace

void lemma_checks(Report& r, const SuiteOptions& opts) {
  const Grid g = make_grid(opts.grid);
  const double tol = opts.tol;
  const double B = real_bound(1);

  catalog::Generator gen(opts.seed);
  std::vector<std::pair<Signal, Signal>> pairs;
  for (int i = 0; i < 5; ++i) {
    Signal a = gen.decaying_signal(g);
    Signal b = gen.decaying_signal(g);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  const Signal gauss = catalog::gaussian(g);
  const ChirpSignal chirp = catalog::gaussian_chirp(g, 1.0);
  const Signal herm = catalog::hermite1(g);

  for (const auto& [name, k] : unit_modulus_kernels()) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      r.checks.push_back(absolute_check("moyal " + name + " random pair " + std::to_string(i + 1),
                                        moyal_residual(pairs[i].first, pairs[i].second, k), 0.0, tol));
    }
    r.checks.push_back(absolute_check("moyal " + name + " orthogonal pair", moyal_residual(gauss, herm, k), 0.0, tol));
    r.checks.push_back(relative_check("parseval " + name + " gaussian", parseval_ratio(gauss, k), 1.0, tol));
    r.checks.push_back(relative_check("parseval " + name + " chirp", parseval_ratio(chirp.signal, k), 1.0, tol));
  }

  const std::vector<std::pair<std::string, Kernel>> multipliers = {
      {"1", Kernel::unit()}, {"chirp(1)", kernels::chirp(1.0)}, {"cubic(1)", kernels::cubic(1.0)}};
  for (const auto& [name, k] : multipliers) {
    const double dev = peak_relative_deviation(cctfd(gauss, k), cctfd_freq(gauss, k));
    r.checks.push_back(absolute_check("engine equivalence " + name, dev, 0.0, tol));
  }
  // Halving under refinement, measured where the deviation is still above
  // the round-off floor: M = 64 -> 128 on the suite span, band guard off.
  const EngineOptions skip{BandGuard::skip};
  auto deviation_at = [&](std::size_t M, const Kernel& k) {
    const Grid gm = uniform_grid(M, opts.grid.lo, opts.grid.hi);
    const Signal f = catalog::gaussian(gm);
    return peak_relative_deviation(cctfd(f, k, skip), cctfd_freq(f, k, skip));
  };
  for (const auto& [name, k] : multipliers) {
    const double ratio = deviation_at(64, k) / deviation_at(128, k);
    r.checks.push_back(lower_bound_check("engine convergence " + name + " M=64->128 ratio", ratio, 2.0, 0.0));
  }
  {
    const Kernel cubic = kernels::cubic(1.0);
    const double ratio = deviation_at(256, cubic) / deviation_at(512, cubic);
    r.checks.push_back(lower_bound_check("engine convergence cubic(1) M=256->512 ratio", ratio, 2.0, 0.0));
  }

  const std::vector<std::pair<std::string, Signal>> signals = {{"gaussian", gauss}, {"chirp", chirp.signal}};
  const std::vector<std::pair<std::string, Kernel>> identity_kernels = {{"1", Kernel::unit()},
                                                                       {"chirp(2)", kernels::chirp(2.0)}};
  for (const auto& [fname, f] : signals) {
    for (const auto& [kname, k] : identity_kernels) {
      const ConversionResiduals c = conversion_identities(f, k);
      const std::string tag = fname + " / " + kname;
      r.checks.push_back(relative_check("time spread conversion " + tag, c.spread_x.measured, c.spread_x.target, tol));
      r.checks.push_back(relative_check("frequency spread conversion " + tag, c.spread_w.measured, c.spread_w.target, tol));
      r.checks.push_back(relative_check("product conversion " + tag, c.product.measured, c.product.target, tol));
    }
  }

  for (const double zeta : {1.0 / (2.0 * kPi), 1.0, 4.0}) {
    const Grid gz = widened(opts.grid, 10.0 * std::sqrt(zeta));
    const double p = uncertainty_product_fourier(catalog::gaussian(gz, zeta));
    r.checks.push_back(relative_check("gaussian product zeta=" + std::to_string(zeta), p, B, tol));
  }

  {
    const double p = uncertainty_product_fourier(chirp.signal);
    const double cov = covariance(chirp.signal, chirp.grad_phase);
    r.checks.push_back(relative_check("chirp product", p, 2.0 * B, tol));
    r.checks.push_back(relative_check("chirp product vs covariance bound", p, B + cov * cov, tol));
  }
  {
    const ChirpSignal sgn = catalog::sgn_chirp(g);
    const double p = uncertainty_product_fourier(sgn.signal);
    const double cov = covariance(sgn.signal, sgn.grad_phase);
    const double abs_cov = abs_covariance(sgn.signal, sgn.grad_phase);
    r.checks.push_back(lower_bound_check("sgn chirp product vs absolute covariance bound", p, B + abs_cov * abs_cov, 0.0));
    r.checks.push_back(absolute_check("sgn chirp covariance", cov, 0.0, 1e-4));
    r.checks.push_back(strict_excess_check("sgn chirp absolute covariance bound over covariance bound",
                                           B + abs_cov * abs_cov, B + cov * cov, tol));
  }

  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100; ++i) {
    const Signal f = gen.decaying_signal(g);
    const std::vector<double> grad = gen.phase_field(g);
    worst = std::min(worst, abs_covariance(f, grad) - std::abs(covariance(f, grad)));
  }
  r.checks.push_back(lower_bound_check("absolute covariance dominates covariance (100 random fields, min gap)", worst,
                                       0.0, 1e-9));
}

void theorem_checks(Report& r, const SuiteOptions& opts) {
  const Grid g = make_grid(opts.grid);
  const double tol = opts.tol;
  const std::vector<double> zero(g.total() * g.dim(), 0.0);
  const Signal gauss = catalog::gaussian(g);
  const ChirpSignal chirp = catalog::gaussian_chirp(g, 1.0);
  const Kernel one = Kernel::unit();
  const Kernel c1 = kernels::chirp(1.0);
  const Kernel c2 = kernels::chirp(2.0);
  const std::vector<double> grad_c1 = kernel_phase_gradient(c1, g);
  const std::vector<double> grad_c2 = kernel_phase_gradient(c2, g);

  auto equality = [&](const std::string& name, const BoundReport& b) {
    r.bounds.push_back(b);
    r.checks.push_back(relative_check(name, b.measured_product_C, b.theorem_bound_abscov, tol));
  };
  equality("T1 gaussian / 1", verify_theorem(TheoremCase::T1, gauss, one, zero, zero, tol));
  {
    const BoundReport b = verify_theorem(TheoremCase::T1, catalog::hermite1(g), one, zero, zero, tol);
    r.bounds.push_back(b);
    r.checks.push_back(strict_excess_check("T1 hermite-1 / 1 above bound", b.measured_product_C, b.theorem_bound_abscov, 0.1));
  }
  equality("T2 chirp / chirp(2)", verify_theorem(TheoremCase::T2, chirp.signal, c2, chirp.grad_phase, grad_c2, tol));
  equality("T3 gaussian / chirp(2)", verify_theorem(TheoremCase::T3, gauss, c2, zero, grad_c2, tol));
  equality("T4 chirp / chirp(1)", verify_theorem(TheoremCase::T4, chirp.signal, c1, chirp.grad_phase, grad_c1, tol));

  const std::vector<std::pair<std::string, std::function<void()>>> mismatches = {
      {"T1 rejects complex f", [&] { verify_theorem(TheoremCase::T1, chirp.signal, one, chirp.grad_phase, zero); }},
      {"T1 rejects chirp kernel", [&] { verify_theorem(TheoremCase::T1, gauss, c2, zero, grad_c2); }},
      {"T2 rejects real f", [&] { verify_theorem(TheoremCase::T2, gauss, c2, zero, grad_c2); }},
      {"T2 rejects kernel matching the phase of f",
       [&] { verify_theorem(TheoremCase::T2, chirp.signal, c1, chirp.grad_phase, grad_c1); }},
      {"T3 rejects constant kernel", [&] { verify_theorem(TheoremCase::T3, gauss, one, zero, zero); }},
      {"T4 rejects kernel not matching the phase of f",
       [&] { verify_theorem(TheoremCase::T4, chirp.signal, c2, chirp.grad_phase, grad_c2); }},
  };
  for (const auto& [name, fn] : mismatches) r.checks.push_back(absolute_check(name, rejects(fn), 1.0, 0.0));
}

void flandrin_checks(Report& r, const SuiteOptions& opts) {
  const Grid g = make_grid(opts.grid);
  const double tol = opts.tol;
  const Signal gauss = catalog::gaussian(g);
  const double floor = 1.0 / (2.0 * kPi);
  r.checks.push_back(relative_check("flandrin gaussian T=1", flandrin(gauss, Kernel::unit(), 1.0), floor, tol));
  const std::vector<std::pair<std::string, Signal>> signals = {
      {"gaussian", gauss}, {"chirp", catalog::gaussian_chirp(g, 1.0).signal}, {"hermite-1", catalog::hermite1(g)}};
  for (const auto& [name, f] : signals) {
    for (const double T : {0.5, 1.0, 2.0}) {
      r.checks.push_back(lower_bound_check("flandrin " + name + " T=" + std::to_string(T) + " lower bound",
                                           flandrin(f, Kernel::unit(), T), floor, tol));
    }
  }
  r.checks.push_back(absolute_check("flandrin refuses time-multiplier kernel",
                                    refuses([&] { flandrin(gauss, kernels::chirp(1.0), 1.0); }), 1.0, 0.0));
}

Report run_suite(const std::string& name, const SuiteOptions& opts) {
  Report r;
  r.command = "verify";
  r.subject = name;
  r.seed = opts.seed;
  r.grid = opts.grid;
  if (name == "lemmas") {
    lemma_checks(r, opts);
  } else if (name == "theorems") {
    theorem_checks(r, opts);
  } else if (name == "flandrin") {
    flandrin_checks(r, opts);
  } else if (name == "all") {
    lemma_checks(r, opts);
    theorem_checks(r, opts);
    flandrin_checks(r, opts);
  } else {
    throw FormatError("unknown suite '" + name + "' (expected lemmas, theorems, flandrin or all)");
  }
  return r;
}

}  // namespace tfu
