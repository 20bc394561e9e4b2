#pragma once

// Moments, spreads and covariances in the time, frequency and distribution
// domains, the moment conversion identities, and the Flandrin functional.
//
// Spreads are summed over axes: spread_x = ||(x - x0) f||^2 / ||f||^2.
// Phase gradients are node-major fields with grid.dim() components per node,
// in the convention f = |f| exp(2 pi i phase).

#include <span>
#include <vector>

#include "tfu/engine.hpp"
#include "tfu/grid.hpp"
#include "tfu/kernels.hpp"
#include "tfu/phase.hpp"

namespace tfu {

struct Moments {
  std::vector<double> center;
  double spread = 0.0;
};

// Relative spectral or boundary magnitude above which frequency moments are
// refused: the signal is too truncated for the spectrum to mean anything.
inline constexpr double kSpectralTruncationLimit = 1e-3;

Moments time_moments(const Signal& f);
// Moments of |Ff|^2. Throws TruncationError when f or its spectrum has edge
// magnitude above kSpectralTruncationLimit x peak.
Moments freq_moments(const Signal& f);

struct MomentReport {
  std::vector<double> x0;
  std::vector<double> w0;
  double spread_x = 0.0;
  double spread_w = 0.0;
  double cov = 0.0;
  double abs_cov = 0.0;
  double product = 0.0;
};

MomentReport moment_report(const Signal& f, std::span<const double> grad_phase);

struct DistMomentReport {
  std::vector<double> x0_C;
  std::vector<double> w0_C;
  double spread_x_C = 0.0;
  double spread_w_C = 0.0;
  double product_C = 0.0;
};

// Second moments under the weight |D|^2 / sum |D|^2.
DistMomentReport distribution_moments(const Distribution& D);

// <(x - x0) f, (grad - w0) f> / ||f||^2, with x0 and w0 the time and
// frequency centers of f. Nodes with |f| <= kPhaseMaskThreshold x peak are
// skipped; a non-finite gradient elsewhere is a PreconditionError.
double covariance(const Signal& f, std::span<const double> grad_phase);
// Same with element-wise absolute values of both factors.
double abs_covariance(const Signal& f, std::span<const double> grad_phase);

double uncertainty_product_fourier(const Signal& f);

struct IdentityCheck {
  double measured = 0.0;
  double target = 0.0;
  double residual = 0.0;  // |measured - target| / |target|
};

struct ConversionResiduals {
  IdentityCheck spread_x;  // spread_x_C = spread_x_f / 2
  IdentityCheck spread_w;  // spread_w_C = (spread_w_f + spread_w_fphi) / 4
  IdentityCheck product;   // product_C = (P_f + P_fphi) / 8
};

ConversionResiduals conversion_identities(const Signal& f, const Kernel& k, EngineOptions opts = {});

// Weak functional: sum (||x - x0||^2 / T^2 + T^2 ||w - w0||^2) Cf dx dw / ||f||^2
// with the signed distribution as weight and x0, w0 the centers of f.
// Refuses kernels without the marginal property (PreconditionError).
double flandrin(const Signal& f, const Kernel& k, double T, EngineOptions opts = {});

}  // namespace tfu
