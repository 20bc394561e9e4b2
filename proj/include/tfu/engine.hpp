#pragma once

// Cohen's class distributions on sampled signals.
//
// The lag variable is sampled at y = 2 m d, so a time grid with M nodes and
// spacing d pairs with a centered frequency grid of M nodes and spacing
// 1/(2 M d), covering [-1/(4d), 1/(4d)). Values are stored time-major:
// values[n * freq_total + k].

#include <string>
#include <vector>

#include "tfu/grid.hpp"
#include "tfu/kernels.hpp"

namespace tfu {

struct Distribution {
  Grid time_grid;
  Grid freq_grid;
  std::vector<cplx> values;
  std::string kernel_tag;
  bool truncation_warning = false;

  const cplx& at(std::size_t n, std::size_t k) const { return values[n * freq_grid.total() + k]; }
};

// Frequency lattice paired with a time grid.
Grid distribution_freq_grid(const Grid& time_grid);

enum class BandGuard { enforce, skip };

struct EngineOptions {
  BandGuard band_guard = BandGuard::enforce;
};

// Relative spectral magnitude tolerated above 1/(4d) on any axis.
inline constexpr double kBandGuardThreshold = 1e-6;

// Throws BandwidthError when |Ff| exceeds kBandGuardThreshold x peak anywhere
// with |u_d| >= 1/(4 d_d): such content aliases on the half-sample lattice.
void check_bandwidth(const Signal& f);

// 2^N prod(d) sum_m f[n+m] conj(g[n-m]) exp(-2 pi i m.(k-c)/M), over lags
// that keep both indices on the grid. Rows are computed in parallel.
Distribution cross_wigner(const Signal& f, const Signal& g);

// Distribution of f for any catalog kernel. Page and tabulated kernels are
// 1-D only; tabulated kernels are limited to kTabulatedMaxNodes nodes.
Distribution cctfd(const Signal& f, const Kernel& k, EngineOptions opts = {});

// Same distribution for unit and time-multiplier kernels, computed as a
// correlation of the spectra Ff and F(f conj(phi_t)).
Distribution cctfd_freq(const Signal& f, const Kernel& k, EngineOptions opts = {});

inline constexpr std::size_t kTabulatedMaxNodes = 64;

// Riemann-sum inner product over the (time x frequency) lattice.
cplx inner_product(const Distribution& a, const Distribution& b);
double l2_norm(const Distribution& d);

// max |a - b| / max |a|, node-wise. Throws IncompatibleGrids.
double peak_relative_deviation(const Distribution& a, const Distribution& b);

// ||Cf|| / ||f||^2.
double parseval_ratio(const Signal& f, const Kernel& k, EngineOptions opts = {});

// |<Cf, Cg> - |<f, g>|^2| / (||f||^2 ||g||^2). Throws PreconditionError when
// the kernel is not unit modulus on f's grid.
double moyal_residual(const Signal& f, const Signal& g, const Kernel& k, EngineOptions opts = {});

// Serial direct-sum evaluations, kept as the test oracle for the FFT paths.
namespace reference {

Distribution cross_wigner(const Signal& f, const Signal& g);
Distribution cctfd_freq(const Signal& f, const Kernel& k);

}  // namespace reference

}  // namespace tfu
