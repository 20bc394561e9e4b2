#pragma once

// Reference and seeded random test signals.

#include <cstdint>
#include <random>
#include <vector>

#include "tfu/grid.hpp"
#include "tfu/optimal_signals.hpp"

namespace tfu::catalog {

// exp(-pi |x|^2), the optimal Gaussian with zeta = 1/(2 pi).
Signal gaussian(const Grid& grid);
// Optimal Gaussian with width parameter zeta, centered at 0.
Signal gaussian(const Grid& grid, double zeta);
// exp(-pi |x|^2) exp(pi i c |x|^2) with its gradient c x.
ChirpSignal gaussian_chirp(const Grid& grid, double c);
// exp(-pi |x|^2) exp(pi i |x|^2 sgn-branch): gradient |x|.
ChirpSignal sgn_chirp(const Grid& grid);
// First Hermite function x_1 exp(-pi |x|^2) (unnormalized, real).
Signal hermite1(const Grid& grid);

// Deterministic across platforms: uniforms are built from the raw 64-bit
// output of mt19937_64, not from std::uniform_real_distribution.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi);

  // Sum of three Gaussian atoms with random centers in [-2, 2], widths
  // zeta in [0.1, 0.4], linear modulations in [-1, 1] and complex amplitudes.
  Signal decaying_signal(const Grid& grid);
  // Smooth random gradient field: a cubic polynomial per axis.
  std::vector<double> phase_field(const Grid& grid);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tfu::catalog
