#pragma once

// Continuous Fourier transform on sampled signals.
//
// Convention: Ff(u) = \int f(x) e^{-2 pi i x.u} dx, inverse with e^{+2 pi i x.u}.
// The transform is a scaled DFT. For a time grid with M nodes and spacing d
// the frequency grid has spacing 1/(M d) and is centered: node k sits at
// (k - M/2) / (M d). The grid origin enters through explicit twiddle factors,
// so any origin is handled exactly.

#include <cstddef>
#include <span>
#include <vector>

#include "tfu/grid.hpp"

namespace tfu::spectral {

// Index of the zero-frequency node on an axis of `count` nodes.
inline std::size_t center_index(std::size_t count) { return count / 2; }

// Frequency lattice conjugate to a time grid (and vice versa).
Grid reciprocal_grid(const Grid& g);

// Throws DomainMismatch unless f is time-domain. A truncation warning on f is
// carried forward to the result.
Signal fourier(const Signal& f);

// Inverts `fourier` onto the time grid whose origin is F.dual_origin().
Signal inverse_fourier(const Signal& F);
Signal inverse_fourier(const Signal& F, std::span<const double> time_origin);

// Unnormalized in-place N-D DFT over a row-major buffer:
//   X[k] = sum_n x[n] exp(sign * 2 pi i n.k / shape).
// Safe to call concurrently; plans are cached behind a mutex.
void dft_inplace(std::span<cplx> data, std::span<const std::size_t> shape, int sign);

}  // namespace tfu::spectral
