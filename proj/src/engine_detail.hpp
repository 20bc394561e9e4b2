#pragma once

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "tfu/engine.hpp"
#include "tfu/error.hpp"
#include "tfu/spectral.hpp"

namespace tfu::detail {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline void require_time(const Signal& f, const char* op) {
  if (f.domain() != Domain::time) throw DomainMismatch(std::string(op) + " expects a time-domain signal");
}

inline void require_same_grid(const Signal& f, const Signal& g, const char* op) {
  if (!(f.grid() == g.grid())) throw IncompatibleGrids(std::string(op) + ": signals live on different grids");
}

inline Distribution empty_distribution(const Signal& f, std::string tag) {
  const Grid& t = f.grid();
  Grid w = distribution_freq_grid(t);
  const std::size_t size = t.total() * w.total();
  return Distribution{t, std::move(w), std::vector<cplx>(size), std::move(tag), f.truncation_warning()};
}

// Visits every integer vector m with lo <= m <= hi component-wise.
template <class Fn>
void for_each_box(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi, Fn&& fn) {
  const std::size_t dim = lo.size();
  for (std::size_t d = 0; d < dim; ++d)
    if (lo[d] > hi[d]) return;
  std::vector<std::int64_t> m = lo;
  while (true) {
    fn(m);
    std::size_t d = dim;
    while (d > 0) {
      --d;
      if (++m[d] <= hi[d]) break;
      m[d] = lo[d];
      if (d == 0) return;
    }
    if (dim == 0) return;
  }
}

// Lags m that keep both n + m and n - m on the grid.
inline void lag_box(const Grid& g, std::size_t n, std::vector<std::int64_t>& lo, std::vector<std::int64_t>& hi) {
  const std::size_t dim = g.dim();
  lo.resize(dim);
  hi.resize(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    const auto i = static_cast<std::int64_t>(g.index_along(n, d));
    const auto last = static_cast<std::int64_t>(g.count()[d]) - 1;
    const std::int64_t l = std::min(i, last - i);
    lo[d] = -l;
    hi[d] = l;
  }
}

inline std::int64_t offset_of(const Grid& g, const std::vector<std::int64_t>& m) {
  std::int64_t off = 0;
  for (std::size_t d = 0; d < g.dim(); ++d) off += m[d] * static_cast<std::int64_t>(g.stride(d));
  return off;
}

// Position of lag m in an FFT buffer shaped like the grid (m mod M per axis).
inline std::size_t wrapped_offset(const Grid& g, const std::vector<std::int64_t>& m) {
  std::size_t off = 0;
  for (std::size_t d = 0; d < g.dim(); ++d) {
    const auto M = static_cast<std::int64_t>(g.count()[d]);
    off += static_cast<std::size_t>(((m[d] % M) + M) % M) * g.stride(d);
  }
  return off;
}

// FFT bin q maps to frequency index k = (q + c) mod M per axis.
inline std::vector<std::size_t> bin_to_freq_index(const Grid& g) {
  std::vector<std::size_t> perm(g.total());
  for (std::size_t q = 0; q < g.total(); ++q) {
    std::size_t k = 0;
    for (std::size_t d = 0; d < g.dim(); ++d) {
      const std::size_t M = g.count()[d];
      k += ((g.index_along(q, d) + spectral::center_index(M)) % M) * g.stride(d);
    }
    perm[q] = k;
  }
  return perm;
}

inline double lag_scale(const Grid& g) {
  double s = 1.0;
  for (std::size_t d = 0; d < g.dim(); ++d) s *= 2.0 * g.spacing()[d];
  return s;
}

// Zero-pads f to twice the node count on every axis (same origin and
// spacing) and transforms it: the spectrum sampled at half the usual step.
inline Signal padded_spectrum(const Signal& f) {
  const Grid& g = f.grid();
  const std::size_t dim = g.dim();
  std::vector<std::size_t> count(dim);
  for (std::size_t d = 0; d < dim; ++d) count[d] = 2 * g.count()[d];
  const Grid padded(g.origin(), g.spacing(), count);
  std::vector<cplx> samples(padded.total());
  for (std::size_t i = 0; i < g.total(); ++i) {
    std::size_t j = 0;
    for (std::size_t d = 0; d < dim; ++d) j += g.index_along(i, d) * padded.stride(d);
    samples[j] = f[i];
  }
  return spectral::fourier(Signal(padded, std::move(samples)));
}

}  // namespace tfu::detail
