#include "tfu/engine.hpp"

#include <cmath>
#include <limits>

#include "engine_detail.hpp"
#include "tfu/error.hpp"
#include "tfu/spectral.hpp"

namespace tfu {

using detail::kTwoPi;

Grid distribution_freq_grid(const Grid& time_grid) {
  std::vector<double> origin(time_grid.dim()), spacing(time_grid.dim());
  for (std::size_t d = 0; d < time_grid.dim(); ++d) {
    const auto M = time_grid.count()[d];
    spacing[d] = 1.0 / (2.0 * static_cast<double>(M) * time_grid.spacing()[d]);
    origin[d] = -static_cast<double>(spectral::center_index(M)) * spacing[d];
  }
  return Grid(origin, spacing, time_grid.count());
}

void check_bandwidth(const Signal& f) {
  const Signal F = spectral::fourier(f);
  const Grid& g = F.grid();
  const double limit = kBandGuardThreshold * F.peak();
  double worst = 0.0;
  for (std::size_t i = 0; i < g.total(); ++i) {
    bool outer = false;
    for (std::size_t d = 0; d < g.dim() && !outer; ++d) {
      const double edge = 0.25 / f.grid().spacing()[d];
      outer = std::abs(g.coord(i, d)) >= edge * (1.0 - 1e-12);
    }
    if (outer) worst = std::max(worst, std::abs(F[i]));
  }
  if (worst > limit) {
    throw BandwidthError("signal has spectral content above a quarter of the sampling rate (relative magnitude " +
                         std::to_string(worst / F.peak()) + "); refine the grid");
  }
}

namespace {

// Fills one lag row per time node, transforms it over the lag and scatters
// the bins to their frequency indices. `fill(n, buf)` writes into a zeroed
// buffer and must not throw.
template <class Fill>
void transform_rows(Distribution& D, double scale, Fill fill) {
  const Grid& g = D.time_grid;
  const std::size_t T = g.total();
  const std::vector<std::size_t> perm = detail::bin_to_freq_index(g);
  const auto rows = static_cast<std::int64_t>(T);
#pragma omp parallel
  {
    std::vector<cplx> buf(T);
#pragma omp for schedule(static)
    for (std::int64_t row = 0; row < rows; ++row) {
      const auto n = static_cast<std::size_t>(row);
      std::fill(buf.begin(), buf.end(), cplx{});
      fill(n, buf);
      spectral::dft_inplace(buf, g.count(), -1);
      cplx* out = D.values.data() + n * T;
      for (std::size_t q = 0; q < T; ++q) out[perm[q]] = scale * buf[q];
    }
  }
}

void guard(const Signal& f, EngineOptions opts) {
  if (opts.band_guard == BandGuard::enforce) check_bandwidth(f);
}

Distribution kirkwood_rihaczek(const Signal& f) {
  const Grid& g = f.grid();
  const std::size_t dim = g.dim();
  const Signal F = detail::padded_spectrum(f);

  Distribution D = detail::empty_distribution(f, "krd");
  const Grid& w = D.freq_grid;
  const std::size_t T = g.total();
  std::vector<std::size_t> spectral_index(T);
  for (std::size_t k = 0; k < T; ++k) {
    std::size_t j = 0;
    for (std::size_t d = 0; d < dim; ++d) {
      const std::size_t M = g.count()[d];
      j += (w.index_along(k, d) - spectral::center_index(M) + M) * F.grid().stride(d);
    }
    spectral_index[k] = j;
  }
  const auto rows = static_cast<std::int64_t>(T);
#pragma omp parallel for schedule(static)
  for (std::int64_t row = 0; row < rows; ++row) {
    const auto n = static_cast<std::size_t>(row);
    for (std::size_t k = 0; k < T; ++k) {
      double xw = 0.0;
      for (std::size_t d = 0; d < dim; ++d) xw += g.coord(n, d) * w.coord(k, d);
      D.values[n * T + k] = f[n] * std::conj(F[spectral_index[k]]) * std::polar(1.0, -kTwoPi * xw);
    }
  }
  return D;
}

Distribution page(const Signal& f) {
  const Grid& g = f.grid();
  if (g.dim() != 1) throw DimensionError("the Page distribution is implemented for 1-D signals only");
  const auto M = static_cast<std::int64_t>(g.count()[0]);
  Distribution D = detail::empty_distribution(f, "page");
  transform_rows(D, 2.0 * g.spacing()[0], [&](std::size_t n, std::span<cplx> buf) {
    const auto i = static_cast<std::int64_t>(n);
    for (std::int64_t m = 0; 3 * m <= i; ++m) buf[static_cast<std::size_t>(m)] = f[i - m] * std::conj(f[i - 3 * m]);
    for (std::int64_t m = 1; 3 * m <= i; ++m) buf[static_cast<std::size_t>(M - m)] = f[i - 3 * m] * std::conj(f[i - m]);
  });
  return D;
}

// Direct quadrature of the generic kernel form: the kernel's partial Fourier
// transform over v is tabulated on a reciprocal v-lattice four times finer
// than the time grid, which resolves the sifting kernels exactly.
Distribution tabulated(const Signal& f, const Kernel& k) {
  const Grid& g = f.grid();
  if (g.dim() != 1) throw DimensionError("tabulated kernels are implemented for 1-D signals only");
  const std::size_t M = g.count()[0];
  if (M > kTabulatedMaxNodes) {
    throw ResolutionLimit("tabulated kernels are limited to " + std::to_string(kTabulatedMaxNodes) +
                          " nodes per axis (got " + std::to_string(M) + ")");
  }
  const auto Mi = static_cast<std::int64_t>(M);
  const double dt = g.spacing()[0];
  const std::size_t Mv = 4 * M;
  const double dv = 1.0 / (static_cast<double>(Mv) * dt);
  const std::int64_t L = (Mi - 1) / 2;
  const std::size_t lags = static_cast<std::size_t>(2 * L + 1);
  const std::size_t shifts = 2 * M - 1;

  // kernel_t[(j + M - 1) * lags + (m + L)] = K(j dt, 2 m dt)
  std::vector<cplx> phi(Mv);
  std::vector<cplx> kernel_t(shifts * lags);
  for (std::int64_t m = -L; m <= L; ++m) {
    const double y = 2.0 * static_cast<double>(m) * dt;
    for (std::size_t q = 0; q < Mv; ++q) {
      const double v = (static_cast<double>(q) - static_cast<double>(Mv / 2)) * dv;
      phi[q] = kernel_value(k, std::span<const double>(&v, 1), std::span<const double>(&y, 1));
    }
    for (std::int64_t j = -(Mi - 1); j <= Mi - 1; ++j) {
      cplx acc{};
      for (std::size_t q = 0; q < Mv; ++q) {
        const auto idx = static_cast<std::int64_t>(q) - static_cast<std::int64_t>(Mv / 2);
        const auto turns = static_cast<double>((idx * j) % static_cast<std::int64_t>(Mv)) / static_cast<double>(Mv);
        acc += phi[q] * std::polar(1.0, -kTwoPi * turns);
      }
      kernel_t[static_cast<std::size_t>(j + Mi - 1) * lags + static_cast<std::size_t>(m + L)] = dv * acc;
    }
  }

  Distribution D = detail::empty_distribution(f, k.tag());
  transform_rows(D, 2.0 * dt, [&](std::size_t n, std::span<cplx> buf) {
    const auto ni = static_cast<std::int64_t>(n);
    for (std::int64_t m = -L; m <= L; ++m) {
      cplx acc{};
      for (std::int64_t p = std::abs(m); p + std::abs(m) < Mi; ++p) {
        acc += f[static_cast<std::size_t>(p + m)] * std::conj(f[static_cast<std::size_t>(p - m)]) *
               kernel_t[static_cast<std::size_t>(ni - p + Mi - 1) * lags + static_cast<std::size_t>(m + L)];
      }
      buf[static_cast<std::size_t>((m + Mi) % Mi)] = dt * acc;
    }
  });
  return D;
}

}  // namespace

Distribution cross_wigner(const Signal& f, const Signal& g) {
  detail::require_time(f, "cross_wigner");
  detail::require_time(g, "cross_wigner");
  detail::require_same_grid(f, g, "cross_wigner");
  const Grid& grid = f.grid();
  Distribution D = detail::empty_distribution(f, "cross-wigner");
  D.truncation_warning = f.truncation_warning() || g.truncation_warning();
  transform_rows(D, detail::lag_scale(grid), [&](std::size_t n, std::span<cplx> buf) {
    if (grid.dim() == 1) {
      const auto i = static_cast<std::int64_t>(n);
      const auto M = static_cast<std::int64_t>(grid.count()[0]);
      const std::int64_t L = std::min(i, M - 1 - i);
      for (std::int64_t m = -L; m <= L; ++m) buf[static_cast<std::size_t>((m + M) % M)] = f[i + m] * std::conj(g[i - m]);
      return;
    }
    std::vector<std::int64_t> lo, hi;
    detail::lag_box(grid, n, lo, hi);
    const auto base = static_cast<std::int64_t>(n);
    detail::for_each_box(lo, hi, [&](const std::vector<std::int64_t>& m) {
      const std::int64_t off = detail::offset_of(grid, m);
      buf[detail::wrapped_offset(grid, m)] = f[base + off] * std::conj(g[base - off]);
    });
  });
  return D;
}

Distribution cctfd(const Signal& f, const Kernel& k, EngineOptions opts) {
  detail::require_time(f, "cctfd");
  guard(f, opts);
  Distribution D = [&] {
    switch (k.kind()) {
      case Kernel::Kind::unit:
        return cross_wigner(f, f);
      case Kernel::Kind::time_multiplier:
        return cross_wigner(f, conjugate_multiplier(k, f));
      case Kernel::Kind::kirkwood_rihaczek:
        return kirkwood_rihaczek(f);
      case Kernel::Kind::page:
        return page(f);
      case Kernel::Kind::tabulated:
        break;
    }
    return tabulated(f, k);
  }();
  D.kernel_tag = k.tag();
  return D;
}

// Cf(x, w) = 2^N e^{-4 pi i x.w} sum_u Ff(u) conj(G(2w - u)) e^{4 pi i u.x} du
// with G the spectrum of f conj(phi_t). Both spectra are taken at step
// 1/(2 M d) so that the sum over u is periodic in x with the full span.
Distribution cctfd_freq(const Signal& f, const Kernel& k, EngineOptions opts) {
  detail::require_time(f, "cctfd_freq");
  if (!k.has_time_form()) {
    throw KernelError("the spectral route needs a time-multiplier kernel, got '" + k.tag() + "'");
  }
  guard(f, opts);
  const Signal F = detail::padded_spectrum(f);
  const Signal G = detail::padded_spectrum(conjugate_multiplier(k, f));
  const Grid& t = f.grid();
  const Grid& u = F.grid();
  const std::size_t dim = t.dim();
  const std::size_t T = t.total();
  const std::size_t P = u.total();

  Distribution D = detail::empty_distribution(f, k.tag());

  // exp(4 pi i u_j . a): the time-grid origin enters as a twiddle on u.
  std::vector<cplx> origin_twiddle(P);
  for (std::size_t j = 0; j < P; ++j) {
    double s = 0.0;
    for (std::size_t d = 0; d < dim; ++d) s += u.coord(j, d) * t.origin()[d];
    origin_twiddle[j] = std::polar(1.0, 2.0 * kTwoPi * s);
  }
  // Time node n reads bin 2n of the length-2M transform.
  std::vector<std::size_t> bin(T);
  for (std::size_t n = 0; n < T; ++n) {
    std::size_t b = 0;
    for (std::size_t d = 0; d < dim; ++d) b += 2 * t.index_along(n, d) * u.stride(d);
    bin[n] = b;
  }
  double scale = 1.0;
  for (std::size_t d = 0; d < dim; ++d) scale *= 2.0 * u.spacing()[d];

  const Grid& w = D.freq_grid;
  const auto cols = static_cast<std::int64_t>(T);
#pragma omp parallel
  {
    std::vector<cplx> h(P);
#pragma omp for schedule(static)
    for (std::int64_t col = 0; col < cols; ++col) {
      const auto k_flat = static_cast<std::size_t>(col);
      for (std::size_t j = 0; j < P; ++j) {
        std::size_t i = 0;
        bool inside = true;
        for (std::size_t d = 0; d < dim && inside; ++d) {
          const auto Pd = static_cast<std::int64_t>(u.count()[d]);
          const auto kc = static_cast<std::int64_t>(w.index_along(k_flat, d)) -
                          static_cast<std::int64_t>(spectral::center_index(t.count()[d]));
          const auto idx = 2 * kc - static_cast<std::int64_t>(u.index_along(j, d)) + Pd;
          inside = idx >= 0 && idx < Pd;
          if (inside) i += static_cast<std::size_t>(idx) * u.stride(d);
        }
        h[j] = inside ? F[j] * std::conj(G[i]) * origin_twiddle[j] : cplx{};
      }
      spectral::dft_inplace(h, u.count(), +1);
      for (std::size_t n = 0; n < T; ++n) {
        double xw = 0.0;
        for (std::size_t d = 0; d < dim; ++d) xw += t.coord(n, d) * w.coord(k_flat, d);
        D.values[n * T + k_flat] = scale * std::polar(1.0, -2.0 * kTwoPi * xw) * h[bin[n]];
      }
    }
  }
  return D;
}

cplx inner_product(const Distribution& a, const Distribution& b) {
  if (!(a.time_grid == b.time_grid) || !(a.freq_grid == b.freq_grid)) {
    throw IncompatibleGrids("distributions live on different grids");
  }
  cplx acc{};
  for (std::size_t i = 0; i < a.values.size(); ++i) acc += a.values[i] * std::conj(b.values[i]);
  return acc * a.time_grid.cell_volume() * a.freq_grid.cell_volume();
}

double l2_norm(const Distribution& d) { return std::sqrt(std::max(0.0, inner_product(d, d).real())); }

double peak_relative_deviation(const Distribution& a, const Distribution& b) {
  if (!(a.time_grid == b.time_grid) || !(a.freq_grid == b.freq_grid)) {
    throw IncompatibleGrids("distributions live on different grids");
  }
  double diff = 0.0, peak = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    diff = std::max(diff, std::abs(a.values[i] - b.values[i]));
    peak = std::max(peak, std::abs(a.values[i]));
  }
  if (peak == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / peak;
}

double parseval_ratio(const Signal& f, const Kernel& k, EngineOptions opts) {
  const double n2 = l2_norm(f) * l2_norm(f);
  if (n2 == 0.0) throw ZeroNorm("parseval_ratio needs a non-zero signal");
  return l2_norm(cctfd(f, k, opts)) / n2;
}

double moyal_residual(const Signal& f, const Signal& g, const Kernel& k, EngineOptions opts) {
  detail::require_same_grid(f, g, "moyal_residual");
  if (!classify(k, f.grid()).unit_modulus) {
    throw PreconditionError("Moyal's formula needs a unit-modulus kernel; '" + k.tag() + "' is not");
  }
  const double nf = l2_norm(f), ng = l2_norm(g);
  if (nf == 0.0 || ng == 0.0) throw ZeroNorm("moyal_residual needs non-zero signals");
  const cplx lhs = inner_product(cctfd(f, k, opts), cctfd(g, k, opts));
  const double rhs = std::norm(inner_product(f, g));
  return std::abs(lhs - rhs) / (nf * nf * ng * ng);
}

}  // namespace tfu
