#include <cmath>

#include "engine_detail.hpp"
#include "tfu/engine.hpp"
#include "tfu/error.hpp"
#include "tfu/spectral.hpp"

namespace tfu::reference {

using detail::kTwoPi;

namespace {

// Fractional turns of sum_d m_d (k_d - c_d) / M_d.
double lag_turns(const Grid& t, const std::vector<std::int64_t>& m, std::size_t k) {
  double turns = 0.0;
  for (std::size_t d = 0; d < t.dim(); ++d) {
    const auto M = static_cast<std::int64_t>(t.count()[d]);
    const auto kc = static_cast<std::int64_t>(t.index_along(k, d)) -
                    static_cast<std::int64_t>(spectral::center_index(t.count()[d]));
    turns += static_cast<double>(((m[d] * kc) % M + M) % M) / static_cast<double>(M);
  }
  return turns;
}

}  // namespace

Distribution cross_wigner(const Signal& f, const Signal& g) {
  detail::require_time(f, "reference::cross_wigner");
  detail::require_time(g, "reference::cross_wigner");
  detail::require_same_grid(f, g, "reference::cross_wigner");
  const Grid& t = f.grid();
  const std::size_t T = t.total();
  Distribution D = detail::empty_distribution(f, "cross-wigner");
  D.truncation_warning = f.truncation_warning() || g.truncation_warning();
  const double scale = detail::lag_scale(t);
  std::vector<std::int64_t> lo, hi;
  for (std::size_t n = 0; n < T; ++n) {
    detail::lag_box(t, n, lo, hi);
    const auto base = static_cast<std::int64_t>(n);
    for (std::size_t k = 0; k < T; ++k) {
      cplx acc{};
      detail::for_each_box(lo, hi, [&](const std::vector<std::int64_t>& m) {
        const std::int64_t off = detail::offset_of(t, m);
        acc += f[base + off] * std::conj(g[base - off]) * std::polar(1.0, -kTwoPi * lag_turns(t, m, k));
      });
      D.values[n * T + k] = scale * acc;
    }
  }
  return D;
}

Distribution cctfd_freq(const Signal& f, const Kernel& k) {
  detail::require_time(f, "reference::cctfd_freq");
  if (!k.has_time_form()) throw KernelError("the spectral route needs a time-multiplier kernel, got '" + k.tag() + "'");
  const Signal F = detail::padded_spectrum(f);
  const Signal G = detail::padded_spectrum(conjugate_multiplier(k, f));
  const Grid& t = f.grid();
  const Grid& u = F.grid();
  const std::size_t dim = t.dim();
  const std::size_t T = t.total();
  Distribution D = detail::empty_distribution(f, k.tag());
  const Grid& w = D.freq_grid;
  double scale = 1.0;
  for (std::size_t d = 0; d < dim; ++d) scale *= 2.0 * u.spacing()[d];

  // 2^N e^{-4 pi i x.w} sum_u Ff(u) conj(G(2w - u)) e^{4 pi i u.x} du
  for (std::size_t n = 0; n < T; ++n) {
    for (std::size_t kw = 0; kw < T; ++kw) {
      cplx acc{};
      for (std::size_t j = 0; j < u.total(); ++j) {
        std::size_t i = 0;
        bool inside = true;
        double ux = 0.0;
        for (std::size_t d = 0; d < dim; ++d) {
          const auto Pd = static_cast<std::int64_t>(u.count()[d]);
          const double two_w = 2.0 * w.coord(kw, d);
          const auto idx = static_cast<std::int64_t>(std::llround((two_w - u.coord(j, d)) / u.spacing()[d])) + Pd / 2;
          inside = inside && idx >= 0 && idx < Pd;
          i += static_cast<std::size_t>(std::max<std::int64_t>(idx, 0)) * u.stride(d);
          ux += u.coord(j, d) * t.coord(n, d);
        }
        if (inside) acc += F[j] * std::conj(G[i]) * std::polar(1.0, 2.0 * kTwoPi * ux);
      }
      double xw = 0.0;
      for (std::size_t d = 0; d < dim; ++d) xw += t.coord(n, d) * w.coord(kw, d);
      D.values[n * T + kw] = scale * std::polar(1.0, -2.0 * kTwoPi * xw) * acc;
    }
  }
  return D;
}

}  // namespace tfu::reference
