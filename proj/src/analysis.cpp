#include "tfu/analysis.hpp"

#include <cmath>

#include "tfu/error.hpp"
#include "tfu/spectral.hpp"

namespace tfu {

namespace {

Moments weighted_moments(const Grid& g, std::span<const cplx> values) {
  const std::size_t dim = g.dim();
  double total = 0.0;
  std::vector<double> first(dim, 0.0);
  for (std::size_t i = 0; i < g.total(); ++i) {
    const double p = std::norm(values[i]);
    total += p;
    for (std::size_t d = 0; d < dim; ++d) first[d] += p * g.coord(i, d);
  }
  if (total == 0.0) throw ZeroNorm("moments of a zero signal are undefined");
  Moments m;
  m.center.resize(dim);
  for (std::size_t d = 0; d < dim; ++d) m.center[d] = first[d] / total;
  double second = 0.0;
  for (std::size_t i = 0; i < g.total(); ++i) {
    const double p = std::norm(values[i]);
    for (std::size_t d = 0; d < dim; ++d) {
      const double dx = g.coord(i, d) - m.center[d];
      second += p * dx * dx;
    }
  }
  m.spread = second / total;
  return m;
}

void require_gradient(const Signal& f, std::span<const double> grad) {
  if (grad.size() != f.size() * f.grid().dim()) {
    throw DimensionError("phase gradient has " + std::to_string(grad.size()) + " entries, expected " +
                         std::to_string(f.size() * f.grid().dim()));
  }
}

template <class Term>
double covariance_sum(const Signal& f, std::span<const double> grad, Term term) {
  require_gradient(f, grad);
  const Moments t = time_moments(f);
  const Moments w = freq_moments(f);
  const Grid& g = f.grid();
  const std::size_t dim = g.dim();
  const double floor = kPhaseMaskThreshold * f.peak();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < g.total(); ++i) {
    const double p = std::norm(f[i]);
    den += p;
    if (std::abs(f[i]) <= floor) continue;
    for (std::size_t d = 0; d < dim; ++d) {
      const double gd = grad[i * dim + d];
      if (!std::isfinite(gd)) {
        throw PreconditionError("phase gradient is not finite at node " + std::to_string(i) + " where f is non-negligible");
      }
      num += p * term(g.coord(i, d) - t.center[d], gd - w.center[d]);
    }
  }
  return num / den;
}

}  // namespace

Moments time_moments(const Signal& f) {
  if (f.domain() != Domain::time) throw DomainMismatch("time_moments expects a time-domain signal");
  return weighted_moments(f.grid(), f.samples());
}

Moments freq_moments(const Signal& f) {
  if (f.domain() != Domain::time) throw DomainMismatch("freq_moments expects a time-domain signal");
  if (f.peak() == 0.0) throw ZeroNorm("moments of a zero signal are undefined");
  if (f.edge_ratio() > kSpectralTruncationLimit) {
    throw TruncationError("signal does not decay inside the grid (edge ratio " + std::to_string(f.edge_ratio()) +
                          "); its spectrum is unreliable");
  }
  const Signal F = spectral::fourier(f);
  if (F.edge_ratio() > kSpectralTruncationLimit) {
    throw TruncationError("spectrum is truncated at the frequency-grid edge (edge ratio " +
                          std::to_string(F.edge_ratio()) + ")");
  }
  return weighted_moments(F.grid(), F.samples());
}

MomentReport moment_report(const Signal& f, std::span<const double> grad_phase) {
  const Moments t = time_moments(f);
  const Moments w = freq_moments(f);
  MomentReport r;
  r.x0 = t.center;
  r.w0 = w.center;
  r.spread_x = t.spread;
  r.spread_w = w.spread;
  r.cov = covariance(f, grad_phase);
  r.abs_cov = abs_covariance(f, grad_phase);
  r.product = t.spread * w.spread;
  return r;
}

DistMomentReport distribution_moments(const Distribution& D) {
  const Grid& t = D.time_grid;
  const Grid& w = D.freq_grid;
  const std::size_t dim = t.dim();
  const std::size_t W = w.total();
  double total = 0.0;
  std::vector<double> xs(dim, 0.0), ws(dim, 0.0);
  for (std::size_t n = 0; n < t.total(); ++n) {
    for (std::size_t k = 0; k < W; ++k) {
      const double p = std::norm(D.values[n * W + k]);
      total += p;
      for (std::size_t d = 0; d < dim; ++d) {
        xs[d] += p * t.coord(n, d);
        ws[d] += p * w.coord(k, d);
      }
    }
  }
  if (total == 0.0) throw ZeroNorm("moments of a zero distribution are undefined");
  DistMomentReport r;
  r.x0_C.resize(dim);
  r.w0_C.resize(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    r.x0_C[d] = xs[d] / total;
    r.w0_C[d] = ws[d] / total;
  }
  double sx = 0.0, sw = 0.0;
  for (std::size_t n = 0; n < t.total(); ++n) {
    for (std::size_t k = 0; k < W; ++k) {
      const double p = std::norm(D.values[n * W + k]);
      for (std::size_t d = 0; d < dim; ++d) {
        const double dx = t.coord(n, d) - r.x0_C[d];
        const double dw = w.coord(k, d) - r.w0_C[d];
        sx += p * dx * dx;
        sw += p * dw * dw;
      }
    }
  }
  r.spread_x_C = sx / total;
  r.spread_w_C = sw / total;
  r.product_C = r.spread_x_C * r.spread_w_C;
  return r;
}

double covariance(const Signal& f, std::span<const double> grad_phase) {
  return covariance_sum(f, grad_phase, [](double dx, double dg) { return dx * dg; });
}

double abs_covariance(const Signal& f, std::span<const double> grad_phase) {
  return covariance_sum(f, grad_phase, [](double dx, double dg) { return std::abs(dx) * std::abs(dg); });
}

double uncertainty_product_fourier(const Signal& f) { return time_moments(f).spread * freq_moments(f).spread; }

namespace {

IdentityCheck identity(double measured, double target) {
  return {measured, target, std::abs(measured - target) / std::abs(target)};
}

}  // namespace

ConversionResiduals conversion_identities(const Signal& f, const Kernel& k, EngineOptions opts) {
  if (l2_norm(f) == 0.0) throw ZeroNorm("conversion identities need a non-zero signal");
  const Signal g = conjugate_multiplier(k, f);
  const Moments tf = time_moments(f);
  const Moments wf = freq_moments(f);
  const Moments tg = time_moments(g);
  const Moments wg = freq_moments(g);
  const DistMomentReport dm = distribution_moments(cctfd(f, k, opts));
  ConversionResiduals r;
  r.spread_x = identity(dm.spread_x_C, tf.spread / 2.0);
  r.spread_w = identity(dm.spread_w_C, (wf.spread + wg.spread) / 4.0);
  r.product = identity(dm.product_C, (tf.spread * wf.spread + tg.spread * wg.spread) / 8.0);
  return r;
}

double flandrin(const Signal& f, const Kernel& k, double T, EngineOptions opts) {
  if (!(T > 0.0)) throw PreconditionError("the Flandrin functional needs T > 0");
  if (!classify(k, f.grid()).marginal) {
    throw PreconditionError("the Flandrin functional needs a kernel with the marginal property; '" + k.tag() +
                            "' does not have it");
  }
  const double norm2 = std::pow(l2_norm(f), 2);
  if (norm2 == 0.0) throw ZeroNorm("the Flandrin functional needs a non-zero signal");
  const Moments t = time_moments(f);
  const Moments w = freq_moments(f);
  const Distribution D = cctfd(f, k, opts);
  const Grid& tg = D.time_grid;
  const Grid& wg = D.freq_grid;
  const std::size_t dim = tg.dim();
  const std::size_t W = wg.total();
  std::vector<double> wterm(W);
  for (std::size_t kk = 0; kk < W; ++kk) {
    double s = 0.0;
    for (std::size_t d = 0; d < dim; ++d) s += std::pow(wg.coord(kk, d) - w.center[d], 2);
    wterm[kk] = T * T * s;
  }
  cplx acc{};
  for (std::size_t n = 0; n < tg.total(); ++n) {
    double s = 0.0;
    for (std::size_t d = 0; d < dim; ++d) s += std::pow(tg.coord(n, d) - t.center[d], 2);
    const double xterm = s / (T * T);
    for (std::size_t kk = 0; kk < W; ++kk) acc += (xterm + wterm[kk]) * D.values[n * W + kk];
  }
  acc *= tg.cell_volume() * wg.cell_volume() / norm2;
  if (std::abs(acc.imag()) > 1e-6 * std::max(1.0, std::abs(acc.real()))) {
    throw PreconditionError("the Flandrin functional came out complex (imaginary part " + std::to_string(acc.imag()) +
                            ")");
  }
  return acc.real();
}

}  // namespace tfu
