#include "tfu/catalog.hpp"

#include <cmath>
#include <numbers>

namespace tfu::catalog {

namespace {

constexpr double kPi = std::numbers::pi;

ChirpSpec centered_spec(std::size_t dim) {
  ChirpSpec s;
  s.zeta = 1.0 / (2.0 * kPi);
  s.eps = 1.0;
  s.x0.assign(dim, 0.0);
  s.w0.assign(dim, 0.0);
  return s;
}

std::vector<int> all_axes(std::size_t dim) {
  std::vector<int> axes;
  for (std::size_t d = 1; d <= dim; ++d) axes.push_back(static_cast<int>(d));
  return axes;
}

}  // namespace

Signal gaussian(const Grid& grid) { return gaussian(grid, 1.0 / (2.0 * kPi)); }

Signal gaussian(const Grid& grid, double zeta) {
  const std::vector<double> origin(grid.dim(), 0.0);
  return optimal_gaussian(zeta, origin, 0.0, grid);
}

ChirpSignal gaussian_chirp(const Grid& grid, double c) {
  if (c == 0.0) {
    Signal g = gaussian(grid);
    return {g, std::vector<double>(grid.total() * grid.dim(), 0.0)};
  }
  ChirpSpec s = centered_spec(grid.dim());
  s.eps = 1.0 / std::abs(c);
  (c > 0 ? s.partition.j1 : s.partition.j2) = all_axes(grid.dim());
  return optimal_chirp(s, grid);
}

ChirpSignal sgn_chirp(const Grid& grid) {
  ChirpSpec s = centered_spec(grid.dim());
  s.partition.j3 = all_axes(grid.dim());
  return optimal_chirp(s, grid);
}

Signal hermite1(const Grid& grid) {
  return sample(
      [](std::span<const double> x) {
        double r2 = 0.0;
        for (double v : x) r2 += v * v;
        return cplx{x[0] * std::exp(-kPi * r2), 0.0};
      },
      grid);
}

double Generator::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Signal Generator::decaying_signal(const Grid& grid) {
  struct Atom {
    std::vector<double> center, mod;
    double zeta;
    cplx amp;
  };
  const std::size_t dim = grid.dim();
  std::vector<Atom> atoms(3);
  for (Atom& a : atoms) {
    a.center.resize(dim);
    a.mod.resize(dim);
    for (double& c : a.center) c = uniform(-2.0, 2.0);
    a.zeta = uniform(0.1, 0.4);
    for (double& m : a.mod) m = uniform(-1.0, 1.0);
    const double re = uniform(-1.0, 1.0);
    a.amp = {re, uniform(-1.0, 1.0)};
  }
  return sample(
      [&](std::span<const double> x) {
        cplx acc{};
        for (const Atom& a : atoms) {
          double r2 = 0.0, ph = 0.0;
          for (std::size_t d = 0; d < dim; ++d) {
            r2 += (x[d] - a.center[d]) * (x[d] - a.center[d]);
            ph += a.mod[d] * x[d];
          }
          acc += a.amp * std::exp(-r2 / (2.0 * a.zeta)) * std::polar(1.0, 2.0 * kPi * ph);
        }
        return acc;
      },
      grid);
}

std::vector<double> Generator::phase_field(const Grid& grid) {
  const std::size_t dim = grid.dim();
  std::vector<double> coef(4 * dim);
  for (double& c : coef) c = uniform(-2.0, 2.0);
  std::vector<double> grad(grid.total() * dim);
  for (std::size_t i = 0; i < grid.total(); ++i) {
    for (std::size_t d = 0; d < dim; ++d) {
      const double x = grid.coord(i, d);
      const double* a = &coef[4 * d];
      grad[i * dim + d] = a[0] + x * (a[1] + x * (a[2] + x * a[3]));
    }
  }
  return grad;
}

}  // namespace tfu::catalog
