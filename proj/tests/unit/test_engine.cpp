#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "tfu/catalog.hpp"
#include "tfu/engine.hpp"
#include "tfu/error.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kPi = std::numbers::pi;

tfu::Kernel as_table(const tfu::Kernel& k) {
  return tfu::Kernel::tabulated(
      {"table-of-" + k.tag(), [k](std::span<const double> v, std::span<const double> y) { return tfu::kernel_value(k, v, y); }});
}

}  // namespace

TEST_CASE("distribution lattice", "[engine]") {
  const tfu::Grid t = tfu::uniform_grid(256, -8.0, 8.0);
  const tfu::Grid w = tfu::distribution_freq_grid(t);
  CHECK(w.total() == 256);
  CHECK_THAT(w.spacing()[0], WithinRel(1.0 / 32.0, 1e-15));
  CHECK_THAT(w.origin()[0], WithinRel(-4.0, 1e-15));
}

TEST_CASE("Wigner of the Gaussian", "[engine]") {
  const tfu::Grid g = tfu::uniform_grid(256, -8.0, 8.0);
  const tfu::Distribution W = tfu::cctfd(tfu::catalog::gaussian(g), tfu::Kernel::unit());
  CHECK(W.kernel_tag == "unit");
  double worst = 0.0;
  for (std::size_t n = 0; n < g.total(); ++n) {
    const double x = W.time_grid.coord(n, 0);
    for (std::size_t k = 0; k < W.freq_grid.total(); ++k) {
      const double u = W.freq_grid.coord(k, 0);
      worst = std::max(worst, std::abs(W.at(n, k) - std::sqrt(2.0) * std::exp(-2.0 * kPi * (x * x + u * u))));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("FFT paths agree with the serial reference", "[engine]") {
  tfu::catalog::Generator gen(11);
  const tfu::Grid g = tfu::uniform_grid(64, -4.0, 4.0);
  const tfu::Signal f = gen.decaying_signal(g);
  const tfu::Signal h = gen.decaying_signal(g);
  CHECK(tfu::peak_relative_deviation(tfu::reference::cross_wigner(f, h), tfu::cross_wigner(f, h)) < 1e-12);

  const tfu::Grid g2({-2.0, -2.0}, {0.25, 0.25}, {16, 16});
  const tfu::Signal f2 = tfu::sample(
      [](std::span<const double> x) { return std::exp(-kPi * (x[0] * x[0] + x[1] * x[1])) * std::polar(1.0, x[0]); }, g2);
  CHECK(tfu::peak_relative_deviation(tfu::reference::cross_wigner(f2, f2), tfu::cross_wigner(f2, f2)) < 1e-12);

  const tfu::Grid gs = tfu::uniform_grid(256, -8.0, 8.0);
  const tfu::Signal gauss = tfu::catalog::gaussian(gs);
  for (const tfu::Kernel& k : {tfu::Kernel::unit(), tfu::kernels::chirp(1.0)}) {
    CHECK(tfu::peak_relative_deviation(tfu::reference::cctfd_freq(gauss, k), tfu::cctfd_freq(gauss, k)) < 1e-12);
  }
}

TEST_CASE("auto-Wigner is real with exact time marginal", "[engine]") {
  tfu::catalog::Generator gen(3);
  const tfu::Grid g = tfu::uniform_grid(128, -8.0, 8.0);
  const tfu::Signal f = gen.decaying_signal(g);
  const tfu::Distribution W = tfu::cross_wigner(f, f);
  const double dw = W.freq_grid.spacing()[0];
  double imag = 0.0, marginal = 0.0;
  for (std::size_t n = 0; n < g.total(); ++n) {
    tfu::cplx row = 0.0;
    for (std::size_t k = 0; k < W.freq_grid.total(); ++k) {
      imag = std::max(imag, std::abs(W.at(n, k).imag()));
      row += W.at(n, k) * dw;
    }
    marginal = std::max(marginal, std::abs(row - std::norm(f[n])));
  }
  CHECK(imag < 1e-12);
  CHECK(marginal < 1e-12);
}

TEST_CASE("cross-Wigner is Hermitian in its arguments", "[engine]") {
  tfu::catalog::Generator gen(5);
  const tfu::Grid g = tfu::uniform_grid(64, -4.0, 4.0);
  const tfu::Signal f = gen.decaying_signal(g);
  const tfu::Signal h = gen.decaying_signal(g);
  const tfu::Distribution a = tfu::cross_wigner(f, h);
  const tfu::Distribution b = tfu::cross_wigner(h, f);
  double err = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) err = std::max(err, std::abs(a.values[i] - std::conj(b.values[i])));
  CHECK(err < 1e-14);
}

TEST_CASE("tabulated quadrature reproduces the closed-form kernels", "[engine]") {
  const tfu::Grid g = tfu::uniform_grid(48, -2.4, 2.4);
  const tfu::Signal f = tfu::catalog::gaussian_chirp(g, 0.5).signal;
  for (const tfu::Kernel& k : {tfu::Kernel::kirkwood_rihaczek(), tfu::Kernel::page()}) {
    const tfu::Distribution closed = tfu::cctfd(f, k);
    const tfu::Distribution table = tfu::cctfd(f, as_table(k));
    CHECK(tfu::peak_relative_deviation(closed, table) < 1e-6);
  }
}

TEST_CASE("engine refusals", "[engine]") {
  const tfu::Grid big = tfu::uniform_grid(128, -8.0, 8.0);
  CHECK_THROWS_AS(tfu::cctfd(tfu::catalog::gaussian(big), as_table(tfu::Kernel::unit()), {tfu::BandGuard::skip}),
                  tfu::ResolutionLimit);

  const tfu::Grid coarse = tfu::uniform_grid(32, -4.0, 4.0);
  const tfu::Signal wide = tfu::catalog::gaussian_chirp(coarse, 1.0).signal;
  CHECK_THROWS_AS(tfu::cctfd(wide, tfu::Kernel::unit()), tfu::BandwidthError);
  CHECK_NOTHROW(tfu::cctfd(wide, tfu::Kernel::unit(), {tfu::BandGuard::skip}));

  CHECK_THROWS_AS(tfu::cctfd_freq(tfu::catalog::gaussian(big), tfu::Kernel::page()), tfu::KernelError);
  const tfu::Grid other = tfu::uniform_grid(64, -8.0, 8.0);
  CHECK_THROWS_AS(tfu::cross_wigner(tfu::catalog::gaussian(big), tfu::catalog::gaussian(other)), tfu::IncompatibleGrids);
  const tfu::Grid g2({-2.0, -2.0}, {0.25, 0.25}, {16, 16});
  const tfu::Signal f2 =
      tfu::sample([](std::span<const double> x) { return tfu::cplx(std::exp(-kPi * (x[0] * x[0] + x[1] * x[1]))); }, g2);
  CHECK_THROWS_AS(tfu::cctfd(f2, tfu::Kernel::page(), {tfu::BandGuard::skip}), tfu::DimensionError);
}

TEST_CASE("Moyal and Parseval", "[engine]") {
  const tfu::Grid g = tfu::uniform_grid(256, -8.0, 8.0);
  const tfu::Signal gauss = tfu::catalog::gaussian(g);
  const tfu::Signal herm = tfu::catalog::hermite1(g);
  for (const tfu::Kernel& k : {tfu::Kernel::unit(), tfu::Kernel::kirkwood_rihaczek(), tfu::Kernel::page(),
                               tfu::kernels::chirp(1.0)}) {
    CHECK_THAT(tfu::parseval_ratio(gauss, k), WithinAbs(1.0, 1e-10));
    CHECK(tfu::moyal_residual(gauss, herm, k) < 1e-10);
  }
}
