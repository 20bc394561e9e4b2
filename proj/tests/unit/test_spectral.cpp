#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "tfu/error.hpp"
#include "tfu/spectral.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs_diff(const tfu::Signal& a, const tfu::Signal& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("Gaussian is its own Fourier transform", "[spectral]") {
  const tfu::Grid g = tfu::uniform_grid(256, -8.0, 8.0);
  const tfu::Signal f = tfu::sample_1d([](double x) { return tfu::cplx(std::exp(-kPi * x * x)); }, g);
  const tfu::Signal F = tfu::spectral::fourier(f);
  CHECK(F.domain() == tfu::Domain::frequency);
  const tfu::Grid& fg = F.grid();
  CHECK_THAT(fg.spacing()[0], WithinAbs(1.0 / 16.0, 1e-15));
  double err = 0.0;
  for (std::size_t k = 0; k < F.size(); ++k) {
    const double u = fg.coord(k, 0);
    err = std::max(err, std::abs(F[k] - std::exp(-kPi * u * u)));
  }
  CHECK(err < 1e-12);
}

TEST_CASE("time shift becomes a linear phase", "[spectral]") {
  const tfu::Grid g = tfu::uniform_grid(256, -6.0, 10.0);
  const double a = 1.5;
  const tfu::Signal f = tfu::sample_1d([&](double x) { return tfu::cplx(std::exp(-kPi * (x - a) * (x - a))); }, g);
  const tfu::Signal F = tfu::spectral::fourier(f);
  double err = 0.0;
  for (std::size_t k = 0; k < F.size(); ++k) {
    const double u = F.grid().coord(k, 0);
    err = std::max(err, std::abs(F[k] - std::exp(-kPi * u * u) * std::polar(1.0, -2.0 * kPi * a * u)));
  }
  CHECK(err < 1e-12);
}

TEST_CASE("Plancherel and round trip", "[spectral]") {
  const tfu::Grid g({-3.0, -2.0}, {0.125, 0.125}, {48, 32});
  const tfu::Signal f = tfu::sample(
      [](std::span<const double> x) {
        return std::exp(-kPi * (x[0] * x[0] + 2.0 * x[1] * x[1])) * std::polar(1.0, 0.7 * x[0] - 0.3 * x[1]);
      },
      g);
  const tfu::Signal F = tfu::spectral::fourier(f);
  CHECK_THAT(tfu::l2_norm(F), WithinRel(tfu::l2_norm(f), 1e-12));
  const tfu::Signal back = tfu::spectral::inverse_fourier(F);
  CHECK(back.grid() == f.grid());
  CHECK(max_abs_diff(back, f) < 1e-13);
}

TEST_CASE("conjugation reflects the spectrum", "[spectral]") {
  const tfu::Grid g = tfu::uniform_grid(128, -8.0, 8.0);
  const tfu::Signal f =
      tfu::sample_1d([](double x) { return std::exp(-kPi * (x - 0.5) * (x - 0.5)) * std::polar(1.0, 2.0 * x); }, g);
  std::vector<tfu::cplx> c(f.samples().begin(), f.samples().end());
  for (auto& v : c) v = std::conj(v);
  const tfu::Signal F = tfu::spectral::fourier(f);
  const tfu::Signal Fc = tfu::spectral::fourier(f.with_samples(c));
  const std::size_t M = F.size();
  const std::size_t centre = tfu::spectral::center_index(M);
  double err = 0.0;
  for (std::size_t k = 1; k < M; ++k) err = std::max(err, std::abs(Fc[k] - std::conj(F[2 * centre - k])));
  CHECK(err < 1e-12);
}

TEST_CASE("domain checks", "[spectral]") {
  const tfu::Grid g = tfu::uniform_grid(16, -1.0, 1.0);
  const tfu::Signal F = tfu::sample_1d([](double) { return tfu::cplx(0.0); }, g, tfu::Domain::frequency);
  CHECK_THROWS_AS(tfu::spectral::fourier(F), tfu::DomainMismatch);
  const tfu::Signal f = tfu::sample_1d([](double) { return tfu::cplx(0.0); }, g);
  CHECK_THROWS_AS(tfu::spectral::inverse_fourier(f), tfu::DomainMismatch);
}

TEST_CASE("raw DFT matches the direct sum", "[spectral]") {
  const std::size_t n = 12;
  std::vector<tfu::cplx> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = {std::cos(0.3 * i), std::sin(1.1 * i)};
  y = x;
  const std::size_t shape[] = {n};
  tfu::spectral::dft_inplace(y, shape, -1);
  for (std::size_t k = 0; k < n; ++k) {
    tfu::cplx s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * std::polar(1.0, -2.0 * kPi * double(i * k) / double(n));
    CHECK(std::abs(y[k] - s) < 1e-12);
  }
}
