#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <sstream>

#include "tfu/error.hpp"
#include "tfu/grid.hpp"
#include "tfu/signal_io.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("grid geometry", "[grid]") {
  const tfu::Grid g({-1.0, 0.0}, {0.5, 0.25}, {4, 3});
  CHECK(g.dim() == 2);
  CHECK(g.total() == 12);
  CHECK(g.stride(0) == 3);
  CHECK(g.stride(1) == 1);
  CHECK_THAT(g.coord(5, 0), WithinAbs(-0.5, 1e-15));
  CHECK_THAT(g.coord(5, 1), WithinAbs(0.5, 1e-15));
  CHECK_THAT(g.cell_volume(), WithinAbs(0.125, 1e-15));
  CHECK(g.on_boundary(0));
  CHECK_FALSE(g.on_boundary(4));
  CHECK(g.on_boundary(5));
}

TEST_CASE("uniform grid tiles a half-open interval", "[grid]") {
  const tfu::Grid g = tfu::uniform_grid(256, -8.0, 8.0);
  CHECK_THAT(g.spacing()[0], WithinAbs(1.0 / 16.0, 1e-15));
  CHECK_THAT(g.coord(255, 0), WithinAbs(8.0 - 1.0 / 16.0, 1e-12));
}

TEST_CASE("invalid grids are rejected", "[grid]") {
  CHECK_THROWS_AS(tfu::Grid({0.0}, {0.0}, {4}), tfu::InvalidGrid);
  CHECK_THROWS_AS(tfu::Grid({0.0}, {1.0}, {1}), tfu::InvalidGrid);
  CHECK_THROWS_AS(tfu::Grid({0.0, 0.0}, {1.0}, {4}), tfu::InvalidGrid);
  CHECK_THROWS_AS(tfu::make_grid({0.0}, {1.0}, {-4}), tfu::InvalidGrid);
}

TEST_CASE("signals validate samples and flag truncation", "[signal]") {
  const tfu::Grid g = tfu::uniform_grid(64, -4.0, 4.0);
  CHECK_THROWS_AS(tfu::Signal(g, std::vector<tfu::cplx>(10)), tfu::SamplingError);
  CHECK_THROWS_AS(tfu::sample_1d([](double) { return tfu::cplx(std::numeric_limits<double>::quiet_NaN()); }, g),
                  tfu::SamplingError);

  const tfu::Signal gauss = tfu::sample_1d([](double x) { return tfu::cplx(std::exp(-std::numbers::pi * x * x)); }, g);
  CHECK_FALSE(gauss.truncation_warning());
  const tfu::Signal flat = tfu::sample_1d([](double) { return tfu::cplx(1.0); }, g);
  CHECK(flat.truncation_warning());
  CHECK_THAT(flat.edge_ratio(), WithinAbs(1.0, 1e-15));
}

TEST_CASE("signal inner product and norm", "[signal]") {
  const tfu::Grid g = tfu::uniform_grid(256, -8.0, 8.0);
  const tfu::Signal gauss = tfu::sample_1d([](double x) { return tfu::cplx(std::exp(-std::numbers::pi * x * x)); }, g);
  CHECK_THAT(tfu::l2_norm(gauss), WithinRel(std::pow(0.5, 0.25), 1e-12));
  const tfu::Signal twice = tfu::scale(gauss, 2.0);
  CHECK_THAT(tfu::inner_product(twice, gauss).real(), WithinRel(2.0 * std::sqrt(0.5), 1e-12));
  CHECK_THAT(tfu::l2_norm(tfu::add(gauss, twice)), WithinRel(3.0 * tfu::l2_norm(gauss), 1e-12));
  const tfu::Signal other = tfu::sample_1d([](double) { return tfu::cplx(0.0); }, tfu::uniform_grid(128, -8.0, 8.0));
  CHECK_THROWS_AS(tfu::inner_product(gauss, other), tfu::IncompatibleGrids);
}

TEST_CASE("signal CSV round trip is exact", "[signal_io]") {
  const tfu::Grid g({-1.25, 0.5}, {0.1, 0.3}, {5, 4});
  const tfu::Signal s = tfu::sample(
      [](std::span<const double> x) { return tfu::cplx(std::sin(x[0]) / 3.0, std::cos(x[1]) * 1e-7); }, g);
  std::stringstream buf;
  tfu::write_signal_csv(buf, s);
  const tfu::Signal r = tfu::read_signal_csv(buf);
  CHECK(r.grid() == s.grid());
  CHECK(r.domain() == tfu::Domain::time);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(r[i] == s[i]);
}

TEST_CASE("malformed signal CSV names the problem", "[signal_io]") {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return tfu::read_signal_csv(in);
  };
  CHECK_THROWS_WITH(read("# grid origin=0 spacing=1 domain=time\nindex,re,im\n"), Catch::Matchers::ContainsSubstring("count"));
  CHECK_THROWS_WITH(read("# grid origin=0 spacing=1 count=2 domain=time\nindex,re,im\n0,1,0\n"),
                    Catch::Matchers::ContainsSubstring("rows"));
  CHECK_THROWS_WITH(read("# grid origin=0 spacing=1 count=2 domain=time\nindex,re,im\n0,1,0\n1,x,0\n"),
                    Catch::Matchers::ContainsSubstring("re"));
  CHECK_THROWS_AS(read("# grid origin=0 spacing=-1 count=2 domain=time\nindex,re,im\n0,1,0\n1,1,0\n"), tfu::FormatError);
  CHECK_THROWS_AS(read(""), tfu::FormatError);
}
