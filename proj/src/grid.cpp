#include "tfu/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tfu/error.hpp"

namespace tfu {

Grid::Grid(std::vector<double> origin, std::vector<double> spacing, std::vector<std::size_t> count)
    : origin_(std::move(origin)), spacing_(std::move(spacing)), count_(std::move(count)) {
  if (origin_.empty() || origin_.size() != spacing_.size() || origin_.size() != count_.size()) {
    throw InvalidGrid("grid origin, spacing and count must have the same non-zero length");
  }
  for (std::size_t d = 0; d < dim(); ++d) {
    if (!(spacing_[d] > 0.0) || !std::isfinite(spacing_[d])) {
      throw InvalidGrid("grid spacing must be positive on axis " + std::to_string(d));
    }
    if (!std::isfinite(origin_[d])) {
      throw InvalidGrid("grid origin must be finite on axis " + std::to_string(d));
    }
    if (count_[d] < 2) {
      throw InvalidGrid("grid count must be at least 2 on axis " + std::to_string(d));
    }
  }
  stride_.assign(dim(), 1);
  for (std::size_t d = dim() - 1; d > 0; --d) stride_[d - 1] = stride_[d] * count_[d];
  total_ = stride_[0] * count_[0];
}

void Grid::node(std::size_t flat, std::span<double> out) const {
  for (std::size_t d = 0; d < dim(); ++d) out[d] = coord(flat, d);
}

std::vector<double> Grid::node(std::size_t flat) const {
  std::vector<double> x(dim());
  node(flat, x);
  return x;
}

double Grid::cell_volume() const {
  double v = 1.0;
  for (double s : spacing_) v *= s;
  return v;
}

bool Grid::on_boundary(std::size_t flat) const {
  for (std::size_t d = 0; d < dim(); ++d) {
    const std::size_t i = index_along(flat, d);
    if (i == 0 || i + 1 == count_[d]) return true;
  }
  return false;
}

Grid make_grid(std::vector<double> origin, std::vector<double> spacing, std::vector<std::int64_t> count) {
  std::vector<std::size_t> c(count.size());
  for (std::size_t d = 0; d < count.size(); ++d) {
    if (count[d] < 2) throw InvalidGrid("grid count must be at least 2 on axis " + std::to_string(d));
    c[d] = static_cast<std::size_t>(count[d]);
  }
  return Grid(std::move(origin), std::move(spacing), std::move(c));
}

Grid uniform_grid(std::size_t count, double lo, double hi) {
  if (count < 2) throw InvalidGrid("grid count must be at least 2");
  if (!(hi > lo)) throw InvalidGrid("grid span must be non-empty");
  return Grid({lo}, {(hi - lo) / static_cast<double>(count)}, {count});
}

namespace {

std::vector<double> centered_dual_origin(const Grid& g) {
  std::vector<double> o(g.dim());
  for (std::size_t d = 0; d < g.dim(); ++d) {
    const double m = static_cast<double>(g.count()[d]);
    const double dual_spacing = 1.0 / (m * g.spacing()[d]);
    o[d] = -static_cast<double>(g.count()[d] / 2) * dual_spacing;
  }
  return o;
}

}  // namespace

Signal::Signal(Grid grid, std::vector<cplx> samples, Domain domain)
    : grid_(std::move(grid)), samples_(std::move(samples)), domain_(domain) {
  if (samples_.size() != grid_.total()) {
    throw SamplingError("signal has " + std::to_string(samples_.size()) + " samples but grid has " +
                        std::to_string(grid_.total()) + " nodes");
  }
  double edge = 0.0;
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const cplx& s = samples_[i];
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
      throw SamplingError("non-finite sample at node " + std::to_string(i));
    }
    const double a = std::abs(s);
    peak_ = std::max(peak_, a);
    if (grid_.on_boundary(i)) edge = std::max(edge, a);
  }
  edge_ratio_ = peak_ > 0.0 ? edge / peak_ : 0.0;
  truncation_warning_ = edge_ratio_ > kBoundaryDecayThreshold;
  if (domain_ == Domain::frequency) dual_origin_ = centered_dual_origin(grid_);
}

Signal Signal::with_samples(std::vector<cplx> samples) const {
  Signal s(grid_, std::move(samples), domain_);
  s.dual_origin_ = dual_origin_;
  return s;
}

Signal Signal::with_dual_origin(std::vector<double> origin) const {
  Signal s = *this;
  s.dual_origin_ = std::move(origin);
  return s;
}

Signal Signal::with_inherited_warning(bool warning) const {
  Signal s = *this;
  s.truncation_warning_ = s.truncation_warning_ || warning;
  return s;
}

Signal sample(const SampleFn& fn, const Grid& grid, Domain domain) {
  std::vector<cplx> v(grid.total());
  std::vector<double> x(grid.dim());
  for (std::size_t i = 0; i < grid.total(); ++i) {
    grid.node(i, x);
    v[i] = fn(x);
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) {
      std::ostringstream msg;
      msg << "sampling produced a non-finite value at node " << i << " (x =";
      for (double c : x) msg << ' ' << c;
      msg << ')';
      throw SamplingError(msg.str());
    }
  }
  return Signal(grid, std::move(v), domain);
}

Signal sample_1d(const std::function<cplx(double)>& fn, const Grid& grid, Domain domain) {
  return sample([&](std::span<const double> x) { return fn(x[0]); }, grid, domain);
}

cplx inner_product(const Signal& f, const Signal& g) {
  if (!(f.grid() == g.grid())) throw IncompatibleGrids("inner product of signals on different grids");
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * std::conj(g[i]);
  return acc * f.grid().cell_volume();
}

double l2_norm(const Signal& f) {
  double acc = 0.0;
  for (const cplx& s : f.samples()) acc += std::norm(s);
  return std::sqrt(acc * f.grid().cell_volume());
}

Signal scale(const Signal& f, cplx a) {
  std::vector<cplx> v(f.samples().begin(), f.samples().end());
  for (cplx& s : v) s *= a;
  return f.with_samples(std::move(v));
}

Signal add(const Signal& f, const Signal& g) {
  if (!(f.grid() == g.grid())) throw IncompatibleGrids("sum of signals on different grids");
  std::vector<cplx> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = f[i] + g[i];
  return f.with_samples(std::move(v));
}

}  // namespace tfu
