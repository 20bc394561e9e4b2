#pragma once

// Uniform sampling lattices and complex sampled signals.
//
// A Grid is an N-dimensional uniform lattice stored row-major (last axis
// fastest). A Signal is a complex sample array on a Grid together with the
// domain it lives in. Both are immutable after construction.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace tfu {

using cplx = std::complex<double>;

class Grid {
 public:
  // Throws InvalidGrid unless every spacing is > 0, every count >= 2 and the
  // three vectors have the same non-zero length.
  Grid(std::vector<double> origin, std::vector<double> spacing, std::vector<std::size_t> count);

  std::size_t dim() const { return origin_.size(); }
  std::size_t total() const { return total_; }
  const std::vector<double>& origin() const { return origin_; }
  const std::vector<double>& spacing() const { return spacing_; }
  const std::vector<std::size_t>& count() const { return count_; }

  // Row-major stride of an axis, in samples.
  std::size_t stride(std::size_t axis) const { return stride_[axis]; }

  // Coordinate of a flat node index along one axis.
  double coord(std::size_t flat, std::size_t axis) const {
    return origin_[axis] + static_cast<double>((flat / stride_[axis]) % count_[axis]) * spacing_[axis];
  }
  std::size_t index_along(std::size_t flat, std::size_t axis) const {
    return (flat / stride_[axis]) % count_[axis];
  }
  void node(std::size_t flat, std::span<double> out) const;
  std::vector<double> node(std::size_t flat) const;

  // Product of spacings: the Riemann-sum quadrature weight.
  double cell_volume() const;

  // True when the node lies on the outermost layer (any index at 0 or count-1).
  bool on_boundary(std::size_t flat) const;

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.origin_ == b.origin_ && a.spacing_ == b.spacing_ && a.count_ == b.count_;
  }

 private:
  std::vector<double> origin_;
  std::vector<double> spacing_;
  std::vector<std::size_t> count_;
  std::vector<std::size_t> stride_;
  std::size_t total_ = 0;
};

// Counts are signed so that malformed input is rejected instead of wrapping.
Grid make_grid(std::vector<double> origin, std::vector<double> spacing, std::vector<std::int64_t> count);

// 1-D shorthand: `count` nodes tiling [lo, hi).
Grid uniform_grid(std::size_t count, double lo, double hi);

enum class Domain { time, frequency };

// Relative edge magnitude above which a signal is flagged as truncated.
inline constexpr double kBoundaryDecayThreshold = 1e-6;

class Signal {
 public:
  // Throws SamplingError on size mismatch or non-finite samples.
  Signal(Grid grid, std::vector<cplx> samples, Domain domain = Domain::time);

  const Grid& grid() const { return grid_; }
  std::span<const cplx> samples() const { return samples_; }
  const cplx& operator[](std::size_t i) const { return samples_[i]; }
  std::size_t size() const { return samples_.size(); }
  Domain domain() const { return domain_; }

  // max |sample| on the outermost layer exceeds kBoundaryDecayThreshold x peak.
  bool truncation_warning() const { return truncation_warning_; }
  // Ratio max|edge| / max|sample| (0 for the zero signal).
  double edge_ratio() const { return edge_ratio_; }
  double peak() const { return peak_; }

  // For frequency-domain signals: origin of the time grid they were
  // transformed from. Defaults to the centered time lattice.
  const std::vector<double>& dual_origin() const { return dual_origin_; }

  Signal with_samples(std::vector<cplx> samples) const;
  Signal with_dual_origin(std::vector<double> origin) const;
  // Carries an upstream truncation warning forward.
  Signal with_inherited_warning(bool warning) const;

 private:
  Grid grid_;
  std::vector<cplx> samples_;
  Domain domain_;
  bool truncation_warning_ = false;
  double edge_ratio_ = 0.0;
  double peak_ = 0.0;
  std::vector<double> dual_origin_;
};

using SampleFn = std::function<cplx(std::span<const double>)>;

// Evaluates fn on every node. Throws SamplingError naming the first node where
// fn is not finite.
Signal sample(const SampleFn& fn, const Grid& grid, Domain domain = Domain::time);
Signal sample_1d(const std::function<cplx(double)>& fn, const Grid& grid, Domain domain = Domain::time);

// Riemann-sum quadrature of f * conj(g). Throws IncompatibleGrids.
cplx inner_product(const Signal& f, const Signal& g);
double l2_norm(const Signal& f);

// Pointwise helpers used throughout the analysis code.
Signal scale(const Signal& f, cplx a);
Signal add(const Signal& f, const Signal& g);

}  // namespace tfu
