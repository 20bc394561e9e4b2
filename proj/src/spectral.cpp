#include "tfu/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "tfu/error.hpp"

namespace tfu::spectral {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(const std::vector<int>& shape, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(shape, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::size_t total = 1;
    for (int n : shape) total *= static_cast<std::size_t>(n);
    fftw_complex* scratch = fftw_alloc_complex(total);
    fftw_plan plan = fftw_plan_dft(static_cast<int>(shape.size()), shape.data(), scratch, scratch,
                                   sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    plans_.emplace(std::move(key), plan);
    return plan;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<std::vector<int>, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

void dft_inplace(std::span<cplx> data, std::span<const std::size_t> shape, int sign) {
  std::vector<int> dims(shape.begin(), shape.end());
  fftw_plan plan = plan_cache().get(dims, sign);
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, p, p);
}

Grid reciprocal_grid(const Grid& g) {
  std::vector<double> origin(g.dim()), spacing(g.dim());
  for (std::size_t d = 0; d < g.dim(); ++d) {
    spacing[d] = 1.0 / (static_cast<double>(g.count()[d]) * g.spacing()[d]);
    origin[d] = -static_cast<double>(center_index(g.count()[d])) * spacing[d];
  }
  return Grid(origin, spacing, g.count());
}

namespace {

// exp(sign * 2 pi i * sum_d n_d c_d / M_d) for the node's multi-index.
cplx center_twiddle(const Grid& g, std::size_t flat, double sign) {
  double phase = 0.0;
  for (std::size_t d = 0; d < g.dim(); ++d) {
    const auto m = static_cast<double>(g.count()[d]);
    phase += static_cast<double>(g.index_along(flat, d)) * static_cast<double>(center_index(g.count()[d])) / m;
  }
  phase -= std::floor(phase);
  return std::polar(1.0, sign * kTwoPi * phase);
}

// exp(sign * 2 pi i * origin . node) for a node of `g`.
cplx origin_twiddle(const Grid& g, std::size_t flat, std::span<const double> origin, double sign) {
  double phase = 0.0;
  for (std::size_t d = 0; d < g.dim(); ++d) phase += origin[d] * g.coord(flat, d);
  return std::polar(1.0, sign * kTwoPi * phase);
}

}  // namespace

Signal fourier(const Signal& f) {
  if (f.domain() != Domain::time) throw DomainMismatch("fourier expects a time-domain signal");
  const Grid& tg = f.grid();
  const Grid fg = reciprocal_grid(tg);
  std::vector<cplx> buf(f.samples().begin(), f.samples().end());
  for (std::size_t n = 0; n < buf.size(); ++n) buf[n] *= center_twiddle(tg, n, +1.0);
  dft_inplace(buf, tg.count(), -1);
  const double w = tg.cell_volume();
  for (std::size_t k = 0; k < buf.size(); ++k) buf[k] *= w * origin_twiddle(fg, k, tg.origin(), -1.0);
  return Signal(fg, std::move(buf), Domain::frequency)
      .with_dual_origin(tg.origin())
      .with_inherited_warning(f.truncation_warning());
}

Signal inverse_fourier(const Signal& F) { return inverse_fourier(F, F.dual_origin()); }

Signal inverse_fourier(const Signal& F, std::span<const double> time_origin) {
  if (F.domain() != Domain::frequency) throw DomainMismatch("inverse_fourier expects a frequency-domain signal");
  const Grid& fg = F.grid();
  if (time_origin.size() != fg.dim()) throw DimensionError("time origin has the wrong dimension");
  std::vector<double> spacing(fg.dim());
  for (std::size_t d = 0; d < fg.dim(); ++d) {
    spacing[d] = 1.0 / (static_cast<double>(fg.count()[d]) * fg.spacing()[d]);
  }
  const Grid tg(std::vector<double>(time_origin.begin(), time_origin.end()), spacing, fg.count());
  std::vector<cplx> buf(F.samples().begin(), F.samples().end());
  for (std::size_t k = 0; k < buf.size(); ++k) buf[k] *= origin_twiddle(fg, k, time_origin, +1.0);
  dft_inplace(buf, fg.count(), +1);
  const double w = fg.cell_volume();
  for (std::size_t n = 0; n < buf.size(); ++n) buf[n] *= w * center_twiddle(tg, n, -1.0);
  return Signal(tg, std::move(buf), Domain::time).with_inherited_warning(F.truncation_warning());
}

}  // namespace tfu::spectral
