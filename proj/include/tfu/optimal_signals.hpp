#pragma once

// Extremal signals of the classical uncertainty bounds: optimal Gaussians
// and Gaussian-enveloped chirps, with exact phase gradients.
//
// The chirp phase is
//   phase(x) = sum_m eta_m(x) (x_m - x0_m)^2 / (2 eps) + w0 . x + offset[orthant]
// where eta_m is +1 for axes in j1, -1 in j2, sgn(x_m - x0_m) in j3 and
// -sgn(x_m - x0_m) in j4, with sgn(0) = +1.

#include <span>
#include <string>
#include <vector>

#include "tfu/grid.hpp"

namespace tfu {

// Axis numbers are 1-based, matching the usual statement of the partition.
struct ChirpPartition {
  std::vector<int> j1, j2, j3, j4;
};

struct ChirpSpec {
  double zeta = 0.0;
  double eps = 0.0;
  std::vector<double> x0;
  std::vector<double> w0;
  double amp_offset = 0.0;
  // One offset per orthant, indexed by the bitmask with bit d set when
  // eta_d = -1. Empty means all zero.
  std::vector<double> phase_offsets;
  ChirpPartition partition;
};

// Throws PreconditionError naming the broken invariant.
void validate(const ChirpSpec& spec, std::size_t dim);

// JSON object {zeta, eps, x0, w0, amp_offset, phase_offsets,
// partition:{j1,j2,j3,j4}}. Throws FormatError naming the field.
ChirpSpec parse_chirp_spec(const std::string& json_text);
ChirpSpec read_chirp_spec(const std::string& path);
std::string to_json(const ChirpSpec& spec);

// exp(-||x - x0||^2 / (2 zeta) + amp_offset). Throws TruncationError when
// the grid is too narrow for the envelope to decay.
Signal optimal_gaussian(double zeta, std::span<const double> x0, double amp_offset, const Grid& grid);

struct ChirpSignal {
  Signal signal;
  std::vector<double> grad_phase;  // node-major, grid.dim() per node
};

ChirpSignal optimal_chirp(const ChirpSpec& spec, const Grid& grid);

}  // namespace tfu
