#pragma once

#include <vector>

#include "tfu/grid.hpp"

namespace tfu {

// Relative magnitude below which phase is treated as undefined.
inline constexpr double kPhaseMaskThreshold = 1e-12;

// Gradient of the phase p of s = |s| exp(2 pi i p), flattened node-major with
// grid.dim() components per node. Centered differences of the locally
// unwrapped phase (arg of s[i+1] conj(s[i-1])), one-sided at the edges; nodes
// where |s| or a stencil neighbour falls below mask x peak get 0.
std::vector<double> phase_gradient(const Signal& s, double mask = kPhaseMaskThreshold);

}  // namespace tfu
