#pragma once

// Machine-readable verification reports (JSON).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tfu/analysis.hpp"
#include "tfu/theorems.hpp"

namespace tfu {

struct Check {
  std::string name;
  double value = 0.0;
  double target = 0.0;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

// residual = |value - target| / |target|, pass when residual <= tol.
Check relative_check(std::string name, double value, double target, double tol);
// residual = |value - target|, pass when residual <= tol.
Check absolute_check(std::string name, double value, double target, double tol);
// value must be at least target - tol; residual = max(0, target - value).
Check lower_bound_check(std::string name, double value, double target, double tol);
// value must exceed target by at least tol (relative); residual = value / target - 1.
Check strict_excess_check(std::string name, double value, double target, double tol);

struct GridSpec {
  std::size_t count = 256;
  double lo = -8.0;
  double hi = 8.0;
};

// "M:lo:hi". Throws FormatError naming the field.
GridSpec parse_grid_spec(const std::string& text);
Grid make_grid(const GridSpec& spec);

struct Report {
  std::string command;
  std::string subject;  // suite name, theorem case or input description
  std::optional<std::uint64_t> seed;
  GridSpec grid;
  std::vector<Check> checks;
  std::vector<BoundReport> bounds;
  std::optional<MomentReport> moments;
  std::optional<DistMomentReport> dist_moments;
  double moments_tol = 0.0;

  // Every check passes and no bound verdict is a failure.
  bool passed() const;
};

// Stable, deterministic JSON (fixed key order, 17 significant digits).
std::string to_json(const Report& r);
std::string to_json(const BoundReport& b);

}  // namespace tfu
