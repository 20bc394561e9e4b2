#pragma once

// Kernel catalog for Cohen's class distributions.
//
// A kernel phi(v, y) selects a member of the class. Besides the joint-form
// kernels (unit, Kirkwood-Rihaczek, Page, tabulated) the catalog has
// time-multiplier kernels: a unit-modulus function phi_t(t) applied to the
// time variable, for which the distribution is the cross-Wigner distribution
// of f against f * conj(phi_t). The unit kernel is both.

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tfu/grid.hpp"

namespace tfu {

// phi_t(t) = exp(2 pi i phase(t)); `phase` and `phase_gradient` are optional
// analytic extras used by the covariance bounds.
struct TimeMultiplier {
  std::string name;
  std::function<cplx(std::span<const double>)> value;
  std::function<double(std::span<const double>)> phase;
  std::function<void(std::span<const double>, std::span<double>)> phase_gradient;
};

struct Tabulated2D {
  std::string name;
  std::function<cplx(std::span<const double> v, std::span<const double> y)> value;
};

class Kernel {
 public:
  enum class Kind { unit, kirkwood_rihaczek, page, time_multiplier, tabulated };

  static Kernel unit();
  static Kernel kirkwood_rihaczek();
  static Kernel page();
  static Kernel time_multiplier(TimeMultiplier tm);
  static Kernel tabulated(Tabulated2D table);

  Kind kind() const { return kind_; }
  // Human-readable description, recorded in distribution files.
  std::string tag() const;

  // Unit or time-multiplier.
  bool has_time_form() const { return kind_ == Kind::unit || kind_ == Kind::time_multiplier; }
  // phi_t(t); throws KernelError when there is no time form.
  cplx time_value(std::span<const double> t) const;
  const TimeMultiplier* time_form() const { return std::get_if<TimeMultiplier>(&payload_); }
  const Tabulated2D* table() const { return std::get_if<Tabulated2D>(&payload_); }

 private:
  Kernel(Kind kind, std::variant<std::monostate, TimeMultiplier, Tabulated2D> payload)
      : kind_(kind), payload_(std::move(payload)) {}

  Kind kind_;
  std::variant<std::monostate, TimeMultiplier, Tabulated2D> payload_;
};

struct KernelFlags {
  bool unit_modulus = false;
  bool time_multiplier = false;
  bool marginal = false;
  bool energy_conserving = false;
};

// Tolerance for the unit-modulus and marginal probes.
inline constexpr double kKernelProbeTol = 1e-9;

// phi(v, y). Throws KernelError for time-multiplier kernels, which have no
// joint (v, y) form.
cplx kernel_value(const Kernel& k, std::span<const double> v, std::span<const double> y);

// Unit and time-multiplier kernels are classified by rule (marginal and
// energy conservation are reported false for non-unit time multipliers since
// phi(0, y) is undefined for them); the others by evaluation on the probe grid.
KernelFlags classify(const Kernel& k, const Grid& probe);

// f * conj(phi_t), same grid. Throws KernelError when the kernel has no time
// form or |phi_t| deviates from 1 by more than kKernelProbeTol at a node.
Signal conjugate_multiplier(const Kernel& k, const Signal& f);

// Gradient of the kernel phase phi_t = exp(2 pi i phase) on the grid nodes,
// flattened node-major with `dim` components per node. Uses the analytic
// gradient when the kernel supplies one, else masked finite differences of
// the unwrapped phase.
std::vector<double> kernel_phase_gradient(const Kernel& k, const Grid& grid);

namespace kernels {

// Built-in time multipliers (1-D time variable; N-D versions act per axis sum).
Kernel constant(double sign);             // phi_t = +-1
Kernel chirp(double rate);                // exp(pi i rate |t|^2)
Kernel cubic(double a);                   // exp(2 pi i a sum |t_n|^3 / 3)
Kernel linear(double w);                  // exp(2 pi i w sum t_n)
Kernel kink(double rate);                 // exp(pi i rate sum t_n |t_n|)

// Parses `unit | krd | page | timemul:<name>(<params>) | table:<csv-path>`.
// Throws KernelError naming the unknown kernel or malformed parameter.
Kernel parse(std::string_view spec);

// Tabulated kernel from CSV:
//   # kernel-table v=<origin>:<spacing>:<count> y=<origin>:<spacing>:<count>
//   iv,iy,re,im
// Bilinear interpolation inside the table, zero outside. 1-D only.
Kernel load_table(const std::string& path);

}  // namespace kernels

}  // namespace tfu
