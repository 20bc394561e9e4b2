#include "tfu/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "tfu/error.hpp"

namespace tfu {

using Json = nlohmann::ordered_json;

Check relative_check(std::string name, double value, double target, double tol) {
  const double residual = std::abs(value - target) / std::abs(target);
  return {std::move(name), value, target, residual, tol, residual <= tol};
}

Check absolute_check(std::string name, double value, double target, double tol) {
  const double residual = std::abs(value - target);
  return {std::move(name), value, target, residual, tol, residual <= tol};
}

Check lower_bound_check(std::string name, double value, double target, double tol) {
  const double residual = std::max(0.0, target - value);
  return {std::move(name), value, target, residual, tol, value >= target - tol};
}

Check strict_excess_check(std::string name, double value, double target, double tol) {
  const double residual = value / target - 1.0;
  return {std::move(name), value, target, residual, tol, residual >= tol};
}

GridSpec parse_grid_spec(const std::string& text) {
  std::istringstream is(text);
  std::string m, lo, hi;
  if (!std::getline(is, m, ':') || !std::getline(is, lo, ':') || !std::getline(is, hi) || hi.find(':') != std::string::npos) {
    throw FormatError("--grid must look like M:lo:hi, got '" + text + "'");
  }
  GridSpec g;
  try {
    std::size_t used = 0;
    const long long count = std::stoll(m, &used);
    if (used != m.size() || count < 2) throw std::invalid_argument(m);
    g.count = static_cast<std::size_t>(count);
  } catch (const std::exception&) {
    throw FormatError("--grid node count must be an integer >= 2, got '" + m + "'");
  }
  auto num = [](const std::string& s, const char* field) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw FormatError(std::string("--grid field '") + field + "' is not a number: '" + s + "'");
    }
  };
  g.lo = num(lo, "lo");
  g.hi = num(hi, "hi");
  if (!(g.hi > g.lo)) throw FormatError("--grid needs hi > lo");
  return g;
}

Grid make_grid(const GridSpec& spec) { return uniform_grid(spec.count, spec.lo, spec.hi); }

bool Report::passed() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  for (const BoundReport& b : bounds)
    if (b.verdict == Verdict::fail) return false;
  return true;
}

namespace {

Json bound_json(const BoundReport& b) {
  Json j;
  j["case"] = to_string(b.kase);
  j["b_real"] = b.b_real;
  j["b_cov_f"] = b.b_cov_f;
  j["b_abscov_f"] = b.b_abscov_f;
  j["b_cov_fphi"] = b.b_cov_fphi;
  j["b_abscov_fphi"] = b.b_abscov_fphi;
  j["theorem_bound_cov"] = b.theorem_bound_cov;
  j["theorem_bound_abscov"] = b.theorem_bound_abscov;
  j["measured_product_C"] = b.measured_product_C;
  j["slack"] = b.slack;
  j["verdict"] = to_string(b.verdict);
  j["tol"] = b.tol;
  return j;
}

Json check_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["value"] = c.value;
  j["target"] = c.target;
  j["residual"] = c.residual;
  j["tol"] = c.tol;
  j["pass"] = c.pass;
  return j;
}

}  // namespace

std::string to_json(const BoundReport& b) { return bound_json(b).dump(2) + "\n"; }

std::string to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["subject"] = r.subject;
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["grid"] = {{"count", r.grid.count}, {"lo", r.grid.lo}, {"hi", r.grid.hi}};
  Json checks = Json::array();
  for (const Check& c : r.checks) checks.push_back(check_json(c));
  j["checks"] = checks;
  Json bounds = Json::array();
  for (const BoundReport& b : r.bounds) bounds.push_back(bound_json(b));
  j["bounds"] = bounds;
  if (r.moments) {
    const MomentReport& m = *r.moments;
    j["moments"] = {{"x0", m.x0},           {"w0", m.w0},         {"spread_x", m.spread_x},
                    {"spread_w", m.spread_w}, {"cov", m.cov},       {"abs_cov", m.abs_cov},
                    {"product", m.product},   {"tol", r.moments_tol}};
  }
  if (r.dist_moments) {
    const DistMomentReport& m = *r.dist_moments;
    j["dist_moments"] = {{"x0_C", m.x0_C},
                         {"w0_C", m.w0_C},
                         {"spread_x_C", m.spread_x_C},
                         {"spread_w_C", m.spread_w_C},
                         {"product_C", m.product_C},
                         {"tol", r.moments_tol}};
  }
  j["pass"] = r.passed();
  return j.dump(2) + "\n";
}

}  // namespace tfu
