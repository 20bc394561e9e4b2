#include "tfu/optimal_signals.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "tfu/error.hpp"

namespace tfu {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class Branch { plus, minus, sgn, neg_sgn };

std::vector<Branch> branches(const ChirpSpec& spec, std::size_t dim) {
  std::vector<int> owner(dim, 0);
  const std::vector<int>* sets[] = {&spec.partition.j1, &spec.partition.j2, &spec.partition.j3, &spec.partition.j4};
  for (int s = 0; s < 4; ++s) {
    for (int axis : *sets[s]) {
      if (axis < 1 || static_cast<std::size_t>(axis) > dim) {
        throw PreconditionError("partition set j" + std::to_string(s + 1) + " names axis " + std::to_string(axis) +
                                " outside 1.." + std::to_string(dim));
      }
      if (owner[axis - 1] != 0) {
        throw PreconditionError("axis " + std::to_string(axis) + " appears in both j" + std::to_string(owner[axis - 1]) +
                                " and j" + std::to_string(s + 1));
      }
      owner[axis - 1] = s + 1;
    }
  }
  std::vector<Branch> out(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    if (owner[d] == 0) throw PreconditionError("axis " + std::to_string(d + 1) + " is in no partition set");
    out[d] = static_cast<Branch>(owner[d] - 1);
  }
  return out;
}

double sgn(double x) { return x >= 0.0 ? 1.0 : -1.0; }

double eta(Branch b, double dx) {
  switch (b) {
    case Branch::plus:
      return 1.0;
    case Branch::minus:
      return -1.0;
    case Branch::sgn:
      return sgn(dx);
    case Branch::neg_sgn:
      return -sgn(dx);
  }
  return 1.0;
}

std::vector<double> vector_field(const nlohmann::json& j, const char* key, std::size_t* expect) {
  if (!j.contains(key)) throw FormatError(std::string("chirp spec is missing field '") + key + "'");
  const auto& v = j.at(key);
  std::vector<double> out;
  if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (!e.is_number()) throw FormatError(std::string("chirp spec field '") + key + "' must hold numbers");
      out.push_back(e.get<double>());
    }
  } else {
    throw FormatError(std::string("chirp spec field '") + key + "' must be a number or an array");
  }
  if (expect) *expect = out.size();
  return out;
}

}  // namespace

void validate(const ChirpSpec& spec, std::size_t dim) {
  if (!(spec.zeta > 0.0)) throw PreconditionError("chirp spec needs zeta > 0");
  if (!(spec.eps > 0.0)) throw PreconditionError("chirp spec needs eps > 0");
  if (spec.x0.size() != dim) throw PreconditionError("chirp spec x0 has the wrong dimension");
  if (spec.w0.size() != dim) throw PreconditionError("chirp spec w0 has the wrong dimension");
  if (!spec.phase_offsets.empty() && spec.phase_offsets.size() != (std::size_t{1} << dim)) {
    throw PreconditionError("chirp spec phase_offsets needs 2^N entries");
  }
  branches(spec, dim);
}

ChirpSpec parse_chirp_spec(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("chirp spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("chirp spec must be a JSON object");
  auto number = [&](const char* key, double fallback, bool required) {
    if (!j.contains(key)) {
      if (required) throw FormatError(std::string("chirp spec is missing field '") + key + "'");
      return fallback;
    }
    if (!j.at(key).is_number()) throw FormatError(std::string("chirp spec field '") + key + "' must be a number");
    return j.at(key).get<double>();
  };
  ChirpSpec s;
  s.zeta = number("zeta", 0.0, true);
  s.eps = number("eps", 0.0, true);
  s.amp_offset = number("amp_offset", 0.0, false);
  s.x0 = vector_field(j, "x0", nullptr);
  s.w0 = vector_field(j, "w0", nullptr);
  if (j.contains("phase_offsets")) s.phase_offsets = vector_field(j, "phase_offsets", nullptr);
  if (!j.contains("partition") || !j.at("partition").is_object()) {
    throw FormatError("chirp spec is missing object field 'partition'");
  }
  const auto& p = j.at("partition");
  auto set = [&](const char* key) {
    std::vector<int> out;
    if (!p.contains(key)) return out;
    if (!p.at(key).is_array()) throw FormatError(std::string("partition field '") + key + "' must be an array");
    for (const auto& e : p.at(key)) {
      if (!e.is_number_integer()) throw FormatError(std::string("partition field '") + key + "' must hold integers");
      out.push_back(e.get<int>());
    }
    return out;
  };
  s.partition = {set("j1"), set("j2"), set("j3"), set("j4")};
  return s;
}

ChirpSpec read_chirp_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open chirp spec '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_chirp_spec(ss.str());
}

std::string to_json(const ChirpSpec& spec) {
  nlohmann::json j;
  j["zeta"] = spec.zeta;
  j["eps"] = spec.eps;
  j["x0"] = spec.x0;
  j["w0"] = spec.w0;
  j["amp_offset"] = spec.amp_offset;
  j["phase_offsets"] = spec.phase_offsets;
  j["partition"] = {{"j1", spec.partition.j1}, {"j2", spec.partition.j2}, {"j3", spec.partition.j3}, {"j4", spec.partition.j4}};
  return j.dump(2);
}

Signal optimal_gaussian(double zeta, std::span<const double> x0, double amp_offset, const Grid& grid) {
  if (!(zeta > 0.0)) throw PreconditionError("optimal Gaussian needs zeta > 0");
  if (x0.size() != grid.dim()) throw DimensionError("optimal Gaussian center has the wrong dimension");
  const std::vector<double> c(x0.begin(), x0.end());
  Signal f = sample(
      [&](std::span<const double> x) {
        double r2 = 0.0;
        for (std::size_t d = 0; d < x.size(); ++d) r2 += (x[d] - c[d]) * (x[d] - c[d]);
        return cplx{std::exp(-r2 / (2.0 * zeta) + amp_offset), 0.0};
      },
      grid);
  if (f.truncation_warning()) {
    throw TruncationError("grid span is too narrow for a Gaussian with zeta = " + std::to_string(zeta) +
                          " (edge ratio " + std::to_string(f.edge_ratio()) + ")");
  }
  return f;
}

ChirpSignal optimal_chirp(const ChirpSpec& spec, const Grid& grid) {
  const std::size_t dim = grid.dim();
  validate(spec, dim);
  const std::vector<Branch> br = branches(spec, dim);
  const Signal envelope = optimal_gaussian(spec.zeta, spec.x0, spec.amp_offset, grid);
  std::vector<cplx> samples(grid.total());
  std::vector<double> grad(grid.total() * dim);
  for (std::size_t i = 0; i < grid.total(); ++i) {
    double phase = 0.0;
    std::size_t orthant = 0;
    for (std::size_t d = 0; d < dim; ++d) {
      const double x = grid.coord(i, d);
      const double dx = x - spec.x0[d];
      const double e = eta(br[d], dx);
      if (e < 0) orthant |= std::size_t{1} << d;
      phase += e * dx * dx / (2.0 * spec.eps) + spec.w0[d] * x;
      grad[i * dim + d] = e * dx / spec.eps + spec.w0[d];
    }
    if (!spec.phase_offsets.empty()) phase += spec.phase_offsets[orthant];
    samples[i] = envelope[i] * std::polar(1.0, kTwoPi * phase);
  }
  return {envelope.with_samples(std::move(samples)), std::move(grad)};
}

}  // namespace tfu
