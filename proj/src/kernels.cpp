#include "tfu/kernels.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "tfu/error.hpp"
#include "tfu/phase.hpp"
#include "tfu/signal_io.hpp"

namespace tfu {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

Kernel Kernel::unit() { return Kernel(Kind::unit, std::monostate{}); }
Kernel Kernel::kirkwood_rihaczek() { return Kernel(Kind::kirkwood_rihaczek, std::monostate{}); }
Kernel Kernel::page() { return Kernel(Kind::page, std::monostate{}); }

Kernel Kernel::time_multiplier(TimeMultiplier tm) {
  if (!tm.value) throw KernelError("time-multiplier kernel needs a value function");
  return Kernel(Kind::time_multiplier, std::move(tm));
}

Kernel Kernel::tabulated(Tabulated2D table) {
  if (!table.value) throw KernelError("tabulated kernel needs a value function");
  return Kernel(Kind::tabulated, std::move(table));
}

std::string Kernel::tag() const {
  switch (kind_) {
    case Kind::unit:
      return "unit";
    case Kind::kirkwood_rihaczek:
      return "krd";
    case Kind::page:
      return "page";
    case Kind::time_multiplier:
      return "timemul:" + std::get<TimeMultiplier>(payload_).name;
    case Kind::tabulated:
      return "table:" + std::get<Tabulated2D>(payload_).name;
  }
  return "?";
}

cplx Kernel::time_value(std::span<const double> t) const {
  if (kind_ == Kind::unit) return {1.0, 0.0};
  if (const auto* tm = time_form()) return tm->value(t);
  throw KernelError("kernel '" + tag() + "' has no time-multiplier form");
}

cplx kernel_value(const Kernel& k, std::span<const double> v, std::span<const double> y) {
  if (v.size() != y.size()) throw DimensionError("kernel arguments v and y differ in dimension");
  switch (k.kind()) {
    case Kernel::Kind::unit:
      return {1.0, 0.0};
    case Kernel::Kind::kirkwood_rihaczek: {
      double vy = 0.0;
      for (std::size_t d = 0; d < v.size(); ++d) vy += v[d] * y[d];
      return std::polar(1.0, kPi * vy);
    }
    case Kernel::Kind::page: {
      if (v.size() != 1) throw DimensionError("the Page kernel is defined for 1-D signals only");
      return std::polar(1.0, 2.0 * kPi * std::abs(y[0]) * v[0]);
    }
    case Kernel::Kind::tabulated:
      return k.table()->value(v, y);
    case Kernel::Kind::time_multiplier:
      break;
  }
  throw KernelError("time-multiplier kernel '" + k.tag() + "' has no joint (v, y) form");
}

KernelFlags classify(const Kernel& k, const Grid& probe) {
  KernelFlags flags;
  if (k.kind() == Kernel::Kind::unit) return {true, true, true, true};

  if (k.kind() == Kernel::Kind::time_multiplier) {
    bool unit = true;
    std::vector<double> t(probe.dim());
    for (std::size_t i = 0; i < probe.total() && unit; ++i) {
      probe.node(i, t);
      unit = std::abs(std::abs(k.time_value(t)) - 1.0) <= kKernelProbeTol;
    }
    flags.unit_modulus = unit;
    flags.time_multiplier = unit;
    return flags;
  }

  const std::size_t dim = probe.dim();
  std::vector<double> v(dim), y(dim);
  const std::vector<double> zero(dim, 0.0);
  auto is_one = [](cplx c) { return std::abs(c - cplx{1.0, 0.0}) <= kKernelProbeTol; };

  flags.unit_modulus = true;
  for (std::size_t a = 0; a < probe.total() && flags.unit_modulus; ++a) {
    probe.node(a, v);
    for (std::size_t b = 0; b < probe.total(); ++b) {
      probe.node(b, y);
      if (std::abs(std::abs(kernel_value(k, v, y)) - 1.0) > kKernelProbeTol) {
        flags.unit_modulus = false;
        break;
      }
    }
  }
  flags.energy_conserving = is_one(kernel_value(k, zero, zero));
  flags.marginal = flags.energy_conserving;
  for (std::size_t a = 0; a < probe.total() && flags.marginal; ++a) {
    probe.node(a, v);
    flags.marginal = is_one(kernel_value(k, zero, v)) && is_one(kernel_value(k, v, zero));
  }
  return flags;
}

Signal conjugate_multiplier(const Kernel& k, const Signal& f) {
  if (!k.has_time_form()) throw KernelError("kernel '" + k.tag() + "' has no time-multiplier form");
  if (f.domain() != Domain::time) throw DomainMismatch("conjugate_multiplier expects a time-domain signal");
  if (k.kind() == Kernel::Kind::unit) return f;
  std::vector<cplx> out(f.size());
  std::vector<double> t(f.grid().dim());
  for (std::size_t i = 0; i < f.size(); ++i) {
    f.grid().node(i, t);
    const cplx phi = k.time_value(t);
    if (std::abs(std::abs(phi) - 1.0) > kKernelProbeTol) {
      throw KernelError("kernel '" + k.tag() + "' is not unit modulus at node " + std::to_string(i));
    }
    out[i] = f[i] * std::conj(phi);
  }
  return f.with_samples(std::move(out));
}

std::vector<double> kernel_phase_gradient(const Kernel& k, const Grid& grid) {
  const std::size_t dim = grid.dim();
  std::vector<double> grad(grid.total() * dim, 0.0);
  if (k.kind() == Kernel::Kind::unit) return grad;
  const TimeMultiplier* tm = k.time_form();
  if (!tm) throw KernelError("kernel '" + k.tag() + "' has no time-multiplier form");
  if (tm->phase_gradient) {
    std::vector<double> t(dim);
    for (std::size_t i = 0; i < grid.total(); ++i) {
      grid.node(i, t);
      tm->phase_gradient(t, std::span<double>(grad).subspan(i * dim, dim));
    }
    return grad;
  }
  const Signal phi = sample([&](std::span<const double> t) { return tm->value(t); }, grid);
  return phase_gradient(phi);
}

std::vector<double> phase_gradient(const Signal& s, double mask) {
  const Grid& g = s.grid();
  const std::size_t dim = g.dim();
  std::vector<double> grad(g.total() * dim, 0.0);
  const double floor = mask * s.peak();
  for (std::size_t i = 0; i < g.total(); ++i) {
    if (std::abs(s[i]) <= floor) continue;
    for (std::size_t d = 0; d < dim; ++d) {
      const std::size_t idx = g.index_along(i, d);
      const std::size_t stride = g.stride(d);
      const std::size_t lo = idx > 0 ? i - stride : i;
      const std::size_t hi = idx + 1 < g.count()[d] ? i + stride : i;
      if (std::abs(s[lo]) <= floor || std::abs(s[hi]) <= floor) continue;
      const double step = static_cast<double>((hi - lo) / stride) * g.spacing()[d];
      grad[i * dim + d] = std::arg(s[hi] * std::conj(s[lo])) / (2.0 * kPi * step);
    }
  }
  return grad;
}

namespace kernels {

namespace {

double sum_of(std::span<const double> t, auto term) {
  double acc = 0.0;
  for (double x : t) acc += term(x);
  return acc;
}

Kernel from_phase(std::string name, std::function<double(std::span<const double>)> phase,
                  std::function<double(double)> dphase) {
  TimeMultiplier tm;
  tm.name = std::move(name);
  tm.value = [phase](std::span<const double> t) { return std::polar(1.0, 2.0 * kPi * phase(t)); };
  tm.phase = phase;
  tm.phase_gradient = [dphase](std::span<const double> t, std::span<double> g) {
    for (std::size_t d = 0; d < t.size(); ++d) g[d] = dphase(t[d]);
  };
  return Kernel::time_multiplier(std::move(tm));
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

Kernel constant(double sign) {
  if (sign != 1.0 && sign != -1.0) throw KernelError("const(<sign>) takes +1 or -1");
  const double p = sign > 0 ? 0.0 : 0.5;
  TimeMultiplier tm;
  tm.name = "const(" + fmt(sign) + ")";
  tm.value = [sign](std::span<const double>) { return cplx{sign, 0.0}; };
  tm.phase = [p](std::span<const double>) { return p; };
  tm.phase_gradient = [](std::span<const double>, std::span<double> g) { std::fill(g.begin(), g.end(), 0.0); };
  return Kernel::time_multiplier(std::move(tm));
}

Kernel chirp(double rate) {
  return from_phase(
      "chirp(" + fmt(rate) + ")", [rate](std::span<const double> t) { return 0.5 * rate * sum_of(t, [](double x) { return x * x; }); },
      [rate](double x) { return rate * x; });
}

Kernel cubic(double a) {
  return from_phase(
      "cubic(" + fmt(a) + ")",
      [a](std::span<const double> t) { return a * sum_of(t, [](double x) { return std::abs(x) * x * x; }) / 3.0; },
      [a](double x) { return a * x * std::abs(x); });
}

Kernel linear(double w) {
  return from_phase(
      "linear(" + fmt(w) + ")", [w](std::span<const double> t) { return w * sum_of(t, [](double x) { return x; }); },
      [w](double) { return w; });
}

Kernel kink(double rate) {
  return from_phase(
      "kink(" + fmt(rate) + ")",
      [rate](std::span<const double> t) { return 0.5 * rate * sum_of(t, [](double x) { return x * std::abs(x); }); },
      [rate](double x) { return rate * std::abs(x); });
}

namespace {

double parse_param(std::string_view spec, std::string_view text) {
  try {
    std::size_t used = 0;
    const std::string s(text);
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw KernelError("malformed parameter '" + std::string(text) + "' in kernel spec '" + std::string(spec) + "'");
  }
}

}  // namespace

Kernel parse(std::string_view spec) {
  if (spec == "unit") return Kernel::unit();
  if (spec == "krd") return Kernel::kirkwood_rihaczek();
  if (spec == "page") return Kernel::page();
  if (spec.rfind("table:", 0) == 0) return load_table(std::string(spec.substr(6)));
  if (spec.rfind("timemul:", 0) == 0) {
    const std::string_view body = spec.substr(8);
    const auto open = body.find('(');
    if (open == std::string_view::npos || body.back() != ')') {
      throw KernelError("time-multiplier spec must look like timemul:<name>(<param>), got '" + std::string(spec) + "'");
    }
    const std::string_view name = body.substr(0, open);
    const double p = parse_param(spec, body.substr(open + 1, body.size() - open - 2));
    if (name == "const") return constant(p);
    if (name == "chirp") return chirp(p);
    if (name == "cubic") return cubic(p);
    if (name == "linear") return linear(p);
    if (name == "kink") return kink(p);
    throw KernelError("unknown time-multiplier kernel '" + std::string(name) + "'");
  }
  throw KernelError("unknown kernel '" + std::string(spec) + "'");
}

namespace {

struct Axis {
  double origin = 0.0, spacing = 0.0;
  std::size_t count = 0;
};

Axis parse_axis(const std::string& text, const std::string& key) {
  std::istringstream is(text);
  std::string a, b, c;
  if (!std::getline(is, a, ':') || !std::getline(is, b, ':') || !std::getline(is, c)) {
    throw FormatError("kernel table field '" + key + "' must be origin:spacing:count");
  }
  Axis ax;
  try {
    ax.origin = std::stod(a);
    ax.spacing = std::stod(b);
    ax.count = static_cast<std::size_t>(std::stoul(c));
  } catch (const std::exception&) {
    throw FormatError("kernel table field '" + key + "' is malformed");
  }
  if (!(ax.spacing > 0) || ax.count < 2) throw FormatError("kernel table field '" + key + "' needs spacing > 0, count >= 2");
  return ax;
}

}  // namespace

Kernel load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open kernel table '" + path + "'");
  std::string line;
  std::getline(in, line);
  std::istringstream hs(line);
  std::string hash, word, tok;
  hs >> hash >> word;
  if (hash != "#" || word != "kernel-table") throw FormatError("kernel table must start with '# kernel-table'");
  Axis vx, yx;
  bool have_v = false, have_y = false;
  while (hs >> tok) {
    if (tok.rfind("v=", 0) == 0) vx = parse_axis(tok.substr(2), "v"), have_v = true;
    else if (tok.rfind("y=", 0) == 0) yx = parse_axis(tok.substr(2), "y"), have_y = true;
  }
  if (!have_v || !have_y) throw FormatError("kernel table header needs both v= and y= fields");
  auto table = std::make_shared<std::vector<cplx>>(vx.count * yx.count, cplx{});
  std::getline(in, line);  // column names
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream rs(line);
    std::string a, b, c, d;
    if (!std::getline(rs, a, ',') || !std::getline(rs, b, ',') || !std::getline(rs, c, ',') || !std::getline(rs, d)) {
      throw FormatError("malformed kernel table row '" + line + "'");
    }
    std::size_t iv = 0, iy = 0;
    double re = 0, im = 0;
    try {
      iv = std::stoul(a);
      iy = std::stoul(b);
      re = std::stod(c);
      im = std::stod(d);
    } catch (const std::exception&) {
      throw FormatError("malformed kernel table row '" + line + "'");
    }
    if (iv >= vx.count || iy >= yx.count) throw FormatError("kernel table row index out of range: '" + line + "'");
    (*table)[iv * yx.count + iy] = {re, im};
    ++rows;
  }
  if (rows != vx.count * yx.count) throw FormatError("kernel table '" + path + "' is incomplete");

  Tabulated2D tab;
  tab.name = path;
  tab.value = [table, vx, yx](std::span<const double> v, std::span<const double> y) -> cplx {
    if (v.size() != 1) throw DimensionError("tabulated kernels are 1-D");
    const double fv = (v[0] - vx.origin) / vx.spacing;
    const double fy = (y[0] - yx.origin) / yx.spacing;
    if (fv < 0 || fy < 0 || fv > static_cast<double>(vx.count - 1) || fy > static_cast<double>(yx.count - 1)) return {};
    const auto iv = std::min(static_cast<std::size_t>(fv), vx.count - 2);
    const auto iy = std::min(static_cast<std::size_t>(fy), yx.count - 2);
    const double a = fv - static_cast<double>(iv), b = fy - static_cast<double>(iy);
    auto at = [&](std::size_t i, std::size_t j) { return (*table)[i * yx.count + j]; };
    return (1 - a) * (1 - b) * at(iv, iy) + a * (1 - b) * at(iv + 1, iy) + (1 - a) * b * at(iv, iy + 1) +
           a * b * at(iv + 1, iy + 1);
  };
  return Kernel::tabulated(std::move(tab));
}

}  // namespace kernels

}  // namespace tfu
