// tfu: generate signals, compute distributions, verify identities and bounds.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or I/O error.

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tfu/analysis.hpp"
#include "tfu/distribution_io.hpp"
#include "tfu/engine.hpp"
#include "tfu/error.hpp"
#include "tfu/kernels.hpp"
#include "tfu/optimal_signals.hpp"
#include "tfu/report.hpp"
#include "tfu/signal_io.hpp"
#include "tfu/suites.hpp"
#include "tfu/theorems.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct SignalSource {
  std::string signal_path;
  std::string chirp_path;
  std::optional<double> zeta;
  std::optional<double> eps;
  std::vector<double> x0;
  std::vector<double> w0;
};

struct Options {
  std::string grid = "256:-8:8";
  std::string kernel = "unit";
  std::string out;
  std::string suite;
  std::string theorem;
  std::string route = "time";
  std::uint64_t seed = 7;
  double tol = 1e-3;
  bool skip_guard = false;
  SignalSource source;
};

void add_source_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--signal", o.source.signal_path, "Signal CSV file");
  cmd->add_option("--chirp", o.source.chirp_path, "Chirp spec JSON file");
  cmd->add_option("--zeta", o.source.zeta, "Gaussian width parameter zeta");
  cmd->add_option("--eps", o.source.eps, "Chirp-rate reciprocal eps (j1 chirp on every axis)");
  cmd->add_option("--x0", o.source.x0, "Time center")->delimiter(',');
  cmd->add_option("--w0", o.source.w0, "Frequency center")->delimiter(',');
}

// The analysed signal and its phase gradient: analytic for generated
// signals, finite differences for signals read from a file.
tfu::ChirpSignal load_signal(const SignalSource& s, const tfu::Grid& grid) {
  if (!s.signal_path.empty()) {
    tfu::Signal f = tfu::read_signal_csv(s.signal_path);
    return {f, tfu::phase_gradient(f)};
  }
  if (!s.chirp_path.empty()) return tfu::optimal_chirp(tfu::read_chirp_spec(s.chirp_path), grid);
  const std::size_t dim = grid.dim();
  auto vec = [&](const std::vector<double>& v, const char* name) {
    if (v.empty()) return std::vector<double>(dim, 0.0);
    if (v.size() != dim) throw tfu::FormatError(std::string("--") + name + " needs " + std::to_string(dim) + " values");
    return v;
  };
  const double zeta = s.zeta.value_or(1.0 / (2.0 * std::numbers::pi));
  if (s.eps || !s.w0.empty()) {
    tfu::ChirpSpec spec;
    spec.zeta = zeta;
    spec.eps = s.eps.value_or(1e12);
    spec.x0 = vec(s.x0, "x0");
    spec.w0 = vec(s.w0, "w0");
    for (std::size_t d = 1; d <= dim; ++d) spec.partition.j1.push_back(static_cast<int>(d));
    return tfu::optimal_chirp(spec, grid);
  }
  const std::vector<double> x0 = vec(s.x0, "x0");
  tfu::Signal f = tfu::optimal_gaussian(zeta, x0, 0.0, grid);
  return {f, std::vector<double>(grid.total() * dim, 0.0)};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw tfu::FormatError("cannot open '" + path + "' for writing");
  out << text;
}

int run_generate(const Options& o) {
  const tfu::Grid grid = tfu::make_grid(tfu::parse_grid_spec(o.grid));
  const tfu::ChirpSignal s = load_signal(o.source, grid);
  if (o.out.empty()) {
    tfu::write_signal_csv(std::cout, s.signal);
  } else {
    tfu::write_signal_csv(o.out, s.signal);
  }
  return kExitOk;
}

int run_compute(const Options& o) {
  if (o.source.signal_path.empty() && o.source.chirp_path.empty() && !o.source.zeta && !o.source.eps) {
    throw tfu::FormatError("compute needs an input signal (--signal, --chirp, --zeta or --eps)");
  }
  if (o.out.empty()) throw tfu::FormatError("compute needs --out");
  const tfu::Grid grid = tfu::make_grid(tfu::parse_grid_spec(o.grid));
  const tfu::ChirpSignal s = load_signal(o.source, grid);
  const tfu::Kernel k = tfu::kernels::parse(o.kernel);
  const tfu::EngineOptions eo{o.skip_guard ? tfu::BandGuard::skip : tfu::BandGuard::enforce};
  if (o.route != "time" && o.route != "freq") throw tfu::FormatError("--route must be 'time' or 'freq'");
  const tfu::Distribution d = o.route == "time" ? tfu::cctfd(s.signal, k, eo) : tfu::cctfd_freq(s.signal, k, eo);
  tfu::write_distribution(o.out, d);
  if (d.truncation_warning) std::cerr << "tfu: warning: input signal does not decay at the grid boundary\n";
  return kExitOk;
}

int run_verify(const Options& o) {
  if (o.suite.empty() == o.theorem.empty()) throw tfu::FormatError("verify needs exactly one of --suite or --theorem");
  if (!(o.tol > 0.0)) throw tfu::FormatError("--tol must be positive");
  const tfu::GridSpec gs = tfu::parse_grid_spec(o.grid);
  tfu::Report r;
  if (!o.suite.empty()) {
    r = tfu::run_suite(o.suite, {gs, o.seed, o.tol});
  } else {
    const tfu::TheoremCase c = tfu::parse_theorem_case(o.theorem);
    const tfu::Grid grid = tfu::make_grid(gs);
    const tfu::ChirpSignal s = load_signal(o.source, grid);
    const tfu::Kernel k = tfu::kernels::parse(o.kernel);
    const std::vector<double> grad_phi = tfu::kernel_phase_gradient(k, s.signal.grid());
    r.command = "verify";
    r.subject = o.theorem;
    r.grid = gs;
    r.bounds.push_back(tfu::verify_theorem(c, s.signal, k, s.grad_phase, grad_phi, o.tol));
  }
  emit(tfu::to_json(r), o.out);
  return r.passed() ? kExitOk : kExitFailed;
}

int run_report(const Options& o) {
  const tfu::GridSpec gs = tfu::parse_grid_spec(o.grid);
  const tfu::Grid grid = tfu::make_grid(gs);
  const tfu::ChirpSignal s = load_signal(o.source, grid);
  const tfu::Kernel k = tfu::kernels::parse(o.kernel);
  tfu::Report r;
  r.command = "report";
  r.subject = k.tag();
  r.grid = gs;
  r.moments_tol = o.tol;
  r.moments = tfu::moment_report(s.signal, s.grad_phase);
  r.dist_moments = tfu::distribution_moments(tfu::cctfd(s.signal, k));
  const double B = tfu::real_bound(grid.dim());
  const tfu::MomentReport& m = *r.moments;
  r.checks.push_back(tfu::lower_bound_check("product vs real bound", m.product, B, o.tol * B));
  r.checks.push_back(tfu::lower_bound_check("product vs covariance bound", m.product, B + m.cov * m.cov, o.tol * B));
  r.checks.push_back(
      tfu::lower_bound_check("product vs absolute covariance bound", m.product, B + m.abs_cov * m.abs_cov, o.tol * B));
  emit(tfu::to_json(r), o.out);
  return r.passed() ? kExitOk : kExitFailed;
}

void apply_thread_cap() {
  if (const char* env = std::getenv("TFU_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();
  CLI::App app{"Cohen's class time-frequency distributions and uncertainty bounds"};
  app.require_subcommand(1);
  Options o;

  auto* generate = app.add_subcommand("generate", "Sample an optimal Gaussian or chirp to a signal CSV");
  auto* compute = app.add_subcommand("compute", "Compute a distribution from a signal");
  auto* verify = app.add_subcommand("verify", "Run a verification suite or one theorem case");
  auto* report = app.add_subcommand("report", "Moment report for a signal and kernel");
  for (auto* cmd : {generate, compute, verify, report}) {
    cmd->add_option("--grid", o.grid, "Time grid M:lo:hi")->capture_default_str();
    cmd->add_option("--out", o.out, "Output path (stdout when omitted, except for compute)");
    add_source_flags(cmd, o);
  }
  for (auto* cmd : {compute, verify, report}) {
    cmd->add_option("--kernel", o.kernel, "unit | krd | page | timemul:<name>(<param>) | table:<csv>")
        ->capture_default_str();
  }
  compute->add_option("--route", o.route, "time | freq")->capture_default_str();
  compute->add_flag("--skip-band-guard", o.skip_guard, "Do not refuse under-resolved signals");
  verify->add_option("--suite", o.suite, "lemmas | theorems | flandrin | all");
  verify->add_option("--theorem", o.theorem, "T1 | T2 | T3 | T4");
  verify->add_option("--seed", o.seed, "Seed for random test signals")->capture_default_str();
  for (auto* cmd : {verify, report}) cmd->add_option("--tol", o.tol, "Relative tolerance")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) return run_generate(o);
    if (*compute) return run_compute(o);
    if (*verify) return run_verify(o);
    return run_report(o);
  } catch (const tfu::Error& e) {
    std::cerr << "tfu: " << e.what() << "\n";
    return kExitUsage;
  }
}
