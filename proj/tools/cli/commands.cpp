#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "mzinfo/errors.hpp"
#include "mzinfo/formats.hpp"
#include "mzinfo/info_geometry.hpp"
#include "mzinfo/oracle.hpp"
#include "mzinfo/rng.hpp"
#include "mzinfo/statistics.hpp"
#include "mzinfo/trial_engine.hpp"
#include "mzinfo/version.hpp"

namespace mzinfo::cli {

namespace {

using formats::format_double;
using formats::Manifest;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sub-run seed salts.
constexpr std::uint64_t kPolicySalt = 0x706f6c696379ull;

std::uint64_t default_seed() {
  const char* text = std::getenv(kSeedEnv);
  if (text == nullptr || *text == '\0') return 1;
  std::uint64_t seed = 0;
  const char* end = text + std::char_traits<char>::length(text);
  const auto [ptr, ec] = std::from_chars(text, end, seed);
  if (ec != std::errc{} || ptr != end) {
    throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer: '" + text + "'");
  }
  return seed;
}

// Flags shared by the commands that describe an interferometer.
struct SetupFlags {
  std::string setup = "recombined";
  double r1 = 0.0;
  double r2 = 0.0;
  std::optional<double> p;
  std::optional<double> k;
  std::string scale = "momentum";
  std::string labeling = "bright1";

  void add_to(CLI::App& app, bool with_arms) {
    app.add_option("--setup", setup, "open | recombined")->capture_default_str();
    if (with_arms) {
      app.add_option("--r1", r1, "Length of arm 1")->capture_default_str();
      app.add_option("--r2", r2, "Length of arm 2")->capture_default_str();
    }
    app.add_option("--p", p, "Particle wavenumber (hbar = 1)");
    app.add_option("--k", k, "Fringe wavenumber; must equal --p when both are given");
    app.add_option("--scale", scale, "Scale preparation: none | momentum | free")
        ->capture_default_str();
    app.add_option("--labeling", labeling, "bright1 | bright2 (port reported as detector 1)")
        ->capture_default_str();
  }

  SetupConfig resolve() const {
    SetupConfig config;
    try {
      config.kind = parse_setup_kind(setup);
      config.scale = parse_scale_preparation(scale);
      config.labeling = parse_detector_labeling(labeling);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    config.r1 = r1;
    config.r2 = r2;
    if (p && k && std::abs(*p - *k) > 1e-12 * std::max(1.0, std::abs(*p))) {
      throw UsageError("--p and --k disagree (" + format_double(*p) + " vs " + format_double(*k) +
                       "); the fringe wavenumber is identified with the momentum");
    }
    config.p = p.value_or(k.value_or(0.0));
    if (config.scale == ScalePreparation::None && k && *k != 0.0) {
      throw UsageError("--scale none fixes k = 0; drop --k or choose another scale");
    }
    try {
      config.validate();
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    return config;
  }
};

void append_setup(Manifest& m, const SetupConfig& c) {
  m.emplace_back("setup", std::string(to_string(c.kind)));
  m.emplace_back("r1", format_double(c.r1));
  m.emplace_back("r2", format_double(c.r2));
  m.emplace_back("p", format_double(c.p));
  m.emplace_back("scale", std::string(to_string(c.scale)));
  m.emplace_back("labeling", std::string(to_string(c.labeling)));
}

Manifest base_manifest(const std::string& command) {
  return {{"command", command}, {"version", kVersion}};
}

void kv(std::ostream& out, const std::string& key, double value) {
  out << key << '=' << format_double(value) << '\n';
}

void kv(std::ostream& out, const std::string& key, std::uint64_t value) {
  out << key << '=' << value << '\n';
}

void kv(std::ostream& out, const std::string& key, std::string_view value) {
  out << key << '=' << value << '\n';
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file.precision(17);
  return file;
}

// Writes to `path`, or to `fallback` when the path is empty.
template <typename Writer>
void emit(const std::string& path, std::ostream& fallback, Writer&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file = open_output(path);
  write(file);
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

// Distribution the data is generated from, plus the prediction printed next to it.
ProbabilityPair theory_for(const SetupConfig& config) {
  return choose_k(config).k || config.kind == SetupKind::OpenArms ? inferred_distribution(config)
                                                                  : click_distribution(config);
}

SetupConfig at_path_difference(SetupConfig config, double x) {
  config.r1 = std::max(x, 0.0);
  config.r2 = std::max(-x, 0.0);
  return config;
}

std::vector<double> sweep(double lo, double hi, std::size_t points) {
  std::vector<double> xs(points);
  for (std::size_t j = 0; j < points; ++j) {
    xs[j] = points == 1 ? lo : lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(points - 1);
  }
  return xs;
}

void report_pair(std::ostream& out, const std::string& prefix, const ClickCounts& counts,
                 const ProbabilityPair& theory) {
  kv(out, prefix + "n1", counts.n1);
  kv(out, prefix + "n2", counts.n2);
  kv(out, prefix + "theory_p1", theory.p1());
  kv(out, prefix + "theory_p2", theory.p2());
  if (counts.total() == 0) {
    kv(out, prefix + "empirical_p1", std::string_view("nan"));
    return;
  }
  const EmpiricalPair empirical = empirical_distribution(counts);
  kv(out, prefix + "empirical_p1", empirical.pair.p1());
  kv(out, prefix + "empirical_p2", empirical.pair.p2());
  kv(out, prefix + "stderr", empirical.stderr_p1);
  kv(out, prefix + "z", z_score(empirical, theory.p1()));
}

// --- simulate ---------------------------------------------------------------

struct SimulateArgs {
  SetupFlags setup;
  std::uint64_t n = 100000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string clicks;
};

int simulate(const SimulateArgs& a, std::ostream& out) {
  const SetupConfig config = a.setup.resolve();
  const ProbabilityPair theory = theory_for(config);
  const TrialRun run = run_trials(config, a.n, a.seed, {a.workers, !a.clicks.empty()});

  Manifest m = base_manifest("simulate");
  append_setup(m, config);
  m.emplace_back("k_selection", to_string(choose_k(config).kind));
  m.emplace_back("n", std::to_string(a.n));
  m.emplace_back("seed", std::to_string(a.seed));
  if (!a.clicks.empty()) m.emplace_back("clicks", a.clicks);

  if (!a.clicks.empty()) {
    emit(a.clicks, out, [&](std::ostream& o) {
      formats::write_manifest(o, m);
      formats::write_click_csv(o, run.records);
    });
  }
  formats::write_manifest(out, m);
  kv(out, "x", config.path_difference());
  report_pair(out, "", run.counts, theory);
  return kOk;
}

// --- scan -------------------------------------------------------------------

struct ScanArgs {
  SetupFlags setup;
  double x_min = 0.0;
  double x_max = 2.0 * std::numbers::pi;
  std::size_t points = 9;
  std::uint64_t n = 10000;
  std::uint64_t seed = 0;
  std::string out;
};

int scan(const ScanArgs& a, std::ostream& out) {
  if (a.points == 0) throw UsageError("--points must be >= 1");
  if (a.n == 0) throw UsageError("--n must be >= 1");
  const SetupConfig base = a.setup.resolve();

  Manifest m = base_manifest("scan");
  append_setup(m, base);
  m.emplace_back("x_min", format_double(a.x_min));
  m.emplace_back("x_max", format_double(a.x_max));
  m.emplace_back("points", std::to_string(a.points));
  m.emplace_back("n", std::to_string(a.n));
  m.emplace_back("seed", std::to_string(a.seed));
  m.emplace_back("point_seed", "derive_seed(seed, point index)");

  emit(a.out, out, [&](std::ostream& o) {
    formats::write_manifest(o, m);
    o << "x,P1_theory,P2_theory,p1_hat,p2_hat,stderr,n1,n2\n";
    const std::vector<double> xs = sweep(a.x_min, a.x_max, a.points);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const SetupConfig config = at_path_difference(base, xs[j]);
      const ProbabilityPair theory = theory_for(config);
      const TrialRun run = run_trials(config, a.n, rng::derive_seed(a.seed, j));
      const EmpiricalPair e = empirical_distribution(run.counts);
      o << format_double(xs[j]) << ',' << format_double(theory.p1()) << ','
        << format_double(theory.p2()) << ',' << format_double(e.pair.p1()) << ','
        << format_double(e.pair.p2()) << ',' << format_double(e.stderr_p1) << ',' << run.counts.n1
        << ',' << run.counts.n2 << '\n';
    }
  });
  return kOk;
}

// --- fit --------------------------------------------------------------------

struct FitArgs {
  std::string input;
  bool generate = false;
  double k_true = 2.0;
  double x_min = 0.0;
  double x_max = std::numbers::pi;
  std::size_t points = 20;
  std::uint64_t n = 100000;
  std::uint64_t seed = 0;
  std::string sign = "plus";
  std::optional<double> k_max;
  std::size_t grid = 0;
  std::string report;
};

int fit(const FitArgs& a, std::ostream& out) {
  FringeSign sign;
  try {
    sign = parse_fringe_sign(a.sign);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  Manifest m = base_manifest("fit");
  std::vector<FitPoint> data;
  if (!a.input.empty()) {
    std::ifstream in(a.input);
    if (!in) throw UsageError("cannot open '" + a.input + "'");
    data = formats::read_fit_points_csv(in);
    m.emplace_back("input", a.input);
  } else if (a.generate) {
    if (a.points == 0 || a.n == 0) throw UsageError("--points and --n must be >= 1");
    if (!(a.k_true >= 0.0)) throw UsageError("--k-true must be >= 0");
    const FringeLaw law = closed_form_fringe(a.k_true, sign);
    const std::vector<double> xs = sweep(a.x_min, a.x_max, a.points);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const TrialRun run = run_trials(law, xs[j], a.n, rng::derive_seed(a.seed, j));
      data.push_back({xs[j], run.counts.n1, run.counts.n2});
    }
    m.emplace_back("generate", "closed-form fringe");
    m.emplace_back("k_true", format_double(a.k_true));
    m.emplace_back("x_min", format_double(a.x_min));
    m.emplace_back("x_max", format_double(a.x_max));
    m.emplace_back("points", std::to_string(a.points));
    m.emplace_back("n", std::to_string(a.n));
    m.emplace_back("seed", std::to_string(a.seed));
  } else {
    throw UsageError("fit needs --input <csv> or --generate");
  }
  m.emplace_back("sign", to_string(sign));
  if (a.k_max) m.emplace_back("k_max", format_double(*a.k_max));
  if (a.grid != 0) m.emplace_back("grid", std::to_string(a.grid));
  if (!a.report.empty()) m.emplace_back("report", a.report);

  FitOptions options;
  options.k_max = a.k_max;
  options.grid_points = a.grid;
  const KEstimate estimate = fit_k(data, sign, options);

  if (!a.report.empty()) {
    emit(a.report, out, [&](std::ostream& o) {
      formats::write_manifest(o, m);
      formats::write_fit_report(o, estimate);
    });
  }
  formats::write_manifest(out, m);
  formats::write_fit_report(out, estimate);
  return kOk;
}

// --- ode-check --------------------------------------------------------------

inline constexpr double kOdeTolerance = 1e-6;

struct OdeArgs {
  double k = 1.0;
  int f0 = 1;
  std::optional<double> x_max;
  double step = 1e-3;
  std::string out;
};

int ode_check(const OdeArgs& a, std::ostream& out) {
  if (!(a.k > 0.0)) throw UsageError("--k must be > 0 (k = 0 is the constant law)");
  if (!(a.step > 0.0)) throw UsageError("--step must be > 0");
  if (a.f0 != 0 && a.f0 != 1) throw UsageError("--f0 must be 0 or 1");
  const double x_max = a.x_max.value_or(4.0 * std::numbers::pi / a.k);
  if (!(x_max >= a.step)) throw UsageError("--x-max must be >= --step");

  const FringeTable table = constant_metric_ode_solve(a.k, a.f0, x_max, a.step);
  const FringeSign sign = a.f0 == 1 ? FringeSign::Plus : FringeSign::Minus;
  const double deviation = table.sup_norm_deviation(closed_form_fringe(a.k, sign));

  Manifest m = base_manifest("ode-check");
  m.emplace_back("k", format_double(a.k));
  m.emplace_back("f0", std::to_string(a.f0));
  m.emplace_back("x_max", format_double(x_max));
  m.emplace_back("step", format_double(a.step));
  if (!a.out.empty()) {
    m.emplace_back("out", a.out);
    emit(a.out, out, [&](std::ostream& o) {
      formats::write_manifest(o, m);
      write_fringe_table_csv(o, table);
    });
  }
  formats::write_manifest(out, m);
  kv(out, "grid_points", static_cast<std::uint64_t>(table.xs.size()));
  kv(out, "sup_norm", deviation);
  kv(out, "tolerance", kOdeTolerance);
  const bool ok = deviation <= kOdeTolerance;
  kv(out, "status", std::string_view(ok ? "pass" : "fail"));
  return ok ? kOk : kCheckFailed;
}

// --- reparam-study ----------------------------------------------------------

struct ReparamArgs {
  double k = 1.0;
  double x_max = 2.0 * std::numbers::pi;
  std::size_t points = 1000;
  std::string sign = "plus";
  std::vector<double> at;
  std::string out;
};

int reparam_study(const ReparamArgs& a, std::ostream& out) {
  if (!(a.x_max > 0.0)) throw UsageError("--x-max must be > 0");
  if (a.points == 0) throw UsageError("--points must be >= 1");
  if (!(a.k >= 0.0)) throw UsageError("--k must be >= 0");
  FringeSign sign;
  try {
    sign = parse_fringe_sign(a.sign);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  std::vector<double> xs;
  for (std::size_t j = 1; j <= a.points; ++j) {
    xs.push_back(a.x_max * static_cast<double>(j) / static_cast<double>(a.points));
  }
  for (double x : a.at) {
    if (!(x > 0.0)) throw UsageError("--at values must be > 0");
    xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  const Interval domain{0.0, xs.back()};
  const FringeLaw physical = closed_form_fringe(a.k, sign);
  const auto identity = reparametrized_fringe(Reparametrization::identity(), a.k, sign, domain);
  const auto root = reparametrized_fringe(Reparametrization::square_root(), a.k, sign, domain);
  const auto square = reparametrized_fringe(Reparametrization::square(), a.k, sign, domain);

  Manifest m = base_manifest("reparam-study");
  m.emplace_back("k", format_double(a.k));
  m.emplace_back("sign", to_string(sign));
  m.emplace_back("x_max", format_double(a.x_max));
  m.emplace_back("points", std::to_string(a.points));
  if (!a.out.empty()) m.emplace_back("out", a.out);

  double max_identity = 0.0, max_sqrt = 0.0, max_square = 0.0;
  emit(a.out, out, [&](std::ostream& o) {
    formats::write_manifest(o, m);
    o << "x,f_physical,f_identity,f_sqrt,f_square,abs_d_sqrt,abs_d_square\n";
    for (double x : xs) {
      const double f = physical.evaluate(x);
      const double fi = identity.evaluate(x);
      const double fr = root.evaluate(x);
      const double fs = square.evaluate(x);
      max_identity = std::max(max_identity, std::abs(fi - f));
      max_sqrt = std::max(max_sqrt, std::abs(fr - f));
      max_square = std::max(max_square, std::abs(fs - f));
      o << format_double(x) << ',' << format_double(f) << ',' << format_double(fi) << ','
        << format_double(fr) << ',' << format_double(fs) << ',' << format_double(std::abs(fr - f))
        << ',' << format_double(std::abs(fs - f)) << '\n';
    }
    o << "# summary: max_abs_d_identity=" << format_double(max_identity)
      << " max_abs_d_sqrt=" << format_double(max_sqrt)
      << " max_abs_d_square=" << format_double(max_square) << '\n';
  });
  if (!a.out.empty()) {
    formats::write_manifest(out, m);
    kv(out, "max_abs_d_identity", max_identity);
    kv(out, "max_abs_d_sqrt", max_sqrt);
    kv(out, "max_abs_d_square", max_square);
  }
  return kOk;
}

// --- delayed ----------------------------------------------------------------

struct DelayedArgs {
  SetupFlags setup;
  std::string policy = "coin";
  std::optional<std::uint64_t> policy_seed;
  std::uint64_t n = 100000;
  std::uint64_t seed = 0;
  std::string clicks;
};

int delayed(const DelayedArgs& a, std::ostream& out) {
  const SetupConfig base = a.setup.resolve();
  const std::uint64_t policy_seed = a.policy_seed.value_or(rng::derive_seed(a.seed, kPolicySalt));
  ChoicePolicy policy;
  try {
    policy = ChoicePolicy::parse(a.policy, policy_seed);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (a.n == 0) throw UsageError("--n must be >= 1");

  const DelayedChoiceRun run = delayed_choice_run(base, a.n, a.seed, policy);
  SetupConfig open = base;
  open.kind = SetupKind::OpenArms;
  SetupConfig recombined = base;
  recombined.kind = SetupKind::Recombined;

  Manifest m = base_manifest("delayed");
  append_setup(m, base);
  m.emplace_back("policy", std::string(to_string(policy.kind)));
  m.emplace_back("policy_seed", std::to_string(policy_seed));
  m.emplace_back("n", std::to_string(a.n));
  m.emplace_back("seed", std::to_string(a.seed));
  if (!a.clicks.empty()) {
    m.emplace_back("clicks", a.clicks);
    emit(a.clicks, out, [&](std::ostream& o) {
      formats::write_manifest(o, m);
      formats::write_click_csv(o, run.records);
    });
  }
  formats::write_manifest(out, m);
  kv(out, "x", base.path_difference());
  report_pair(out, "open_", run.open_counts, theory_for(open));
  report_pair(out, "recombined_", run.recombined_counts, theory_for(recombined));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Informational double-beam interference: simulation, inference and fitting"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::function<int()> action;
  std::uint64_t seed = 0;
  const auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed (default: $MZINFO_SEED or 1)");
  };

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo clicks for one setup");
  sim.setup.add_to(*sim_cmd, true);
  sim_cmd->add_option("--n", sim.n, "Number of trials")->check(CLI::PositiveNumber)->capture_default_str();
  sim_cmd->add_option("--workers", sim.workers, "Worker threads (0 = all cores)")->capture_default_str();
  sim_cmd->add_option("--clicks", sim.clicks, "Write the click log CSV here");
  add_seed(sim_cmd);
  sim_cmd->callback([&] { action = [&] { sim.seed = seed; return simulate(sim, out); }; });

  ScanArgs sc;
  auto* scan_cmd = app.add_subcommand("scan", "Fringe curve: theory and Monte Carlo over an x sweep");
  sc.setup.add_to(*scan_cmd, false);
  scan_cmd->add_option("--x-min", sc.x_min)->capture_default_str();
  scan_cmd->add_option("--x-max", sc.x_max)->capture_default_str();
  scan_cmd->add_option("--points", sc.points)->check(CLI::PositiveNumber)->capture_default_str();
  scan_cmd->add_option("--n", sc.n, "Trials per point")->check(CLI::PositiveNumber)->capture_default_str();
  scan_cmd->add_option("--out", sc.out, "CSV path (default stdout)");
  add_seed(scan_cmd);
  scan_cmd->callback([&] { action = [&] { sc.seed = seed; return scan(sc, out); }; });

  FitArgs ft;
  auto* fit_cmd = app.add_subcommand("fit", "Maximum-likelihood fringe wavenumber");
  auto* input_opt = fit_cmd->add_option("--input", ft.input, "Click log or scan CSV");
  auto* gen_opt = fit_cmd->add_flag("--generate", ft.generate, "Fit self-generated data");
  input_opt->excludes(gen_opt);
  fit_cmd->add_option("--k-true", ft.k_true, "Generator wavenumber")->capture_default_str();
  fit_cmd->add_option("--x-min", ft.x_min)->capture_default_str();
  fit_cmd->add_option("--x-max", ft.x_max)->capture_default_str();
  fit_cmd->add_option("--points", ft.points)->capture_default_str();
  fit_cmd->add_option("--n", ft.n, "Trials per point")->capture_default_str();
  fit_cmd->add_option("--sign", ft.sign, "plus | minus")->capture_default_str();
  fit_cmd->add_option("--k-max", ft.k_max, "Upper end of the k scan");
  fit_cmd->add_option("--grid", ft.grid, "Coarse grid size (0 = automatic)")->capture_default_str();
  fit_cmd->add_option("--report", ft.report, "Also write the key=value report here");
  add_seed(fit_cmd);
  fit_cmd->callback([&] { action = [&] { ft.seed = seed; return fit(ft, out); }; });

  OdeArgs od;
  auto* ode_cmd = app.add_subcommand("ode-check", "Integrate the constant-metric rule and compare");
  ode_cmd->add_option("--k", od.k)->capture_default_str();
  ode_cmd->add_option("--f0", od.f0, "Boundary value 0 or 1")->capture_default_str();
  ode_cmd->add_option("--x-max", od.x_max, "Default 4 pi / k");
  ode_cmd->add_option("--step", od.step)->capture_default_str();
  ode_cmd->add_option("--out", od.out, "Write the table CSV here");
  ode_cmd->callback([&] { action = [&] { return ode_check(od, out); }; });

  ReparamArgs rp;
  auto* rep_cmd = app.add_subcommand("reparam-study", "Constant-metric rule applied in sqrt(x) and x^2");
  rep_cmd->add_option("--k", rp.k)->capture_default_str();
  rep_cmd->add_option("--x-max", rp.x_max)->capture_default_str();
  rep_cmd->add_option("--points", rp.points)->capture_default_str();
  rep_cmd->add_option("--sign", rp.sign)->capture_default_str();
  rep_cmd->add_option("--at", rp.at, "Extra x values to include");
  rep_cmd->add_option("--out", rp.out, "CSV path (default stdout)");
  rep_cmd->callback([&] { action = [&] { return reparam_study(rp, out); }; });

  DelayedArgs dl;
  auto* del_cmd = app.add_subcommand("delayed", "Per-trial choice between open and recombined");
  dl.setup.add_to(*del_cmd, true);
  del_cmd->add_option("--policy", dl.policy, "open | recombined | coin")->capture_default_str();
  del_cmd->add_option("--policy-seed", dl.policy_seed, "Default derived from --seed");
  del_cmd->add_option("--n", dl.n)->check(CLI::PositiveNumber)->capture_default_str();
  del_cmd->add_option("--clicks", dl.clicks, "Write the click log CSV here");
  add_seed(del_cmd);
  del_cmd->callback([&] { action = [&] { dl.seed = seed; return delayed(dl, out); }; });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    seed = default_seed();
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const NonIdentifiableError& e) {
    err << "not identifiable: " << e.what() << '\n';
    return kNonIdentifiable;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace mzinfo::cli
