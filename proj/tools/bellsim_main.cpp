// bellsim: Bell and partially-entangled-basis measurements behind a
// beamsplitter, teleportation fidelities, filtering success probabilities,
// and the parameter sweeps that map them out. All data output is
// deterministic: identical configurations give byte-identical streams at
// any worker count.

#include "bellsim/bases.hpp"
#include "bellsim/beamsplitter.hpp"
#include "bellsim/information.hpp"
#include "bellsim/io.hpp"
#include "bellsim/povm.hpp"
#include "bellsim/sweep.hpp"
#include "bellsim/teleport.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using bellsim::format_fixed12;
using bellsim::format_sig12;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;

struct Defaults {
  double grid_lo = 0.0;
  double grid_hi = 1.0;
  int grid_n = 41;
  std::string basis = "bell";
  std::string tie_break = "lowest-index";
  std::string measure = "polar";
  int polar_nodes = 16;
  int azimuth_nodes = 32;
  std::string format = "csv";
  int workers = 1;
  double tradeoff_x2_min = 0.5;
  double tradeoff_x2_max = 1.0;
  int tradeoff_steps = 21;
  int tradeoff_grid_n = 21;
};

ordered_json defaults_json(const Defaults& d) {
  return ordered_json{
      {"grid", {{"lo", d.grid_lo}, {"hi", d.grid_hi}, {"n", d.grid_n}}},
      {"phases", {0.0, 0.0, 0.0, 0.0}},
      {"basis", d.basis},
      {"tie_break", d.tie_break},
      {"measure", d.measure},
      {"quadrature", {{"polar_nodes", d.polar_nodes}, {"azimuth_nodes", d.azimuth_nodes}}},
      {"format", d.format},
      {"workers", d.workers},
      {"tradeoff",
       {{"x2_min", d.tradeoff_x2_min},
        {"x2_max", d.tradeoff_x2_max},
        {"steps", d.tradeoff_steps},
        {"grid_n", d.tradeoff_grid_n}}},
  };
}

struct Options {
  Defaults defaults;

  std::vector<double> transmission;  // 2 entries when given
  std::vector<double> theta;         // 2 entries when given
  std::vector<double> phases{0.0, 0.0, 0.0, 0.0};
  std::string basis = "bell";
  std::optional<double> x2;
  int sweep_n = 0;  // 0 = scalar mode
  std::string sweep_phases;  // "", "phi" or "chi"
  bool refine = false;
  std::string tie_break = "lowest-index";
  std::vector<int> quadrature;  // 2 entries when given
  std::string measure = "polar";
  std::string format = "csv";
  std::string out_path;
  int workers = 1;
  bool compare_classical = false;
  bool povm_tradeoff = false;
  bool mirror_x = false;
  double x2_min = 0.5;
  double x2_max = 1.0;
  int tradeoff_steps = 21;
  int tradeoff_grid_n = 21;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bellsim::TieBreak parse_tie_break(const std::string& s) {
  if (s == "lowest-index") return bellsim::TieBreak::kLowestIndex;
  if (s == "posterior-then-index") return bellsim::TieBreak::kPosteriorThenIndex;
  throw ConfigError("--tie-break must be lowest-index or posterior-then-index");
}

bellsim::InputMeasure parse_measure(const std::string& s) {
  if (s == "polar") return bellsim::InputMeasure::kPolarUniform;
  if (s == "haar") return bellsim::InputMeasure::kHaar;
  throw ConfigError("--measure must be polar or haar");
}

bellsim::Quadrature parse_quadrature(const Options& opt) {
  bellsim::Quadrature q{opt.defaults.polar_nodes, opt.defaults.azimuth_nodes};
  if (!opt.quadrature.empty()) {
    q.polar_nodes = opt.quadrature[0];
    q.azimuth_nodes = opt.quadrature[1];
  }
  if (q.polar_nodes < 1 || q.azimuth_nodes < 1) {
    throw ConfigError("--quadrature orders must be positive");
  }
  return q;
}

/// Scalar-mode beamsplitter setting from --transmission or --theta plus
/// --phases.
bellsim::BeamsplitterParams parse_params(const Options& opt) {
  if (!opt.transmission.empty() && !opt.theta.empty()) {
    throw ConfigError("give either --transmission or --theta, not both");
  }
  bellsim::BeamsplitterParams p;
  if (!opt.transmission.empty()) {
    const double th = opt.transmission[0];
    const double tv = opt.transmission[1];
    if (!(th >= 0.0 && th <= 1.0 && tv >= 0.0 && tv <= 1.0)) {
      throw ConfigError("--transmission coefficients must lie in [0, 1]");
    }
    p = bellsim::BeamsplitterParams::from_transmission(th, tv);
  } else if (!opt.theta.empty()) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(opt.theta[0] >= 0.0 && opt.theta[0] <= half_pi && opt.theta[1] >= 0.0 &&
          opt.theta[1] <= half_pi)) {
      throw ConfigError("--theta angles must lie in [0, pi/2]");
    }
    p.theta_h = opt.theta[0];
    p.theta_v = opt.theta[1];
  } else {
    throw ConfigError("scalar mode needs --transmission or --theta (or use --sweep)");
  }
  p.phi_h = opt.phases[0];
  p.phi_v = opt.phases[1];
  p.chi_h = opt.phases[2];
  p.chi_v = opt.phases[3];
  p.validate();
  return p;
}

bellsim::SweepGrid parse_grid(const Options& opt) {
  if (opt.sweep_n < 2) {
    throw ConfigError("--sweep needs at least 2 points per axis");
  }
  bellsim::SweepTarget target = bellsim::SweepTarget::kTransmission;
  if (opt.sweep_phases == "phi") {
    target = bellsim::SweepTarget::kPhiPair;
  } else if (opt.sweep_phases == "chi") {
    target = bellsim::SweepTarget::kChiPair;
  } else if (!opt.sweep_phases.empty()) {
    throw ConfigError("--sweep-phases must be phi or chi");
  }
  bellsim::BeamsplitterParams base;
  if (target == bellsim::SweepTarget::kTransmission) {
    // the axes drive the mixing angles; only the phases are fixed
    base.phi_h = opt.phases[0];
    base.phi_v = opt.phases[1];
    base.chi_h = opt.phases[2];
    base.chi_v = opt.phases[3];
  } else {
    // phase sweep: the transmissions must be pinned explicitly
    if (opt.transmission.empty() && opt.theta.empty()) {
      throw ConfigError("--sweep-phases requires a fixed --transmission or --theta");
    }
    base = parse_params(opt);
  }
  return bellsim::SweepGrid::for_target(target, opt.sweep_n, base);
}

/// Basis selection for infogain/lookup; partial requires --x2 in [0, 1].
bellsim::MeasurementBasis parse_basis(const Options& opt) {
  if (opt.basis == "bell") return bellsim::bell_basis();
  if (opt.basis == "partial") {
    if (!opt.x2.has_value()) {
      throw ConfigError("--basis partial requires --x2");
    }
    if (!(*opt.x2 >= 0.0 && *opt.x2 <= 1.0)) {
      throw ConfigError("--x2 must lie in [0, 1] for the partial basis");
    }
    return bellsim::partial_basis(std::sqrt(*opt.x2));
  }
  throw ConfigError("--basis must be bell or partial");
}

double povm_x_from(const Options& opt) {
  if (!opt.x2.has_value()) {
    throw ConfigError("povm requires --x2");
  }
  double x2 = *opt.x2;
  if (opt.mirror_x && x2 < 0.5) {
    x2 = 1.0 - x2;  // relabeled basis, same physics
  }
  if (!(x2 >= 0.5 && x2 <= 1.0)) {
    throw ConfigError("--x2 must lie in [0.5, 1] for povm (or pass --mirror-x)");
  }
  return std::sqrt(x2);
}

int sweep_workers(const Options& opt) {
  if (opt.workers < 1) {
    throw ConfigError("--workers must be at least 1");
  }
  return opt.workers;
}

/// Writes to --out or stdout.
void emit(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out_path);
  if (!file) {
    throw ConfigError("--out: cannot open '" + opt.out_path + "' for writing");
  }
  file << text;
}

std::string surface_output(const Options& opt, const bellsim::Surface& surface) {
  if (opt.format == "json") {
    return bellsim::surface_to_json(surface);
  }
  std::ostringstream os;
  bellsim::write_surface_csv(os, surface);
  return os.str();
}

// ---- subcommands ----

int run_infogain(const Options& opt) {
  if (opt.sweep_n > 0) {
    const bellsim::BasisKind kind =
        (opt.basis == "bell") ? bellsim::BasisKind::kBell : bellsim::BasisKind::kPartial;
    parse_basis(opt);  // validates basis/x2 combination
    std::optional<double> x;
    if (kind == bellsim::BasisKind::kPartial) x = std::sqrt(*opt.x2);
    const bellsim::Surface surface = bellsim::sweep_info_gain(
        parse_grid(opt), kind, x, {sweep_workers(opt), opt.refine});
    emit(opt, surface_output(opt, surface));
    return kExitOk;
  }
  const bellsim::MeasurementBasis basis = parse_basis(opt);
  const double gain = bellsim::info_gain(basis, parse_params(opt));
  if (opt.format == "json") {
    emit(opt, ordered_json{{"value", gain}}.dump(2) + "\n");
  } else {
    emit(opt, format_fixed12(gain) + "\n");
  }
  return kExitOk;
}

int run_fidelity(const Options& opt) {
  const bellsim::TieBreak tie = parse_tie_break(opt.tie_break);
  const bellsim::InputMeasure measure = parse_measure(opt.measure);
  const bellsim::Quadrature quad = parse_quadrature(opt);
  constexpr double kClassicalBound = 2.0 / 3.0;
  if (opt.sweep_n > 0) {
    const bellsim::Surface surface = bellsim::sweep_fidelity(
        parse_grid(opt), tie, measure, quad, {sweep_workers(opt), opt.refine});
    emit(opt, surface_output(opt, surface));
    return kExitOk;
  }
  const double fbar = bellsim::averaged_fidelity(parse_params(opt), tie, measure, quad);
  if (opt.format == "json") {
    ordered_json j{{"value", fbar}};
    if (opt.compare_classical) j["classical_bound"] = kClassicalBound;
    emit(opt, j.dump(2) + "\n");
  } else {
    std::string text = format_fixed12(fbar) + "\n";
    if (opt.compare_classical) {
      text += "classical_bound," + format_fixed12(kClassicalBound) + "\n";
    }
    emit(opt, text);
  }
  return kExitOk;
}

int run_tradeoff(const Options& opt) {
  if (!(opt.x2_min >= 0.5 && opt.x2_max <= 1.0 && opt.x2_min <= opt.x2_max)) {
    throw ConfigError("--x2-min/--x2-max must satisfy 0.5 <= min <= max <= 1");
  }
  if (opt.tradeoff_steps < 1) {
    throw ConfigError("--steps must be at least 1");
  }
  const int grid_n = (opt.sweep_n > 0) ? opt.sweep_n : opt.tradeoff_grid_n;
  if (grid_n < 2) {
    throw ConfigError("--sweep needs at least 2 points per axis");
  }
  const std::vector<bellsim::TradeoffRow> rows =
      bellsim::sweep_tradeoff(std::sqrt(opt.x2_min), std::sqrt(opt.x2_max),
                              opt.tradeoff_steps, grid_n, {sweep_workers(opt), false});
  if (opt.format == "json") {
    emit(opt, bellsim::tradeoff_to_json(rows));
  } else {
    std::ostringstream os;
    bellsim::write_tradeoff_csv(os, rows);
    emit(opt, os.str());
  }
  return kExitOk;
}

int run_povm(const Options& opt) {
  if (opt.povm_tradeoff) {
    return run_tradeoff(opt);
  }
  const double x = povm_x_from(opt);
  const double y = std::sqrt(std::max(0.0, 1.0 - x * x));
  const bellsim::PolarizationQubit reference(1.0, 0.0);  // success is input-independent
  const bellsim::PovmSuccess success = bellsim::success_probability(reference, x);
  const double paper_value = 1.0 / (2.0 * x * x);

  if (opt.format == "json") {
    ordered_json branches = ordered_json::array();
    for (int i = 0; i < 4; ++i) {
      const bellsim::FilterPovm f = bellsim::filter_for_outcome(x, i);
      auto mat = [](const Eigen::Matrix2d& m) {
        return ordered_json{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}};
      };
      branches.push_back(ordered_json{
          {"label", std::string(bellsim::kBasisLabels[static_cast<size_t>(i)])},
          {"success", success.per_branch[static_cast<size_t>(i)]},
          {"a1", mat(f.a1)},
          {"a2", mat(f.a2)},
          {"m1", mat(f.m1)}});
    }
    const ordered_json j{{"x2", x * x},
                         {"x", x},
                         {"y", y},
                         {"attenuation_ratio", y / x},
                         {"branches", branches},
                         {"total_success", success.total},
                         {"paper_formula_1_over_2x2", paper_value}};
    emit(opt, j.dump(2) + "\n");
    return kExitOk;
  }

  std::ostringstream os;
  os << "x2," << format_sig12(x * x) << "\n";
  os << "x," << format_sig12(x) << "\n";
  os << "y," << format_sig12(y) << "\n";
  os << "attenuation_ratio," << format_sig12(y / x) << "\n";
  for (int i = 0; i < 4; ++i) {
    os << "branch_success," << bellsim::kBasisLabels[static_cast<size_t>(i)] << ","
       << format_sig12(success.per_branch[static_cast<size_t>(i)]) << "\n";
  }
  os << "total_success," << format_sig12(success.total) << "\n";
  os << "paper_formula_1_over_2x2," << format_sig12(paper_value) << "\n";
  for (int i = 0; i < 4; ++i) {
    const bellsim::FilterPovm f = bellsim::filter_for_outcome(x, i);
    auto row = [&os](std::string_view label, std::string_view name,
                     const Eigen::Matrix2d& m) {
      os << "filter," << label << "," << name << "," << format_sig12(m(0, 0)) << ","
         << format_sig12(m(0, 1)) << "," << format_sig12(m(1, 0)) << ","
         << format_sig12(m(1, 1)) << "\n";
    };
    const std::string_view label = bellsim::kBasisLabels[static_cast<size_t>(i)];
    row(label, "A1", f.a1);
    row(label, "A2", f.a2);
    row(label, "M1", f.m1);
  }
  emit(opt, os.str());
  return kExitOk;
}

int run_lookup(const Options& opt) {
  const bellsim::MeasurementBasis basis = parse_basis(opt);
  const bellsim::BeamsplitterParams params = parse_params(opt);
  const bellsim::TieBreak tie = parse_tie_break(opt.tie_break);
  const bellsim::ConditionalTable table = bellsim::conditional_table(basis, params);
  const bellsim::LookupTable lut = bellsim::lookup_table(table, tie);

  if (opt.format == "json") {
    ordered_json rows = ordered_json::array();
    for (int j = 0; j < bellsim::kOutcomeCount; ++j) {
      ordered_json row{{"outcome", bellsim::outcome_label(j)},
                       {"marginal", table.marginals(j)},
                       {"posterior",
                        {table.posteriors(0, j), table.posteriors(1, j),
                         table.posteriors(2, j), table.posteriors(3, j)}}};
      if (lut.defined(j)) {
        row["best"] =
            std::string(bellsim::kBasisLabels[static_cast<size_t>(lut.best[static_cast<size_t>(j)])]);
      } else {
        row["best"] = nullptr;
      }
      rows.push_back(row);
    }
    const ordered_json j{{"basis", opt.basis},
                         {"x", basis.x},
                         {"tie_break", opt.tie_break},
                         {"rows", rows}};
    emit(opt, j.dump(2) + "\n");
    return kExitOk;
  }

  std::ostringstream os;
  os << "outcome,marginal,p_psi_minus,p_psi_plus,p_phi_minus,p_phi_plus,best\n";
  for (int j = 0; j < bellsim::kOutcomeCount; ++j) {
    os << bellsim::outcome_label(j) << "," << format_sig12(table.marginals(j));
    for (int i = 0; i < 4; ++i) {
      os << "," << format_sig12(table.posteriors(i, j));
    }
    if (lut.defined(j)) {
      os << "," << bellsim::kBasisLabels[static_cast<size_t>(lut.best[static_cast<size_t>(j)])];
    } else {
      os << ",-";
    }
    os << "\n";
  }
  emit(opt, os.str());
  return kExitOk;
}

void add_common_options(CLI::App* cmd, Options& opt, bool with_setting = true) {
  if (with_setting) {
    cmd->add_option("--transmission", opt.transmission,
                    "Transmission coefficients cos(theta) for H and V")
        ->expected(2);
    cmd->add_option("--theta", opt.theta, "Mixing angles in radians for H and V")
        ->expected(2);
    cmd->add_option("--phases", opt.phases,
                    "Beamsplitter phases phi_H phi_V chi_H chi_V")
        ->expected(4);
  }
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opt.out_path, "Write data output to this file");
  cmd->add_option("--workers", opt.workers, "Sweep worker threads (no effect on results)")
      ->envname("BELLSIM_WORKERS");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  bool show_config = false;

  CLI::App app{"Beamsplitter measurements of entangled photon pairs: information gain, "
               "most-likely-state teleportation fidelity, and filtering success sweeps"};
  app.set_version_flag("--version", "bellsim 0.1.0");
  app.add_flag("--show-config", show_config, "Print the built-in defaults as JSON and exit");
  app.require_subcommand(0, 1);

  CLI::App* infogain = app.add_subcommand(
      "infogain", "Information gain of a measurement, scalar or swept surface");
  add_common_options(infogain, opt);
  infogain->add_option("--basis", opt.basis, "Measurement basis")
      ->check(CLI::IsMember({"bell", "partial"}));
  infogain->add_option("--x2", opt.x2, "Squared entanglement parameter for the partial basis");
  infogain->add_option("--sweep", opt.sweep_n, "Sweep an NxN grid");
  infogain->add_option("--sweep-phases", opt.sweep_phases,
                       "Sweep a phase pair instead of the transmissions (phi | chi); "
                       "requires a fixed --transmission or --theta")
      ->check(CLI::IsMember({"phi", "chi"}));
  infogain->add_flag("--refine", opt.refine, "Re-scan a 3x finer local grid around extrema");

  CLI::App* fidelity = app.add_subcommand(
      "fidelity", "Averaged teleportation fidelity, scalar or swept surface");
  add_common_options(fidelity, opt);
  fidelity->add_option("--tie-break", opt.tie_break, "Look-up table tie rule")
      ->check(CLI::IsMember({"lowest-index", "posterior-then-index"}));
  fidelity->add_option("--quadrature", opt.quadrature,
                       "Polar and azimuthal node counts for the input average")
      ->expected(2);
  fidelity->add_option("--measure", opt.measure, "Input-state weight: polar | haar")
      ->check(CLI::IsMember({"polar", "haar"}));
  fidelity->add_option("--sweep", opt.sweep_n, "Sweep an NxN grid");
  fidelity->add_option("--sweep-phases", opt.sweep_phases,
                       "Sweep a phase pair instead of the transmissions (phi | chi); "
                       "requires a fixed --transmission or --theta")
      ->check(CLI::IsMember({"phi", "chi"}));
  fidelity->add_flag("--refine", opt.refine, "Re-scan a 3x finer local grid around extrema");
  fidelity->add_flag("--compare-classical", opt.compare_classical,
                     "Also report the classical measure-and-prepare bound 2/3");

  CLI::App* povm = app.add_subcommand(
      "povm", "Filtering measurement for the partially entangled protocol");
  add_common_options(povm, opt, /*with_setting=*/false);
  povm->add_option("--x2", opt.x2, "Squared entanglement parameter, in [0.5, 1]");
  povm->add_flag("--mirror-x", opt.mirror_x,
                 "Map x2 below 0.5 to the relabeled equivalent 1 - x2");
  povm->add_flag("--tradeoff", opt.povm_tradeoff,
                 "Emit the information-gain vs success-probability table instead");
  povm->add_option("--x2-min", opt.x2_min, "Trade-off: smallest x2");
  povm->add_option("--x2-max", opt.x2_max, "Trade-off: largest x2");
  povm->add_option("--steps", opt.tradeoff_steps, "Trade-off: number of x values");
  povm->add_option("--sweep", opt.sweep_n, "Trade-off: grid points per axis");

  CLI::App* lookup = app.add_subcommand(
      "lookup", "Posterior table and most-likely-state assignments per outcome");
  add_common_options(lookup, opt);
  lookup->add_option("--basis", opt.basis, "Measurement basis")
      ->check(CLI::IsMember({"bell", "partial"}));
  lookup->add_option("--x2", opt.x2, "Squared entanglement parameter for the partial basis");
  lookup->add_option("--tie-break", opt.tie_break, "Look-up table tie rule")
      ->check(CLI::IsMember({"lowest-index", "posterior-then-index"}));

  CLI::App* tradeoff = app.add_subcommand(
      "tradeoff", "Information gain vs filtering success probability over x");
  add_common_options(tradeoff, opt, /*with_setting=*/false);
  tradeoff->add_option("--x2-min", opt.x2_min, "Smallest x2");
  tradeoff->add_option("--x2-max", opt.x2_max, "Largest x2");
  tradeoff->add_option("--steps", opt.tradeoff_steps, "Number of x values");
  tradeoff->add_option("--sweep", opt.sweep_n, "Grid points per axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return (code == 0) ? kExitOk : kExitConfig;
  }

  try {
    if (show_config) {
      std::cout << defaults_json(opt.defaults).dump(2) << "\n";
      return kExitOk;
    }
    if (infogain->parsed()) return run_infogain(opt);
    if (fidelity->parsed()) return run_fidelity(opt);
    if (povm->parsed()) return run_povm(opt);
    if (lookup->parsed()) return run_lookup(opt);
    if (tradeoff->parsed()) return run_tradeoff(opt);
    std::cerr << "bellsim: a subcommand is required (see --help)\n";
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "bellsim: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "bellsim: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bellsim: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "bellsim: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
