#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "su11/interferometer.hpp"
#include "su11/io.hpp"
#include "su11/oracle.hpp"
#include "su11/special_functions.hpp"
#include "su11/state_builders.hpp"
#include "su11/verify.hpp"
#include "su11/wigner.hpp"

namespace {

using namespace su11;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct GridOptions {
  std::string kind = "disk";
  int nx = 201, ny = 201;
  double half_width = 0.99;
  int n_tau = 65, n_chi = 64;
  double tau_max = 3.0;

  GridSpec to_spec() const {
    if (kind == "disk") return GridSpec::disk(nx, ny, half_width);
    if (kind == "polar") return GridSpec::polar(n_tau, n_chi, tau_max);
    throw SpecError("unknown grid kind '" + kind + "' (expected disk or polar)");
  }
};

void add_grid_options(CLI::App* cmd, GridOptions& grid) {
  cmd->add_option("--grid", grid.kind, "grid kind: disk (cartesian) or polar (tau, chi)")
      ->default_val("disk");
  cmd->add_option("--nx", grid.nx, "disk grid: samples along Re(xi)")->default_val(201);
  cmd->add_option("--ny", grid.ny, "disk grid: samples along Im(xi)")->default_val(201);
  cmd->add_option("--half-width", grid.half_width, "disk grid half width")->default_val(0.99);
  cmd->add_option("--ntau", grid.n_tau, "polar grid: tau samples")->default_val(65);
  cmd->add_option("--nchi", grid.n_chi, "polar grid: chi samples")->default_val(64);
  cmd->add_option("--tau-max", grid.tau_max, "polar grid: largest tau")->default_val(3.0);
}

FoldMode parse_fold(const std::string& name) {
  if (name == "sectors") return FoldMode::sectors;
  if (name == "symmetric") return FoldMode::symmetric;
  if (name == "upper") return FoldMode::upper;
  throw SpecError("unknown fold mode '" + name + "' (expected sectors, symmetric or upper)");
}

void write_field_file(const std::string& path, const WignerField& field,
                      const std::vector<std::string>& comments, bool with_timestamp) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  write_wigner_csv(out, field, comments, with_timestamp);
}

int run_dfunc(const std::string& k_text, const std::optional<std::string>& mu_text,
              const std::optional<std::string>& mu_prime_text, double tau_min,
              std::optional<double> tau_max, int tau_count, int mu_count,
              const std::string& out_path) {
  HalfInteger k = parse_half_integer(k_text);
  if (k.twice() < 1) throw SpecError("dfunc: k must be >= 1/2");

  std::vector<double> taus;
  if (tau_max) {
    if (tau_count < 2) throw SpecError("dfunc: --tau-count must be >= 2 with --tau-to");
    for (int i = 0; i < tau_count; ++i)
      taus.push_back(tau_min + (*tau_max - tau_min) * i / (tau_count - 1));
  } else {
    taus.push_back(tau_min);
  }

  std::vector<std::pair<HalfInteger, HalfInteger>> pairs;
  if (mu_text && mu_prime_text) {
    pairs.emplace_back(parse_half_integer(*mu_text), parse_half_integer(*mu_prime_text));
  } else if (!mu_text && !mu_prime_text) {
    for (int m = 0; m < mu_count; ++m)
      for (int mp = 0; mp < mu_count; ++mp)
        pairs.emplace_back(k + HalfInteger::from_int(m), k + HalfInteger::from_int(mp));
  } else {
    throw SpecError("dfunc: give both --mu and --mu-prime, or neither");
  }

  std::vector<DFuncRow> rows;
  rows.reserve(pairs.size() * taus.size());
  for (double tau : taus) {
    if (!(tau >= 0.0)) throw SpecError("dfunc: tau must be >= 0");
    for (const auto& [mu, mup] : pairs) {
      double d = dfunction({k, mu, mup, tau});
      rows.push_back({k.twice(), mu.twice(), mup.twice(), tau, d});
    }
  }
  std::vector<std::string> comments = {"su11 dfunc table, k = " + k.str()};
  if (out_path.empty()) {
    write_dfunc_csv(std::cout, comments, rows);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    write_dfunc_csv(out, comments, rows);
  }
  return kExitOk;
}

std::vector<std::string> state_comments(const TwoModeState& state) {
  return {"cutoff = " + std::to_string(state.cutoff),
          "tail_mass = " + format_double17(state.tail_mass),
          "boundary_mass = " + format_double17(state.boundary_mass),
          std::string("tail_warning = ") + (state.tail_warning ? "true" : "false")};
}

int run_wigner(const std::string& spec_path, const GridOptions& grid_opts,
               const std::string& convention, const std::string& fold, const std::string& out_path,
               bool no_timestamp) {
  StateSpec spec = load_state_spec(spec_path);
  TwoModeState state = build_state(spec);
  if (state.tail_warning)
    std::cerr << "warning: truncation tail mass " << state.tail_mass
              << " exceeds 1e-6; raise the cutoff for faithful amplitudes\n";
  DecomposedState blocks = decompose(state, parse_fold(fold));
  WignerField field = wigner_grid(blocks, grid_opts.to_spec(), parse_convention(convention));
  std::vector<std::string> comments = state_comments(state);
  comments.push_back("state = " + spec.variant_name());
  write_field_file(out_path, field, comments, !no_timestamp);
  return kExitOk;
}

int run_interferometer(const std::string& spec_path, const GridOptions& grid_opts,
                       const std::string& convention, const std::string& fold, double gain,
                       double pump_phase, double total_phase, const std::string& route,
                       const std::string& out_prefix, bool no_timestamp) {
  StateSpec spec = load_state_spec(spec_path);
  TwoModeState state = build_state(spec);
  GridSpec grid = grid_opts.to_spec();
  PhaseConvention conv = parse_convention(convention);
  FoldMode fold_mode = parse_fold(fold);
  InterferometerConfig cfg{gain, pump_phase, total_phase};

  DecomposedState blocks = decompose(state, fold_mode);
  WignerField input_field = wigner_grid(blocks, grid, conv);

  WignerField output_field;
  if (route == "covariant") {
    output_field = output_wigner_covariant(blocks, cfg, grid, conv);
  } else if (route == "direct") {
    TwoModeState propagated = output_state_direct(state, cfg);
    output_field = wigner_grid(decompose(propagated, fold_mode), grid, conv);
    output_field.metadata["route"] = "direct";
  } else {
    throw SpecError("unknown route '" + route + "' (expected covariant or direct)");
  }
  for (WignerField* f : {&input_field, &output_field}) {
    f->metadata["gain"] = format_double17(gain);
    f->metadata["pump_phase"] = format_double17(pump_phase);
    f->metadata["total_phase"] = format_double17(total_phase);
  }

  std::vector<std::string> comments = state_comments(state);
  comments.push_back("state = " + spec.variant_name());
  write_field_file(out_prefix + ".input.csv", input_field, comments, !no_timestamp);
  write_field_file(out_prefix + ".output.csv", output_field, comments, !no_timestamp);
  return kExitOk;
}

int run_verify(const std::string& suite, const std::string& report_path) {
  std::vector<SuiteResult> results;
  try {
    results = run_suites(suite);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string report = report_to_json(results);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot open report file '" + report_path + "'");
    out << report << "\n";
  } else {
    std::cout << report << "\n";
  }
  bool all = true;
  for (const SuiteResult& s : results) {
    std::cout << (s.passed() ? "PASS" : "FAIL") << "  " << s.name
              << "  max_residual=" << s.max_residual() << "  gate_delta=" << s.gate.delta
              << "  (" << s.seconds << " s)\n";
    all = all && s.passed();
  }
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(1,1) Wigner functions on the unit disk: states, d-functions, "
               "interferometer propagation and oracle verification"};
  app.require_subcommand(1);

  // dfunc
  auto* dfunc = app.add_subcommand("dfunc", "tabulate d-functions to CSV");
  std::string k_text;
  std::optional<std::string> mu_text, mu_prime_text;
  double tau_min = 0.0;
  std::optional<double> tau_to;
  int tau_count = 0, mu_count = 8;
  std::string dfunc_out;
  dfunc->add_option("--k", k_text, "irrep label, e.g. 1/2")->required();
  dfunc->add_option("--mu", mu_text, "weight mu (with --mu-prime)");
  dfunc->add_option("--mu-prime", mu_prime_text, "weight mu'");
  dfunc->add_option("--tau", tau_min, "tau value (or range start with --tau-to)")->required();
  dfunc->add_option("--tau-to", tau_to, "range end; tabulates --tau-count values");
  dfunc->add_option("--tau-count", tau_count, "samples across [tau, tau-to]")->default_val(11);
  dfunc->add_option("--mu-count", mu_count, "without --mu: tabulate mu, mu' = k .. k+count-1")
      ->default_val(8);
  dfunc->add_option("--out", dfunc_out, "output CSV path (stdout when omitted)");

  // wigner
  auto* wig = app.add_subcommand("wigner", "evaluate a Wigner grid from a state spec");
  std::string wig_spec, wig_out;
  std::string wig_conv = "per-irrep-normalized", wig_fold = "sectors";
  bool wig_no_timestamp = false;
  GridOptions wig_grid;
  wig->add_option("--spec", wig_spec, "state spec JSON file")->required();
  wig->add_option("--out", wig_out, "output CSV path")->required();
  wig->add_option("--convention", wig_conv, "literal or per-irrep-normalized")
      ->default_val("per-irrep-normalized");
  wig->add_option("--fold", wig_fold, "mirror-pair handling: sectors, symmetric or upper")
      ->default_val("sectors");
  wig->add_flag("--no-timestamp", wig_no_timestamp, "omit the timestamp comment line");
  add_grid_options(wig, wig_grid);

  // interferometer
  auto* intf = app.add_subcommand("interferometer",
                                  "propagate a state and emit input/output Wigner grids");
  std::string intf_spec, intf_out, intf_route = "covariant";
  std::string intf_conv = "per-irrep-normalized", intf_fold = "sectors";
  double gain = 0.0, pump_phase = 0.0, total_phase = 0.0;
  bool intf_no_timestamp = false;
  GridOptions intf_grid;
  intf->add_option("--spec", intf_spec, "state spec JSON file")->required();
  intf->add_option("--out", intf_out, "output prefix; writes <out>.input.csv and <out>.output.csv")
      ->required();
  intf->add_option("--gain", gain, "OPA gain (tau_g = 2*gain)")->required();
  intf->add_option("--pump-phase", pump_phase, "OPA pump phase")->default_val(0.0);
  intf->add_option("--phase", total_phase, "total interferometer phase Phi")->required();
  intf->add_option("--route", intf_route, "covariant (Moebius) or direct (operator)")
      ->default_val("covariant");
  intf->add_option("--convention", intf_conv, "literal or per-irrep-normalized")
      ->default_val("per-irrep-normalized");
  intf->add_option("--fold", intf_fold, "mirror-pair handling")->default_val("sectors");
  intf->add_flag("--no-timestamp", intf_no_timestamp, "omit the timestamp comment line");
  add_grid_options(intf, intf_grid);

  // verify
  auto* verify = app.add_subcommand("verify", "run oracle-equivalence suites");
  std::string suite = "all", report_path;
  verify->add_option("--suite", suite, "dfunc, kernel, wigner, interferometer or all")
      ->default_val("all");
  verify->add_option("--report", report_path, "JSON report path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (dfunc->parsed())
      return run_dfunc(k_text, mu_text, mu_prime_text, tau_min, tau_to, tau_count, mu_count,
                       dfunc_out);
    if (wig->parsed())
      return run_wigner(wig_spec, wig_grid, wig_conv, wig_fold, wig_out, wig_no_timestamp);
    if (intf->parsed())
      return run_interferometer(intf_spec, intf_grid, intf_conv, intf_fold, gain, pump_phase,
                                total_phase, intf_route, intf_out, intf_no_timestamp);
    if (verify->parsed()) return run_verify(suite, report_path);
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
