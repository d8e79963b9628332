#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tpc/critical_radius.hpp"
#include "tpc/eigensolver.hpp"
#include "tpc/errors.hpp"
#include "tpc/experiments.hpp"
#include "tpc/io.hpp"
#include "tpc/rearrangement.hpp"
#include "tpc/special_functions.hpp"

namespace tpc::cli {

namespace {

using io::format_number;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

double default_tolerance() {
  const char* env = std::getenv("TPC_SOLVER_TOL");
  if (env == nullptr || *env == '\0') return kDefaultSolverTol;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol >= 1e-12))
    throw UsageError(std::string("TPC_SOLVER_TOL: expected a number >= 1e-12, got \"") + env + "\"");
  return tol;
}

RadialProfile read_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--profile: cannot open " + path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return io::parse_profile(text);
}

VolumeSpec volume_for(const RadialProfile& profile, std::optional<double> fraction,
                      std::optional<double> measure) {
  if (fraction && measure) throw UsageError("--fraction and --measure are mutually exclusive");
  if (fraction) return VolumeSpec::from_fraction(profile.dim(), *fraction);
  if (measure) return VolumeSpec(profile.dim(), *measure);
  return VolumeSpec(profile.dim(), profile.high_measure());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("--out: cannot write " + path);
  os << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Principal eigenvalues and rearrangement optimization of two-phase radial conductors",
               "tpc"};
  app.require_subcommand(1);

  double nu = 0.0, x = 0.0;
  auto* bessel = app.add_subcommand("bessel", "Evaluate J_nu(x)");
  bessel->add_option("--nu", nu, "Order nu >= 0")->required();
  bessel->add_option("--x", x, "Argument 0 <= x <= 60")->required();
  bool derivative = false;
  bessel->add_flag("--derivative", derivative, "Evaluate J'_nu(x) instead");

  int m = 1;
  auto* zero = app.add_subcommand("zero", "Positive zero j_{nu,m}");
  zero->add_option("--nu", nu, "Order nu >= 0")->required();
  zero->add_option("--m", m, "Zero index m >= 1")->required();

  int dim = 0;
  auto* rho = app.add_subcommand("rho-n", "Critical radius of the Laplacian ground state");
  rho->add_option("--dim", dim, "Dimension n >= 2")->required();

  std::string profile_path;
  std::optional<double> tol_flag;
  std::string format = "text";
  auto* eigen = app.add_subcommand("eigen", "Principal eigenvalue of a profile");
  eigen->add_option("--profile", profile_path, "Profile JSON file")->required();
  eigen->add_option("--tol", tol_flag, "Relative eigenvalue tolerance");
  eigen->add_option("--out", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));

  std::optional<double> fraction, measure;
  int max_iter = 1;
  auto* improve_cmd = app.add_subcommand("improve", "Rearrangement steps, final profile");
  auto* optimize_cmd = app.add_subcommand("optimize", "Rearrangement iteration, full trace");
  for (auto* cmd : {improve_cmd, optimize_cmd}) {
    cmd->add_option("--profile", profile_path, "Profile JSON file")->required();
    cmd->add_option("--fraction", fraction, "Volume fraction of the high material in (0, 1)");
    cmd->add_option("--measure", measure, "Absolute volume of the high material");
    cmd->add_option("--max-iter", max_iter, "Maximum number of steps")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", tol_flag, "Relative eigenvalue tolerance");
  }
  optimize_cmd->add_option("--out", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* low = app.add_subcommand("lowcontrast", "Low-contrast optimizer from the Laplacian ground state");
  low->add_option("--dim", dim, "Dimension n >= 2")->required();
  low->add_option("--fraction", fraction, "Volume fraction in (0, 1)");
  low->add_option("--measure", measure, "Absolute volume");

  double alpha = 1.0, beta = 1.0;
  auto* counter = app.add_subcommand("counterexample", "Test the centered ball against one rearrangement step");
  counter->add_option("--dim", dim, "Dimension n >= 2")->required();
  counter->add_option("--fraction", fraction, "Volume fraction in (0, 1)");
  counter->add_option("--measure", measure, "Absolute volume");
  counter->add_option("--alpha", alpha, "Low conductivity")->required();
  counter->add_option("--beta", beta, "High conductivity")->required();
  counter->add_option("--tol", tol_flag, "Relative eigenvalue tolerance");

  std::vector<int> dims;
  std::vector<double> fractions, contrasts;
  std::string out_path, json_path;
  unsigned threads = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "Counterexample check over a parameter grid");
  sweep_cmd->add_option("--dims", dims, "Dimensions, comma separated")->required()->delimiter(',');
  sweep_cmd->add_option("--fractions", fractions, "Volume fractions")->required()->delimiter(',');
  sweep_cmd->add_option("--contrasts", contrasts, "beta / alpha values")->required()->delimiter(',');
  sweep_cmd->add_option("--out", out_path, "Output file (.json for JSON, CSV otherwise)");
  sweep_cmd->add_option("--json", json_path, "Additional JSON mirror");
  sweep_cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");
  sweep_cmd->add_option("--tol", tol_flag, "Relative eigenvalue tolerance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    const double tol = tol_flag ? *tol_flag : default_tolerance();
    auto volume_from_dim = [&](Dimension d) {
      if (fraction && measure) throw UsageError("--fraction and --measure are mutually exclusive");
      if (fraction) return VolumeSpec::from_fraction(d, *fraction);
      if (measure) return VolumeSpec(d, *measure);
      throw UsageError("--fraction or --measure is required");
    };

    if (*bessel) {
      out << format_number(derivative ? special::bessel_j_prime(nu, x) : special::bessel_j(nu, x))
          << '\n';
    } else if (*zero) {
      out << format_number(special::bessel_zero(nu, m)) << '\n';
    } else if (*rho) {
      const CriticalPoint cp = critical_point(Dimension(dim));
      out << "rho_n " << format_number(cp.rho) << '\n'
          << "t_star " << format_number(cp.t_star) << '\n'
          << "mu " << format_number(cp.mu) << '\n';
    } else if (*eigen) {
      const EigenSolution sol = principal_eigenvalue(read_profile(profile_path), tol);
      if (format == "csv") out << io::solution_csv(sol);
      else if (format == "json") out << io::solution_json(sol).dump(2) << '\n';
      else out << "lambda " << format_number(sol.lambda) << '\n';
    } else if (*improve_cmd) {
      const RadialProfile initial = read_profile(profile_path);
      const VolumeSpec spec = volume_for(initial, fraction, measure);
      RadialProfile current = initial;
      double lambda_before = 0.0;
      double threshold = 0.0;
      for (int i = 0; i < max_iter; ++i) {
        ImproveResult step = improve(current, spec, tol);
        if (i == 0) lambda_before = step.before.lambda;
        threshold = step.threshold.t;
        current = std::move(step.profile);
      }
      const double lambda_after = principal_eigenvalue(current, tol).lambda;
      nlohmann::json doc = {{"lambda_before", io::round15(lambda_before)},
                            {"lambda_after", io::round15(lambda_after)},
                            {"threshold", io::round15(threshold)},
                            {"steps", max_iter},
                            {"high_region", io::radial_set_json(current.high_region())},
                            {"profile", io::profile_to_json(current)}};
      out << doc.dump(2) << '\n';
    } else if (*optimize_cmd) {
      const RadialProfile initial = read_profile(profile_path);
      const VolumeSpec spec = volume_for(initial, fraction, measure);
      const int iterations = optimize_cmd->count("--max-iter") ? max_iter : 50;
      const ImprovementTrace trace = optimize(initial, spec, iterations, 1e-8, tol);
      if (format == "csv") {
        out << io::trace_csv(trace);
      } else {
        nlohmann::json doc = {{"converged", trace.converged},
                              {"iterations", trace.iterations},
                              {"steps", io::trace_json(trace)}};
        out << doc.dump(2) << '\n';
      }
    } else if (*low) {
      const Dimension d(dim);
      const VolumeSpec spec = volume_from_dim(d);
      out << io::low_contrast_json(low_contrast_optimizer(d, spec), spec).dump(2) << '\n';
    } else if (*counter) {
      const Dimension d(dim);
      const VolumeSpec spec = volume_from_dim(d);
      out << io::report_json(check_counterexample(d, spec, alpha, beta, tol)).dump(2) << '\n';
    } else if (*sweep_cmd) {
      const std::vector<SweepRow> rows = sweep(dims, fractions, contrasts, tol, threads);
      if (out_path.empty()) {
        out << io::sweep_csv(rows);
      } else if (ends_with(out_path, ".json")) {
        write_file(out_path, io::sweep_json(rows).dump(2) + "\n");
      } else {
        write_file(out_path, io::sweep_csv(rows));
      }
      if (!json_path.empty()) write_file(json_path, io::sweep_json(rows).dump(2) + "\n");
      std::size_t failed = 0;
      for (const SweepRow& row : rows) failed += row.report ? 0 : 1;
      if (!out_path.empty())
        out << rows.size() << " rows written to " << out_path << " (" << failed << " failed)\n";
    }
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::range_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace tpc::cli
