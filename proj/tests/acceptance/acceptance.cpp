// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "random_profiles.hpp"
#include "tpc/critical_radius.hpp"
#include "tpc/eigensolver.hpp"
#include "tpc/experiments.hpp"
#include "tpc/io.hpp"
#include "tpc/rearrangement.hpp"
#include "tpc/special_functions.hpp"

using namespace tpc;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

double mu_squared(int n) {
  const double mu = special::bessel_zero(0.5 * n - 1.0, 1);
  return mu * mu;
}

VolumeSpec ball_volume(int n, double rho) {
  const Dimension d(n);
  return VolumeSpec(d, unit_ball_volume(d) * std::pow(rho, n));
}

Outcome bessel_suite() {
  double closed = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double x = 0.1 + (20.0 - 0.1) * i / 199.0;
    closed = std::max(closed, std::abs(special::bessel_j(0.5, x) - oracle::j_half(x)));
    closed = std::max(closed, std::abs(special::bessel_j(1.5, x) - oracle::j_three_halves(x)));
    closed = std::max(closed, std::abs(special::bessel_j(2.5, x) - oracle::j_five_halves(x)));
  }
  double recurrence = 0.0;
  for (double nu = 1.0; nu <= 6.0; nu += 0.5)
    for (double x = 0.25; x <= 40.0; x += 0.25) {
      const double r = special::bessel_j(nu - 1, x) + special::bessel_j(nu + 1, x) -
                       2 * nu / x * special::bessel_j(nu, x);
      recurrence = std::max(recurrence, std::abs(r));
    }
  double derivative = 0.0;
  const double h = 1e-5;
  for (double nu : {0.0, 0.5, 1.0, 2.5, 4.0})
    for (double x = 0.5; x <= 20.0; x += 0.25) {
      auto f = [&](double t) { return std::pow(t, -nu) * special::bessel_j(nu, t); };
      const double fd = (f(x + h) - f(x - h)) / (2 * h);
      derivative = std::max(derivative, std::abs(fd + std::pow(x, -nu) * special::bessel_j(nu + 1, x)));
    }
  return {closed <= 1e-11 && recurrence <= 1e-12 && derivative <= 1e-7,
          fmt("closed form %.2e, recurrence %.2e, derivative identity %.2e", closed, recurrence,
              derivative)};
}

Outcome zero_suite() {
  double multiples = 0.0;
  for (int m = 1; m <= 5; ++m) multiples = std::max(multiples, std::abs(special::bessel_zero(0.5, m) - m * pi));
  bool interlaced = true;
  for (double nu = 0.0; nu <= 5.0; nu += 0.5)
    for (int m = 1; m <= 4; ++m)
      interlaced = interlaced && special::bessel_zero(nu, m) < special::bessel_zero(nu + 1, m) &&
                   special::bessel_zero(nu + 1, m) < special::bessel_zero(nu, m + 1);
  const double j01 = oracle::bisect([](double x) { return oracle::series_j(0.0, x); }, 2.0, 3.0);
  const double err01 = std::abs(special::bessel_zero(0.0, 1) - j01);
  return {multiples <= 1e-10 && interlaced && err01 <= 1e-10,
          fmt("j_{1/2,m} error %.2e, j_{0,1} error %.2e, interlacing ", multiples, err01) +
              (interlaced ? "ok" : "violated")};
}

Outcome cross_product_suite() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> order(0.0, 4.0);
  std::uniform_real_distribution<double> arg(0.5, 8.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const special::CrossProduct c = special::cross_product_check(order(rng), order(rng), arg(rng));
    worst = std::max(worst, std::abs(c.lhs - c.rhs) / (1.0 + std::abs(c.rhs)));
  }
  return {worst <= 1e-8, fmt("worst |lhs - rhs| / (1 + |rhs|) = %.2e over 50 triples", worst)};
}

Outcome homogeneous_suite() {
  double worst = 0.0;
  for (int n = 2; n <= 5; ++n) {
    const double target = n == 3 ? pi * pi : mu_squared(n);
    const double lambda = principal_eigenvalue(RadialProfile::homogeneous(Dimension(n), 1.0)).lambda;
    worst = std::max(worst, std::abs(lambda - target) / target);
  }
  return {worst <= 1e-8, fmt("worst relative error %.2e for n = 2..5", worst)};
}

Outcome structural_suite() {
  std::mt19937_64 rng(7);
  double flux = 0.0, rayleigh = 0.0, scaling = 0.0;
  bool bracketed = true;
  for (int n = 2; n <= 4; ++n)
    for (int i = 0; i < 20; ++i) {
      const RadialProfile p = testing_support::random_profile(rng, n);
      const EigenSolution sol = principal_eigenvalue(p);
      for (double r : p.interfaces())
        flux = std::max(flux, std::abs(p.conductivity_at(r, Side::left) * sol.curve.slope(r, Side::left) -
                                       p.conductivity_at(r, Side::right) * sol.curve.slope(r, Side::right)));
      bracketed = bracketed && sol.lambda >= p.alpha() * mu_squared(n) &&
                  sol.lambda <= p.beta() * mu_squared(n);
      rayleigh = std::max(rayleigh, std::abs(rayleigh_quotient(p, sol) - sol.lambda) / sol.lambda);
      for (double c : {0.5, 2.0, 10.0})
        scaling = std::max(scaling,
                           std::abs(principal_eigenvalue(p.scaled(c)).lambda - c * sol.lambda) / (c * sol.lambda));
    }
  return {flux <= 1e-8 && bracketed && rayleigh <= 1e-6 && scaling <= 1e-9,
          fmt("flux jump %.2e, Rayleigh mismatch %.2e, scaling error %.2e", flux, rayleigh, scaling) +
              (bracketed ? ", bracket ok" : ", bracket violated")};
}

Outcome descent_suite() {
  std::mt19937_64 rng(11);
  const double tol = kDefaultSolverTol;
  double worst_rise = -INFINITY;
  int changed = 0, strict = 0;
  for (int n = 2; n <= 4; ++n)
    for (int i = 0; i < 20; ++i) {
      const RadialProfile p = testing_support::random_profile(rng, n);
      const VolumeSpec spec(p.dim(), p.high_measure());
      const ImproveResult step = improve(p, spec, tol);
      const double before = step.before.lambda;
      const double after = principal_eigenvalue(step.profile, tol).lambda;
      worst_rise = std::max(worst_rise, (after - before) / before);
      if (symmetric_difference_measure(p.high_region(), step.profile.high_region()) >
          kSliverWidth * unit_ball_volume(p.dim())) {
        ++changed;
        if (after < before * (1 - 10 * tol)) ++strict;
      }
    }

  // At a fixed eigenfunction no random set of the same volume may beat the
  // thresholded set on the energy.
  int beaten = 0;
  const RadialProfile p = testing_support::random_profile(rng, 3);
  const VolumeSpec spec(p.dim(), p.high_measure());
  const EigenSolution sol = principal_eigenvalue(p);
  const ThresholdResult t = level_threshold(sol, spec);
  const double best = rayleigh_quotient(RadialProfile::from_high_region(p.alpha(), p.beta(), t.set), sol);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int i = 0; i < 100; ++i) {
    const int k = 1 + i % 4;
    std::vector<double> lengths(k), gaps(k + 1);
    for (double& x : lengths) x = u(rng);
    for (double& x : gaps) x = u(rng);
    double ls = 0.0, gs = 0.0;
    for (double x : lengths) ls += x;
    for (double x : gaps) gs += x;
    std::vector<Interval> parts;
    double v = 0.0;
    for (int j = 0; j < k; ++j) {
      v += gaps[j] / gs * (1 - spec.fraction());
      const double lo = v;
      v += lengths[j] / ls * spec.fraction();
      parts.push_back({std::cbrt(lo), std::min(1.0, std::cbrt(v))});
    }
    const RadialSet candidate(p.dim(), parts);
    const double e = rayleigh_quotient(RadialProfile::from_high_region(p.alpha(), p.beta(), candidate), sol);
    if (e < best * (1 - 1e-12)) ++beaten;
  }
  return {worst_rise <= 10 * tol && strict == changed && beaten == 0,
          fmt("max relative rise %.2e, strict decrease in %.0f of %.0f changed sets", worst_rise, strict,
              changed) +
              ", random sets beating the threshold: " + std::to_string(beaten) + "/100"};
}

Outcome counterexample_suite() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 5; ++n) {
    const CounterexampleReport r = check_counterexample(Dimension(n), ball_volume(n, 0.9), 1.0, 1.05);
    const double gap = r.gap() / r.lambda_ball;
    const bool annulus = r.improved_set.intervals().size() >= 2 && r.improved_set.touches_boundary();
    ok = ok && r.rho > r.rho_n && r.verdict == Verdict::refuted && gap > 1e-6 && annulus &&
         r.y2_prime_at_1 < r.z;
    detail += fmt("n=%.0f gap %.2e |y2'(1)|/z %.3f; ", n, gap, r.y2_prime_at_1 / r.z);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && seconds <= 300.0;
  return {ok, detail + fmt("%.2f s", seconds)};
}

Outcome mechanism_suite() {
  double prev1 = INFINITY, prev_rho = INFINITY;
  bool monotone = true, gap_ok = true;
  std::string detail;
  int index = 0;
  for (double contrast : {1.1, 1.01, 1.001}) {
    const CounterexampleReport r = check_counterexample(Dimension(3), ball_volume(3, 0.9), 1.0, contrast);
    const double e1 = std::abs(r.y2_prime_at_1 - r.psi_prime_at_1);
    const double erho = std::abs(r.y2_prime_at_rho - r.psi_prime_at_rho);
    monotone = monotone && e1 < prev1 && erho < prev_rho;
    prev1 = e1;
    prev_rho = erho;
    if (index++ > 0) gap_ok = gap_ok && std::abs(r.y2_prime_at_rho - r.y2_prime_at_1) > r.d_n / 2;
    detail += fmt("contrast %g: dev(1) %.2e dev(rho) %.2e; ", contrast, e1, erho);
  }
  return {monotone && gap_ok, detail + (gap_ok ? "gap > d_n/2 holds" : "gap > d_n/2 fails")};
}

Outcome low_contrast_suite() {
  bool ok = true;
  std::string detail;
  for (int n : {2, 3}) {
    const Dimension d(n);
    const VolumeSpec spec = VolumeSpec::from_fraction(d, 0.5);
    const ImprovementTrace trace =
        optimize(ball_profile(d, spec, 1.0, 1.01), spec);
    const LowContrastResult low = low_contrast_optimizer(d, spec);
    const double diff =
        symmetric_difference_measure(trace.fixed_point.high_region(), low.threshold.set) / unit_ball_volume(d);
    const nlohmann::json doc = io::low_contrast_json(low, spec);
    const bool reported = doc.contains("critical_ball_measure") && doc.contains("boundary_contact_measure");
    ok = ok && diff <= 0.05 && reported;
    detail += fmt("n=%.0f difference %.2e omega_n, |B(rho_n)| %.4f ", n, diff, low.critical_ball_measure) +
              fmt("|B(a*)| %.4f; ", low.boundary_contact_measure);
  }
  return {ok, detail};
}

Outcome cli_suite() {
  std::mt19937_64 rng(5);
  bool round_trip = true;
  for (int i = 0; i < 50; ++i) {
    const RadialProfile p = testing_support::random_profile(rng, 2 + i % 4);
    const std::string text = io::serialize_profile(p);
    round_trip = round_trip && io::parse_profile(text) == p && io::serialize_profile(io::parse_profile(text)) == text;
  }
  const auto dir = std::filesystem::temp_directory_path() / ("tpc_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "ball.json").string();
  std::ofstream(path) << io::serialize_profile(ball_profile(Dimension(3), ball_volume(3, 0.9), 1.0, 1.05));

  bool deterministic = true;
  const std::vector<std::vector<std::string>> commands = {
      {"eigen", "--profile", path, "--out", "csv"},
      {"eigen", "--profile", path, "--out", "json"},
      {"optimize", "--profile", path},
      {"lowcontrast", "--dim", "3", "--fraction", "0.5"},
      {"counterexample", "--dim", "3", "--fraction", "0.729", "--alpha", "1", "--beta", "1.05"},
      {"sweep", "--dims", "2,3", "--fractions", "0.3,0.8", "--contrasts", "1.01,1.05"}};
  for (const auto& args : commands) {
    std::ostringstream a, b, ea, eb;
    const int ca = cli::run(args, a, ea);
    const int cb = cli::run(args, b, eb);
    deterministic = deterministic && ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty();
  }
  std::filesystem::remove_all(dir);
  return {round_trip && deterministic,
          std::string("round trip ") + (round_trip ? "exact" : "mismatch") + " on 50 profiles, " +
              std::to_string(commands.size()) + " commands " +
              (deterministic ? "byte identical" : "differ between runs")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Bessel oracle suite", bessel_suite},
      {"zero suite", zero_suite},
      {"cross-product identity", cross_product_suite},
      {"homogeneous eigenvalue", homogeneous_suite},
      {"structural invariants", structural_suite},
      {"descent property", descent_suite},
      {"counterexample reproduction", counterexample_suite},
      {"mechanism limits", mechanism_suite},
      {"low-contrast consistency", low_contrast_suite},
      {"CLI round trip and determinism", cli_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    while (!o.detail.empty() && (o.detail.back() == ' ' || o.detail.back() == ';')) o.detail.pop_back();
    failures += o.pass ? 0 : 1;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
