#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "random_profiles.hpp"
#include "tpc/critical_radius.hpp"
#include "tpc/eigensolver.hpp"
#include "tpc/errors.hpp"
#include "tpc/special_functions.hpp"

using namespace tpc;
using std::numbers::pi;

namespace {

double mu_squared(int n) {
  const double mu = special::bessel_zero(0.5 * n - 1.0, 1);
  return mu * mu;
}

RadialProfile two_layer(int n, double rho, double alpha, double beta, Material inner) {
  const Material outer = inner == Material::high ? Material::low : Material::high;
  return RadialProfile(Dimension(n), alpha, beta, {{rho, inner}, {1.0, outer}});
}

double flux_jump(const EigenSolution& sol) {
  double worst = 0.0;
  for (double r : sol.profile.interfaces()) {
    const double inner = sol.profile.conductivity_at(r, Side::left) * sol.curve.slope(r, Side::left);
    const double outer = sol.profile.conductivity_at(r, Side::right) * sol.curve.slope(r, Side::right);
    worst = std::max(worst, std::abs(inner - outer));
  }
  return worst;
}

}  // namespace

TEST_CASE("homogeneous eigenvalues are c j^2") {
  for (int n = 2; n <= 5; ++n) {
    for (double c : {1.0, 2.5}) {
      const EigenSolution sol = principal_eigenvalue(RadialProfile::homogeneous(Dimension(n), c));
      CHECK(sol.lambda == doctest::Approx(c * mu_squared(n)).epsilon(1e-8));
    }
  }
  SUBCASE("n = 3 is pi^2") {
    const EigenSolution sol = principal_eigenvalue(RadialProfile::homogeneous(Dimension(3), 1.0));
    CHECK(std::abs(sol.lambda - pi * pi) < 1e-8 * pi * pi);
  }
  SUBCASE("n = 2 is the squared bisection zero") {
    const double j = oracle::bisect([](double x) { return oracle::series_j(0.0, x); }, 2.0, 3.0);
    const EigenSolution sol = principal_eigenvalue(RadialProfile::homogeneous(Dimension(2), 1.0));
    CHECK(sol.lambda == doctest::Approx(j * j).epsilon(1e-8));
  }
}

TEST_CASE("homogeneous eigenfunction matches the ground state") {
  const EigenSolution sol = principal_eigenvalue(RadialProfile::homogeneous(Dimension(3), 1.0));
  const GroundState gs = ground_state(Dimension(3));
  for (double r = 0.0; r <= 1.0; r += 0.01) {
    CHECK(std::abs(sol.curve.value(r) - psi(gs, r)) < 1e-7);
    CHECK(std::abs(gradient_magnitude(sol, r) - psi_prime_abs(gs, r)) < 1e-6);
  }
  CHECK(gradient_magnitude(sol, 0.0) == 0.0);
  CHECK(gradient_magnitude(sol, 1.0) == doctest::Approx(psi_prime_abs(gs, 1.0)).epsilon(1e-7));
  CHECK(rayleigh_quotient(sol.profile, sol) == doctest::Approx(pi * pi).epsilon(1e-8));
  CHECK(l2_norm_squared(sol) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("shoot") {
  const RadialProfile p = RadialProfile::homogeneous(Dimension(3), 1.0);
  CHECK(std::abs(shoot(p, pi * pi).boundary_value) < 1e-8);
  const ShotResult low = shoot(p, 0.5 * pi * pi);
  CHECK(low.boundary_value > 0.0);
  CHECK(low.interior_sign_changes == 0);
  const ShotResult high = shoot(p, 1.5 * pi * pi);
  CHECK(high.boundary_value < 0.0);
  CHECK(high.interior_sign_changes == 1);
  // y(1) for n = 3 is sin(k) / k with k = sqrt(lambda).
  const double k = std::sqrt(0.5) * pi;
  CHECK(std::abs(low.boundary_value - std::sin(k) / k) < 1e-9);
}

TEST_CASE("principal_eigenvalue preconditions") {
  const RadialProfile p = RadialProfile::homogeneous(Dimension(2), 1.0);
  CHECK_THROWS_AS(principal_eigenvalue(p, 1e-13), std::invalid_argument);
  CHECK_THROWS_AS(principal_eigenvalue(p, 0.0), std::invalid_argument);
  CHECK_NOTHROW(principal_eigenvalue(p, 1e-12));
}

TEST_CASE("Rayleigh bound for a tiny contrast") {
  const RadialProfile p = two_layer(3, 0.6, 1.0, 1.0001, Material::high);
  const EigenSolution sol = principal_eigenvalue(p);
  CHECK(sol.lambda >= pi * pi);
  CHECK(sol.lambda <= 1.0001 * pi * pi);
}

TEST_CASE("structural invariants on random profiles") {
  std::mt19937_64 rng(2024);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const RadialProfile p = testing_support::random_profile(rng, n);
      const EigenSolution sol = principal_eigenvalue(p);
      CAPTURE(n);
      CAPTURE(trial);
      CHECK(flux_jump(sol) <= 1e-8);
      CHECK(sol.lambda >= p.alpha() * mu_squared(n));
      CHECK(sol.lambda <= p.beta() * mu_squared(n));
      CHECK(rayleigh_quotient(p, sol) == doctest::Approx(sol.lambda).epsilon(1e-6));
      CHECK(l2_norm_squared(sol) == doctest::Approx(1.0).epsilon(1e-9));
      for (const EigenSample& s : sol.samples()) CHECK(s.y >= -1e-9);
      CHECK(std::abs(sol.curve.value(1.0)) < 1e-9);
      if (trial % 5 == 0) {
        for (double c : {0.5, 2.0, 10.0})
          CHECK(principal_eigenvalue(p.scaled(c)).lambda ==
                doctest::Approx(c * sol.lambda).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("raising either conductivity does not lower lambda") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 3;
    const RadialProfile p = testing_support::random_profile(rng, n);
    const double base = principal_eigenvalue(p).lambda;
    const RadialProfile more_beta(p.dim(), p.alpha(), p.beta() * 1.2, p.layers());
    const RadialProfile more_alpha(p.dim(), p.alpha() * 1.1, p.beta() * 1.2, p.layers());
    CHECK(principal_eigenvalue(more_beta).lambda >= base * (1 - 1e-10));
    CHECK(principal_eigenvalue(more_alpha).lambda >= base * (1 - 1e-10));
  }
}

TEST_CASE("moving the interface outward with high inside raises lambda") {
  double previous = 0.0;
  for (double rho : {0.2, 0.4, 0.6, 0.8}) {
    const double lambda = principal_eigenvalue(two_layer(2, rho, 1.0, 2.0, Material::high)).lambda;
    CHECK(lambda > previous);
    previous = lambda;
  }
}

TEST_CASE("gradient jumps by beta / alpha across an interface") {
  const double rho = 0.7;
  const EigenSolution sol = principal_eigenvalue(two_layer(3, rho, 1.0, 1.5, Material::high));
  const double inner = gradient_magnitude(sol, rho, Side::left);
  const double outer = gradient_magnitude(sol, rho, Side::right);
  CHECK(outer / inner == doctest::Approx(1.5).epsilon(1e-8));
  const auto samples = sol.samples();
  int hits = 0;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i)
    if (samples[i].r == rho && samples[i + 1].r == rho) {
      ++hits;
      CHECK(samples[i].sigma == 1.5);
      CHECK(samples[i + 1].sigma == 1.0);
    }
  CHECK(hits == 1);
}

TEST_CASE("homogeneous limit of the ball profile") {
  const Dimension d(3);
  double previous = INFINITY;
  for (double contrast : {1.1, 1.01, 1.001}) {
    const double err = std::abs(principal_eigenvalue(two_layer(3, 0.9, 1.0, contrast, Material::high)).lambda - pi * pi);
    CHECK(err < previous);
    previous = err;
  }
  SUBCASE("eigenfunction gradient converges to psi'") {
    const EigenSolution sol = principal_eigenvalue(two_layer(3, 0.9, 1.0, 1.001, Material::high));
    const GroundState gs = ground_state(d);
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double r = i / 1000.0;
      worst = std::max(worst, std::abs(gradient_magnitude(sol, r) - psi_prime_abs(gs, r)));
    }
    CHECK(worst <= 0.01);
  }
}

TEST_CASE("rayleigh_quotient is linear in the conductivities") {
  const RadialProfile p = two_layer(2, 0.5, 1.0, 3.0, Material::low);
  const EigenSolution sol = principal_eigenvalue(p);
  const double q = rayleigh_quotient(p, sol);
  CHECK(rayleigh_quotient(p.scaled(4.0), sol) == doctest::Approx(4.0 * q).epsilon(1e-12));
  CHECK(q >= p.alpha() * mu_squared(2));
}
