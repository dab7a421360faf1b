#include <doctest.h>

#include <sstream>

#include "magsym/dynamics.hpp"
#include "magsym/flows.hpp"
#include "magsym/generators.hpp"

using namespace magsym;

namespace {

const PhysicalConstants kUnit;

GaugePotential unit_symmetric() {
  return symmetric_gauge({Rational(0), Rational(0), Rational(1)});
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("hamiltonian values") {
  GaugePotential zero;
  zero.kind = FieldKind::polynomial;
  CHECK(hamiltonian({{0, 0, 0}, {1, 0, 0}}, zero, kUnit) == doctest::Approx(0.5));

  auto L = landau_gauge(Rational(1), 3);
  CHECK(hamiltonian({{1, 0, 0}, {1, 1, 0}}, L, kUnit) == doctest::Approx(0.5));

  // Same (x, pi) in two gauges gives the same energy.
  auto S = unit_symmetric();
  const Vec3 x{1.0, 2.0, 0.5};
  const Vec3 pi{0.3, -0.4, 0.2};
  PhasePoint zs{x, pi + 1.0 * S.evaluate(x)};
  PhasePoint zl{x, pi + 1.0 * L.evaluate(x)};
  CHECK(hamiltonian(zs, S, kUnit) == doctest::Approx(hamiltonian(zl, L, kUnit)).epsilon(1e-14));
}

TEST_CASE("field-free motion is a straight line") {
  GaugePotential zero;
  zero.kind = FieldKind::polynomial;
  PhasePoint start{{0.1, 0.2, 0.3}, {1.0, -0.5, 0.25}};
  Trajectory traj = integrate_trajectory(start, zero, kUnit, 2.0, 0.01);
  const PhasePoint& end = traj.states.back();
  CHECK(end.x.x1 == doctest::Approx(0.1 + 2.0).epsilon(1e-12));
  CHECK(end.x.x2 == doctest::Approx(0.2 - 1.0).epsilon(1e-12));
  CHECK(end.x.x3 == doctest::Approx(0.3 + 0.5).epsilon(1e-12));
  CHECK(norm(end.p - start.p) <= 1e-12);
  CHECK_THROWS_AS(integrate_trajectory(start, zero, kUnit, 1.0), std::invalid_argument);
}

TEST_CASE("cyclotron orbit has the textbook radius and period") {
  auto A = unit_symmetric();
  // pi = (1,0,0) from the origin: radius m|pi|c/(eB) = 1, period 2 pi.
  PhasePoint start{{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
  const double T = cyclotron_period(kUnit, 1.0);
  CHECK(T == doctest::Approx(2.0 * 3.14159265358979323846));
  Trajectory traj = integrate_trajectory(start, A, kUnit, T);
  CHECK(phase_distance(traj.states.back(), start) <= 1e-8);

  // Maximum excursion is the diameter.
  double max_dist = 0.0;
  for (const PhasePoint& z : traj.states)
    max_dist = std::max(max_dist, norm(z.x - start.x));
  CHECK(max_dist == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("conserved monitors stay flat over ten periods") {
  auto A = unit_symmetric();
  PhasePoint start{{1.0, 0.0, 0.0}, {1.0, 0.5, 0.0}};
  const double T = 10.0 * cyclotron_period(kUnit, 1.0);
  Trajectory traj = integrate_trajectory(start, A, kUnit, T, T / 20000.0);

  NumericObservable H{[&](const PhasePoint& z) { return hamiltonian(z, A, kUnit); }, nullptr, "H"};
  CHECK(drift(traj, H) <= 1e-8);
  for (int k = 1; k <= 3; ++k)
    CHECK(drift(traj, passive_translation_generator(A, k, kUnit).value()) <= 1e-8);
  CHECK(drift(traj, passive_rotation_generator(A, 3, kUnit).value()) <= 1e-8);

  // Negative control: the canonical momentum is not conserved.
  CHECK(drift(traj, obs::p(0)) >= 0.1);
}

TEST_CASE("dipole orbit conserves H and L3 while translations are refused") {
  auto A = dipole_potential({0.0, 0.0, 1.0});
  PhasePoint start{{2.0, 0.0, 0.0}, {0.0, 0.1, 0.0}};
  Trajectory traj = integrate_trajectory(start, A, kUnit, 50.0);
  NumericObservable H{[&](const PhasePoint& z) { return hamiltonian(z, A, kUnit); }, nullptr, "H"};
  CHECK(drift(traj, H) <= 1e-8);
  CHECK(drift(traj, free_angular_momentum(3)) <= 1e-7);
  for (int k = 1; k <= 3; ++k)
    CHECK_FALSE(passive_translation_generator(A, k, kUnit).exists());
}

TEST_CASE("the force law holds along trajectories") {
  auto A = gradient_gauge(Rational(1), Rational(1, 2));
  MagneticField B = curl(A);
  PhasePoint start{{0.5, 0.0, 0.0}, {0.3, 0.4, 0.1}};
  const double dt = 0.002;
  Trajectory traj = integrate_trajectory(start, A, kUnit, 4.0, dt);
  double worst = 0.0;
  for (size_t n = 1; n + 1 < traj.size(); ++n) {
    Vec3 dpi = (kinematical_momentum(traj.states[n + 1], A, kUnit) -
                kinematical_momentum(traj.states[n - 1], A, kUnit)) /
               (2.0 * dt);
    Vec3 v = kinematical_momentum(traj.states[n], A, kUnit);
    Vec3 lorentz = cross(v, B.evaluate(traj.states[n].x));
    worst = std::max(worst, norm(dpi - lorentz));
  }
  CHECK(worst <= 10.0 * dt * dt);
}

TEST_CASE("trajectory CSV export") {
  auto A = unit_symmetric();
  Trajectory traj = integrate_trajectory({{0, 0, 0}, {1, 0, 0}}, A, kUnit, 0.1, 0.05);
  std::ostringstream out;
  write_csv(traj, A, {to_numeric(obs::p(0), "p1")}, out);
  const std::string text = out.str();
  CHECK(text.rfind("t,x1,x2,x3,p1,p2,p3,pi1,pi2,pi3,H,p1\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
}

TEST_CASE("time steps and divergence guards") {
  auto A = unit_symmetric();
  CHECK_THROWS_AS(integrate_trajectory({{0, 0, 0}, {1, 0, 0}}, A, kUnit, -1.0, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(cyclotron_period(kUnit, 0.0), std::invalid_argument);
}

}  // TEST_SUITE
