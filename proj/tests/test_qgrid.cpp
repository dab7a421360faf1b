#include <doctest.h>

#include <cmath>
#include <sstream>

#include "magsym/qgrid.hpp"

using namespace magsym;
using namespace magsym::qgrid;

namespace {

const PhysicalConstants kUnit;

GridSpec centered_grid(int n, double h) {
  const double half = 0.5 * (n - 1) * h;
  return {n, h, {-half, -half}};
}

Wavefunction2D standard_packet(double sigma = 1.0, std::array<double, 2> k0 = {0.0, 0.0}) {
  return gaussian_packet(centered_grid(256, 0.1), {0.0, 0.0}, sigma, k0);
}

}  // namespace

TEST_SUITE("qgrid") {

TEST_CASE("gaussian packet moments") {
  Wavefunction2D psi = gaussian_packet(centered_grid(256, 0.1), {0.35, -0.75}, 1.0, {0.8, -0.4});
  CHECK(std::abs(psi.norm() - 1.0) <= 1e-12);
  auto x = mean_position(psi);
  CHECK(std::abs(x[0] - 0.35) <= 0.1);
  CHECK(std::abs(x[1] + 0.75) <= 0.1);
  auto p = mean_momentum(psi, kUnit);
  CHECK(std::abs(p[0] - 0.8) <= 1e-6);
  CHECK(std::abs(p[1] + 0.4) <= 1e-6);
}

TEST_CASE("packet support must respect the grid") {
  CHECK_THROWS_AS(gaussian_packet(centered_grid(64, 0.1), {0.0, 0.0}, 1.0, {0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gaussian_packet(centered_grid(256, 0.1), {12.0, 0.0}, 1.0, {0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gaussian_packet(centered_grid(256, 0.1), {0.0, 0.0}, -1.0, {0, 0}),
                  std::invalid_argument);
}

TEST_CASE("field-free translation is a pure sample shift") {
  Wavefunction2D psi = standard_packet();
  Wavefunction2D moved = translate_passive(psi, {7, -3}, 0.0, kUnit);
  CHECK(std::abs(moved.at(130, 120).real() - psi.at(123, 123).real()) <= 1e-15);
  CHECK(std::abs(moved.norm() - 1.0) <= 1e-12);
  Wavefunction2D active = translate_active(psi, {7, -3}, 0.0, kUnit);
  CHECK(std::abs(inner_abs(moved, active) - 1.0) <= 1e-12);
}

TEST_CASE("translations preserve the norm and invert up to a global phase") {
  Wavefunction2D psi = standard_packet();
  for (Family family : {Family::passive, Family::active}) {
    auto T = [&](const Wavefunction2D& w, const LatticeShift& s) {
      return family == Family::passive ? translate_passive(w, s, 1.0, kUnit)
                                       : translate_active(w, s, 1.0, kUnit);
    };
    Wavefunction2D forth = T(psi, {10, 0});
    CHECK(std::abs(forth.norm() - 1.0) <= 1e-12);
    Wavefunction2D back = T(forth, {-10, 0});
    CHECK(inner_abs(back, psi) >= 1.0 - 1e-12);
  }
}

TEST_CASE("kinematical momentum expectation is invariant under passive translations") {
  Wavefunction2D psi = standard_packet(1.0, {0.5, 0.2});
  auto before = mean_kinematical_momentum(psi, 1.0, kUnit);
  Wavefunction2D moved = translate_passive(psi, {10, 5}, 1.0, kUnit);
  auto after = mean_kinematical_momentum(moved, 1.0, kUnit);
  CHECK(std::abs(after[0] - before[0]) <= 1e-8);
  CHECK(std::abs(after[1] - before[1]) <= 1e-8);
}

TEST_CASE("ray phase on the standard grid") {
  Wavefunction2D psi = standard_packet();
  const LatticeShift a{10, 0}, b{0, 10};
  ComposePhaseResult res = compose_phase(psi, a, b, 1.0, kUnit, Family::passive);
  CHECK(res.comparable);
  CHECK(res.fidelity >= 1.0 - 1e-12);
  CHECK(std::abs(res.phi - 0.5) <= 1e-10);

  ComposePhaseResult swapped = compose_phase(psi, b, a, 1.0, kUnit, Family::passive);
  CHECK(std::abs(swapped.phi + res.phi) <= 1e-10);

  ComposePhaseResult parallel = compose_phase(psi, a, {5, 0}, 1.0, kUnit, Family::passive);
  CHECK(std::abs(parallel.phi) <= 1e-10);
}

TEST_CASE("active composition carries the opposite phase") {
  Wavefunction2D psi = standard_packet();
  ComposePhaseResult res = compose_phase(psi, {10, 0}, {0, 10}, 1.0, kUnit, Family::active);
  CHECK(res.fidelity >= 1.0 - 1e-12);
  CHECK(std::abs(res.phi + 0.5) <= 1e-10);
}

TEST_CASE("cocycle consistency of the composition phase") {
  Wavefunction2D psi = standard_packet(0.8);
  const LatticeShift a{6, 0}, b{0, 5}, c{4, 3};
  auto phi = [&](const LatticeShift& u, const LatticeShift& v) {
    return compose_phase(psi, u, v, 1.0, kUnit, Family::passive).phi;
  };
  const double lhs = phi(a, b) + phi(a + b, c);
  const double rhs = phi(b, c) + phi(a, b + c);
  CHECK(std::abs(lhs - rhs) <= 1e-9);
}

TEST_CASE("phase equals the flux through the translation triangle") {
  Wavefunction2D psi = standard_packet();
  const double B = 1.0;
  ComposePhaseResult res = compose_phase(psi, {10, 0}, {0, 10}, B, kUnit, Family::passive);
  const double flux = triangle_flux([B](double, double) { return B; }, {1.0, 0.0}, {0.0, 1.0});
  CHECK(flux == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(res.phi - flux) <= 1e-9);
}

TEST_CASE("margin rule refuses leaking packets and oversized shifts") {
  Wavefunction2D wide = gaussian_packet(centered_grid(256, 0.1), {0.0, 0.0}, 1.9, {0, 0});
  CHECK_THROWS_AS(translate_passive(wide, {30, 0}, 1.0, kUnit), std::runtime_error);
  Wavefunction2D psi = standard_packet();
  CHECK_THROWS_AS(translate_passive(psi, {64, 0}, 1.0, kUnit), std::invalid_argument);
  CHECK(psi.margin_peak_ratio(10) <= 1e-12);
  CHECK(wide.margin_peak_ratio(30) > 1e-12);
}

TEST_CASE("free dispersion of the grid Hamiltonian") {
  // sigma = 20 h: the spread term 1/(2 sigma^2 k0^2) and the stencil error
  // (k0 h)^2/12 both stay under one percent.
  Wavefunction2D psi = standard_packet(2.0, {3.0, 0.0});
  const double energy = mean_energy(psi, 0.0, kUnit);
  const double expected = 0.5 * 3.0 * 3.0;
  CHECK(std::abs(energy - expected) / expected <= 0.01);
}

TEST_CASE("grid Hamiltonian is Hermitian on interior states") {
  Wavefunction2D psi = standard_packet(1.0, {0.7, -0.2});
  Wavefunction2D phi = gaussian_packet(centered_grid(256, 0.1), {1.0, -0.5}, 0.8, {-0.3, 0.4});
  for (double B : {0.0, 1.0, 2.5}) {
    Wavefunction2D Hpsi = apply_hamiltonian(psi, B, kUnit);
    Wavefunction2D Hphi = apply_hamiltonian(phi, B, kUnit);
    CHECK(std::abs(inner(phi, Hpsi) - inner(Hphi, psi)) <= 1e-10);
  }
}

TEST_CASE("coherent state at the magnetic length reaches the ground energy") {
  // With B = 1 and unit constants the magnetic length is 1 and the lowest
  // attainable energy is hbar e B / (2 m c) = 1/2.
  Wavefunction2D psi = standard_packet(1.0);
  const double energy = mean_energy(psi, 1.0, kUnit);
  CHECK(energy >= 0.5 - 1e-3);
  CHECK(energy == doctest::Approx(0.5).epsilon(1e-2));
}

TEST_CASE("Hamiltonian commutes with passive translations on refinement") {
  auto residual = [&](int n, double h, Family family) {
    const double half = 0.5 * (n - 1) * h;
    GridSpec spec{n, h, {-half, -half}};
    Wavefunction2D psi = gaussian_packet(spec, {0.0, 0.0}, 0.5, {0.0, 0.0});
    const int cells = static_cast<int>(std::lround(0.5 / h));
    return invariance_residual(psi, {cells, 0}, 1.0, kUnit, family);
  };

  // Zero field: the stencil commutes with the sample shift exactly.
  {
    GridSpec spec = centered_grid(128, 0.1);
    Wavefunction2D psi = gaussian_packet(spec, {0.0, 0.0}, 0.5, {0.2, 0.1});
    CHECK(invariance_residual(psi, {5, 0}, 0.0, kUnit) <= 1e-12);
  }

  const double r1 = residual(128, 0.1, Family::passive);
  const double r2 = residual(256, 0.05, Family::passive);
  CHECK(r1 / r2 >= 3.5);
  CHECK(r1 / r2 <= 4.5);

  // The active operator maps H to H + (e/mc)(a x B).pi + const, so its
  // residual converges to that nonzero commutator instead of zero.
  const double a1 = residual(128, 0.1, Family::active);
  const double a2 = residual(256, 0.05, Family::active);
  CHECK(a1 >= 0.01);
  CHECK(a2 >= 0.01);
  CHECK(std::abs(a2 - a1) <= 0.25 * a1);
}

TEST_CASE("wavefunction CSV export") {
  Wavefunction2D psi = gaussian_packet(centered_grid(16, 0.5), {0.0, 0.0}, 0.6, {0, 0});
  std::ostringstream data, header;
  write_csv(psi, data, header);
  const std::string text = data.str();
  CHECK(header.str().rfind("{\"n\": 16", 0) == 0);
  CHECK(text.rfind("i,j,re,im\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 16 * 16 + 1);
}

}  // TEST_SUITE
