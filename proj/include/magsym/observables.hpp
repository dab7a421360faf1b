#pragma once

#include <array>
#include <functional>
#include <string>

#include "magsym/constants.hpp"
#include "magsym/fields.hpp"
#include "magsym/polynomial.hpp"
#include "magsym/vec3.hpp"

namespace magsym {

/// Classical state (x, p) with p the canonical momentum.
struct PhasePoint {
  Vec3 x;
  Vec3 p;

  std::array<double, 6> to_array() const {
    return {x.x1, x.x2, x.x3, p.x1, p.x2, p.x3};
  }
  static PhasePoint from_array(const std::array<double, 6>& z) {
    return {{z[0], z[1], z[2]}, {z[3], z[4], z[5]}};
  }
  bool finite() const { return x.finite() && p.finite(); }
};

/// Exact polynomial observable in (x1,x2,x3,p1,p2,p3).
/// Variables 0..2 are positions, 3..5 canonical momenta.
using PolyObservable = Polynomial<6>;

namespace obs {
inline PolyObservable x(int i, int power = 1) { return PolyObservable::variable(i, power); }
inline PolyObservable p(int i, int power = 1) { return PolyObservable::variable(3 + i, power); }
/// Embed a polynomial in x alone into phase space.
PolyObservable from_position(const Poly3& f);
}  // namespace obs

/// {f, g} = sum_i (df/dx_i dg/dp_i - df/dp_i dg/dx_i), exact.
PolyObservable poisson(const PolyObservable& f, const PolyObservable& g);

/// Black-box observable with optional analytic phase-space gradient
/// (d/dx1..dx3, d/dp1..dp3 in that order).
struct NumericObservable {
  std::function<double(const PhasePoint&)> eval;
  std::function<std::array<double, 6>(const PhasePoint&)> gradient;  // may be empty
  std::string label;

  double operator()(const PhasePoint& z) const { return eval(z); }
  bool has_gradient() const { return static_cast<bool>(gradient); }
};

/// Adapt a polynomial observable (gradient is exact).
NumericObservable to_numeric(const PolyObservable& f, const std::string& label = "");

/// pi_k = p_k - (e/c) A_k as a black-box observable; works for any potential.
NumericObservable kinematical_momentum_numeric(const GaugePotential& A, int axis_k,
                                               const PhysicalConstants& consts);

/// Central-difference (or analytic, when both carry gradients) Poisson
/// bracket at a point. h <= 0 selects the default step 1e-5 * max(1,|z_i|).
double poisson_numeric(const NumericObservable& f, const NumericObservable& g,
                       const PhasePoint& at, double h = 0.0);

/// Rewrite p_i = pi_i + (e/c) A_i(x): the result is a polynomial in
/// (x, pi) with momentum slots reinterpreted as kinematical momenta.
PolyObservable substitute_kinematical(const PolyObservable& f, const GaugePotential& A,
                                      const PhysicalConstants& consts);

/// Inverse direction: express an observable given as F(x, pi) in canonical
/// variables for the stated gauge, i.e. substitute pi_i = p_i - (e/c) A_i.
PolyObservable to_canonical(const PolyObservable& f_of_pi, const GaugePotential& A,
                            const PhysicalConstants& consts);

/// H = |p - (e/c) A(x)|^2 / 2m as an exact polynomial.
PolyObservable hamiltonian_observable(const GaugePotential& A, const PhysicalConstants& consts);

}  // namespace magsym
