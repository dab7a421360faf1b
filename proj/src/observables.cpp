#include "magsym/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace magsym {

namespace obs {

PolyObservable from_position(const Poly3& f) {
  std::array<PolyObservable, 3> images = {x(0), x(1), x(2)};
  return f.substitute<6>(images);
}

}  // namespace obs

PolyObservable poisson(const PolyObservable& f, const PolyObservable& g) {
  PolyObservable acc;
  for (int i = 0; i < 3; ++i) {
    acc += f.derivative(i) * g.derivative(3 + i);
    acc -= f.derivative(3 + i) * g.derivative(i);
  }
  return acc;
}

NumericObservable to_numeric(const PolyObservable& f, const std::string& label) {
  CompiledPoly<6> cf(f);
  std::array<CompiledPoly<6>, 6> grads;
  for (int i = 0; i < 6; ++i) grads[i] = CompiledPoly<6>(f.derivative(i));
  NumericObservable out;
  out.label = label;
  out.eval = [cf](const PhasePoint& z) { return cf.eval(z.to_array()); };
  out.gradient = [grads](const PhasePoint& z) {
    auto at = z.to_array();
    std::array<double, 6> g;
    for (int i = 0; i < 6; ++i) g[i] = grads[i].eval(at);
    return g;
  };
  return out;
}

NumericObservable kinematical_momentum_numeric(const GaugePotential& A, int axis_k,
                                               const PhysicalConstants& consts) {
  if (axis_k < 1 || axis_k > 3) throw std::invalid_argument("axis must be 1..3");
  const int k = axis_k - 1;
  const double eoc = to_double(consts.e_over_c());
  NumericObservable out;
  out.label = "pi" + std::to_string(axis_k) + "[" + A.label + "]";
  out.eval = [A, k, eoc](const PhasePoint& z) { return z.p[k] - eoc * A.evaluate(z.x)[k]; };
  out.gradient = [A, k, eoc](const PhasePoint& z) {
    std::array<double, 6> g{};
    auto J = A.jacobian(z.x);
    for (int j = 0; j < 3; ++j) g[j] = -eoc * J[k][j];
    g[3 + k] = 1.0;
    return g;
  };
  return out;
}

double poisson_numeric(const NumericObservable& f, const NumericObservable& g,
                       const PhasePoint& at, double h) {
  if (f.has_gradient() && g.has_gradient()) {
    auto gf = f.gradient(at);
    auto gg = g.gradient(at);
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) acc += gf[i] * gg[3 + i] - gf[3 + i] * gg[i];
    if (!std::isfinite(acc)) throw std::runtime_error("poisson_numeric: non-finite gradient value");
    return acc;
  }
  auto grad = [&](const NumericObservable& obs) {
    std::array<double, 6> out;
    auto z = at.to_array();
    for (int i = 0; i < 6; ++i) {
      const double hi = (h > 0.0 ? h : 1e-5) * std::max(1.0, std::abs(z[i]));
      auto zp = z, zm = z;
      zp[i] += hi;
      zm[i] -= hi;
      const double fp = obs.eval(PhasePoint::from_array(zp));
      const double fm = obs.eval(PhasePoint::from_array(zm));
      if (!std::isfinite(fp) || !std::isfinite(fm))
        throw std::runtime_error("poisson_numeric: non-finite evaluation of " + obs.label);
      out[i] = (fp - fm) / (2.0 * hi);
    }
    return out;
  };
  auto gf = f.has_gradient() ? f.gradient(at) : grad(f);
  auto gg = g.has_gradient() ? g.gradient(at) : grad(g);
  double acc = 0.0;
  for (int i = 0; i < 3; ++i) acc += gf[i] * gg[3 + i] - gf[3 + i] * gg[i];
  if (!std::isfinite(acc)) throw std::runtime_error("poisson_numeric: non-finite result");
  return acc;
}

namespace {

std::array<PolyObservable, 6> momentum_substitution(const GaugePotential& A,
                                                    const PhysicalConstants& consts,
                                                    const Rational& sign) {
  if (!A.is_polynomial())
    throw std::invalid_argument("kinematical substitution requires a polynomial potential");
  std::array<PolyObservable, 6> images;
  for (int i = 0; i < 3; ++i) images[i] = obs::x(i);
  for (int i = 0; i < 3; ++i)
    images[3 + i] = obs::p(i) + (sign * consts.e_over_c()) * obs::from_position(A.components[i]);
  return images;
}

}  // namespace

PolyObservable substitute_kinematical(const PolyObservable& f, const GaugePotential& A,
                                      const PhysicalConstants& consts) {
  // p = pi + (e/c) A, so the momentum slots of the output carry pi.
  return f.substitute<6>(momentum_substitution(A, consts, Rational(1)));
}

PolyObservable to_canonical(const PolyObservable& f_of_pi, const GaugePotential& A,
                            const PhysicalConstants& consts) {
  return f_of_pi.substitute<6>(momentum_substitution(A, consts, Rational(-1)));
}

PolyObservable hamiltonian_observable(const GaugePotential& A, const PhysicalConstants& consts) {
  if (!A.is_polynomial())
    throw std::invalid_argument("hamiltonian_observable requires a polynomial potential");
  PolyObservable acc;
  for (int i = 0; i < 3; ++i) {
    PolyObservable pi_i = obs::p(i) - consts.e_over_c() * obs::from_position(A.components[i]);
    acc += pi_i * pi_i;
  }
  return (Rational(1) / (2 * consts.m)) * acc;
}

}  // namespace magsym
