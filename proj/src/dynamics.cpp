#include "magsym/dynamics.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace magsym {

double hamiltonian(const PhasePoint& state, const GaugePotential& A,
                   const PhysicalConstants& consts) {
  const Vec3 pi = kinematical_momentum(state, A, consts);
  return dot(pi, pi) / (2.0 * to_double(consts.m));
}

Vec3 kinematical_momentum(const PhasePoint& state, const GaugePotential& A,
                          const PhysicalConstants& consts) {
  return state.p - to_double(consts.e_over_c()) * A.evaluate(state.x);
}

double cyclotron_period(const PhysicalConstants& consts, double B_magnitude) {
  if (B_magnitude <= 0.0) throw std::invalid_argument("cyclotron_period: |B| must be positive");
  const double pi = 3.14159265358979323846;
  return 2.0 * pi * to_double(consts.m) * to_double(consts.c) / (to_double(consts.e) * B_magnitude);
}

Trajectory integrate_trajectory(const PhasePoint& start, const GaugePotential& A,
                                const PhysicalConstants& consts, double T, double dt) {
  if (T <= 0.0) throw std::invalid_argument("integrate_trajectory: T must be positive");
  if (dt <= 0.0) {
    const double Bmag = norm(curl(A).evaluate(start.x));
    if (Bmag == 0.0)
      throw std::invalid_argument(
          "integrate_trajectory: B(start) = 0, no cyclotron step rule; pass dt explicitly");
    dt = cyclotron_period(consts, Bmag) / 2000.0;
  }
  const double m = to_double(consts.m);
  const double eoc = to_double(consts.e_over_c());

  // dx/dt = (p - (e/c)A)/m, dp_i/dt = (e/mc) sum_j pi_j dA_j/dx_i.
  auto deriv = [&](const PhasePoint& z) {
    const Vec3 pi = z.p - eoc * A.evaluate(z.x);
    auto J = A.jacobian(z.x);
    Vec3 dp;
    for (int i = 0; i < 3; ++i) {
      double acc = 0.0;
      for (int j = 0; j < 3; ++j) acc += pi[j] * J[j][i];
      dp[i] = eoc / m * acc;
    }
    return PhasePoint{pi / m, dp};
  };

  const int nsteps = std::max(1, static_cast<int>(std::ceil(T / dt)));
  const double h = T / nsteps;
  Trajectory traj;
  traj.gauge_label = A.label;
  traj.consts = consts;
  traj.t.reserve(nsteps + 1);
  traj.states.reserve(nsteps + 1);
  traj.t.push_back(0.0);
  traj.states.push_back(start);
  PhasePoint z = start;
  for (int n = 0; n < nsteps; ++n) {
    auto step = [&](const PhasePoint& base, double hh, const PhasePoint& k) {
      return PhasePoint{base.x + hh * k.x, base.p + hh * k.p};
    };
    PhasePoint k1 = deriv(z);
    PhasePoint k2 = deriv(step(z, h / 2, k1));
    PhasePoint k3 = deriv(step(z, h / 2, k2));
    PhasePoint k4 = deriv(step(z, h, k3));
    z.x = z.x + (h / 6.0) * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
    z.p = z.p + (h / 6.0) * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
    if (!z.finite()) throw std::runtime_error("integrate_trajectory: state diverged");
    traj.t.push_back((n + 1) * h);
    traj.states.push_back(z);
  }
  return traj;
}

double drift(const Trajectory& traj, const NumericObservable& obs) {
  if (traj.size() == 0) throw std::invalid_argument("drift: empty trajectory");
  const double v0 = obs(traj.states.front());
  const double denom = std::max(1.0, std::abs(v0));
  double worst = 0.0;
  for (const PhasePoint& z : traj.states) worst = std::max(worst, std::abs(obs(z) - v0));
  return worst / denom;
}

double drift(const Trajectory& traj, const PolyObservable& obs) {
  return drift(traj, to_numeric(obs));
}

void write_csv(const Trajectory& traj, const GaugePotential& A,
               const std::vector<NumericObservable>& monitors, std::ostream& out) {
  out << "t,x1,x2,x3,p1,p2,p3,pi1,pi2,pi3,H";
  for (const auto& m : monitors) out << "," << (m.label.empty() ? "monitor" : m.label);
  out << "\n";
  for (size_t n = 0; n < traj.size(); ++n) {
    const PhasePoint& z = traj.states[n];
    const Vec3 pi = kinematical_momentum(z, A, traj.consts);
    out << traj.t[n];
    for (int i = 0; i < 3; ++i) out << "," << z.x[i];
    for (int i = 0; i < 3; ++i) out << "," << z.p[i];
    for (int i = 0; i < 3; ++i) out << "," << pi[i];
    out << "," << hamiltonian(z, A, traj.consts);
    for (const auto& m : monitors) out << "," << m(z);
    out << "\n";
  }
}

}  // namespace magsym
