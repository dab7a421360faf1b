#include "magsym/flows.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace magsym {

namespace {

using State = std::array<double, 6>;
using Deriv = std::function<State(const State&)>;

State axpy(const State& y, double h, const State& k) {
  State out;
  for (int i = 0; i < 6; ++i) out[i] = y[i] + h * k[i];
  return out;
}

void check_finite(const State& z, const char* what) {
  for (double v : z)
    if (!std::isfinite(v)) throw std::runtime_error(std::string(what) + ": flow diverged");
}

State rk4_integrate(const Deriv& f, State z, double total, int nsteps, const char* what) {
  const double h = total / nsteps;
  for (int n = 0; n < nsteps; ++n) {
    State k1 = f(z);
    State k2 = f(axpy(z, h / 2, k1));
    State k3 = f(axpy(z, h / 2, k2));
    State k4 = f(axpy(z, h, k3));
    for (int i = 0; i < 6; ++i) z[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    check_finite(z, what);
  }
  return z;
}

int step_count(double s, double step) {
  if (s == 0.0) return 1;
  if (step <= 0.0) return 1000;
  return std::max(1, static_cast<int>(std::ceil(std::abs(s) / step)));
}

Deriv hamilton_vector_field(const PolyObservable& G) {
  std::array<CompiledPoly<6>, 6> grad;
  for (int i = 0; i < 6; ++i) grad[i] = CompiledPoly<6>(G.derivative(i));
  return [grad](const State& z) {
    State out;
    for (int i = 0; i < 3; ++i) {
      out[i] = grad[3 + i].eval(z);    // dx/ds = dG/dp
      out[3 + i] = -grad[i].eval(z);   // dp/ds = -dG/dx
    }
    return out;
  };
}

Deriv hamilton_vector_field(const NumericObservable& G) {
  if (G.has_gradient()) {
    auto gf = G.gradient;
    return [gf](const State& z) {
      auto g = gf(PhasePoint::from_array(z));
      State out;
      for (int i = 0; i < 3; ++i) {
        out[i] = g[3 + i];
        out[3 + i] = -g[i];
      }
      return out;
    };
  }
  auto eval = G.eval;
  return [eval](const State& z) {
    State out;
    for (int i = 0; i < 6; ++i) {
      const double h = 1e-6 * std::max(1.0, std::abs(z[i]));
      State zp = z, zm = z;
      zp[i] += h;
      zm[i] -= h;
      double d = (eval(PhasePoint::from_array(zp)) - eval(PhasePoint::from_array(zm))) / (2 * h);
      int j = (i < 3) ? 3 + i : i - 3;
      out[j] = (i < 3) ? -d : d;
    }
    return out;
  };
}

template <class Obs>
PhasePoint flow_impl(const Obs& G, double s, const PhasePoint& start, double step) {
  State z = rk4_integrate(hamilton_vector_field(G), start.to_array(), s, step_count(s, step), "flow");
  return PhasePoint::from_array(z);
}

}  // namespace

PhasePoint flow(const PolyObservable& G, double s, const PhasePoint& start, double step) {
  return flow_impl(G, s, start, step);
}

PhasePoint flow(const NumericObservable& G, double s, const PhasePoint& start, double step) {
  return flow_impl(G, s, start, step);
}

FlowPath flow_path(const PolyObservable& G, double s, const PhasePoint& start, int samples,
                   double step, const std::string& label) {
  if (samples < 2) throw std::invalid_argument("flow_path: need at least 2 samples");
  FlowPath path;
  path.generator_label = label;
  path.step = step;
  Deriv f = hamilton_vector_field(G);
  const double ds = s / (samples - 1);
  State z = start.to_array();
  path.s.push_back(0.0);
  path.states.push_back(start);
  for (int n = 1; n < samples; ++n) {
    z = rk4_integrate(f, z, ds, step_count(ds, step), "flow_path");
    path.s.push_back(n * ds);
    path.states.push_back(PhasePoint::from_array(z));
  }
  return path;
}

PhasePoint finite_passive_translation(const PhasePoint& start, int axis_k, double s,
                                      const GaugePotential& A, const PhysicalConstants& consts) {
  if (axis_k < 1 || axis_k > 3) throw std::invalid_argument("axis must be 1..3");
  Vec3 shifted = start.x;
  shifted[axis_k - 1] += s;
  const Vec3 dA = A.evaluate(shifted) - A.evaluate(start.x);
  const double eoc = to_double(consts.e_over_c());
  return {shifted, start.p + eoc * dA};
}

CanonicityReport canonicity_report(const PhaseMap& map, std::span<const PhasePoint> points,
                                   double h) {
  if (h <= 0.0) throw std::invalid_argument("canonicity_report: step must be positive");
  CanonicityReport rep;
  for (const PhasePoint& z0 : points) {
    // Central-difference Jacobian J[a][b] = d(map_a)/dz_b.
    std::array<State, 6> J;
    const State z = z0.to_array();
    for (int b = 0; b < 6; ++b) {
      const double hb = h * std::max(1.0, std::abs(z[b]));
      State zp = z, zm = z;
      zp[b] += hb;
      zm[b] -= hb;
      const State fp = map(PhasePoint::from_array(zp)).to_array();
      const State fm = map(PhasePoint::from_array(zm)).to_array();
      for (int a = 0; a < 6; ++a) {
        double d = (fp[a] - fm[a]) / (2 * hb);
        if (!std::isfinite(d)) throw std::runtime_error("canonicity_report: non-finite map output");
        J[a][b] = d;
      }
    }
    auto bracket = [&](int a, int b) {
      double acc = 0.0;
      for (int i = 0; i < 3; ++i) acc += J[a][i] * J[b][3 + i] - J[a][3 + i] * J[b][i];
      return acc;
    };
    CanonicityReport::PointResult pr;
    pr.at = z0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        pr.xx[i][j] = bracket(i, j);
        pr.xp[i][j] = bracket(i, 3 + j) - (i == j ? 1.0 : 0.0);
        pr.pp[i][j] = bracket(3 + i, 3 + j);
        pr.max_residual = std::max({pr.max_residual, std::abs(pr.xx[i][j]),
                                    std::abs(pr.xp[i][j]), std::abs(pr.pp[i][j])});
      }
    rep.max_residual = std::max(rep.max_residual, pr.max_residual);
    rep.points.push_back(std::move(pr));
  }
  return rep;
}

double phase_distance(const PhasePoint& a, const PhasePoint& b) {
  const Vec3 dx = a.x - b.x;
  const Vec3 dp = a.p - b.p;
  return std::sqrt(dot(dx, dx) + dot(dp, dp));
}

namespace {

template <class Obs>
double gap_impl(const Obs& G1, const Obs& G2, double s1, double s2, const PhasePoint& start,
                double step) {
  PhasePoint a = flow(G2, s2, flow(G1, s1, start, step), step);
  PhasePoint b = flow(G1, s1, flow(G2, s2, start, step), step);
  return phase_distance(a, b);
}

}  // namespace

double flow_commutator_gap(const PolyObservable& G1, const PolyObservable& G2, double s1,
                           double s2, const PhasePoint& start, double step) {
  return gap_impl(G1, G2, s1, s2, start, step);
}

double flow_commutator_gap(const NumericObservable& G1, const NumericObservable& G2, double s1,
                           double s2, const PhasePoint& start, double step) {
  return gap_impl(G1, G2, s1, s2, start, step);
}

void write_csv(const FlowPath& path, const GaugePotential& A, const PhysicalConstants& consts,
               std::ostream& out) {
  const double eoc = to_double(consts.e_over_c());
  out << "s,x1,x2,x3,p1,p2,p3,pi1,pi2,pi3\n";
  for (size_t n = 0; n < path.s.size(); ++n) {
    const PhasePoint& z = path.states[n];
    const Vec3 pi = z.p - eoc * A.evaluate(z.x);
    out << path.s[n];
    for (int i = 0; i < 3; ++i) out << "," << z.x[i];
    for (int i = 0; i < 3; ++i) out << "," << z.p[i];
    for (int i = 0; i < 3; ++i) out << "," << pi[i];
    out << "\n";
  }
}

}  // namespace magsym
