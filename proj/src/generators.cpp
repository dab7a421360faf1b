#include "magsym/generators.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace magsym {

namespace {

// Fixed probe points for sampled (blackbox) integrability checks.
const std::array<Vec3, 6> kProbePoints = {
    Vec3{1.3, -0.7, 0.9},  Vec3{-0.4, 1.1, 1.7}, Vec3{2.0, 0.3, -1.2},
    Vec3{-1.5, -1.9, 0.8}, Vec3{0.9, 1.4, 2.3},  Vec3{1.0, 0.0, 0.0}};

constexpr double kSampleTolerance = 1e-8;

/// chi_i(t, x) = b_i + t (x_i - b_i) as a polynomial in (x1, x2, x3, t).
std::array<Polynomial<4>, 4> straight_path_images(const RationalPoint& b) {
  std::array<Polynomial<4>, 4> images;
  for (int i = 0; i < 3; ++i)
    images[i] = Polynomial<4>::constant(b[i]) +
                Polynomial<4>::variable(3) *
                    (Polynomial<4>::variable(i) - Polynomial<4>::constant(b[i]));
  images[3] = Polynomial<4>::variable(3);
  return images;
}

}  // namespace

std::string NonIntegrableReport::summary() const {
  std::ostringstream out;
  out << kind;
  if (axis != 0) out << " axis " << axis;
  out << ": ";
  bool first = true;
  for (const auto& e : entries) {
    if (!first) out << "; ";
    first = false;
    out << e.label;
    if (!e.obstruction.is_zero()) out << " = " << e.obstruction.str(kPositionNames);
    if (!e.samples.empty()) {
      out << " ~ [";
      for (size_t i = 0; i < e.samples.size(); ++i) out << (i ? ", " : "") << e.samples[i];
      out << "]";
    }
  }
  return out.str();
}

Poly3 path_integral(const std::array<Poly3, 3>& rhs, const RationalPoint& b) {
  // phi(x) = sum_i (x_i - b_i) * integral_0^1 rhs_i(b + t (x - b)) dt
  auto images = straight_path_images(b);
  std::array<Polynomial<4>, 3> embed3;  // x_i as 4-variable polynomials
  for (int i = 0; i < 3; ++i) embed3[i] = images[i];

  Polynomial<4> acc;
  for (int i = 0; i < 3; ++i) {
    Polynomial<4> integrand = rhs[i].substitute<4>(embed3);
    integrand *= Polynomial<4>::variable(i) - Polynomial<4>::constant(b[i]);
    acc += integrand;
  }
  // Integrate each monomial t^k -> 1/(k+1) and drop the t slot.
  Poly3 out;
  for (const auto& [e, c] : acc.terms()) {
    Exponents<3> e3 = {e[0], e[1], e[2]};
    out.add_term(e3, c / Rational(e[3] + 1));
  }
  return out;
}

ScalarResult solve_gradient(const std::array<Poly3, 3>& rhs, const RationalPoint& basepoint) {
  NonIntegrableReport report{.kind = "gradient", .axis = 0, .entries = {}};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Poly3 mixed = rhs[i].derivative(j) - rhs[j].derivative(i);
      if (!mixed.is_zero()) {
        report.entries.push_back({.label = "d(rhs_" + std::to_string(i + 1) + ")/dx" +
                                           std::to_string(j + 1) + " - d(rhs_" +
                                           std::to_string(j + 1) + ")/dx" + std::to_string(i + 1),
                                  .obstruction = mixed,
                                  .samples = {}});
      }
    }
  if (!report.entries.empty()) return report;
  return path_integral(rhs, basepoint);
}

GeneratorResult passive_translation_generator(const GaugePotential& A, int axis_k,
                                              const PhysicalConstants& consts,
                                              const RationalPoint& basepoint) {
  if (axis_k < 1 || axis_k > 3) throw std::invalid_argument("axis must be 1..3");
  const int k = axis_k - 1;

  if (!A.is_polynomial()) {
    // Sampled gate: dB_i/dx_k must vanish identically.
    MagneticField B = curl(A);
    NonIntegrableReport report{.kind = "passive-translation", .axis = axis_k, .entries = {}};
    const double h = 1e-5;
    for (int i = 0; i < 3; ++i) {
      std::vector<double> samples;
      double worst = 0.0;
      for (const Vec3& r : kProbePoints) {
        Vec3 rp = r, rm = r;
        rp[k] += h;
        rm[k] -= h;
        double d = (B.evaluate(rp)[i] - B.evaluate(rm)[i]) / (2.0 * h);
        samples.push_back(d);
        worst = std::max(worst, std::abs(d));
      }
      if (worst > kSampleTolerance)
        report.entries.push_back({.label = "dB" + std::to_string(i + 1) + "/dx" +
                                           std::to_string(axis_k) + " (sampled)",
                                  .obstruction = {},
                                  .samples = std::move(samples)});
    }
    if (!report.entries.empty()) return report;
    throw std::invalid_argument(
        A.label + ": field sampled as translation-invariant but the potential is not polynomial; "
                  "no polynomial generator can be constructed");
  }

  MagneticField B = curl(A);
  NonIntegrableReport report{.kind = "passive-translation", .axis = axis_k, .entries = {}};
  for (int i = 0; i < 3; ++i) {
    Poly3 dB = B.components[i].derivative(k);
    if (!dB.is_zero())
      report.entries.push_back({.label = "dB" + std::to_string(i + 1) + "/dx" + std::to_string(axis_k),
                                .obstruction = dB,
                                .samples = {}});
  }
  if (!report.entries.empty()) return report;

  std::array<Poly3, 3> rhs;
  for (int i = 0; i < 3; ++i) rhs[i] = Rational(-1) * consts.e_over_c() * A.components[i].derivative(k);
  ScalarResult f = solve_gradient(rhs, basepoint);
  // The dB/dx_k gate above is exactly the mixed-partial condition for rhs.
  // Normalization: the kinematical form G = pi_k + (e/c) A_k + f reduces to
  // pi_k at the basepoint. This constant is the gauge-independent choice
  // (f alone is gauge-dependent), and it equals f(basepoint) = 0 whenever
  // A_k vanishes there, e.g. the symmetric gauge about the origin.
  const Rational offset = consts.e_over_c() * A.components[k].eval_exact(basepoint);
  return obs::p(k) + obs::from_position(f.value()) - PolyObservable::constant(offset);
}

PolyObservable active_translation_generator(const GaugePotential& A, int axis_k,
                                            const PhysicalConstants& consts) {
  if (axis_k < 1 || axis_k > 3) throw std::invalid_argument("axis must be 1..3");
  if (!A.is_polynomial())
    throw std::invalid_argument(
        "active_translation_generator: blackbox potential; use kinematical_momentum_numeric");
  const int k = axis_k - 1;
  return obs::p(k) - consts.e_over_c() * obs::from_position(A.components[k]);
}

PolyObservable free_angular_momentum(int axis_k) {
  if (axis_k < 1 || axis_k > 3) throw std::invalid_argument("axis must be 1..3");
  const int k = axis_k - 1;
  PolyObservable L;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int eps = levi_civita(k, i, j);
      if (eps != 0) L += Rational(eps) * (obs::x(i) * obs::p(j));
    }
  return L;
}

std::array<Poly3, 3> rotation_gradient_rhs(const GaugePotential& A, int axis_k,
                                           const PhysicalConstants& consts) {
  if (!A.is_polynomial()) throw std::invalid_argument("rotation rhs requires a polynomial potential");
  const int k = axis_k - 1;
  const Rational eoc = consts.e_over_c();
  std::array<Poly3, 3> rhs;
  for (int i = 0; i < 3; ++i) {
    Poly3 acc;
    for (int l = 0; l < 3; ++l) {
      int eps_ikl = levi_civita(i, k, l);
      if (eps_ikl != 0) acc += Rational(eps_ikl) * A.components[l];
      for (int j = 0; j < 3; ++j) {
        int eps_klj = levi_civita(k, l, j);
        if (eps_klj != 0) acc -= Rational(eps_klj) * (Poly3::variable(l) * A.components[i].derivative(j));
      }
    }
    rhs[i] = eoc * acc;
  }
  return rhs;
}

namespace {

Vec3 rotate_about_axis(const Vec3& v, int k, double theta) {
  // Rotation about the coordinate axis k (0-based) by angle theta.
  const int a = (k + 1) % 3, b = (k + 2) % 3;
  Vec3 out = v;
  out[a] = std::cos(theta) * v[a] - std::sin(theta) * v[b];
  out[b] = std::sin(theta) * v[a] + std::cos(theta) * v[b];
  return out;
}

/// Max over probes of |R^-1 F(R r) - F(r)| for a vector field F.
double sampled_rotation_defect(const std::function<Vec3(const Vec3&)>& F, int k) {
  double worst = 0.0;
  for (const Vec3& r : kProbePoints) {
    for (double theta : {0.37, 1.1, 2.5}) {
      Vec3 lhs = rotate_about_axis(F(rotate_about_axis(r, k, theta)), k, -theta);
      worst = std::max(worst, norm(lhs - F(r)));
    }
  }
  return worst;
}

}  // namespace

GeneratorResult passive_rotation_generator(const GaugePotential& A, int axis_k,
                                           const PhysicalConstants& consts,
                                           const RationalPoint& basepoint) {
  if (axis_k < 1 || axis_k > 3) throw std::invalid_argument("axis must be 1..3");
  const int k = axis_k - 1;

  if (!A.is_polynomial()) {
    // Accepted only when the potential itself is invariant about the axis,
    // in which case the gradient equations have right-hand side zero.
    if (A.symmetry_axis) {
      Vec3 axis{0, 0, 0};
      axis[k] = 1.0;
      if (norm(cross(*A.symmetry_axis, axis)) < 1e-12) return free_angular_momentum(axis_k);
    }
    MagneticField B = curl(A);
    double field_defect = sampled_rotation_defect([&](const Vec3& r) { return B.evaluate(r); }, k);
    if (field_defect > kSampleTolerance) {
      NonIntegrableReport report{.kind = "passive-rotation", .axis = axis_k, .entries = {}};
      report.entries.push_back({.label = "rotation defect of B about x" + std::to_string(axis_k) +
                                         " (sampled)",
                                .obstruction = {},
                                .samples = {field_defect}});
      return report;
    }
    throw std::invalid_argument(
        A.label + ": field sampled as rotation-invariant but the potential is not polynomial "
                  "and carries no matching symmetry axis");
  }

  std::array<Poly3, 3> rhs = rotation_gradient_rhs(A, axis_k, consts);
  ScalarResult g = solve_gradient(rhs, basepoint);
  if (!g.exists()) {
    NonIntegrableReport report = g.report();
    report.kind = "passive-rotation";
    report.axis = axis_k;
    return report;
  }
  // Same normalization as translations: the kinematical form reduces to
  // eps_kij x_i pi_j at the basepoint.
  Rational offset(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int eps = levi_civita(k, i, j);
      if (eps != 0)
        offset += Rational(eps) * consts.e_over_c() * basepoint[i] *
                  A.components[j].eval_exact(basepoint);
    }
  return free_angular_momentum(axis_k) + obs::from_position(g.value()) -
         PolyObservable::constant(offset);
}

const char* to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::passive_translation: return "passive-translation";
    case GeneratorKind::active_translation: return "active-translation";
    case GeneratorKind::passive_rotation: return "passive-rotation";
  }
  return "unknown";
}

}  // namespace magsym
