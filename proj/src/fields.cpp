#include "magsym/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace magsym {

namespace {

constexpr double kDipoleSingularRadius = 1e-9;

std::array<double, 3> to_arr(const Vec3& r) { return r.to_array(); }

}  // namespace

Vec3 GaugePotential::evaluate(const Vec3& r) const {
  if (kind == FieldKind::polynomial) {
    auto at = to_arr(r);
    return {components[0].eval(at), components[1].eval(at), components[2].eval(at)};
  }
  if (singular_radius > 0.0 && norm(r) < singular_radius)
    throw std::domain_error(label + ": evaluation at singular point |r| < " +
                            std::to_string(singular_radius));
  return eval_fn(r);
}

std::array<std::array<double, 3>, 3> GaugePotential::jacobian(const Vec3& r) const {
  std::array<std::array<double, 3>, 3> J{};
  if (kind == FieldKind::polynomial) {
    auto at = to_arr(r);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) J[i][j] = components[i].derivative(j).eval(at);
    return J;
  }
  if (jacobian_fn) {
    auto rows = jacobian_fn(r);
    for (int i = 0; i < 3; ++i) J[i] = rows[i].to_array();
    return J;
  }
  const double h = (fd_step_scale ? *fd_step_scale : 1e-5) * std::max(1.0, norm(r));
  for (int j = 0; j < 3; ++j) {
    Vec3 rp = r, rm = r;
    rp[j] += h;
    rm[j] -= h;
    Vec3 d = (evaluate(rp) - evaluate(rm)) / (2.0 * h);
    for (int i = 0; i < 3; ++i) J[i][j] = d[i];
  }
  return J;
}

Vec3 MagneticField::evaluate(const Vec3& r) const {
  if (kind == FieldKind::polynomial) {
    auto at = to_arr(r);
    return {components[0].eval(at), components[1].eval(at), components[2].eval(at)};
  }
  return eval_fn(r);
}

MagneticField curl(const GaugePotential& A) {
  MagneticField B;
  B.label = "curl(" + A.label + ")";
  if (A.kind == FieldKind::polynomial) {
    B.kind = FieldKind::polynomial;
    B.components[0] = A.components[2].derivative(1) - A.components[1].derivative(2);
    B.components[1] = A.components[0].derivative(2) - A.components[2].derivative(0);
    B.components[2] = A.components[1].derivative(0) - A.components[0].derivative(1);
    return B;
  }
  B.kind = FieldKind::blackbox;
  if (A.field_fn) {
    B.eval_fn = A.field_fn;
    return B;
  }
  if (!A.fd_step_scale)
    throw std::invalid_argument(A.label + ": finite-difference step not configured for blackbox curl");
  const double scale = *A.fd_step_scale;
  B.eval_fn = [A, scale](const Vec3& r) { return numeric_curl(A, r, scale); };
  return B;
}

Vec3 numeric_curl(const GaugePotential& A, const Vec3& r, double step_scale) {
  if (step_scale <= 0.0) throw std::invalid_argument("numeric_curl: step must be positive");
  const double h = step_scale * std::max(1.0, norm(r));
  auto d = [&](int i, int j) {
    Vec3 rp = r, rm = r;
    rp[j] += h;
    rm[j] -= h;
    return (A.evaluate(rp)[i] - A.evaluate(rm)[i]) / (2.0 * h);
  };
  return {d(2, 1) - d(1, 2), d(0, 2) - d(2, 0), d(1, 0) - d(0, 1)};
}

GaugePotential gauge_transform(const GaugePotential& A, const Poly3& xi) {
  if (A.kind != FieldKind::polynomial)
    throw std::invalid_argument("gauge_transform: blackbox potential with polynomial xi");
  GaugePotential out = A;
  for (int i = 0; i < 3; ++i) out.components[i] += xi.derivative(i);
  out.label = A.label + "+grad(xi)";
  return out;
}

Poly3 divergence(const std::array<Poly3, 3>& f) {
  return f[0].derivative(0) + f[1].derivative(1) + f[2].derivative(2);
}

GaugePotential symmetric_gauge(const std::array<Rational, 3>& B) {
  GaugePotential A;
  A.kind = FieldKind::polynomial;
  const Rational half(1, 2);
  // A = (B x r)/2: A_i = eps_ijk B_j x_k / 2
  for (int i = 0; i < 3; ++i) {
    Poly3 comp;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        int eps = levi_civita(i, j, k);
        if (eps != 0 && B[j] != 0) comp += (half * Rational(eps) * B[j]) * Poly3::variable(k);
      }
    A.components[i] = comp;
  }
  A.label = "symmetric";
  return A;
}

GaugePotential landau_gauge(const Rational& B, int axis) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("landau_gauge: axis must be 1..3");
  GaugePotential A;
  A.kind = FieldKind::polynomial;
  // Field along axis k: the nonzero component sits one slot below k and is
  // linear in the coordinate one slot above, e.g. k=3 gives (0, B x1, 0).
  int k = axis - 1;
  int comp = (k + 2) % 3;
  int var = (k + 1) % 3;
  A.components[comp] = B * Poly3::variable(var);
  A.label = "landau-axis" + std::to_string(axis);
  return A;
}

GaugePotential gradient_gauge(const Rational& B0, const Rational& beta) {
  GaugePotential A;
  A.kind = FieldKind::polynomial;
  A.components[1] = B0 * Poly3::variable(0) + (beta / 2) * Poly3::variable(0, 2);
  A.label = "gradient";
  return A;
}

GaugePotential dipole_potential(const Vec3& mu) {
  GaugePotential A;
  if (norm(mu) == 0.0) {
    A.kind = FieldKind::polynomial;  // mu x r vanishes identically
    A.label = "dipole";
    return A;
  }
  A.kind = FieldKind::blackbox;
  A.singular_radius = kDipoleSingularRadius;
  A.fd_step_scale = 1e-5;
  A.label = "dipole";
  A.eval_fn = [mu](const Vec3& r) {
    const double rn = norm(r);
    return cross(mu, r) / (rn * rn * rn);
  };
  // B = (3 (mu.rhat) rhat - mu) / r^3, the standard point-dipole field.
  A.field_fn = [mu](const Vec3& r) {
    const double rn = norm(r);
    if (rn < kDipoleSingularRadius)
      throw std::domain_error("dipole: field evaluation at singular point");
    const Vec3 rhat = r / rn;
    return (3.0 * dot(mu, rhat) * rhat - mu) / (rn * rn * rn);
  };
  // dA_i/dx_j = eps_iaj mu_a / r^3 - 3 (mu x r)_i r_j / r^5
  A.jacobian_fn = [mu](const Vec3& r) {
    const double rn = norm(r);
    if (rn < kDipoleSingularRadius)
      throw std::domain_error("dipole: jacobian evaluation at singular point");
    const double r3 = rn * rn * rn;
    const double r5 = r3 * rn * rn;
    const Vec3 mxr = cross(mu, r);
    std::array<Vec3, 3> rows;
    for (int i = 0; i < 3; ++i) {
      Vec3 row;
      for (int j = 0; j < 3; ++j) {
        double term = 0.0;
        for (int a = 0; a < 3; ++a) term += levi_civita(i, a, j) * mu[a];
        row[j] = term / r3 - 3.0 * mxr[i] * r[j] / r5;
      }
      rows[i] = row;
    }
    return rows;
  };
  A.symmetry_axis = mu / norm(mu);
  return A;
}

}  // namespace magsym
