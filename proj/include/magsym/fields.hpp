#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "magsym/constants.hpp"
#include "magsym/polynomial.hpp"
#include "magsym/vec3.hpp"

namespace magsym {

enum class FieldKind { polynomial, blackbox };

/// Vector potential A(r). Either three exact polynomials in x1..x3 or a
/// differentiable black-box function. Immutable after construction.
struct GaugePotential {
  FieldKind kind = FieldKind::polynomial;
  std::array<Poly3, 3> components{};                       // polynomial kind
  std::function<Vec3(const Vec3&)> eval_fn;                // blackbox kind
  std::function<std::array<Vec3, 3>(const Vec3&)> jacobian_fn;  // optional: row i = grad A_i
  std::function<Vec3(const Vec3&)> field_fn;               // optional closed-form B
  std::optional<double> fd_step_scale;                     // step rule for numeric curl
  std::optional<Vec3> symmetry_axis;                       // axis about which A is invariant
  double singular_radius = 0.0;
  std::string label;

  bool is_polynomial() const { return kind == FieldKind::polynomial; }

  /// Evaluate A at a point. Throws near a singularity of a blackbox potential.
  Vec3 evaluate(const Vec3& r) const;

  /// dA_i/dx_j at a point; exact for polynomials, analytic or central
  /// differences for blackboxes.
  std::array<std::array<double, 3>, 3> jacobian(const Vec3& r) const;
};

/// Magnetic field B(r) with the same dual representation.
struct MagneticField {
  FieldKind kind = FieldKind::polynomial;
  std::array<Poly3, 3> components{};
  std::function<Vec3(const Vec3&)> eval_fn;
  std::string label;

  bool is_polynomial() const { return kind == FieldKind::polynomial; }
  Vec3 evaluate(const Vec3& r) const;
};

/// B = curl A. Exact polynomial curl for polynomial potentials; for a
/// blackbox, the attached closed-form field if present, otherwise central
/// differences with the configured step rule.
MagneticField curl(const GaugePotential& A);

/// Numeric central-difference curl of any potential, exposed as the
/// cross-check route next to the exact/closed-form one.
Vec3 numeric_curl(const GaugePotential& A, const Vec3& r, double step_scale = 1e-5);

/// A -> A + grad(xi). Polynomial potentials only; the curl is unchanged.
GaugePotential gauge_transform(const GaugePotential& A, const Poly3& xi);

Poly3 divergence(const std::array<Poly3, 3>& f);

// Built-in potential families.

/// Symmetric gauge A = B x r / 2 for a uniform field B.
GaugePotential symmetric_gauge(const std::array<Rational, 3>& B);

/// Landau-type gauge for a uniform field of magnitude B along the given
/// axis (1..3). axis=3 gives A = (0, B x1, 0).
GaugePotential landau_gauge(const Rational& B, int axis);

/// A = (0, B0 x1 + beta x1^2 / 2, 0), so curl = (0, 0, B0 + beta x1).
GaugePotential gradient_gauge(const Rational& B0, const Rational& beta);

/// Point dipole A = mu x r / |r|^3 (blackbox; singular at the origin).
GaugePotential dipole_potential(const Vec3& mu);

}  // namespace magsym
