#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "magsym/constants.hpp"
#include "magsym/fields.hpp"
#include "magsym/observables.hpp"

namespace magsym {

/// One violated integrability condition: either an exact nonzero polynomial
/// obstruction or, for blackbox fields, nonzero sampled values.
struct ObstructionEntry {
  std::string label;
  Poly3 obstruction;             // polynomial route
  std::vector<double> samples;   // blackbox route
};

/// Why a generator does not exist. At least one entry is nonzero.
struct NonIntegrableReport {
  std::string kind;   // "passive-translation", "passive-rotation", "gradient"
  int axis = 0;       // 1..3, 0 when not axis-specific
  std::vector<ObstructionEntry> entries;

  std::string summary() const;
};

/// Either the constructed object or the reason it cannot exist.
template <class T>
class IntegrabilityResult {
 public:
  IntegrabilityResult(T value) : v_(std::move(value)) {}                 // NOLINT
  IntegrabilityResult(NonIntegrableReport report) : v_(std::move(report)) {}  // NOLINT

  bool exists() const { return std::holds_alternative<T>(v_); }
  const T& value() const {
    if (!exists()) throw std::logic_error("generator does not exist: " + report().summary());
    return std::get<T>(v_);
  }
  const NonIntegrableReport& report() const { return std::get<NonIntegrableReport>(v_); }

 private:
  std::variant<T, NonIntegrableReport> v_;
};

using GeneratorResult = IntegrabilityResult<PolyObservable>;
using ScalarResult = IntegrabilityResult<Poly3>;

using RationalPoint = std::array<Rational, 3>;

inline RationalPoint origin_basepoint() { return {Rational(0), Rational(0), Rational(0)}; }

/// Solve grad(phi) = rhs with phi(basepoint) = 0, after verifying the
/// mixed-partial conditions exactly. Integration runs along the straight
/// path from the basepoint, which is valid once integrability holds.
ScalarResult solve_gradient(const std::array<Poly3, 3>& rhs, const RationalPoint& basepoint);

/// The same straight-path integral without the integrability gate. When the
/// conditions fail this is only a candidate: its gradient differs from rhs.
Poly3 path_integral(const std::array<Poly3, 3>& rhs, const RationalPoint& basepoint);

/// G_k = p_k + f with df/dx_i = -(e/c) dA_i/dx_k, normalized f(basepoint)=0.
/// Exists iff dB_i/dx_k = 0 for all i (field invariant along the axis).
/// For a blackbox potential the obstructions are sampled numerically and a
/// report is returned; a blackbox field that passes the sampling cannot be
/// turned into a polynomial generator and is rejected.
GeneratorResult passive_translation_generator(const GaugePotential& A, int axis_k,
                                              const PhysicalConstants& consts,
                                              const RationalPoint& basepoint = origin_basepoint());

/// pi_k = p_k - (e/c) A_k. No integrability condition on the field.
PolyObservable active_translation_generator(const GaugePotential& A, int axis_k,
                                            const PhysicalConstants& consts);

/// L_k = eps_kij x_i p_j + g with dg/dx_i fixed by the rotation conditions,
/// g(basepoint) = 0. Exists iff B is invariant under rotations about the
/// axis. A blackbox potential that is itself invariant about the axis (the
/// dipole about its moment) yields g = 0 without polynomial machinery.
GeneratorResult passive_rotation_generator(const GaugePotential& A, int axis_k,
                                           const PhysicalConstants& consts,
                                           const RationalPoint& basepoint = origin_basepoint());

/// Free angular momentum eps_kij x_i p_j.
PolyObservable free_angular_momentum(int axis_k);

/// Right-hand side of the rotation-generator gradient equations:
/// (e/c) (eps_ikl A_l - eps_klj x_l dA_i/dx_j) for i = 1..3.
std::array<Poly3, 3> rotation_gradient_rhs(const GaugePotential& A, int axis_k,
                                           const PhysicalConstants& consts);

/// Kind and construction metadata for report files.
enum class GeneratorKind { passive_translation, active_translation, passive_rotation };

struct GeneratorSpec {
  PolyObservable observable;
  GeneratorKind kind;
  int axis;
  std::string gauge_label;
  RationalPoint basepoint;
};

const char* to_string(GeneratorKind k);

}  // namespace magsym
