#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "magsym/constants.hpp"
#include "magsym/fields.hpp"
#include "magsym/generators.hpp"
#include "magsym/observables.hpp"

namespace magsym {

using Mono6 = Exponents<6>;

/// Normal-ordered noncommutative polynomial in x1..x3, p1..p3: every term is
/// c * x^alpha p^beta with all position factors left of all momentum factors.
/// Exponent slots 0..2 are x, 3..5 are p. Coefficients are exact complex
/// rationals with hbar already substituted; products therefore live in a
/// WeylAlgebra carrying the hbar value.
class WeylOp {
 public:
  using TermMap = std::map<Mono6, CRational, GradedLex<6>>;

  WeylOp() = default;

  static WeylOp zero() { return {}; }
  static WeylOp identity() { return scalar(CRational(1)); }
  static WeylOp scalar(CRational c);
  static WeylOp position(int i, int power = 1);
  static WeylOp momentum(int i, int power = 1);
  static WeylOp monomial(CRational c, const Mono6& e);

  /// Naive normal-ordered placement of a classical polynomial: each monomial
  /// x^a p^b maps to the operator word with that exponent pattern. This is
  /// the inverse of classical_symbol and is ordering-unambiguous whenever no
  /// monomial mixes x_i and p_i of the same index.
  static WeylOp from_poly(const PolyObservable& f);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  CRational coefficient(const Mono6& e) const;
  /// True when the operator is c * identity (including zero).
  bool is_scalar() const;

  void add_term(const Mono6& e, const CRational& c);

  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator-(const WeylOp& a);
  friend WeylOp operator*(const CRational& s, const WeylOp& a);
  friend bool operator==(const WeylOp& a, const WeylOp& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  TermMap terms_;
};

/// The operator algebra at a fixed rational hbar: canonical commutation
/// rewriting p_i x_i = x_i p_i - i hbar applied until normal order.
class WeylAlgebra {
 public:
  explicit WeylAlgebra(Rational hbar);

  const Rational& hbar() const { return hbar_; }

  /// Exact normal-ordered product.
  WeylOp mul(const WeylOp& a, const WeylOp& b) const;
  /// ab - ba.
  WeylOp commutator(const WeylOp& a, const WeylOp& b) const;
  /// Formal adjoint: reverse factors, conjugate coefficients, renormal-order.
  WeylOp adjoint(const WeylOp& a) const;
  bool is_hermitian(const WeylOp& a) const { return adjoint(a) == a; }

  /// Weyl-symmetric quantization (McCoy): the unique ordering for which
  /// [Q(f), Q(g)] = i hbar Q({f, g}) holds exactly at polynomial degree <= 2.
  WeylOp quantize(const PolyObservable& f) const;

  /// i hbar as a coefficient.
  CRational i_hbar() const { return CRational(Rational(0), hbar_); }

 private:
  Rational hbar_;
};

/// Coefficient-wise symbol map x^a p^b -> x^a p^b. Requires all coefficients
/// real; the operators built here from divergence-free gauges satisfy that.
PolyObservable classical_symbol(const WeylOp& a);

/// The full operator set for a polynomial gauge potential.
struct QuantumOperators {
  std::array<WeylOp, 3> pi;                          // kinematical momenta
  std::array<IntegrabilityResult<WeylOp>, 3> G{      // passive translation generators
      WeylOp{}, WeylOp{}, WeylOp{}};
  std::array<IntegrabilityResult<WeylOp>, 3> L{      // passive rotation generators
      WeylOp{}, WeylOp{}, WeylOp{}};
  WeylOp H;
  std::array<WeylOp, 3> B;                           // field components as operators
};

QuantumOperators build_operators(const GaugePotential& A, const PhysicalConstants& consts);

struct IdentityCheck {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string residual;  // pretty-printed residual operator ("0" on pass)
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

/// Run every operator identity that applies to the given gauge: the defining
/// commutators of existing generators, the pi and G commutation relations,
/// the Jacobi sums, invariance of H, the rotation conditions, [G_k, B_l] = 0,
/// and the existence refusals where the field lacks the symmetry.
IdentityReport verify_identities(const GaugePotential& A, const PhysicalConstants& consts);

}  // namespace magsym
