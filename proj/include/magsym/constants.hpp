#pragma once

#include <stdexcept>

#include "magsym/rational.hpp"

namespace magsym {

/// Charge e, speed of light c, mass m and hbar, all strictly positive and
/// exact so that generator constructions stay in rational arithmetic.
/// Defaults are 1; scenarios may substitute any positive rationals.
struct PhysicalConstants {
  Rational e{1};
  Rational c{1};
  Rational m{1};
  Rational hbar{1};

  PhysicalConstants() = default;
  PhysicalConstants(Rational e_, Rational c_, Rational m_, Rational hbar_)
      : e(std::move(e_)), c(std::move(c_)), m(std::move(m_)), hbar(std::move(hbar_)) {
    validate();
  }

  void validate() const {
    if (e <= 0 || c <= 0 || m <= 0 || hbar <= 0)
      throw std::invalid_argument("physical constants must be strictly positive");
  }

  /// e/c, the combination entering every generator formula.
  Rational e_over_c() const { return e / c; }
};

}  // namespace magsym
