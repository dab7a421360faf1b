#pragma once

#include <random>

#include "magsym/observables.hpp"
#include "magsym/polynomial.hpp"

namespace magsym {

/// Random polynomial with small rational coefficients, for property checks.
/// Coefficients are n/d with n in [-coeff_max, coeff_max] \ {0} and
/// d in [1, denom_max]; exponents fill up to max_degree total degree.
template <int N>
Polynomial<N> random_polynomial(std::mt19937_64& rng, int max_degree, int num_terms,
                                int coeff_max = 5, int denom_max = 4) {
  std::uniform_int_distribution<int> num(-coeff_max, coeff_max);
  std::uniform_int_distribution<int> den(1, denom_max);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> var(0, N - 1);
  Polynomial<N> p;
  for (int t = 0; t < num_terms; ++t) {
    int n = num(rng);
    if (n == 0) n = 1;
    Exponents<N> e{};
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) e[var(rng)] += 1;
    p.add_term(e, Rational(n) / Rational(den(rng)));
  }
  return p;
}

inline PhasePoint random_phase_point(std::mt19937_64& rng, double box = 2.0) {
  std::uniform_real_distribution<double> u(-box, box);
  return {{u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}};
}

}  // namespace magsym
