#pragma once

#include <json.hpp>

#include "magsym/fields.hpp"
#include "magsym/generators.hpp"
#include "magsym/observables.hpp"
#include "magsym/polynomial.hpp"

namespace magsym {

using Json = nlohmann::json;

/// Polynomials exchange as a list of {"coefficient": "n/d", "exponents": [..]}.
template <int N>
Json poly_to_json(const Polynomial<N>& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["coefficient"] = to_string(c);
    t["exponents"] = e;
    terms.push_back(std::move(t));
  }
  return terms;
}

template <int N>
Polynomial<N> poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of terms");
  Polynomial<N> p;
  for (const auto& t : j) {
    if (!t.contains("coefficient") || !t.contains("exponents"))
      throw std::invalid_argument("polynomial term needs 'coefficient' and 'exponents'");
    const auto& ex = t.at("exponents");
    if (!ex.is_array() || ex.size() != N)
      throw std::invalid_argument("polynomial term needs " + std::to_string(N) + " exponents");
    Exponents<N> e{};
    for (int i = 0; i < N; ++i) {
      e[i] = ex.at(i).get<int>();
      if (e[i] < 0) throw std::invalid_argument("negative exponent in polynomial term");
    }
    p.add_term(e, parse_rational(t.at("coefficient").get<std::string>()));
  }
  return p;
}

Json vec3_to_json(const Vec3& v);

Rational rational_from_json(const Json& j);

/// Field selection from a scenario: {"builtin": ..., params} or
/// {"components": [poly, poly, poly], "label": ...}.
GaugePotential potential_from_json(const Json& j);

PhysicalConstants constants_from_json(const Json& j);

/// Generator metadata plus its observable in the polynomial wire format.
Json generator_spec_to_json(const GeneratorSpec& spec);

}  // namespace magsym
