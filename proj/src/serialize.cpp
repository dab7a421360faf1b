#include "magsym/serialize.hpp"

namespace magsym {

Json vec3_to_json(const Vec3& v) { return Json::array({v.x1, v.x2, v.x3}); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("rational values must be integers or 'n/d' strings: " + j.dump());
}

PhysicalConstants constants_from_json(const Json& j) {
  PhysicalConstants k;
  if (j.contains("e")) k.e = rational_from_json(j.at("e"));
  if (j.contains("c")) k.c = rational_from_json(j.at("c"));
  if (j.contains("m")) k.m = rational_from_json(j.at("m"));
  if (j.contains("hbar")) k.hbar = rational_from_json(j.at("hbar"));
  k.validate();
  return k;
}

Json generator_spec_to_json(const GeneratorSpec& spec) {
  Json j;
  j["kind"] = to_string(spec.kind);
  j["axis"] = spec.axis;
  j["gauge"] = spec.gauge_label;
  j["basepoint"] = {to_string(spec.basepoint[0]), to_string(spec.basepoint[1]),
                    to_string(spec.basepoint[2])};
  j["observable"] = poly_to_json<6>(spec.observable);
  return j;
}

GaugePotential potential_from_json(const Json& j) {
  if (j.contains("builtin")) {
    const std::string name = j.at("builtin").get<std::string>();
    if (name == "symmetric") {
      const auto& B = j.at("B");
      if (!B.is_array() || B.size() != 3)
        throw std::invalid_argument("symmetric gauge needs B as a 3-vector");
      return symmetric_gauge(
          {rational_from_json(B[0]), rational_from_json(B[1]), rational_from_json(B[2])});
    }
    if (name == "landau")
      return landau_gauge(rational_from_json(j.at("B")), j.value("axis", 3));
    if (name == "gradient")
      return gradient_gauge(rational_from_json(j.at("B0")), rational_from_json(j.at("beta")));
    if (name == "dipole") {
      const auto& mu = j.at("mu");
      if (!mu.is_array() || mu.size() != 3)
        throw std::invalid_argument("dipole needs mu as a 3-vector");
      return dipole_potential({mu[0].get<double>(), mu[1].get<double>(), mu[2].get<double>()});
    }
    throw std::invalid_argument("unknown builtin potential '" + name + "'");
  }
  if (j.contains("components")) {
    const auto& comps = j.at("components");
    if (!comps.is_array() || comps.size() != 3)
      throw std::invalid_argument("inline potential needs 3 polynomial components");
    GaugePotential A;
    A.kind = FieldKind::polynomial;
    for (int i = 0; i < 3; ++i) A.components[i] = poly_from_json<3>(comps[i]);
    A.label = j.value("label", "inline");
    return A;
  }
  throw std::invalid_argument("field selection needs 'builtin' or 'components'");
}

}  // namespace magsym
