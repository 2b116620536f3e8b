#include "tiltkit/json_io.hpp"

#include "tiltkit/error.hpp"

namespace tiltkit {

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::ParseError, "expected a rational string, got " + j.dump());
}

std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array, got " + j.dump());
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

json rationals_to_json(std::span<const Rational> v) {
  json arr = json::array();
  for (const auto& r : v) arr.push_back(r.str());
  return arr;
}

BigInt integer_from_json(const json& j) {
  const Rational r = rational_from_json(j);
  if (!r.is_integer()) throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
  return r.num();
}

}  // namespace

json poly_to_json(const Poly& p) { return json{{"coeffs", rationals_to_json(p.coeffs())}}; }

Poly poly_from_json(const json& j) {
  if (j.is_string()) return Poly::parse(j.get<std::string>());
  if (j.is_object() && j.contains("coeffs")) return Poly(rationals_from_json(j.at("coeffs")));
  throw Error(ErrorCode::ParseError, "expected a polynomial object, got " + j.dump());
}

json measure_to_json(const GridMeasure& m) {
  return json{{"denom", m.denom().get_str()},
              {"offset", m.offset().get_str()},
              {"masses", rationals_to_json(m.masses().coeffs())}};
}

GridMeasure measure_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "expected a measure object, got " + j.dump());
  if (j.contains("points")) {
    return to_grid(rationals_from_json(j.at("points")), rationals_from_json(j.at("masses")));
  }
  if (!j.contains("denom") || !j.contains("offset") || !j.contains("masses"))
    throw Error(ErrorCode::ParseError, "measure needs denom, offset and masses");
  return GridMeasure(integer_from_json(j.at("denom")), integer_from_json(j.at("offset")),
                     Poly(rationals_from_json(j.at("masses"))));
}

}  // namespace tiltkit
