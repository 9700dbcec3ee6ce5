#pragma once

// JSON encoding of scalars, parameter sets and boundary data (nlohmann/json).
//
// Exact literals: a real value is the string "p/q" (or "p"); a complex value
// is {"re": "p/q", "im": "p/q"}. Integers are also accepted on input.

#include <string>
#include <vector>

#include <json.hpp>

#include "sixvertex/boundary.hpp"
#include "sixvertex/error.hpp"
#include "sixvertex/random.hpp"
#include "sixvertex/scalar.hpp"

namespace sixvertex {

using Json = nlohmann::ordered_json;

inline Json to_json(const Scalar& x) {
  if (x.is_real()) return to_string(x.re());
  return Json{{"re", to_string(x.re())}, {"im", to_string(x.im())}};
}

// Always the {re, im} form, as used in result files.
inline Json to_json_pair(const Scalar& x) { return Json{{"re", to_string(x.re())}, {"im", to_string(x.im())}}; }

inline Json to_json(const Complex& x) { return Json{{"re", x.real()}, {"im", x.imag()}}; }

template <FieldScalar T>
Json to_json(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

template <FieldScalar T>
Json to_json(const Vec2<T>& x) {
  return Json::array({to_json(x[0]), to_json(x[1])});
}

inline Json to_json(const Instance& in) {
  const auto& b = in.cfg;
  return Json{{"c", to_json(in.params.c)},
              {"u", to_json(in.params.u)},
              {"v", to_json(in.params.v)},
              {"boundary",
               {{"w", to_json(b.w)},
                {"e", to_json(b.e)},
                {"n", to_json(b.n)},
                {"s", to_json(b.s)},
                {"a", to_json(b.a)},
                {"d_tilde", to_json(b.d_tilde)}}}};
}

// Decoders take the JSON pointer of the value so errors can be located.
namespace detail {

inline Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw SchemaError(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw SchemaError(where, "expected a rational string \"p/q\" or an integer");
}

}  // namespace detail

inline Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_object()) {
    for (const auto& [key, _] : j.items()) {
      if (key != "re" && key != "im") throw SchemaError(where + "/" + key, "unknown key in complex literal");
    }
    if (!j.contains("re")) throw SchemaError(where, "complex literal needs \"re\"");
    const Rational re = detail::rational_from_json(j.at("re"), where + "/re");
    const Rational im = j.contains("im") ? detail::rational_from_json(j.at("im"), where + "/im") : Rational(0);
    return Scalar(re, im);
  }
  return Scalar(detail::rational_from_json(j, where));
}

inline std::vector<Scalar> scalars_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array");
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(scalar_from_json(j[k], where + "/" + std::to_string(k)));
  return out;
}

inline Vec2<Scalar> vec2_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(where, "expected a pair [x1, x2]");
  return {scalar_from_json(j[0], where + "/0"), scalar_from_json(j[1], where + "/1")};
}

}  // namespace sixvertex
