#pragma once

#include <json.hpp>

#include "paramod/affine_form.hpp"
#include "paramod/rational.hpp"

namespace paramod {

using Json = nlohmann::ordered_json;

inline Json rational_to_json(const Rational& r) { return Json(r.str()); }

inline Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer())
    return Rational(static_cast<long long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(where + ": " + e.what());
    }
  }
  throw std::runtime_error(where + ": expected rational as string or integer");
}

inline Json affine_to_json(const AffineForm& f) {
  Json j = Json::object();
  j["c0"] = f.c0.str();
  j["cn"] = f.cn.str();
  j["ci"] = f.ci.str();
  return j;
}

inline AffineForm affine_from_json(const Json& j, const std::string& where) {
  if (j.is_string() || j.is_number_integer())
    return AffineForm(rational_from_json(j, where));
  if (!j.is_object())
    throw std::runtime_error(where + ": expected affine form object");
  AffineForm f;
  for (const auto& [key, value] : j.items()) {
    if (key == "c0")
      f.c0 = rational_from_json(value, where + ".c0");
    else if (key == "cn")
      f.cn = rational_from_json(value, where + ".cn");
    else if (key == "ci")
      f.ci = rational_from_json(value, where + ".ci");
    else
      throw std::runtime_error(where + ": unknown affine form key '" + key +
                               "'");
  }
  return f;
}

}  // namespace paramod
