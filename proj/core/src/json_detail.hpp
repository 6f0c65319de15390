#pragma once

// Shared JSON conversions for the curve-data and cache formats.

#include <nlohmann/json.hpp>

#include "agdec/errors.hpp"
#include "agdec/field.hpp"
#include "agdec/module_row.hpp"

namespace agdec::detail {

using nlohmann::json;

inline json elem_to_json(const Field& F, Elem e) { return json(F.digits(e)); }

inline Elem elem_from_json(const Field& F, const json& j) {
  if (!j.is_array()) throw ParseError("field element must be a digit array");
  return F.from_digits(j.get<std::vector<std::uint32_t>>());
}

inline json poly_to_json(const Field& F, const Poly& p) {
  json out = json::array();
  for (auto c : p.coeffs()) out.push_back(elem_to_json(F, c));
  return out;
}

inline Poly poly_from_json(const Field& F, const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of elements");
  std::vector<Elem> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(elem_from_json(F, e));
  return Poly(std::move(c));
}

inline json rbar_to_json(const Field& F, const RBarElement& f) {
  json out = json::array();
  for (const auto& p : f.c) out.push_back(poly_to_json(F, p));
  return out;
}

inline RBarElement rbar_from_json(const Field& F, const json& j) {
  if (!j.is_array()) throw ParseError("Rbar element must be an array of polynomials");
  RBarElement f;
  for (const auto& p : j) f.c.push_back(poly_from_json(F, p));
  return f;
}

inline json vec_to_json(const Field& F, const std::vector<Elem>& v) {
  json out = json::array();
  for (auto e : v) out.push_back(elem_to_json(F, e));
  return out;
}

inline std::vector<Elem> vec_from_json(const Field& F, const json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array of elements");
  std::vector<Elem> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(elem_from_json(F, e));
  return v;
}

}  // namespace agdec::detail
