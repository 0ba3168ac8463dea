#pragma once

#include <string>

#include "srk/quotient.hpp"

namespace srk {

// Function-spec document: a JSON object with a "kind" discriminator.
//   {"kind":"poly","coeffs":[[w,x,y,z],...]}
//   {"kind":"quotient","den":{poly},"num":{poly},"right_const":[w,x,y,z]?}
//   {"kind":"mobius_ball","u":[w,x,y,z],"normalize":bool?,"right_const":[...]?}
//   {"kind":"affine_halfspace","a":positive real,"b":[w,x,y,z] with Re b >= 0}
//   {"kind":"sum","terms":[spec,...]}  (half-space positive-real combinations)
// ParseError carries line/column for malformed JSON and a JSON path for shape
// errors; ValidationError flags semantic violations (|u| >= 1, a <= 0, zero
// denominator, a sum that leaves the right half-space).
RegularMap parse_function_spec(const std::string& text);

RegularMap load_function_spec(const std::string& path);

// Canonical poly/quotient form, 17 significant digits; parse(serialize(m))
// reproduces m coefficientwise exactly.
std::string serialize_function_spec(const RegularMap& m);

}  // namespace srk
