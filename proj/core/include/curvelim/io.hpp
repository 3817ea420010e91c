#pragma once

#include <string>

#include "curvelim/classification.hpp"
#include "curvelim/curve.hpp"
#include "curvelim/pairing.hpp"
#include "curvelim/picard.hpp"
#include "curvelim/plane.hpp"
#include "curvelim/riemann_roch.hpp"

namespace curvelim {

// Text formats, JSON-compatible, all integers exact:
//   curve     {"p": 7, "f": [0, -1, 0, 0, 0, 1]}     (coefficients low-to-high,
//             reduced mod p on load)
//   place     [x, y]  or the string "inf"
//   divisor   [[place, multiplicity], ...]
//   class     {"u": [...], "v": [...], "degree": d}  or the shorthand "H^k"
//   element   {"a": [...], "b": [...], "c": [...]}   (b, c optional; the
//             function (a(x) + y*b(x)) / c(x))
// Parsers throw std::invalid_argument with a descriptive message on
// malformed text, unknown fields aside; model violations (points off the
// curve, non-reduced Mumford data) surface from the underlying validators.
// Serializers emit deterministic field order, so equal values give
// byte-identical text.

Curve parse_curve(const std::string& text);
Place parse_place(const Curve& c, const std::string& text);
Divisor parse_divisor(const Curve& c, const std::string& text);
DivisorClass parse_class(const Curve& c, const std::string& text);
FunctionElement parse_element(const Curve& c, const std::string& text);

std::string curve_json(const Curve& c);
std::string place_json(const Place& p);
std::string divisor_json(const Divisor& d);
std::string class_json(const DivisorClass& a);
std::string element_json(const FunctionElement& h);
std::string verdict_json(const LimitVerdict& v);
std::string decomposition_json(const Decomposition& d);
std::string pairing_report_json(const PairingReport& r);
std::string certificate_json(const Certificate& c);

}  // namespace curvelim
