// Text formats: parsing and deterministic serialization of curves, places,
// divisors, classes, function elements, and the report types.  The wire
// format is JSON-compatible with exact integers only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "curvelim/io.hpp"

using namespace curvelim;

namespace {

Curve genus2_f7() { return parse_curve(R"({"p":7,"f":[0,-1,0,0,0,1]})"); }

}  // namespace

TEST_CASE("curve text: load, reduce, round-trip, reject") {
  Curve c = genus2_f7();
  CHECK(c.p() == 7);
  CHECK(c.genus() == 2);
  // Coefficients are reduced mod p on load: -1 becomes 6.
  CHECK(curve_json(c) == R"({"p":7,"f":[0,6,0,0,0,1]})");
  CHECK(parse_curve(curve_json(c)) == c);

  CHECK_THROWS_AS(parse_curve("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve(R"({"p":7})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve(R"({"f":[0,1]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve(R"({"p":7,"f":[0,1.5,0,0,0,1]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve(R"({"p":8,"f":[0,6,0,0,0,1]})"), std::invalid_argument);
  // Model violations surface from the curve validator.
  CHECK_THROWS(parse_curve(R"({"p":7,"f":[0,6,0,0,1]})"));  // even degree
}

TEST_CASE("place and divisor text") {
  Curve c = genus2_f7();
  CHECK(parse_place(c, "[3,3]") == Place::affine(3, 3));
  CHECK(parse_place(c, R"("inf")") == Place::infinity());
  CHECK(parse_place(c, "[3,-4]") == Place::affine(3, 3));  // reduced mod 7
  CHECK(place_json(Place::infinity()) == R"("inf")");
  CHECK(place_json(Place::affine(3, 3)) == "[3,3]");
  CHECK_THROWS_AS(parse_place(c, "[3]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_place(c, R"("nowhere")"), std::invalid_argument);
  CHECK_THROWS_AS(parse_place(c, "[3,5]"), std::domain_error);  // off the curve

  Divisor d = parse_divisor(c, R"([["inf",2],[[3,3],1]])");
  CHECK(d.degree() == 3);
  CHECK(d.mult_at(Place::infinity()) == 2);
  CHECK(d.mult_at(Place::affine(3, 3)) == 1);
  // Serialization is support-sorted, so it normalizes input order.
  CHECK(divisor_json(d) == R"([[[3,3],1],["inf",2]])");
  CHECK(parse_divisor(c, divisor_json(d)) == d);
  CHECK(parse_divisor(c, "[]").is_zero());
  CHECK(divisor_json(Divisor()) == "[]");
  // Zero multiplicities vanish; repeated places accumulate.
  CHECK(parse_divisor(c, R"([[[3,3],1],[[3,3],-1]])").is_zero());
  CHECK_THROWS_AS(parse_divisor(c, R"([["inf"]])"), std::invalid_argument);
  CHECK_THROWS_AS(parse_divisor(c, R"({"inf":2})"), std::invalid_argument);
}

TEST_CASE("class text: Mumford form and the H^k shorthand") {
  Curve c = genus2_f7();
  CHECK(parse_class(c, "H^1") == DivisorClass::h_class(c));
  CHECK(parse_class(c, "H") == DivisorClass::h_class(c));
  CHECK(parse_class(c, R"("H^3")") == DivisorClass::h_power(c, 3));
  CHECK(parse_class(c, "H^0") == DivisorClass::identity(c));
  CHECK(parse_class(c, "H^-1") == DivisorClass::h_power(c, -1));

  CHECK(class_json(DivisorClass::h_class(c)) == R"({"u":[1],"v":[0],"degree":2})");
  DivisorClass a = class_of(c, parse_divisor(c, R"([[[3,3],1],[[2,3],1]])"));
  CHECK(parse_class(c, class_json(a)) == a);

  CHECK_THROWS_AS(parse_class(c, "H^x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_class(c, "H2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_class(c, R"({"u":[1],"v":[0]})"), std::invalid_argument);
  // Mumford violations surface from the class validator: x + 2 does not
  // divide v^2 - f for v = 0.
  CHECK_THROWS_AS(parse_class(c, R"({"u":[2,1],"v":[0],"degree":0})"),
                  std::invalid_argument);
}

TEST_CASE("function element text") {
  Curve c = genus2_f7();
  FunctionElement x = parse_element(c, R"({"a":[0,1]})");
  CHECK(x == FunctionElement::from_poly(Polynomial(7, {0, 1})));
  FunctionElement h = parse_element(c, R"({"a":[1],"b":[2],"c":[0,1]})");
  CHECK(h.b() == Polynomial(7, {2}));
  CHECK(parse_element(c, element_json(h)) == h);
  CHECK(element_json(x) == R"({"a":[0,1],"b":[0],"c":[1]})");
  CHECK_THROWS_AS(parse_element(c, R"({"b":[1]})"), std::invalid_argument);
  CHECK_THROWS(parse_element(c, R"({"a":[1],"c":[0]})"));  // zero denominator
}

TEST_CASE("report serialization: stable field order and exact integers") {
  Curve c = genus2_f7();

  // The limit verdict format is pinned: reason code plus optional witness.
  LimitVerdict v{true, "PowerOfH", 1};
  CHECK(verdict_json(v) == R"({"is_limit":true,"reason":"PowerOfH","k":1})");
  LimitVerdict no{false, "NotClassified", std::nullopt};
  CHECK(verdict_json(no) == R"({"is_limit":false,"reason":"NotClassified"})");

  Decomposition dec = simple_decomposition(c, parse_divisor(c, R"([["inf",3]])"));
  CHECK(decomposition_json(dec) ==
        R"({"k":1,"d":[["inf",1]],"class":{"u":[1],"v":[0],"degree":3}})");

  PairingReport rep;
  rep.values = {Fp(2, 7), Fp(0, 7)};
  rep.splits = false;
  CHECK(pairing_report_json(rep) == R"({"values":[2,0],"splits":false})");

  Certificate cert = prop4_certificate(5, 1);
  std::string cj = certificate_json(cert);
  CHECK(cj.find(R"("verdict":true)") != std::string::npos);
  CHECK(cj.find(R"("genus":6)") != std::string::npos);
  CHECK(cj.find(R"("steps":[)") != std::string::npos);
  CHECK(cj.find(R"("pass":true)") != std::string::npos);
  // Serialization is deterministic: equal values, identical text.
  CHECK(certificate_json(prop4_certificate(5, 1)) == cj);
  CHECK(verdict_json(v) == verdict_json(LimitVerdict{true, "PowerOfH", 1}));
}
