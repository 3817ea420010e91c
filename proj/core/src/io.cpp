#include "curvelim/io.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace curvelim {

namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw std::invalid_argument(std::string(what) + ": not valid JSON-compatible text");
  }
  return j;
}

int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw std::invalid_argument(std::string(what) + ": expected an exact integer");
  }
  return j.get<int64_t>();
}

std::vector<int64_t> as_int_list(const json& j, const char* what) {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string(what) + ": expected a list of integers");
  }
  std::vector<int64_t> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(as_int(e, what));
  return out;
}

Place place_from_json(const Curve& c, const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Place::infinity();
    throw std::invalid_argument("place: the only string form is \"inf\"");
  }
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("place: expected [x, y] or \"inf\"");
  }
  int64_t x = mod_reduce(as_int(j[0], "place"), c.p());
  int64_t y = mod_reduce(as_int(j[1], "place"), c.p());
  Place pl = Place::affine(x, y);
  c.require_on_curve(pl);
  return pl;
}

json place_to_json(const Place& pl) {
  if (pl.is_infinity()) return json("inf");
  return json::array({pl.x(), pl.y()});
}

json poly_to_json(const Polynomial& q) {
  json arr = json::array();
  for (int64_t c : q.coeffs()) arr.push_back(c);
  if (arr.empty()) arr.push_back(0);  // the zero polynomial prints as [0]
  return arr;
}

json divisor_to_json(const Divisor& d) {
  json arr = json::array();
  for (const auto& [pl, m] : d.terms()) arr.push_back(json::array({place_to_json(pl), m}));
  return arr;
}

json fp_list_to_json(const std::vector<Fp>& values) {
  json arr = json::array();
  for (const Fp& v : values) arr.push_back(v.value());
  return arr;
}

}  // namespace

Curve parse_curve(const std::string& text) {
  json j = parse_text(text, "curve");
  if (!j.is_object() || !j.contains("p") || !j.contains("f")) {
    throw std::invalid_argument("curve: expected {\"p\": prime, \"f\": [coefficients]}");
  }
  int64_t p = as_int(j["p"], "curve p");
  return Curve(p, Polynomial(p, as_int_list(j["f"], "curve f")));
}

Place parse_place(const Curve& c, const std::string& text) {
  return place_from_json(c, parse_text(text, "place"));
}

Divisor parse_divisor(const Curve& c, const std::string& text) {
  json j = parse_text(text, "divisor");
  if (!j.is_array()) {
    throw std::invalid_argument("divisor: expected [[place, multiplicity], ...]");
  }
  Divisor d;
  for (const json& term : j) {
    if (!term.is_array() || term.size() != 2) {
      throw std::invalid_argument("divisor: each term must be [place, multiplicity]");
    }
    d.add(place_from_json(c, term[0]), as_int(term[1], "divisor multiplicity"));
  }
  return d;
}

DivisorClass parse_class(const Curve& c, const std::string& text) {
  // Shorthand H^k for powers of the hyperelliptic class.
  if (!text.empty() && (text[0] == 'H' || (text[0] == '"'))) {
    std::string body = text;
    if (body.size() >= 2 && body.front() == '"' && body.back() == '"') {
      body = body.substr(1, body.size() - 2);
    }
    if (!body.empty() && body[0] == 'H') {
      int64_t k = 1;
      if (body.size() > 1) {
        if (body[1] != '^') {
          throw std::invalid_argument("class: shorthand is H or H^k");
        }
        try {
          size_t used = 0;
          k = std::stoll(body.substr(2), &used);
          if (used != body.size() - 2) throw std::invalid_argument("trailing text");
        } catch (const std::exception&) {
          throw std::invalid_argument("class: malformed exponent in H^k shorthand");
        }
      }
      return DivisorClass::h_power(c, k);
    }
  }
  json j = parse_text(text, "class");
  if (!j.is_object() || !j.contains("u") || !j.contains("v") || !j.contains("degree")) {
    throw std::invalid_argument(
        "class: expected {\"u\": [...], \"v\": [...], \"degree\": d} or H^k");
  }
  return DivisorClass(c, Polynomial(c.p(), as_int_list(j["u"], "class u")),
                      Polynomial(c.p(), as_int_list(j["v"], "class v")),
                      as_int(j["degree"], "class degree"));
}

FunctionElement parse_element(const Curve& c, const std::string& text) {
  json j = parse_text(text, "element");
  if (!j.is_object() || !j.contains("a")) {
    throw std::invalid_argument(
        "element: expected {\"a\": [...], \"b\": [...], \"c\": [...]} (b, c optional)");
  }
  int64_t p = c.p();
  Polynomial a(p, as_int_list(j["a"], "element a"));
  Polynomial b = j.contains("b") ? Polynomial(p, as_int_list(j["b"], "element b"))
                                 : Polynomial(p, {0});
  Polynomial den = j.contains("c") ? Polynomial(p, as_int_list(j["c"], "element c"))
                                   : Polynomial(p, {1});
  return FunctionElement(a, b, den);
}

std::string curve_json(const Curve& c) {
  json j;
  j["p"] = c.p();
  j["f"] = poly_to_json(c.f());
  return j.dump();
}

std::string place_json(const Place& p) { return place_to_json(p).dump(); }

std::string divisor_json(const Divisor& d) { return divisor_to_json(d).dump(); }

std::string class_json(const DivisorClass& a) {
  json j;
  j["u"] = poly_to_json(a.u());
  j["v"] = poly_to_json(a.v());
  j["degree"] = a.degree();
  return j.dump();
}

std::string element_json(const FunctionElement& h) {
  json j;
  j["a"] = poly_to_json(h.a());
  j["b"] = poly_to_json(h.b());
  j["c"] = poly_to_json(h.c());
  return j.dump();
}

std::string verdict_json(const LimitVerdict& v) {
  json j;
  j["is_limit"] = v.is_limit;
  j["reason"] = v.reason;
  if (v.k) j["k"] = *v.k;
  return j.dump();
}

std::string decomposition_json(const Decomposition& d) {
  json j;
  j["k"] = d.k;
  j["d"] = divisor_to_json(d.d);
  j["class"] = json::parse(class_json(d.cls));
  return j.dump();
}

std::string pairing_report_json(const PairingReport& r) {
  json j;
  j["values"] = fp_list_to_json(r.values);
  j["splits"] = r.splits;
  return j.dump();
}

std::string certificate_json(const Certificate& c) {
  json j;
  j["d"] = c.d;
  j["k"] = c.k;
  j["genus"] = c.genus;
  j["assumptions"] = c.assumptions;
  json steps = json::array();
  for (const CertificateStep& s : c.steps) {
    json step;
    step["statement"] = s.statement;
    step["value"] = s.lhs;
    step["bound"] = s.required;
    step["pass"] = s.pass;
    steps.push_back(step);
  }
  j["steps"] = steps;
  j["verdict"] = c.verdict;
  return j.dump();
}

}  // namespace curvelim
