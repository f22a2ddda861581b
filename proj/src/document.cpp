#include <string>

#include "qvf/io.hpp"

namespace qvf {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::InvalidDocument, what);
}

Poly2c poly_from_json(const json& j, const char* name) {
  if (!j.is_object()) invalid(std::string(name) + " must be an object of monomial coefficients");
  Poly2c p;
  for (const auto& [key, value] : j.items()) {
    int index = -1;
    for (int k = 0; k < 6; ++k)
      if (key == kMonomialNames[k]) index = k;
    if (index < 0) invalid(std::string("unknown monomial key '") + key + "' in " + name);
    p.coefficients()(index) = complex_from_json(value);
  }
  return p;
}

}  // namespace

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    invalid("complex numbers must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json poly_to_json(const Poly2c& p) {
  json out = json::object();
  for (int k = 0; k < 6; ++k) out[kMonomialNames[k]] = complex_to_json(p.coefficients()(k));
  return out;
}

json field_to_json(const QuadraticField& v) {
  return json{{"P", poly_to_json(v.P())}, {"Q", poly_to_json(v.Q())}};
}

json spectrum_to_json(const Spectrum& s) {
  return json{{"trace", complex_to_json(s.trace)}, {"determinant", complex_to_json(s.determinant)}};
}

json point_to_json(const Point& p) {
  return json::array({complex_to_json(p(0)), complex_to_json(p(1))});
}

json singular_point_to_json(const SingularPoint& p) {
  return json{{"position", point_to_json(p.position)}, {"spectrum", spectrum_to_json(p.spectrum)}};
}

SingularPoint singular_point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("position") || !j.contains("spectrum"))
    invalid("singular point needs 'position' and 'spectrum'");
  for (const auto& [key, value] : j.items())
    if (key != "position" && key != "spectrum") invalid("unknown key '" + key + "' in singular point");
  const json& pos = j.at("position");
  if (!pos.is_array() || pos.size() != 2) invalid("position must be a pair of complex numbers");
  const json& spec = j.at("spectrum");
  if (!spec.is_object() || !spec.contains("trace") || !spec.contains("determinant") || spec.size() != 2)
    invalid("spectrum must have exactly 'trace' and 'determinant'");
  SingularPoint p;
  p.position = Point(complex_from_json(pos[0]), complex_from_json(pos[1]));
  p.spectrum = {complex_from_json(spec.at("trace")), complex_from_json(spec.at("determinant"))};
  return p;
}

json affine_map_to_json(const AffineMap& T) {
  const Matrix2c& L = T.linear();
  return json{{"linear", json::array({json::array({complex_to_json(L(0, 0)), complex_to_json(L(0, 1))}),
                                      json::array({complex_to_json(L(1, 0)), complex_to_json(L(1, 1))})})},
              {"translation", point_to_json(T.translation())}};
}

json canonical_to_json(const CanonicalCoefficients& c) {
  json out = json::array();
  for (int k = 0; k < 6; ++k) out.push_back(complex_to_json(c.a(k)));
  return out;
}

VectorFieldDocument document_from_json(const json& j) {
  if (!j.is_object()) invalid("vector field document must be a JSON object");
  VectorFieldDocument doc;
  for (const auto& [key, value] : j.items()) {
    if (key == "P") {
      doc.P = poly_from_json(value, "P");
    } else if (key == "Q") {
      doc.Q = poly_from_json(value, "Q");
    } else if (key == "label") {
      if (!value.is_string()) invalid("label must be a string");
      doc.label = value.get<std::string>();
    } else if (key == "tolerance") {
      if (!value.is_object()) invalid("tolerance must be an object");
      Tolerance tol = default_tolerance();
      for (const auto& [tk, tv] : value.items()) {
        if (!tv.is_number() || tv.get<double>() < 0.0) invalid("tolerance values must be non-negative numbers");
        if (tk == "relative") tol.relative = tv.get<double>();
        else if (tk == "absolute") tol.absolute = tv.get<double>();
        else invalid("unknown tolerance key '" + tk + "'");
      }
      doc.tolerance = tol;
    } else {
      invalid("unknown document key '" + key + "'");
    }
  }
  return doc;
}

json to_json(const VectorFieldDocument& doc) {
  json out{{"P", poly_to_json(doc.P)}, {"Q", poly_to_json(doc.Q)}};
  if (doc.label) out["label"] = *doc.label;
  if (doc.tolerance)
    out["tolerance"] = json{{"relative", doc.tolerance->relative}, {"absolute", doc.tolerance->absolute}};
  return out;
}

VectorFieldDocument to_document(const QuadraticField& v, std::optional<std::string> label) {
  return {v.P(), v.Q(), std::move(label), std::nullopt};
}

QuadraticField to_field(const VectorFieldDocument& doc) { return QuadraticField(doc.P, doc.Q); }

}  // namespace qvf
