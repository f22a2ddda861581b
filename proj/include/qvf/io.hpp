#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qvf/affine.hpp"
#include "qvf/core.hpp"
#include "qvf/locus.hpp"

namespace qvf {

/// Parses a polynomial of total degree at most two over x, y and the
/// imaginary unit i:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'|'/'] factor)*      juxtaposition multiplies
///   factor := primary ('^' posint)*  |  ('+'|'-') factor
///   primary:= number | 'i' | 'x' | 'y' | '(' expr ')'
///
/// Division is by constants only. Throws SyntaxError (with position) and
/// DegreeTooHigh.
Poly2c parse_polynomial(std::string_view text);

/// JSON description of a field: coefficient tables keyed by "1", "x", "y",
/// "x2", "xy", "y2" with [re, im] values, plus optional metadata.
struct VectorFieldDocument {
  Poly2c P;
  Poly2c Q;
  std::optional<std::string> label;
  std::optional<Tolerance> tolerance;
};

/// Throws InvalidDocument on unknown keys or malformed values.
VectorFieldDocument document_from_json(const nlohmann::json& j);
nlohmann::json to_json(const VectorFieldDocument& doc);

VectorFieldDocument to_document(const QuadraticField& v,
                                std::optional<std::string> label = std::nullopt);
/// Throws AffineField when the quadratic part vanishes.
QuadraticField to_field(const VectorFieldDocument& doc);

nlohmann::json complex_to_json(const Complex& z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const Poly2c& p);
nlohmann::json field_to_json(const QuadraticField& v);
nlohmann::json spectrum_to_json(const Spectrum& s);
nlohmann::json point_to_json(const Point& p);
nlohmann::json singular_point_to_json(const SingularPoint& p);
nlohmann::json affine_map_to_json(const AffineMap& T);
nlohmann::json canonical_to_json(const CanonicalCoefficients& c);

SingularPoint singular_point_from_json(const nlohmann::json& j);

}  // namespace qvf
