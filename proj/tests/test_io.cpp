#include <doctest.h>

#include "oracles.hpp"
#include "qvf/io.hpp"
#include "qvf/sampling.hpp"

using namespace qvf;
using nlohmann::json;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parser on the reference polynomials") {
  const Poly2c P = oracle::example_v().P();
  CHECK((parse_polynomial("x^2+2*x*y-x").coefficients() - P.coefficients()).norm() == 0.0);
  CHECK((parse_polynomial("x*(x+2*y-1)").coefficients() - P.coefficients()).norm() == 0.0);
  CHECK((parse_polynomial("x(x + 2y - 1)").coefficients() - P.coefficients()).norm() == 0.0);
  CHECK((parse_polynomial("-xy+3y^2-3y").coefficients() - oracle::example_v().Q().coefficients()).norm() == 0.0);
  const Poly2c t = parse_polynomial("-(7/3)x^2 - 5xy + y^2 + (7/3)x - y");
  CHECK((t.coefficients() - oracle::example_twin().Q().coefficients()).norm() < 1e-15);
}

TEST_CASE("parser numbers, complex unit and powers") {
  Poly2c p = parse_polynomial("(1+2i) x^2 - 2.5e-1 y + i");
  CHECK(p[Monomial::XX] == Complex(1, 2));
  CHECK(p[Monomial::Y] == Complex(-0.25, 0));
  CHECK(p[Monomial::One] == Complex(0, 1));
  p = parse_polynomial("(x+y)^2 - 2^3");
  CHECK(p[Monomial::XY] == Complex(2.0));
  CHECK(p[Monomial::One] == Complex(-8.0));
  p = parse_polynomial("x^3 / 2 - x^3 / 2 + x / (1 + i)");
  CHECK(p[Monomial::XX] == Complex(0.0));
  CHECK(std::abs(p[Monomial::X] - Complex(0.5, -0.5)) < 1e-15);
}

TEST_CASE("parser errors") {
  CHECK(kind_of([] { parse_polynomial("x^3"); }) == ErrorKind::DegreeTooHigh);
  CHECK(kind_of([] { parse_polynomial("x*y*x"); }) == ErrorKind::DegreeTooHigh);
  CHECK(kind_of([] { parse_polynomial(""); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_polynomial("x +"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_polynomial("(x + 1"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_polynomial("x / y"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_polynomial("x ^ y"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_polynomial("2 $ x"); }) == ErrorKind::SyntaxError);
  try {
    parse_polynomial("x + 2 $");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("parser agrees with a random expression printer") {
  oracle::ExpressionPrinter printer(81);
  for (int n = 0; n < 100; ++n) {
    const auto sample = printer.next();
    CAPTURE(sample.text);
    const Poly2c p = parse_polynomial(sample.text);
    CHECK((p.coefficients() - sample.expected.coefficients()).cwiseAbs().maxCoeff() <
          1e-12 * (1.0 + sample.expected.max_abs()));
  }
}

TEST_CASE("document round trip") {
  Rng rng(82);
  for (int n = 0; n < 50; ++n) {
    const QuadraticField v = random_field(rng);
    const json j = to_json(to_document(v, "sample"));
    const VectorFieldDocument doc = document_from_json(json::parse(j.dump()));
    CHECK(doc.label == std::optional<std::string>("sample"));
    CHECK(max_coefficient_difference(to_field(doc), v) == 0.0);
    CHECK(to_json(doc) == j);
  }
}

TEST_CASE("document defaults and rejections") {
  const json sparse = json::parse(R"({"P": {"x2": [1, 0]}, "Q": {"y2": [0, 1]}})");
  const VectorFieldDocument doc = document_from_json(sparse);
  CHECK(doc.P[Monomial::XX] == Complex(1.0));
  CHECK(doc.Q[Monomial::YY] == Complex(0.0, 1.0));
  CHECK(doc.P[Monomial::One] == Complex(0.0));
  const json full = to_json(doc);
  CHECK(full["P"].size() == 6);
  CHECK(full["Q"].size() == 6);

  const json tol = json::parse(R"({"P": {"x2": [1, 0]}, "tolerance": {"relative": 1e-6}})");
  CHECK(document_from_json(tol).tolerance->relative == 1e-6);

  for (const char* text : {R"({"P": {"x3": [1, 0]}})", R"({"R": {}})", R"({"P": {"x": 1}})",
                           R"({"P": {"x": [1, 2, 3]}})", R"([1, 2])", R"({"tolerance": {"loose": 1}})",
                           R"({"label": 7})"})
    CHECK(kind_of([&] { document_from_json(json::parse(text)); }) == ErrorKind::InvalidDocument);

  CHECK(kind_of([] { to_field(document_from_json(json::parse(R"({"P": {"x": [1, 0]}})"))); }) ==
        ErrorKind::AffineField);
}

TEST_CASE("singular point json round trip") {
  const SingularPoint p{Point(Complex(1, 2), Complex(-3, 0.5)), {Complex(0.25, 0), Complex(-1, 1)}};
  const SingularPoint q = singular_point_from_json(singular_point_to_json(p));
  CHECK(q.position == p.position);
  CHECK(q.spectrum.trace == p.spectrum.trace);
  CHECK(q.spectrum.determinant == p.spectrum.determinant);
}

}
