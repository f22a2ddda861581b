#pragma once

#include <array>
#include <optional>

#include <Eigen/Core>

#include "qvf/core.hpp"
#include "qvf/locus.hpp"

namespace qvf {

using Vector6c = Eigen::Matrix<Complex, 6, 1>;

/// Invertible affine map p -> L p + t of the complex plane.
class AffineMap {
 public:
  /// Throws SingularMap when L is (numerically) not invertible.
  AffineMap(const Matrix2c& linear, const Point& translation);

  static AffineMap identity() { return {Matrix2c::Identity(), Point::Zero()}; }
  static AffineMap translation(const Point& t) { return {Matrix2c::Identity(), t}; }
  static AffineMap linear_map(const Matrix2c& L) { return {L, Point::Zero()}; }
  static AffineMap rotation(double angle);

  const Matrix2c& linear() const { return linear_; }
  const Point& translation() const { return translation_; }

  Point operator()(const Point& p) const { return linear_ * p + translation_; }
  AffineMap inverse() const;

  /// Composition: (a * b)(p) = a(b(p)).
  friend AffineMap operator*(const AffineMap& a, const AffineMap& b) {
    return {a.linear_ * b.linear_, a.linear_ * b.translation_ + a.translation_};
  }

 private:
  Matrix2c linear_;
  Point translation_;
};

/// a1..a6 of the normal form with singularities at (0,0), (1,0), (0,1):
///   P = a1 x^2 + a2 xy + a3 y^2 - a1 x - a3 y
///   Q = a4 x^2 + a5 xy + a6 y^2 - a4 x - a6 y
/// a(0) holds a1.
struct CanonicalCoefficients {
  Vector6c a = Vector6c::Zero();

  CanonicalCoefficients() = default;
  explicit CanonicalCoefficients(const Vector6c& values) : a(values) {}
  CanonicalCoefficients(Complex a1, Complex a2, Complex a3, Complex a4, Complex a5, Complex a6) {
    a << a1, a2, a3, a4, a5, a6;
  }

  Poly2c P() const { return Poly2c(0.0, -a(0), -a(2), a(0), a(1), a(2)); }
  Poly2c Q() const { return Poly2c(0.0, -a(3), -a(5), a(3), a(4), a(5)); }
  /// Throws AffineField when all six coefficients vanish.
  QuadraticField field() const { return QuadraticField(P(), Q()); }
};

/// w = DT . v o T^{-1}, by exact substitution into the coefficients.
QuadraticField transform(const QuadraticField& v, const AffineMap& T);

/// Unique affine map sending from[i] to to[i]; CollinearPoints if either
/// triple is degenerate.
AffineMap map_triple(const std::array<Point, 3>& from, const std::array<Point, 3>& to);

struct Normalization {
  CanonicalCoefficients coefficients;
  AffineMap map;  // sends the triple to (0,0), (1,0), (0,1)
};

/// Moves an ordered triple of singular points to (0,0), (1,0), (0,1) and
/// reads off the canonical coefficients. Throws CollinearPoints, or
/// NotSingularTriple when the transformed field is not in canonical form.
Normalization normalize(const QuadraticField& v, const std::array<Point, 3>& triple);
Normalization normalize(const QuadraticField& v, const SingularPoint& p1,
                        const SingularPoint& p2, const SingularPoint& p3);

/// (tr, det) at (0,0), (1,0), (0,1) of the canonical field, flattened.
Vector6c spec6(const CanonicalCoefficients& c);

/// Central-difference Jacobian of spec6.
Eigen::Matrix<Complex, 6, 6> spec6_jacobian(const CanonicalCoefficients& c);
int spec6_jacobian_rank(const CanonicalCoefficients& c);

/// Count of singular values above relative * (largest singular value).
inline constexpr double kRankThreshold = 1e-6;
int numerical_rank(const Eigen::MatrixXcd& m, double relative = kRankThreshold);

/// An affine T with transform(v, T) == w, if one exists. Searches the
/// ordered triples of w's singularities whose spectra match v's first three.
std::optional<AffineMap> equivalence_witness(const QuadraticField& v, const QuadraticField& w);

inline constexpr Tolerance kWitnessTolerance{1e-7, 1e-12};

}  // namespace qvf
