#include "qvf/affine.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>

namespace qvf {

namespace {

constexpr double kCollinear = 1e-8;
constexpr double kSpectrumPruning = 1e-6;

Matrix2c frame_of(const std::array<Point, 3>& t) {
  Matrix2c M;
  M.col(0) = t[1] - t[0];
  M.col(1) = t[2] - t[0];
  if (!(std::abs(M.determinant()) > kCollinear * M.col(0).norm() * M.col(1).norm()))
    throw Error(ErrorKind::CollinearPoints, "triple of points is collinear");
  return M;
}

bool spectra_close(const Spectrum& a, const Spectrum& b, double sigma) {
  return std::abs(a.trace - b.trace) <= kSpectrumPruning * sigma &&
         std::abs(a.determinant - b.determinant) <= kSpectrumPruning * sigma * sigma;
}

}  // namespace

AffineMap::AffineMap(const Matrix2c& linear, const Point& translation)
    : linear_(linear), translation_(translation) {
  if (!linear_.allFinite() || !translation_.allFinite())
    throw Error(ErrorKind::NonFinite, "affine map has non-finite entries");
  if (!(std::abs(linear_.determinant()) > kDegeneracyThreshold * linear_.squaredNorm()))
    throw Error(ErrorKind::SingularMap, "affine map is not invertible");
}

AffineMap AffineMap::rotation(double angle) {
  Matrix2c R;
  R << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return linear_map(R);
}

AffineMap AffineMap::inverse() const {
  const Matrix2c inv = linear_.inverse();
  return {inv, -inv * translation_};
}

QuadraticField transform(const QuadraticField& v, const AffineMap& T) {
  const AffineMap Ti = T.inverse();
  const Poly2c P = substitute(v.P(), Ti.linear(), Ti.translation());
  const Poly2c Q = substitute(v.Q(), Ti.linear(), Ti.translation());
  const Matrix2c& L = T.linear();
  return QuadraticField(L(0, 0) * P + L(0, 1) * Q, L(1, 0) * P + L(1, 1) * Q);
}

AffineMap map_triple(const std::array<Point, 3>& from, const std::array<Point, 3>& to) {
  const Matrix2c F = frame_of(from);
  const Matrix2c G = frame_of(to);
  const Matrix2c L = G * F.inverse();
  return {L, to[0] - L * from[0]};
}

Normalization normalize(const QuadraticField& v, const std::array<Point, 3>& triple) {
  const Matrix2c Minv = frame_of(triple).inverse();
  const AffineMap T(Minv, -Minv * triple[0]);
  const QuadraticField w = transform(v, T);
  const Poly2c& P = w.P();
  const Poly2c& Q = w.Q();
  CanonicalCoefficients c(P[Monomial::XX], P[Monomial::XY], P[Monomial::YY], Q[Monomial::XX],
                          Q[Monomial::XY], Q[Monomial::YY]);
  const double deviation = std::max(
      (P.coefficients() - c.P().coefficients()).cwiseAbs().maxCoeff(),
      (Q.coefficients() - c.Q().coefficients()).cwiseAbs().maxCoeff());
  if (!kMatchTolerance.negligible(deviation, w.max_abs()))
    throw Error(ErrorKind::NotSingularTriple, "triple is not a set of singular points of the field");
  return {c, T};
}

Normalization normalize(const QuadraticField& v, const SingularPoint& p1,
                        const SingularPoint& p2, const SingularPoint& p3) {
  return normalize(v, {p1.position, p2.position, p3.position});
}

Vector6c spec6(const CanonicalCoefficients& c) {
  const Poly2c P = c.P(), Q = c.Q();
  const std::array<Point, 3> marks = {Point(0.0, 0.0), Point(1.0, 0.0), Point(0.0, 1.0)};
  Vector6c out;
  for (int k = 0; k < 3; ++k) {
    const Spectrum s = spectrum_of(jacobian_at(P, Q, marks[k]));
    out(2 * k) = s.trace;
    out(2 * k + 1) = s.determinant;
  }
  return out;
}

Eigen::Matrix<Complex, 6, 6> spec6_jacobian(const CanonicalCoefficients& c) {
  Eigen::Matrix<Complex, 6, 6> J;
  for (int j = 0; j < 6; ++j) {
    const double h = 1e-6 * (1.0 + std::abs(c.a(j)));
    CanonicalCoefficients plus = c, minus = c;
    plus.a(j) += h;
    minus.a(j) -= h;
    J.col(j) = (spec6(plus) - spec6(minus)) / (2.0 * h);
  }
  return J;
}

int spec6_jacobian_rank(const CanonicalCoefficients& c) {
  return numerical_rank(spec6_jacobian(c));
}

int numerical_rank(const Eigen::MatrixXcd& m, double relative) {
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || !(s(0) > 0.0)) return 0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > relative * s(0)) ++rank;
  return rank;
}

std::optional<AffineMap> equivalence_witness(const QuadraticField& v, const QuadraticField& w) {
  const Locus lv = singular_points(v);
  const Locus lw = singular_points(w);
  double sigma = 0.0;
  for (const auto* l : {&lv, &lw})
    for (const auto& p : *l)
      sigma = std::max({sigma, std::abs(p.spectrum.trace),
                        std::sqrt(std::abs(p.spectrum.determinant))});

  const std::array<Point, 3> from = {lv[0].position, lv[1].position, lv[2].position};
  for (int i = 0; i < 4; ++i) {
    if (!spectra_close(lv[0].spectrum, lw[i].spectrum, sigma)) continue;
    for (int j = 0; j < 4; ++j) {
      if (j == i || !spectra_close(lv[1].spectrum, lw[j].spectrum, sigma)) continue;
      for (int k = 0; k < 4; ++k) {
        if (k == i || k == j || !spectra_close(lv[2].spectrum, lw[k].spectrum, sigma)) continue;
        try {
          const AffineMap T =
              map_triple(from, {lw[i].position, lw[j].position, lw[k].position});
          if (approx_equal(transform(v, T), w, kWitnessTolerance)) return T;
        } catch (const Error&) {
          // degenerate candidate map; try the next triple
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace qvf
