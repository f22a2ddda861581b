#include "qvf/locus.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

namespace qvf {

namespace {

using Coeffs = std::vector<Complex>;

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  Coeffs r(a.size() + b.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Coeffs sub(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size(), Complex(0.0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

constexpr double kVanishingLeading = 1e-10;
constexpr double kZeroResultant = 1e-12;
constexpr double kBackSubstitution = 1e-6;
constexpr double kResidual = 1e-10;
constexpr double kDistinct = 1e-7;
constexpr double kOrderingTolerance = 1e-9;
constexpr int kNewtonSteps = 12;
// Fixed generic rotation used when neither coordinate elimination works.
constexpr double kRotationAngle = 0.5772156649015329;

double residual_ratio(const Poly2c& P, const Poly2c& Q, const Point& p) {
  // The epsilon floor matters only near the origin, where the monomial scale
  // shrinks with |p| and a root at exactly 0 would otherwise never pass.
  const double scale = P.evaluation_scale(p) + Q.evaluation_scale(p) +
                       std::numeric_limits<double>::epsilon() * (P.max_abs() + Q.max_abs());
  const double r = std::abs(P(p)) + std::abs(Q(p));
  return scale > 0.0 ? r / scale : r;
}

Point newton_refine(const Poly2c& P, const Poly2c& Q, Point p) {
  double best = residual_ratio(P, Q, p);
  for (int i = 0; i < kNewtonSteps && best > 0.0; ++i) {
    const Matrix2c J = jacobian_at(P, Q, p);
    const Eigen::PartialPivLU<Matrix2c> lu(J);
    if (lu.determinant() == Complex(0.0)) break;
    const Point step = lu.solve(Point(P(p), Q(p)));
    const Point next = p - step;
    const double r = residual_ratio(P, Q, next);
    if (!is_finite(next(0)) || !is_finite(next(1)) || !(r <= best)) break;
    p = next;
    best = r;
    if (step.norm() <= 1e-16 * (1.0 + p.norm())) break;
  }
  return p;
}

// y-roots of F(x0, y), or nothing when F vanishes along the line x = x0.
std::vector<Complex> roots_on_vertical(const Poly2c& F, const Complex& x0) {
  std::vector<Complex> c = {F[Monomial::One] + F[Monomial::X] * x0 + F[Monomial::XX] * x0 * x0,
                            F[Monomial::Y] + F[Monomial::XY] * x0, F[Monomial::YY]};
  double largest = 0.0;
  for (const auto& v : c) largest = std::max(largest, std::abs(v));
  const double a = 1.0 + std::abs(x0);
  if (largest <= kVanishingLeading * F.max_abs() * a * a) return {};
  const UnivariatePoly poly(std::move(c));
  if (poly.effective_degree() < 1) return {};
  try {
    return solve_univariate(poly).values();
  } catch (const Error&) {
    return {};
  }
}

// Intersections of P = 0 and Q = 0 by elimination of y. Returns nothing (and
// records why) when this projection cannot separate four simple points.
std::optional<std::array<Point, 4>> eliminate_y(const Poly2c& P, const Poly2c& Q,
                                                std::string& why) {
  const double scale = std::max(P.max_abs(), Q.max_abs());
  if (std::max(std::abs(P[Monomial::YY]), std::abs(Q[Monomial::YY])) <=
      kVanishingLeading * scale) {
    why = "leading y-coefficients vanish";
    return std::nullopt;
  }
  const UnivariatePoly res = resultant_in_y(P, Q);
  double largest = 0.0;
  for (const auto& c : res.coefficients()) largest = std::max(largest, std::abs(c));
  if (largest <= kZeroResultant * std::pow(scale, 4)) {
    why = "resultant vanishes identically (non-isolated zeros)";
    return std::nullopt;
  }
  if (res.effective_degree() != 4) {
    why = "fewer than four finite singularities";
    return std::nullopt;
  }
  RootSet xs;
  try {
    xs = solve_univariate(res);
  } catch (const Error& e) {
    why = e.what();
    return std::nullopt;
  }
  if (!xs.all_simple()) {
    why = "resultant has a repeated root";
    return std::nullopt;
  }

  std::array<Point, 4> out;
  for (std::size_t k = 0; k < 4; ++k) {
    const Complex x0 = xs.roots[k].value;
    std::vector<Complex> candidates = roots_on_vertical(P, x0);
    const auto more = roots_on_vertical(Q, x0);
    candidates.insert(candidates.end(), more.begin(), more.end());
    double best = std::numeric_limits<double>::infinity();
    Point chosen;
    for (const auto& y0 : candidates) {
      const Point p(x0, y0);
      const double r = residual_ratio(P, Q, p);
      if (r < best) {
        best = r;
        chosen = p;
      }
    }
    if (!(best <= kBackSubstitution)) {
      why = "back-substitution found no common zero";
      return std::nullopt;
    }
    out[k] = newton_refine(P, Q, chosen);
  }
  return out;
}

bool lexicographic_less(const Point& a, const Point& b, double tol) {
  const double ka[4] = {a(0).real(), a(0).imag(), a(1).real(), a(1).imag()};
  const double kb[4] = {b(0).real(), b(0).imag(), b(1).real(), b(1).imag()};
  for (int i = 0; i < 4; ++i)
    if (std::abs(ka[i] - kb[i]) > tol) return ka[i] < kb[i];
  return false;
}

// Validates and packages four candidate points found in original coordinates.
std::optional<Locus> finish(const QuadraticField& v, std::array<Point, 4> pts, std::string& why) {
  double extent = 0.0;
  for (auto& p : pts) {
    p = newton_refine(v.P(), v.Q(), p);
    if (!is_finite(p(0)) || !is_finite(p(1))) {
      why = "non-finite singular point";
      return std::nullopt;
    }
    if (residual_ratio(v.P(), v.Q(), p) > kResidual) {
      why = "singular point fails residual check";
      return std::nullopt;
    }
    extent = std::max(extent, p.cwiseAbs().maxCoeff());
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if ((pts[i] - pts[j]).norm() <= kDistinct * (1.0 + extent)) {
        why = "coincident singular points";
        return std::nullopt;
      }

  const double tol = kOrderingTolerance * (1.0 + extent);
  std::sort(pts.begin(), pts.end(),
            [tol](const Point& a, const Point& b) { return lexicographic_less(a, b, tol); });

  Locus locus;
  for (int k = 0; k < 4; ++k) {
    const Matrix2c J = jacobian_at(v, pts[k]);
    const Spectrum s = spectrum_of(J);
    if (std::abs(s.determinant) <= kDegeneracyThreshold * J.squaredNorm()) {
      why = "degenerate singularity (vanishing determinant)";
      return std::nullopt;
    }
    locus[k] = {pts[k], s};
  }
  return locus;
}

std::optional<Locus> attempt(const QuadraticField& v, const Poly2c& P, const Poly2c& Q,
                             const Matrix2c& frame, std::string& why) {
  if (auto pts = eliminate_y(P, Q, why)) {
    for (auto& p : *pts) p = frame * p;
    if (auto locus = finish(v, *pts, why)) return locus;
  }
  if (auto pts = eliminate_y(swap_xy(P), swap_xy(Q), why)) {
    for (auto& p : *pts) p = frame * Point(p(1), p(0));
    if (auto locus = finish(v, *pts, why)) return locus;
  }
  return std::nullopt;
}

double spectrum_eigen_scale(const SpectraSet& a, const SpectraSet& b) {
  double s = 0.0;
  for (const auto* set : {&a, &b})
    for (const auto& p : set->pairs)
      s = std::max({s, std::abs(p.trace), std::sqrt(std::abs(p.determinant))});
  return s;
}

}  // namespace

UnivariatePoly resultant_in_y(const Poly2c& P, const Poly2c& Q) {
  // P = a2 y^2 + a1(x) y + a0(x), Q likewise with b's; the Sylvester
  // determinant expands to (a2 b0 - a0 b2)^2 - (a2 b1 - a1 b2)(a1 b0 - a0 b1).
  const Coeffs a2 = {P[Monomial::YY]};
  const Coeffs a1 = {P[Monomial::Y], P[Monomial::XY]};
  const Coeffs a0 = {P[Monomial::One], P[Monomial::X], P[Monomial::XX]};
  const Coeffs b2 = {Q[Monomial::YY]};
  const Coeffs b1 = {Q[Monomial::Y], Q[Monomial::XY]};
  const Coeffs b0 = {Q[Monomial::One], Q[Monomial::X], Q[Monomial::XX]};

  const Coeffs u = sub(mul(a2, b0), mul(a0, b2));
  const Coeffs w = sub(mul(a2, b1), mul(a1, b2));
  const Coeffs z = sub(mul(a1, b0), mul(a0, b1));
  Coeffs r = sub(mul(u, u), mul(w, z));
  r.resize(5, Complex(0.0));
  return UnivariatePoly(std::move(r));
}

Locus singular_points(const QuadraticField& v) {
  std::string why;
  if (auto locus = attempt(v, v.P(), v.Q(), Matrix2c::Identity(), why)) return *locus;

  Matrix2c R;
  const double c = std::cos(kRotationAngle), s = std::sin(kRotationAngle);
  R << c, -s, s, c;
  const Poly2c P = substitute(v.P(), R, Point::Zero().eval());
  const Poly2c Q = substitute(v.Q(), R, Point::Zero().eval());
  if (auto locus = attempt(v, P, Q, R, why)) return *locus;

  throw Error(ErrorKind::DegenerateConfiguration, "singular locus: " + why);
}

SpectraSet spectra_of(const Locus& locus) {
  SpectraSet s;
  for (int k = 0; k < 4; ++k) s.pairs[k] = locus[k].spectrum;
  return s;
}

SpectraSet spectra(const QuadraticField& v) { return spectra_of(singular_points(v)); }

SpectraMatch match_spectra(const SpectraSet& a, const SpectraSet& b) {
  const double sigma = spectrum_eigen_scale(a, b);
  const double ts = sigma > 0.0 ? sigma : 1.0;
  const double ds = sigma > 0.0 ? sigma * sigma : 1.0;

  std::array<int, 4> perm = {0, 1, 2, 3};
  SpectraMatch best;
  best.total_distance = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    for (int i = 0; i < 4; ++i) {
      const auto& p = a.pairs[i];
      const auto& q = b.pairs[perm[i]];
      total += std::abs(p.trace - q.trace) / ts + std::abs(p.determinant - q.determinant) / ds;
    }
    if (total < best.total_distance) {
      best.total_distance = total;
      best.permutation = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (int i = 0; i < 4; ++i) {
    const auto& p = a.pairs[i];
    const auto& q = b.pairs[best.permutation[i]];
    best.max_trace_error = std::max(best.max_trace_error, std::abs(p.trace - q.trace));
    best.max_determinant_error =
        std::max(best.max_determinant_error, std::abs(p.determinant - q.determinant));
  }
  best.trace_scale = sigma;
  best.determinant_scale = sigma * sigma;
  return best;
}

bool same_spectra(const SpectraSet& a, const SpectraSet& b, Tolerance tol) {
  const SpectraMatch m = match_spectra(a, b);
  return tol.negligible(m.max_trace_error, m.trace_scale) &&
         tol.negligible(m.max_determinant_error, m.determinant_scale);
}

double locus_distance(const Locus& a, const Locus& b) {
  std::array<int, 4> perm = {0, 1, 2, 3};
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
      worst = std::max(worst, (a[i].position - b[perm[i]].position).norm());
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool same_locus(const Locus& a, const Locus& b, Tolerance tol) {
  double extent = 0.0;
  for (int i = 0; i < 4; ++i)
    extent = std::max({extent, a[i].position.norm(), b[i].position.norm()});
  return tol.negligible(locus_distance(a, b), 1.0 + extent);
}

double EulerJacobiResiduals::max_relative() const {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double r = std::abs(values[i]);
    worst = std::max(worst, scales[i] > 0.0 ? r / scales[i] : r);
  }
  return worst;
}

EulerJacobiResiduals euler_jacobi_residuals(const Locus& locus) {
  double sigma = 0.0, rho = 0.0;
  for (const auto& p : locus) {
    sigma = std::max({sigma, std::abs(p.spectrum.trace), std::sqrt(std::abs(p.spectrum.determinant))});
    rho = std::max(rho, p.position.cwiseAbs().maxCoeff());
  }
  EulerJacobiResiduals r;
  for (const auto& p : locus) {
    const Complex inv = 1.0 / p.spectrum.determinant;
    const double ainv = std::abs(inv);
    r.values[0] += inv;
    r.values[1] += p.spectrum.trace * inv;
    r.values[2] += p.position(0) * inv;
    r.values[3] += p.position(1) * inv;
    r.scales[0] += ainv;
    r.scales[1] += (std::abs(p.spectrum.trace) + sigma) * ainv;
    r.scales[2] += (std::abs(p.position(0)) + rho) * ainv;
    r.scales[3] += (std::abs(p.position(1)) + rho) * ainv;
  }
  return r;
}

EulerJacobiResiduals euler_jacobi_residuals(const QuadraticField& v) {
  return euler_jacobi_residuals(singular_points(v));
}

SingularPoint fourth_from_three(std::span<const SingularPoint, 3> three, Tolerance tol) {
  Complex s_one = 0.0, s_trace = 0.0, s_x = 0.0, s_y = 0.0;
  double scale = 0.0;
  for (const auto& p : three) {
    if (p.spectrum.determinant == Complex(0.0) || !is_finite(p.spectrum.determinant))
      throw Error(ErrorKind::InconsistentTriple, "degenerate singularity in triple");
    const Complex inv = 1.0 / p.spectrum.determinant;
    s_one += inv;
    s_trace += p.spectrum.trace * inv;
    s_x += p.position(0) * inv;
    s_y += p.position(1) * inv;
    scale += std::abs(inv);
  }
  if (tol.negligible(std::abs(s_one), scale))
    throw Error(ErrorKind::InconsistentTriple,
                "reciprocal determinants of the triple sum to zero");
  const Complex det = -1.0 / s_one;
  SingularPoint fourth;
  fourth.spectrum = {-det * s_trace, det};
  fourth.position = Point(-det * s_x, -det * s_y);
  return fourth;
}

}  // namespace qvf
