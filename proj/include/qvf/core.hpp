#pragma once

// Value types for quadratic polynomial vector fields on the complex plane:
// degree-2 bivariate polynomials, fields built from a pair of them, the
// linearization matrix at a point and its (trace, determinant) spectrum.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "qvf/error.hpp"

namespace qvf {

using Complex = std::complex<double>;

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

using Point = Vector2<Complex>;
using Matrix2c = Matrix2<Complex>;

/// Mixed absolute/relative comparison threshold.
struct Tolerance {
  double relative = 1e-9;
  double absolute = 1e-12;

  bool negligible(double magnitude, double scale) const {
    return magnitude <= absolute + relative * scale;
  }
  template <typename Scalar>
  bool close(const Scalar& a, const Scalar& b, double scale) const {
    using std::abs;
    return negligible(abs(a - b), scale);
  }
};

/// Process-wide default used when a caller does not pass a tolerance.
Tolerance default_tolerance();
void set_default_tolerance(Tolerance tol);

template <typename Scalar>
bool is_finite(const Scalar& s) {
  using std::isfinite;
  if constexpr (std::is_arithmetic_v<Scalar>) {
    return isfinite(s);
  } else {
    return isfinite(s.real()) && isfinite(s.imag());
  }
}

enum class Monomial : int { One = 0, X, Y, XX, XY, YY };

inline constexpr const char* kMonomialNames[6] = {"1", "x", "y", "x2", "xy", "y2"};

/// Polynomial of total degree at most two:
///   c_1 + c_x x + c_y y + c_xx x^2 + c_xy xy + c_yy y^2.
template <typename Scalar>
class Poly2 {
 public:
  using Coefficients = Eigen::Matrix<Scalar, 6, 1>;

  Poly2() : c_(Coefficients::Zero()) {}
  explicit Poly2(const Coefficients& c) : c_(c) {}
  Poly2(Scalar one, Scalar x, Scalar y, Scalar xx, Scalar xy, Scalar yy) {
    c_ << one, x, y, xx, xy, yy;
  }

  static Poly2 constant(Scalar s) { return Poly2(s, 0, 0, 0, 0, 0); }
  static Poly2 x() { return Poly2(0, 1, 0, 0, 0, 0); }
  static Poly2 y() { return Poly2(0, 0, 1, 0, 0, 0); }

  const Coefficients& coefficients() const { return c_; }
  Coefficients& coefficients() { return c_; }

  Scalar operator[](Monomial m) const { return c_(static_cast<int>(m)); }
  Scalar& operator[](Monomial m) { return c_(static_cast<int>(m)); }

  Scalar operator()(const Scalar& x, const Scalar& y) const {
    return c_(0) + x * (c_(1) + c_(3) * x + c_(4) * y) + y * (c_(2) + c_(5) * y);
  }
  Scalar operator()(const Vector2<Scalar>& p) const { return (*this)(p(0), p(1)); }

  Poly2 dx() const { return Poly2(c_(1), Scalar(2) * c_(3), c_(4), 0, 0, 0); }
  Poly2 dy() const { return Poly2(c_(2), c_(4), Scalar(2) * c_(5), 0, 0, 0); }

  /// Coefficients of x^2, xy, y^2.
  Eigen::Matrix<Scalar, 3, 1> quadratic_part() const { return c_.template tail<3>(); }

  double max_abs() const { return c_.cwiseAbs().maxCoeff(); }
  bool is_finite() const {
    for (int i = 0; i < 6; ++i)
      if (!qvf::is_finite(c_(i))) return false;
    return true;
  }

  /// Sum of |coefficient * monomial(p)|, the natural magnitude against which
  /// an evaluation at p is judged to vanish.
  double evaluation_scale(const Vector2<Scalar>& p) const {
    using std::abs;
    const double ax = abs(p(0)), ay = abs(p(1));
    const double mono[6] = {1.0, ax, ay, ax * ax, ax * ay, ay * ay};
    double s = 0.0;
    for (int i = 0; i < 6; ++i) s += abs(c_(i)) * mono[i];
    return s;
  }

  Poly2 operator-() const { return Poly2(Coefficients(-c_)); }
  Poly2& operator+=(const Poly2& o) { c_ += o.c_; return *this; }
  Poly2& operator-=(const Poly2& o) { c_ -= o.c_; return *this; }
  Poly2& operator*=(const Scalar& s) { c_ *= s; return *this; }

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Scalar& s, Poly2 a) { return a *= s; }
  friend Poly2 operator*(Poly2 a, const Scalar& s) { return a *= s; }

 private:
  Coefficients c_;
};

template <typename Scalar>
Scalar evaluate(const Poly2<Scalar>& p, const Vector2<Scalar>& point) {
  return p(point);
}

/// Product of two affine-linear forms (c0 + c1 x + c2 y).
template <typename Scalar>
Poly2<Scalar> multiply_linear(const Eigen::Matrix<Scalar, 3, 1>& u,
                              const Eigen::Matrix<Scalar, 3, 1>& v) {
  return Poly2<Scalar>(u(0) * v(0), u(0) * v(1) + u(1) * v(0), u(0) * v(2) + u(2) * v(0),
                       u(1) * v(1), u(1) * v(2) + u(2) * v(1), u(2) * v(2));
}

/// p(L q + t) as a polynomial in q, expanded exactly.
template <typename Scalar>
Poly2<Scalar> substitute(const Poly2<Scalar>& p, const Matrix2<Scalar>& linear,
                         const Vector2<Scalar>& translation) {
  using Form = Eigen::Matrix<Scalar, 3, 1>;
  const Form one(Scalar(1), Scalar(0), Scalar(0));
  const Form X(translation(0), linear(0, 0), linear(0, 1));
  const Form Y(translation(1), linear(1, 0), linear(1, 1));
  Poly2<Scalar> r = Poly2<Scalar>::constant(p[Monomial::One]);
  r += p[Monomial::X] * multiply_linear(one, X);
  r += p[Monomial::Y] * multiply_linear(one, Y);
  r += p[Monomial::XX] * multiply_linear(X, X);
  r += p[Monomial::XY] * multiply_linear(X, Y);
  r += p[Monomial::YY] * multiply_linear(Y, Y);
  return r;
}

/// Exchange the roles of x and y.
template <typename Scalar>
Poly2<Scalar> swap_xy(const Poly2<Scalar>& p) {
  return Poly2<Scalar>(p[Monomial::One], p[Monomial::Y], p[Monomial::X], p[Monomial::YY],
                       p[Monomial::XY], p[Monomial::XX]);
}

/// v = P d/dx + Q d/dy with deg P, deg Q <= 2 and a non-vanishing quadratic
/// part. Construction rejects affine fields and non-finite coefficients.
template <typename Scalar>
class VectorField {
 public:
  using Poly = Poly2<Scalar>;

  VectorField(Poly P, Poly Q) : P_(std::move(P)), Q_(std::move(Q)) {
    if (!P_.is_finite() || !Q_.is_finite())
      throw Error(ErrorKind::NonFinite, "vector field has non-finite coefficients");
    const double quad = std::max(P_.quadratic_part().cwiseAbs().maxCoeff(),
                                 Q_.quadratic_part().cwiseAbs().maxCoeff());
    if (quad <= default_tolerance().relative * max_abs())
      throw Error(ErrorKind::AffineField, "quadratic part of the vector field vanishes");
  }

  const Poly& P() const { return P_; }
  const Poly& Q() const { return Q_; }

  Vector2<Scalar> operator()(const Vector2<Scalar>& p) const {
    return Vector2<Scalar>(P_(p), Q_(p));
  }

  double max_abs() const { return std::max(P_.max_abs(), Q_.max_abs()); }

  /// The twelve coefficients, P's first.
  Eigen::Matrix<Scalar, 12, 1> coefficients() const {
    Eigen::Matrix<Scalar, 12, 1> c;
    c << P_.coefficients(), Q_.coefficients();
    return c;
  }

  VectorField operator-() const { return VectorField(-P_, -Q_); }
  friend VectorField operator*(const Scalar& s, const VectorField& v) {
    return VectorField(s * v.P_, s * v.Q_);
  }

 private:
  Poly P_;
  Poly Q_;
};

using Poly2c = Poly2<Complex>;
using QuadraticField = VectorField<Complex>;

/// Linearization (P_x P_y; Q_x Q_y) at a point.
template <typename Scalar>
Matrix2<Scalar> jacobian_at(const Poly2<Scalar>& P, const Poly2<Scalar>& Q,
                            const Vector2<Scalar>& p) {
  Matrix2<Scalar> m;
  m << P.dx()(p), P.dy()(p), Q.dx()(p), Q.dy()(p);
  return m;
}

template <typename Scalar>
Matrix2<Scalar> jacobian_at(const VectorField<Scalar>& v, const Vector2<Scalar>& p) {
  return jacobian_at(v.P(), v.Q(), p);
}

template <typename Scalar>
struct SpectrumPair {
  Scalar trace{};
  Scalar determinant{};
};

using Spectrum = SpectrumPair<Complex>;

template <typename Derived>
SpectrumPair<typename Derived::Scalar> spectrum_of(const Eigen::MatrixBase<Derived>& m) {
  return {m(0, 0) + m(1, 1), m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)};
}

/// Largest coefficientwise difference between two fields, and whether it is
/// within tolerance of their coefficient scale.
double max_coefficient_difference(const QuadraticField& a, const QuadraticField& b);
bool approx_equal(const QuadraticField& a, const QuadraticField& b,
                  Tolerance tol = default_tolerance());

/// Combine two polynomials as (a P + b Q).
inline Poly2c combine(const Complex& a, const Poly2c& P, const Complex& b, const Poly2c& Q) {
  return a * P + b * Q;
}

}  // namespace qvf
