#pragma once

// Reference fields and independent recomputations used as test oracles.
// Nothing here calls into the library code under test except the value
// types themselves.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <complex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qvf/core.hpp"

namespace oracle {

using qvf::Complex;
using qvf::Poly2c;
using qvf::QuadraticField;

// (x^2 + 2xy - x, -xy + 3y^2 - 3y), entered coefficient by coefficient.
inline QuadraticField example_v() {
  return {Poly2c(0, -1, 0, 1, 2, 0), Poly2c(0, 0, -3, 0, -1, 3)};
}

// Its twin (3x^2 + 6xy - 3x, -(7/3)x^2 - 5xy + y^2 + (7/3)x - y).
inline QuadraticField example_twin() {
  return {Poly2c(0, -3, 0, 3, 6, 0), Poly2c(0, 7.0 / 3.0, -1, -7.0 / 3.0, -5, 1)};
}

// Hamiltonian field x(x + 2y - 1) d/dx + y(-2x - y + 1) d/dy.
inline QuadraticField example_hamiltonian() {
  return {Poly2c(0, -1, 0, 1, 2, 0), Poly2c(0, 0, 1, 0, -2, -1)};
}

inline bool near(const Complex& a, const Complex& b, double tol) { return std::abs(a - b) <= tol; }

// Centered differences of the polynomial values.
inline qvf::Matrix2c finite_difference_jacobian(const QuadraticField& v, const qvf::Point& p,
                                                double h = 1e-5) {
  qvf::Matrix2c J;
  for (int col = 0; col < 2; ++col) {
    qvf::Point e = qvf::Point::Zero();
    e(col) = h;
    const qvf::Point plus = p + e, minus = p - e;
    J(0, col) = (v.P()(plus) - v.P()(minus)) / (2.0 * h);
    J(1, col) = (v.Q()(plus) - v.Q()(minus)) / (2.0 * h);
  }
  return J;
}

// Sylvester determinant of P(x0, y) and Q(x0, y) as quadratics in y.
inline Complex sylvester_resultant(const Poly2c& P, const Poly2c& Q, const Complex& x0) {
  using qvf::Monomial;
  const Complex p2 = P[Monomial::YY], p1 = P[Monomial::Y] + P[Monomial::XY] * x0,
                p0 = P[Monomial::One] + P[Monomial::X] * x0 + P[Monomial::XX] * x0 * x0;
  const Complex q2 = Q[Monomial::YY], q1 = Q[Monomial::Y] + Q[Monomial::XY] * x0,
                q0 = Q[Monomial::One] + Q[Monomial::X] * x0 + Q[Monomial::XX] * x0 * x0;
  Eigen::Matrix4cd S;
  S << p2, p1, p0, 0,
       0, p2, p1, p0,
       q2, q1, q0, 0,
       0, q2, q1, q0;
  return S.determinant();
}

// Coefficients (lowest first) of lead * prod (z - r).
inline std::vector<Complex> expand_roots(const Complex& lead, const std::vector<Complex>& roots) {
  std::vector<Complex> c{lead};
  for (const Complex& r : roots) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = next;
  }
  return c;
}

// Smallest worst-pair distance over all pairings of two equally sized lists.
template <typename T, typename Dist>
double best_matching(const std::vector<T>& a, const std::vector<T>& b, Dist dist) {
  std::vector<int> perm(b.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  double best = 1e300;
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, dist(a[i], b[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Random polynomial expression of degree <= 2 together with its expansion.
class ExpressionPrinter {
 public:
  explicit ExpressionPrinter(unsigned seed) : rng_(seed) {}

  struct Sample {
    std::string text;
    Poly2c expected;
  };

  Sample next() {
    Sample s{"", Poly2c()};
    const int terms = pick(1, 4);
    for (int t = 0; t < terms; ++t) {
      const bool negative = pick(0, 1) == 1;
      Sample term = product();
      if (t == 0) {
        s.text += negative ? "-" : "";
      } else {
        s.text += negative ? " - " : " + ";
      }
      s.text += term.text;
      s.expected += negative ? -term.expected : term.expected;
    }
    return s;
  }

 private:
  std::mt19937 rng_;

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::string number(double value) {
    std::ostringstream os;
    os.precision(17);
    os << value;
    return os.str();
  }

  // Coefficient, optionally complex, rendered in one of several styles.
  Sample coefficient() {
    const int re = pick(-9, 9);
    const int im = pick(0, 2) == 0 ? pick(-5, 5) : 0;
    const double scale = pick(0, 1) ? 1.0 : 0.5;
    const Complex c(re * scale, im * scale);
    if (im == 0) return {"(" + number(c.real()) + ")", Poly2c::constant(c)};
    return {"(" + number(c.real()) + (c.imag() < 0 ? " - " : " + ") + number(std::abs(c.imag())) + "i)",
            Poly2c::constant(c)};
  }

  // A single linear factor such as (x - 2y + 3).
  Sample linear() {
    const int a = pick(-3, 3), b = pick(-3, 3), c = pick(-3, 3);
    return {"(" + std::to_string(a) + "*x + " + std::to_string(b) + "y - " + std::to_string(c) + ")",
            Poly2c(-c, a, b, 0, 0, 0)};
  }

  Sample product() {
    Sample c = coefficient();
    switch (pick(0, 5)) {
      case 0:
        return c;
      case 1:
        return {c.text + "*x^2", Poly2c(0, 0, 0, c.expected[qvf::Monomial::One], 0, 0)};
      case 2:
        return {c.text + " x y", Poly2c(0, 0, 0, 0, c.expected[qvf::Monomial::One], 0)};
      case 3:
        return {c.text + "y^2", Poly2c(0, 0, 0, 0, 0, c.expected[qvf::Monomial::One])};
      case 4: {
        const Sample l = linear();
        return {c.text + "*" + l.text, c.expected[qvf::Monomial::One] * l.expected};
      }
      default: {
        const Sample l1 = linear(), l2 = linear();
        const Complex k = c.expected[qvf::Monomial::One];
        const auto& u = l1.expected.coefficients();
        const auto& w = l2.expected.coefficients();
        const Poly2c expanded(u(0) * w(0), u(0) * w(1) + u(1) * w(0), u(0) * w(2) + u(2) * w(0),
                              u(1) * w(1), u(1) * w(2) + u(2) * w(1), u(2) * w(2));
        return {c.text + l1.text + l2.text, k * expanded};
      }
    }
  }
};

}  // namespace oracle
