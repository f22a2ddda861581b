#include "qvf/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qvf {

namespace {

constexpr int kMaxSweeps = 200;
constexpr int kPolishSteps = 4;
constexpr double kClusterRadius = 1e-7;
constexpr double kResidualTolerance = 1e-9;

// Stable quadratic formula: pick the sign that avoids cancellation in
// b + sqrt(disc), then recover the other root through the product c/a.
std::vector<Complex> quadratic_roots(const Complex& c, const Complex& b, const Complex& a) {
  const Complex sq = std::sqrt(b * b - 4.0 * a * c);
  const Complex q = (std::real(std::conj(b) * sq) >= 0.0) ? -0.5 * (b + sq) : -0.5 * (b - sq);
  if (q == Complex(0.0)) return {Complex(0.0), Complex(0.0)};
  return {q / a, c / q};
}

std::vector<Complex> aberth_roots(const UnivariatePoly& p) {
  const int n = p.effective_degree();
  const auto c = p.coefficients();
  const Complex lead = c[n];

  // Initial guesses on a circle about the centroid of the roots, with radius
  // from the largest root-magnitude bound term and an angular offset to break
  // symmetry.
  const Complex centre = -c[n - 1] / (static_cast<double>(n) * lead);
  double radius = 0.0;
  for (int k = 0; k < n; ++k)
    radius = std::max(radius, std::pow(std::abs(c[k] / lead), 1.0 / (n - k)));
  if (radius == 0.0) radius = 1.0;

  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[k] = centre + radius * std::polar(1.0, angle);
  }

  const double eps = std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      const Complex value = p(z[k]);
      if (value == Complex(0.0)) continue;
      Complex repulsion = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      Complex denom = p.derivative(z[k]) - value * repulsion;
      if (denom == Complex(0.0)) denom = Complex(eps, eps);
      const Complex step = value / denom;
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[k])));
    }
    if (worst <= 4.0 * eps) break;
  }
  return z;
}

Complex newton_polish(const UnivariatePoly& p, Complex z) {
  double best = std::abs(p(z));
  for (int i = 0; i < kPolishSteps && best > 0.0; ++i) {
    const Complex d = p.derivative(z);
    if (d == Complex(0.0)) break;
    const Complex next = z - p(z) / d;
    const double r = std::abs(p(next));
    if (!(r < best)) break;
    z = next;
    best = r;
  }
  return z;
}

}  // namespace

UnivariatePoly::UnivariatePoly(std::vector<Complex> coefficients)
    : coeffs_(std::move(coefficients)) {
  double largest = 0.0;
  for (const auto& c : coeffs_) {
    if (!is_finite(c)) throw Error(ErrorKind::NonFinite, "non-finite polynomial coefficient");
    largest = std::max(largest, std::abs(c));
  }
  degree_ = -1;
  if (largest > 0.0) {
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
      if (std::abs(coeffs_[k]) > kDegreeThreshold * largest) {
        degree_ = k;
        break;
      }
    }
  }
  if (degree_ > kMaxDegree)
    throw Error(ErrorKind::InvalidArgument, "univariate polynomial degree exceeds four");
}

Complex UnivariatePoly::operator()(const Complex& z) const {
  Complex r = 0.0;
  for (int k = degree_; k >= 0; --k) r = r * z + coeffs_[k];
  return r;
}

Complex UnivariatePoly::derivative(const Complex& z) const {
  Complex r = 0.0;
  for (int k = degree_; k >= 1; --k) r = r * z + static_cast<double>(k) * coeffs_[k];
  return r;
}

double UnivariatePoly::evaluation_scale(const Complex& z) const {
  const double a = std::abs(z);
  double r = 0.0;
  for (int k = degree_; k >= 0; --k) r = r * a + std::abs(coeffs_[k]);
  return r;
}

int RootSet::count() const {
  int n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

bool RootSet::all_simple() const {
  return std::all_of(roots.begin(), roots.end(), [](const Root& r) { return r.multiplicity == 1; });
}

std::vector<Complex> RootSet::values() const {
  std::vector<Complex> out;
  for (const auto& r : roots) out.insert(out.end(), r.multiplicity, r.value);
  return out;
}

RootSet solve_univariate(const UnivariatePoly& p) {
  const int n = p.effective_degree();
  if (n < 1)
    throw Error(ErrorKind::DegenerateLeadingCoefficient,
                "polynomial has no root-bearing degree (effective degree < 1)");
  const auto c = p.coefficients();

  std::vector<Complex> raw;
  if (n == 1) {
    raw = {-c[0] / c[1]};
  } else if (n == 2) {
    raw = quadratic_roots(c[0], c[1], c[2]);
  } else {
    raw = aberth_roots(p);
  }
  for (auto& z : raw) z = newton_polish(p, z);

  double largest = 0.0;
  for (const auto& z : raw) largest = std::max(largest, std::abs(z));
  const double radius = kClusterRadius * (1.0 + largest);

  // Greedy clustering; a cluster's value is the mean of its members.
  RootSet out;
  std::vector<Complex> sums;
  for (const auto& z : raw) {
    bool merged = false;
    for (std::size_t i = 0; i < out.roots.size(); ++i) {
      if (std::abs(out.roots[i].value - z) <= radius) {
        sums[i] += z;
        ++out.roots[i].multiplicity;
        out.roots[i].value = sums[i] / static_cast<double>(out.roots[i].multiplicity);
        merged = true;
        break;
      }
    }
    if (!merged) {
      out.roots.push_back({z, 1});
      sums.push_back(z);
    }
  }

  // Normwise backward error: the residual is judged against max |c_k| times
  // sum |z|^k, so roots at the origin of polynomials with vanishing low
  // coefficients are not held to a relative standard they cannot meet.
  double cmax = 0.0;
  for (int k = 0; k <= n; ++k) cmax = std::max(cmax, std::abs(c[k]));
  for (const auto& r : out.roots) {
    double powers = 0.0;
    for (int k = n; k >= 0; --k) powers = powers * std::abs(r.value) + 1.0;
    if (!is_finite(r.value) || std::abs(p(r.value)) > kResidualTolerance * cmax * powers)
      throw Error(ErrorKind::NonConvergence, "root iteration did not meet residual tolerance");
  }
  return out;
}

}  // namespace qvf
