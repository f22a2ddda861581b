#pragma once

#include <span>
#include <vector>

#include "qvf/core.hpp"

namespace qvf {

/// Univariate polynomial of degree at most four, lowest degree first. The
/// effective degree ignores trailing coefficients below 1e-10 times the
/// largest coefficient magnitude.
class UnivariatePoly {
 public:
  static constexpr int kMaxDegree = 4;
  static constexpr double kDegreeThreshold = 1e-10;

  explicit UnivariatePoly(std::vector<Complex> coefficients);

  std::span<const Complex> coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int effective_degree() const { return degree_; }

  Complex operator()(const Complex& z) const;
  Complex derivative(const Complex& z) const;
  /// sum |c_k| |z|^k over the effective coefficients.
  double evaluation_scale(const Complex& z) const;

 private:
  std::vector<Complex> coeffs_;
  int degree_ = -1;
};

struct Root {
  Complex value;
  int multiplicity = 1;
};

struct RootSet {
  std::vector<Root> roots;

  int count() const;
  bool all_simple() const;
  /// Root values repeated according to multiplicity.
  std::vector<Complex> values() const;
};

/// All roots of p. Degree 1 and 2 use closed forms (stable quadratic
/// branch); degrees 3 and 4 use Aberth-Ehrlich simultaneous iteration. Each
/// root is then Newton-polished and nearby roots are merged into clusters
/// with multiplicity.
///
/// Throws DegenerateLeadingCoefficient when the effective degree is below one
/// and NonConvergence when a root fails the normwise residual test
/// |p(z)| <= 1e-9 max|c_k| sum |z|^k.
RootSet solve_univariate(const UnivariatePoly& p);

}  // namespace qvf
