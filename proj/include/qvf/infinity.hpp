#pragma once

// Singularities of the induced foliation on the line at infinity, their
// characteristic numbers, the inverse construction from (w_j, mu_j, kappa),
// the moduli map and related probes.

#include <array>
#include <optional>

#include "qvf/affine.hpp"
#include "qvf/core.hpp"
#include "qvf/locus.hpp"

namespace qvf {

/// Point [x:y] of the projective line, scaled so the coordinate of larger
/// magnitude equals one.
class ProjectiveDirection {
 public:
  ProjectiveDirection(const Complex& x, const Complex& y);

  /// [1:w] in the chart w = y/x.
  static ProjectiveDirection from_chart(const Complex& w) { return {1.0, w}; }
  static ProjectiveDirection vertical() { return {0.0, 1.0}; }

  const Complex& x() const { return x_; }
  const Complex& y() const { return y_; }

  /// y/x, absent for [0:1].
  std::optional<Complex> chart_w() const;
  bool same_as(const ProjectiveDirection& other, double tol = 1e-9) const;

 private:
  Complex x_, y_;
};

struct InfinitySingularity {
  ProjectiveDirection direction;
  Complex mu;
};

/// Cubic C(w) = w P2(1,w) - Q2(1,w), lowest degree first; its roots are the
/// finite-chart singular directions (B(x,y) = x Q2 - y P2 = -x^3 C(y/x)).
std::array<Complex, 4> infinity_polynomial(const QuadraticField& v);

/// Roots of B on the projective line; finite-chart roots sorted by (re, im),
/// [0:1] last when present. Throws DicriticalInfinity, MultipleDirection.
std::array<ProjectiveDirection, 3> singular_directions(const QuadraticField& v);

/// mu_j = P2(1, w_j) / C'(w_j), or in the chart u = x/y,
/// mu = Q2(u, 1) / D'(u) with D(u) = u Q2(u,1) - P2(u,1).
Complex characteristic_number_w_chart(const QuadraticField& v, const Complex& w);
Complex characteristic_number_u_chart(const QuadraticField& v, const Complex& u);

/// Same order as singular_directions. Throws ResonantDirection, or
/// PostconditionFailed when the numbers do not sum to one.
std::array<InfinitySingularity, 3> characteristic_numbers(const QuadraticField& v);

struct InfinityData {
  std::array<Complex, 3> w{};
  std::array<Complex, 3> mu{};
  Complex kappa{1.0};

  /// Throws InvalidData unless the w's are finite and distinct, the mu's
  /// sum to one and kappa is nonzero.
  void validate(Tolerance tol = default_tolerance()) const;
};

/// Canonical coefficients of the field with the given behaviour at infinity.
CanonicalCoefficients from_infinity_data(const InfinityData& data);

/// Infinity data of v with respect to a marked triple of singularities for
/// which no singular direction lies at [0:1] (so every w_j is finite). The
/// triple is chosen to maximize |a3| relative to the other coefficients.
struct MarkedInfinityData {
  InfinityData data;
  Normalization normalization;
  std::array<int, 3> triple{};
};
MarkedInfinityData infinity_data_of(const QuadraticField& v);

struct ModuliPoint {
  Complex mu1, mu2;
  Vector6c spectra6;
};

ModuliPoint moduli_map(const InfinityData& data);

/// Relabels so that (mu1, mu2, mu3 = 1 - mu1 - mu2) is sorted by (re, im).
/// spectra6 does not depend on the labelling.
ModuliPoint canonical_relabel(const ModuliPoint& m);

/// 8x6 central-difference Jacobian of the moduli map in the coordinates
/// (mu1, mu2, w1, w2, w3, kappa), and its numerical rank.
Eigen::Matrix<Complex, 8, 6> moduli_jacobian(const InfinityData& data);
int moduli_rank_probe(const InfinityData& data);

struct BaumBott {
  Complex finite_sum;    // sum tr^2 / det over the four singular points
  Complex infinity_sum;  // sum (1 + mu)^2 / mu over the three directions
  Complex residual;      // finite_sum + infinity_sum - 16
  double scale = 0.0;    // magnitude of the summed terms
};

BaumBott baum_bott(const QuadraticField& v);
Complex baum_bott_residual(const QuadraticField& v);

/// True iff the spectra and the characteristic-number multisets both match.
bool classify_by_infinity(const QuadraticField& v, const QuadraticField& w);

}  // namespace qvf
