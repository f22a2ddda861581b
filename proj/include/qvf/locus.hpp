#pragma once

#include <array>
#include <span>

#include "qvf/core.hpp"
#include "qvf/roots.hpp"

namespace qvf {

struct SingularPoint {
  Point position;
  Spectrum spectrum;
};

using Locus = std::array<SingularPoint, 4>;

/// Unordered multiset of the four spectra of a field. Compare with
/// same_spectra(), never elementwise.
struct SpectraSet {
  std::array<Spectrum, 4> pairs;
};

/// Tolerance used when matching spectra, loci and characteristic numbers
/// computed independently for two fields.
inline constexpr Tolerance kMatchTolerance{1e-8, 1e-12};

/// Relative threshold on |det Dv(p)| against |Dv(p)|_F^2 below which a
/// singularity counts as degenerate.
inline constexpr double kDegeneracyThreshold = 1e-8;

/// Res_y(P, Q): the 4x4 Sylvester determinant of P and Q viewed as
/// quadratics in y, as a polynomial in x of degree at most four.
UnivariatePoly resultant_in_y(const Poly2c& P, const Poly2c& Q);

/// The four singular points of v, ordered lexicographically by
/// (re x, im x, re y, im y). Throws DegenerateConfiguration unless there are
/// four distinct, isolated, nondegenerate singularities.
Locus singular_points(const QuadraticField& v);

SpectraSet spectra(const QuadraticField& v);
SpectraSet spectra_of(const Locus& locus);

/// Optimal assignment between two spectra multisets over all 24
/// permutations: b.pairs[permutation[i]] is matched to a.pairs[i].
struct SpectraMatch {
  std::array<int, 4> permutation{};
  double total_distance = 0.0;
  /// Largest per-pair deviation, in units of the relative tolerance scale.
  double max_trace_error = 0.0;
  double max_determinant_error = 0.0;
  double trace_scale = 0.0;
  double determinant_scale = 0.0;
};

SpectraMatch match_spectra(const SpectraSet& a, const SpectraSet& b);
bool same_spectra(const SpectraSet& a, const SpectraSet& b, Tolerance tol = kMatchTolerance);

/// Largest position mismatch under the best matching of the two point sets.
double locus_distance(const Locus& a, const Locus& b);
bool same_locus(const Locus& a, const Locus& b, Tolerance tol = kMatchTolerance);

/// Sums over the singularities of g(p_k) / det Dv(p_k) for g = 1, tr Dv,
/// x and y; all four vanish for a quadratic field with four nondegenerate
/// singularities.
struct EulerJacobiResiduals {
  std::array<Complex, 4> values{};
  /// Magnitude of the summed terms, for relative comparison.
  std::array<double, 4> scales{};

  double max_relative() const;
};

EulerJacobiResiduals euler_jacobi_residuals(const QuadraticField& v);
EulerJacobiResiduals euler_jacobi_residuals(const Locus& locus);

/// Position and spectrum of the remaining singularity, from the other three.
/// Throws InconsistentTriple when the reciprocal determinants sum to zero.
SingularPoint fourth_from_three(std::span<const SingularPoint, 3> three,
                                Tolerance tol = default_tolerance());

}  // namespace qvf
