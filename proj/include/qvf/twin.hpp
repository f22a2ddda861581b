#pragma once

#include <optional>
#include <string_view>

#include "qvf/affine.hpp"
#include "qvf/core.hpp"

namespace qvf {

/// A = (a b; c d) with det A = 1; the twin of v is (aP + bQ, cP + dQ).
struct TwinMatrix {
  Complex a, b, c, d;

  Matrix2c matrix() const {
    Matrix2c m;
    m << a, b, c, d;
    return m;
  }
  Complex determinant() const { return a * d - b * c; }
};

struct Twin {
  QuadraticField field;
  TwinMatrix matrix;
};

/// The unique field other than v sharing its singular locus and the
/// spectrum at every singularity.
///
/// Solves tr(A Dv(p_k)) = tr Dv(p_k) on three singularities together with
/// det A = 1. The linear part leaves one free unknown; substituting into the
/// determinant gives a quadratic with the identity as one root and the twin
/// as the other. Among the four triples and four choices of free unknown,
/// the best-conditioned 3x3 minor is used.
///
/// Throws DegenerateSystem when the linear system has rank below three,
/// NoDistinctTwin when only the identity solves the system, and
/// PostconditionFailed if the result does not reproduce v's locus and
/// spectra.
Twin compute_twin(const QuadraticField& v);

enum class SameSpectraVerdict { Identical, AffineEquivalent, TwinPair, Unrelated };

std::string_view to_string(SameSpectraVerdict verdict);

struct SameSpectraClassification {
  SameSpectraVerdict verdict = SameSpectraVerdict::Unrelated;
  /// For AffineEquivalent: transform(w, T) == v. For TwinPair:
  /// transform(w, T) == twin of v. Identity for Identical.
  std::optional<AffineMap> witness;
};

SameSpectraClassification classify_same_spectra(const QuadraticField& v,
                                                const QuadraticField& w);

}  // namespace qvf
