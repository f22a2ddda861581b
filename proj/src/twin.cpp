#include "qvf/twin.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include "qvf/locus.hpp"
#include "qvf/roots.hpp"

namespace qvf {

namespace {

constexpr double kIdentityRadius = 1e-6;
constexpr double kRankDeficient = 1e-10;

using Row4 = Eigen::Matrix<Complex, 1, 4>;
using Vector4c = Eigen::Matrix<Complex, 4, 1>;
using System = Eigen::Matrix<Complex, 3, 4>;
using Minor = Eigen::Matrix<Complex, 3, 3>;

// tr(A M) = a m11 + b m21 + c m12 + d m22 for A = (a b; c d).
Row4 trace_row(const Matrix2c& m) {
  Row4 r;
  r << m(0, 0), m(1, 0), m(0, 1), m(1, 1);
  return r;
}

Minor minor_without(const System& L, int column) {
  Minor B;
  for (int j = 0, k = 0; j < 4; ++j)
    if (j != column) B.col(k++) = L.col(j);
  return B;
}

struct Elimination {
  System L;
  Eigen::Matrix<Complex, 3, 1> rhs;
  int free_column = 0;
  double conditioning = -1.0;
};

// Picks the triple of singularities and the free unknown whose 3x3 minor has
// the largest smallest singular value relative to the system norm.
Elimination best_elimination(const QuadraticField& v, const Locus& locus) {
  Elimination best;
  for (int omit = 3; omit >= 0; --omit) {
    System L;
    Eigen::Matrix<Complex, 3, 1> rhs;
    for (int k = 0, row = 0; k < 4; ++k) {
      if (k == omit) continue;
      const Matrix2c J = jacobian_at(v, locus[k].position);
      L.row(row) = trace_row(J);
      rhs(row) = J.trace();
      ++row;
    }
    const double norm = L.norm();
    if (!(norm > 0.0)) continue;
    for (int col = 0; col < 4; ++col) {
      const Eigen::JacobiSVD<Minor> svd(minor_without(L, col));
      const double cond = svd.singularValues().minCoeff() / norm;
      if (cond > best.conditioning) best = {L, rhs, col, cond};
    }
  }
  return best;
}

TwinMatrix to_twin_matrix(const Vector4c& x) { return {x(0), x(1), x(2), x(3)}; }

}  // namespace

Twin compute_twin(const QuadraticField& v) {
  const Locus locus = singular_points(v);
  const Elimination e = best_elimination(v, locus);
  if (!(e.conditioning > kRankDeficient))
    throw Error(ErrorKind::DegenerateSystem, "trace equations have rank below three");

  // The three bound unknowns as an affine function of the free one:
  // x(s) = base + s * dir.
  const Eigen::PartialPivLU<Minor> lu(minor_without(e.L, e.free_column));
  const Eigen::Matrix<Complex, 3, 1> u0 = lu.solve(e.rhs);
  const Eigen::Matrix<Complex, 3, 1> u1 = lu.solve(-e.L.col(e.free_column));
  Vector4c base, dir;
  for (int j = 0, k = 0; j < 4; ++j) {
    if (j == e.free_column) {
      base(j) = 0.0;
      dir(j) = 1.0;
    } else {
      base(j) = u0(k);
      dir(j) = u1(k);
      ++k;
    }
  }

  // det A(s) - 1 = alpha s^2 + beta s + gamma.
  const Complex alpha = dir(0) * dir(3) - dir(1) * dir(2);
  const Complex beta = base(0) * dir(3) + dir(0) * base(3) - base(1) * dir(2) - dir(1) * base(2);
  const Complex gamma = base(0) * base(3) - base(1) * base(2) - 1.0;

  RootSet roots;
  try {
    roots = solve_univariate(UnivariatePoly({gamma, beta, alpha}));
  } catch (const Error& err) {
    throw Error(ErrorKind::NoDistinctTwin,
                std::string("determinant condition has no isolated solutions: ") + err.what());
  }
  const std::vector<Complex> s = roots.values();

  const Vector4c identity(1.0, 0.0, 0.0, 1.0);
  int twin_index = -1;
  double farthest = -1.0, nearest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    const double dist = (base + s[i] * dir - identity).norm();
    nearest = std::min(nearest, dist);
    if (dist > farthest) {
      farthest = dist;
      twin_index = i;
    }
  }
  if (s.size() < 2 || farthest < kIdentityRadius)
    throw Error(ErrorKind::NoDistinctTwin, "only the identity solves the twin system");
  if (nearest >= kIdentityRadius)
    throw Error(ErrorKind::PostconditionFailed, "twin system lost its identity solution");

  const TwinMatrix A = to_twin_matrix(base + s[twin_index] * dir);
  Twin twin{QuadraticField(A.a * v.P() + A.b * v.Q(), A.c * v.P() + A.d * v.Q()), A};

  const Locus twin_locus = singular_points(twin.field);
  if (!same_locus(locus, twin_locus) || !same_spectra(spectra_of(locus), spectra_of(twin_locus)))
    throw Error(ErrorKind::PostconditionFailed,
                "computed twin does not reproduce the singular locus and spectra");
  return twin;
}

std::string_view to_string(SameSpectraVerdict verdict) {
  switch (verdict) {
    case SameSpectraVerdict::Identical: return "Identical";
    case SameSpectraVerdict::AffineEquivalent: return "AffineEquivalent";
    case SameSpectraVerdict::TwinPair: return "TwinPair";
    case SameSpectraVerdict::Unrelated: return "Unrelated";
  }
  return "Unrelated";
}

SameSpectraClassification classify_same_spectra(const QuadraticField& v,
                                                const QuadraticField& w) {
  if (!same_spectra(spectra(v), spectra(w))) return {SameSpectraVerdict::Unrelated, std::nullopt};
  if (approx_equal(v, w)) return {SameSpectraVerdict::Identical, AffineMap::identity()};
  if (auto T = equivalence_witness(w, v)) return {SameSpectraVerdict::AffineEquivalent, *T};

  std::optional<Twin> twin;
  try {
    twin = compute_twin(v);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoDistinctTwin && e.kind() != ErrorKind::DegenerateSystem) throw;
  }
  if (twin) {
    if (auto T = equivalence_witness(w, twin->field))
      return {SameSpectraVerdict::TwinPair, *T};
  }
  return {SameSpectraVerdict::Unrelated, std::nullopt};
}

}  // namespace qvf
