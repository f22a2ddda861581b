#include "qvf/hamiltonian.hpp"

#include <algorithm>
#include <numeric>

#include "qvf/locus.hpp"
#include "qvf/twin.hpp"

namespace qvf {

Poly2c divergence(const QuadraticField& v) { return v.P().dx() + v.Q().dy(); }

bool is_hamiltonian(const QuadraticField& v, Tolerance tol) {
  return tol.negligible(divergence(v).max_abs(), v.max_abs());
}

Complex CubicHamiltonian::operator()(const Complex& x, const Complex& y) const {
  return c(0) + c(1) * x + c(2) * y + c(3) * x * x + c(4) * x * y + c(5) * y * y +
         c(6) * x * x * x + c(7) * x * x * y + c(8) * x * y * y + c(9) * y * y * y;
}

Poly2c CubicHamiltonian::dx() const {
  return Poly2c(c(1), 2.0 * c(3), c(4), 3.0 * c(6), 2.0 * c(7), c(8));
}

Poly2c CubicHamiltonian::dy() const {
  return Poly2c(c(2), c(4), 2.0 * c(5), c(7), 2.0 * c(8), 3.0 * c(9));
}

CubicHamiltonian hamiltonian_function(const QuadraticField& v, Tolerance tol) {
  if (!is_hamiltonian(v, tol))
    throw Error(ErrorKind::NotHamiltonian, "vector field has non-vanishing divergence");
  const Poly2c& P = v.P();
  const Poly2c& Q = v.Q();
  CubicHamiltonian H;
  // From H_y = P.
  H.c(2) = P[Monomial::One];
  H.c(4) = P[Monomial::X];
  H.c(5) = P[Monomial::Y] / 2.0;
  H.c(7) = P[Monomial::XX];
  H.c(8) = P[Monomial::XY] / 2.0;
  H.c(9) = P[Monomial::YY] / 3.0;
  // From H_x = -Q; the mixed terms are already fixed and serve as a check.
  H.c(1) = -Q[Monomial::One];
  H.c(3) = -Q[Monomial::X] / 2.0;
  H.c(6) = -Q[Monomial::XX] / 3.0;

  const double mismatch = (H.dx() + Q).max_abs();
  if (!tol.negligible(mismatch, v.max_abs()))
    throw Error(ErrorKind::NotHamiltonian, "integrability residual too large");
  return H;
}

HamiltonianSpectrumCollection::HamiltonianSpectrumCollection(std::array<Complex, 4> determinants)
    : d_(determinants) {
  double largest = 0.0;
  for (const auto& d : d_) {
    if (!is_finite(d)) throw Error(ErrorKind::NonFinite, "non-finite determinant");
    largest = std::max(largest, std::abs(d));
  }
  for (const auto& d : d_)
    if (!(std::abs(d) > kDegeneracyThreshold * largest))
      throw Error(ErrorKind::ZeroEntry, "collection contains a zero determinant");
  std::sort(d_.begin(), d_.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
}

Complex HamiltonianSpectrumCollection::reciprocal_sum() const {
  Complex s = 0.0;
  for (const auto& d : d_) s += 1.0 / d;
  return s;
}

std::string_view to_string(CollectionClass c) {
  switch (c) {
    case CollectionClass::NonExceptional: return "NonExceptional";
    case CollectionClass::ExceptionalRealizable: return "ExceptionalRealizable";
    case CollectionClass::ExceptionalNonRealizable: return "ExceptionalNonRealizable";
    case CollectionClass::NotAdmissible: return "NotAdmissible";
  }
  return "NotAdmissible";
}

namespace {

bool admissible(const HamiltonianSpectrumCollection& col, Tolerance tol) {
  double scale = 0.0;
  for (const auto& d : col.values()) scale += 1.0 / std::abs(d);
  return tol.negligible(std::abs(col.reciprocal_sum()), scale);
}

bool opposite(const Complex& a, const Complex& b, Tolerance tol) {
  return tol.negligible(std::abs(a + b), std::abs(a) + std::abs(b));
}

bool has_opposite_pair(const std::array<Complex, 4>& d, Tolerance tol) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (opposite(d[i], d[j], tol)) return true;
  return false;
}

// Multiset of the form {d, -d, d, -d}, with d taken as the first entry.
bool alternating_form(const std::array<Complex, 4>& d, Tolerance tol) {
  int same = 0, negated = 0;
  for (const auto& x : d) {
    if (tol.close(x, d[0], std::abs(d[0]))) ++same;
    else if (opposite(x, d[0], tol)) ++negated;
  }
  return same == 2 && negated == 2;
}

}  // namespace

CollectionClass classify_collection(const HamiltonianSpectrumCollection& collection,
                                    Tolerance tol) {
  if (!admissible(collection, tol)) return CollectionClass::NotAdmissible;
  const auto& d = collection.values();
  if (!has_opposite_pair(d, tol)) return CollectionClass::NonExceptional;
  return alternating_form(d, tol) ? CollectionClass::ExceptionalRealizable
                                  : CollectionClass::ExceptionalNonRealizable;
}

CanonicalCoefficients ExceptionalFamily::member(const Complex& s) const {
  if (s == Complex(0.0) || !is_finite(s))
    throw Error(ErrorKind::InvalidArgument, "family parameter must be finite and nonzero");
  return CanonicalCoefficients(0.0, 0.0, s, d / s, 0.0, 0.0);
}

std::vector<CanonicalCoefficients> ExceptionalFamily::sample(
    std::span<const Complex> parameters) const {
  std::vector<CanonicalCoefficients> out;
  out.reserve(parameters.size());
  for (const auto& s : parameters) out.push_back(member(s));
  return out;
}

Realization realize_spectrum(const HamiltonianSpectrumCollection& collection, Tolerance tol) {
  const CollectionClass kind = classify_collection(collection, tol);
  const auto& d = collection.values();
  Realization out;
  out.kind = kind;

  if (kind == CollectionClass::NotAdmissible)
    throw Error(ErrorKind::NotRealizable, "collection is not admissible (sum of 1/d is nonzero)");
  if (kind == CollectionClass::ExceptionalNonRealizable)
    throw Error(ErrorKind::NotRealizable, "exceptional collection is not of the form {d,-d,d,-d}");

  if (kind == CollectionClass::ExceptionalRealizable) {
    // Marked determinants are (-a3 a4, a3 a4, a3 a4), so label d as the
    // value occurring at (1,0) and (0,1).
    out.family = ExceptionalFamily{d[0]};
    out.labelling = {-d[0], d[0], d[0], -d[0]};
    return out;
  }

  double dscale = 0.0;
  for (const auto& x : d) dscale = std::max(dscale, std::abs(x));

  std::array<int, 4> perm = {0, 1, 2, 3};
  do {
    const Complex d1 = d[perm[0]], d2 = d[perm[1]], d3 = d[perm[2]], d4 = d[perm[3]];
    if (tol.negligible(std::abs(d2 + d3), std::abs(d2) + std::abs(d3))) continue;
    const Complex a1 = std::sqrt(-(d1 + d2) * (d1 + d3) / (2.0 * (d2 + d3)));
    if (tol.negligible(std::abs(a1), std::sqrt(dscale))) continue;
    const Complex a3 = a1 + (d1 + d3) / (2.0 * a1);
    const Complex a4 = -a1 - (d1 + d2) / (2.0 * a1);
    const CanonicalCoefficients plus(a1, 2.0 * a1, a3, a4, -2.0 * a1, -a1);

    // Round trip through the marked-point spectra; d4 then follows from the
    // admissibility relation.
    const Vector6c s = spec6(plus);
    const bool ok = tol.close(s(1), d1, dscale) && tol.close(s(3), d2, dscale) &&
                    tol.close(s(5), d3, dscale) &&
                    tol.negligible(std::abs(s(0)) + std::abs(s(2)) + std::abs(s(4)),
                                   std::sqrt(dscale)) &&
                    is_finite(a3) && is_finite(a4);
    if (!ok) continue;
    out.branches = {plus, CanonicalCoefficients(Vector6c(-plus.a))};
    out.labelling = {d1, d2, d3, d4};
    return out;
  } while (std::next_permutation(perm.begin(), perm.end()));

  throw Error(ErrorKind::BranchSingularity, "no labelling of the collection gives finite branches");
}

bool hamiltonian_twin_check(const QuadraticField& v) {
  if (!is_hamiltonian(v))
    throw Error(ErrorKind::NotHamiltonian, "hamiltonian_twin_check requires a Hamiltonian field");
  const Twin twin = compute_twin(v);
  return approx_equal(twin.field, -v, kMatchTolerance);
}

}  // namespace qvf
