#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qvf/affine.hpp"
#include "qvf/core.hpp"

namespace qvf {

/// Divergence P_x + Q_y, a polynomial of degree at most one.
Poly2c divergence(const QuadraticField& v);

/// True iff the divergence vanishes identically.
bool is_hamiltonian(const QuadraticField& v, Tolerance tol = default_tolerance());

/// Cubic H with H(0,0) = 0. Coefficients ordered
/// 1, x, y, x^2, xy, y^2, x^3, x^2 y, x y^2, y^3.
struct CubicHamiltonian {
  Eigen::Matrix<Complex, 10, 1> c = Eigen::Matrix<Complex, 10, 1>::Zero();

  Complex operator()(const Complex& x, const Complex& y) const;
  Poly2c dx() const;
  Poly2c dy() const;
};

/// The H with H_y = P and H_x = -Q. Throws NotHamiltonian.
CubicHamiltonian hamiltonian_function(const QuadraticField& v, Tolerance tol = default_tolerance());

/// Four nonzero determinants, stored sorted by (re, im). Throws ZeroEntry.
class HamiltonianSpectrumCollection {
 public:
  explicit HamiltonianSpectrumCollection(std::array<Complex, 4> determinants);

  const std::array<Complex, 4>& values() const { return d_; }
  /// sum 1/d_k.
  Complex reciprocal_sum() const;

 private:
  std::array<Complex, 4> d_;
};

enum class CollectionClass {
  NonExceptional,
  ExceptionalRealizable,
  ExceptionalNonRealizable,
  NotAdmissible,
};

std::string_view to_string(CollectionClass c);

CollectionClass classify_collection(const HamiltonianSpectrumCollection& collection,
                                    Tolerance tol = default_tolerance());

/// Realizing fields of an exceptional collection {d, -d, d, -d}:
/// a1 = 0, a3 = s, a4 = d / s for any nonzero s. The determinants at
/// (0,0), (1,0), (0,1) and the fourth singularity are -d, d, d, -d.
struct ExceptionalFamily {
  Complex d;

  CanonicalCoefficients member(const Complex& s) const;
  std::vector<CanonicalCoefficients> sample(std::span<const Complex> parameters) const;
};

struct Realization {
  CollectionClass kind = CollectionClass::NonExceptional;
  /// NonExceptional: the two sign branches (+a1 first); each is the other's
  /// negative and its twin.
  std::vector<CanonicalCoefficients> branches;
  /// ExceptionalRealizable only.
  std::optional<ExceptionalFamily> family;
  /// The labelling d1, d2, d3 (at the three marked points) and d4 used.
  std::array<Complex, 4> labelling{};
};

/// Throws NotRealizable for non-admissible or non-realizable exceptional
/// collections, BranchSingularity when no labelling yields finite branches.
Realization realize_spectrum(const HamiltonianSpectrumCollection& collection,
                             Tolerance tol = default_tolerance());

/// Whether the twin of a Hamiltonian field is its negative. Throws
/// NotHamiltonian for non-Hamiltonian input; twin errors propagate.
bool hamiltonian_twin_check(const QuadraticField& v);

}  // namespace qvf
