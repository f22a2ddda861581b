#include "qvf/sampling.hpp"

#include <Eigen/LU>

#include "qvf/locus.hpp"

namespace qvf {

namespace {

double chordal(const ProjectiveDirection& a, const ProjectiveDirection& b) {
  const double cross = std::abs(a.x() * b.y() - a.y() * b.x());
  const double na = std::sqrt(std::norm(a.x()) + std::norm(a.y()));
  const double nb = std::sqrt(std::norm(b.x()) + std::norm(b.y()));
  return cross / (na * nb);
}

}  // namespace

Complex random_complex(Rng& rng, double sigma) {
  std::normal_distribution<double> n(0.0, sigma);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

QuadraticField random_field(Rng& rng) {
  for (;;) {
    Poly2c P, Q;
    for (int i = 0; i < 6; ++i) P.coefficients()(i) = random_complex(rng);
    for (int i = 0; i < 6; ++i) Q.coefficients()(i) = random_complex(rng);
    try {
      return QuadraticField(P, Q);
    } catch (const Error&) {
    }
  }
}

bool is_well_conditioned(const QuadraticField& v, const GenericityCriteria& c) {
  try {
    const Locus locus = singular_points(v);
    for (int i = 0; i < 4; ++i) {
      if (locus[i].position.cwiseAbs().maxCoeff() > c.max_extent) return false;
      const Matrix2c J = jacobian_at(v, locus[i].position);
      if (std::abs(J.determinant()) < c.min_relative_det * J.squaredNorm()) return false;
      for (int j = i + 1; j < 4; ++j)
        if ((locus[i].position - locus[j].position).norm() < c.min_separation) return false;
    }
    const auto chars = characteristic_numbers(v);
    for (int i = 0; i < 3; ++i) {
      if (std::abs(chars[i].mu) > c.max_mu) return false;
      for (int j = i + 1; j < 3; ++j)
        if (chordal(chars[i].direction, chars[j].direction) < c.min_direction_gap) return false;
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

QuadraticField random_generic_field(Rng& rng, const GenericityCriteria& c) {
  for (;;) {
    QuadraticField v = random_field(rng);
    if (is_well_conditioned(v, c)) return v;
  }
}

AffineMap random_affine_map(Rng& rng) {
  for (;;) {
    Matrix2c L;
    L << random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng);
    const Point t(random_complex(rng), random_complex(rng));
    if (std::abs(L.determinant()) >= 0.1) return AffineMap(L, t);
  }
}

CanonicalCoefficients random_canonical(Rng& rng) {
  CanonicalCoefficients c;
  for (int i = 0; i < 6; ++i) c.a(i) = random_complex(rng);
  return c;
}

InfinityData random_infinity_data(Rng& rng) {
  for (;;) {
    InfinityData d;
    d.mu[0] = random_complex(rng);
    d.mu[1] = random_complex(rng);
    d.mu[2] = 1.0 - d.mu[0] - d.mu[1];
    for (auto& w : d.w) w = random_complex(rng);
    d.kappa = random_complex(rng);
    if (std::abs(d.kappa) < 0.2) continue;
    if (std::abs(d.w[0] - d.w[1]) < 0.2 || std::abs(d.w[0] - d.w[2]) < 0.2 ||
        std::abs(d.w[1] - d.w[2]) < 0.2)
      continue;
    return d;
  }
}

HamiltonianSpectrumCollection random_admissible_collection(Rng& rng) {
  for (;;) {
    std::array<Complex, 4> d;
    for (int i = 0; i < 3; ++i) d[i] = random_complex(rng);
    const Complex s = 1.0 / d[0] + 1.0 / d[1] + 1.0 / d[2];
    if (std::abs(s) < 1e-3) continue;
    d[3] = -1.0 / s;
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      ok = std::abs(d[i]) >= 0.1 && std::abs(d[i]) <= 10.0;
      for (int j = i + 1; j < 4 && ok; ++j)
        ok = std::abs(d[i] + d[j]) >= 0.1 * (std::abs(d[i]) + std::abs(d[j]));
    }
    if (ok) return HamiltonianSpectrumCollection(d);
  }
}

QuadraticField random_hamiltonian_field(Rng& rng, const GenericityCriteria& c) {
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    const Realization r = realize_spectrum(random_admissible_collection(rng));
    const CanonicalCoefficients& branch = r.branches[coin(rng) ? 0 : 1];
    QuadraticField v = transform(branch.field(), random_affine_map(rng));
    if (is_well_conditioned(v, c)) return v;
  }
}

}  // namespace qvf
