#pragma once

// Seeded random instances for property sweeps, the CLI `random` and
// `probe-rank` commands, and the acceptance suite.

#include <random>

#include "qvf/affine.hpp"
#include "qvf/core.hpp"
#include "qvf/hamiltonian.hpp"
#include "qvf/infinity.hpp"

namespace qvf {

using Rng = std::mt19937_64;

/// Real and imaginary parts independent N(0, sigma^2).
Complex random_complex(Rng& rng, double sigma = 1.0);

/// Twelve independent Gaussian coefficients.
QuadraticField random_field(Rng& rng);

/// Conditioning requirements a sampled field must meet to count as generic.
struct GenericityCriteria {
  double max_extent = 10.0;         // max |coordinate| of a singular point
  double min_separation = 0.1;      // between singular points
  double min_relative_det = 1e-3;   // |det J| / |J|_F^2 at each singularity
  double min_direction_gap = 0.05;  // chordal distance between directions at infinity
  double max_mu = 100.0;            // |characteristic number|
};

/// Whether v meets the criteria; all upstream computations must succeed.
bool is_well_conditioned(const QuadraticField& v, const GenericityCriteria& c = {});

/// Rejection-samples random_field until is_well_conditioned holds.
QuadraticField random_generic_field(Rng& rng, const GenericityCriteria& c = {});

/// Gaussian linear part with |det| >= 0.1, Gaussian translation.
AffineMap random_affine_map(Rng& rng);

CanonicalCoefficients random_canonical(Rng& rng);

/// mu1, mu2 Gaussian (mu3 = 1 - mu1 - mu2), w's Gaussian and pairwise at
/// least 0.2 apart, |kappa| >= 0.2.
InfinityData random_infinity_data(Rng& rng);

/// d1, d2, d3 Gaussian, d4 from sum 1/d = 0; entries of moderate size and
/// no pair close to opposite.
HamiltonianSpectrumCollection random_admissible_collection(Rng& rng);

/// A realized non-exceptional Hamiltonian field moved by a random affine
/// map, conditioned as random_generic_field.
QuadraticField random_hamiltonian_field(Rng& rng, const GenericityCriteria& c = {});

}  // namespace qvf
