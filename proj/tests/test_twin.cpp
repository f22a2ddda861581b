#include <doctest.h>

#include "oracles.hpp"
#include "qvf/locus.hpp"
#include "qvf/sampling.hpp"
#include "qvf/twin.hpp"

using namespace qvf;

TEST_SUITE("twin") {

TEST_CASE("twin of the reference field") {
  const Twin t = compute_twin(oracle::example_v());
  CHECK(max_coefficient_difference(t.field, oracle::example_twin()) < 1e-12);
  CHECK(std::abs(t.matrix.a - 3.0) < 1e-12);
  CHECK(std::abs(t.matrix.b) < 1e-12);
  CHECK(std::abs(t.matrix.c + 7.0 / 3.0) < 1e-12);
  CHECK(std::abs(t.matrix.d - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(t.matrix.determinant() - 1.0) < 1e-12);
}

TEST_CASE("twin of the Hamiltonian reference field is its negative") {
  const QuadraticField v = oracle::example_hamiltonian();
  const Twin t = compute_twin(v);
  CHECK(max_coefficient_difference(t.field, -v) < 1e-12);
  CHECK((t.matrix.matrix() + Matrix2c::Identity()).norm() < 1e-12);
}

TEST_CASE("twin is an involution preserving locus and spectra") {
  Rng rng(51);
  for (int n = 0; n < 200; ++n) {
    const QuadraticField v = random_generic_field(rng);
    const Twin t = compute_twin(v);
    CHECK(std::abs(t.matrix.determinant() - 1.0) < 1e-10);
    const Twin back = compute_twin(t.field);
    CHECK(max_coefficient_difference(back.field, v) < 1e-8 * v.max_abs());
    CHECK(same_locus(singular_points(v), singular_points(t.field), {1e-8, 1e-12}));
    CHECK(same_spectra(spectra(v), spectra(t.field), {1e-8, 1e-12}));
    CHECK_FALSE(approx_equal(v, t.field, {1e-6, 0.0}));
  }
}

TEST_CASE("twin is affine covariant") {
  // The twin of T.v is T.(twin of v) since both are determined by the locus
  // and spectra.
  Rng rng(52);
  for (int n = 0; n < 50; ++n) {
    const QuadraticField v = random_generic_field(rng);
    const AffineMap T = random_affine_map(rng);
    const QuadraticField lhs = compute_twin(transform(v, T)).field;
    const QuadraticField rhs = transform(compute_twin(v).field, T);
    CHECK(approx_equal(lhs, rhs, {1e-7, 1e-12}));
  }
}

TEST_CASE("same-spectra classification") {
  const QuadraticField v = oracle::example_v();
  auto c = classify_same_spectra(v, v);
  CHECK(c.verdict == SameSpectraVerdict::Identical);

  c = classify_same_spectra(v, oracle::example_twin());
  CHECK(c.verdict == SameSpectraVerdict::TwinPair);
  REQUIRE(c.witness.has_value());
  CHECK((c.witness->linear() - Matrix2c::Identity()).norm() < 1e-8);
  CHECK(c.witness->translation().norm() < 1e-8);

  CHECK(classify_same_spectra(v, Complex(2.0) * v).verdict == SameSpectraVerdict::Unrelated);
  CHECK(classify_same_spectra(v, oracle::example_hamiltonian()).verdict == SameSpectraVerdict::Unrelated);
  CHECK(to_string(SameSpectraVerdict::TwinPair) == "TwinPair");

  Rng rng(53);
  int twin_pairs = 0;
  const int samples = 40;
  for (int n = 0; n < samples; ++n) {
    const QuadraticField w = random_generic_field(rng);
    const AffineMap T = random_affine_map(rng);
    const QuadraticField image = transform(w, T);
    const auto eq = classify_same_spectra(w, image);
    CHECK(eq.verdict == SameSpectraVerdict::AffineEquivalent);
    REQUIRE(eq.witness.has_value());
    CHECK(approx_equal(transform(image, *eq.witness), w, kWitnessTolerance));

    const QuadraticField moved_twin = transform(compute_twin(w).field, random_affine_map(rng));
    if (classify_same_spectra(w, moved_twin).verdict == SameSpectraVerdict::TwinPair) ++twin_pairs;
  }
  CHECK(twin_pairs == samples);
}

TEST_CASE("twin of a degenerate configuration propagates the error") {
  try {
    compute_twin(QuadraticField(Poly2c(0, 0, 0, 1, 0, 0), Poly2c(0, 0, 0, 0, 0, 1)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateConfiguration);
  }
}

}
