#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qvf/infinity.hpp"
#include "qvf/sampling.hpp"
#include "qvf/twin.hpp"

using namespace qvf;

namespace {

std::vector<Complex> mus(const QuadraticField& v) {
  std::vector<Complex> out;
  for (const auto& s : characteristic_numbers(v)) out.push_back(s.mu);
  return out;
}

double multiset_error(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  return oracle::best_matching(a, b, [](const Complex& x, const Complex& y) { return std::abs(x - y); });
}

}  // namespace

TEST_SUITE("infinity") {

TEST_CASE("infinity polynomial and directions of the reference fields") {
  const auto c = infinity_polynomial(oracle::example_v());
  CHECK(c[0] == Complex(0.0));
  CHECK(c[1] == Complex(2.0));
  CHECK(c[2] == Complex(-1.0));
  CHECK(c[3] == Complex(0.0));

  auto d = singular_directions(oracle::example_v());
  CHECK(d[0].same_as(ProjectiveDirection(1, 0)));
  CHECK(d[1].same_as(ProjectiveDirection(1, 2)));
  CHECK(d[2].same_as(ProjectiveDirection::vertical()));
  CHECK_FALSE(d[2].chart_w().has_value());

  d = singular_directions(oracle::example_hamiltonian());
  CHECK(d[0].same_as(ProjectiveDirection(1, -1)));
  CHECK(d[1].same_as(ProjectiveDirection(1, 0)));
  CHECK(d[2].same_as(ProjectiveDirection::vertical()));
}

TEST_CASE("radial quadratic part is dicritical") {
  // P2 = x(x + y), Q2 = y(x + y).
  try {
    singular_directions(QuadraticField(Poly2c(0, -1, 0, 1, 1, 0), Poly2c(0, 0, 2, 0, 1, 1)));
    FAIL("expected DicriticalInfinity");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DicriticalInfinity);
  }
}

TEST_CASE("characteristic numbers of the reference fields") {
  const auto c = characteristic_numbers(oracle::example_v());
  CHECK(std::abs(c[0].mu - 0.5) < 1e-14);
  CHECK(std::abs(c[1].mu + 2.5) < 1e-14);
  CHECK(std::abs(c[2].mu - 3.0) < 1e-14);
  for (const auto& s : characteristic_numbers(oracle::example_hamiltonian()))
    CHECK(std::abs(s.mu - 1.0 / 3.0) < 1e-14);
}

TEST_CASE("characteristic numbers of the reference twin") {
  // Finite directions solve 5w^2 + 8w + 7/3 = 0; with s = sqrt(52/3) the
  // numbers there are 3/5 -+ 9/(5s), and the vertical direction gives -1/5.
  const double s = std::sqrt(52.0 / 3.0);
  const QuadraticField t = oracle::example_twin();
  const auto c = characteristic_numbers(t);
  for (int k = 0; k < 2; ++k) {
    const Complex w = *c[k].direction.chart_w();
    CHECK(std::abs(5.0 * w * w + 8.0 * w + 7.0 / 3.0) < 1e-12);
  }
  CHECK(multiset_error(mus(t), {0.6 - 9.0 / (5.0 * s), 0.6 + 9.0 / (5.0 * s), -0.2}) < 1e-12);
}

TEST_CASE("characteristic numbers sum to one") {
  Rng rng(71);
  for (int n = 0; n < 1000; ++n) {
    const QuadraticField v = random_field(rng);
    try {
      const auto m = mus(v);
      CHECK(std::abs(m[0] + m[1] + m[2] - 1.0) < 1e-9 * (1.0 + std::abs(m[0]) + std::abs(m[1]) + std::abs(m[2])));
    } catch (const Error&) {
    }
  }
}

TEST_CASE("both charts agree away from the axes") {
  Rng rng(72);
  for (int n = 0; n < 200; ++n) {
    const QuadraticField v = random_generic_field(rng);
    for (const auto& s : characteristic_numbers(v)) {
      const auto w = s.direction.chart_w();
      if (!w || std::abs(*w) < 1e-3) continue;
      const Complex a = characteristic_number_w_chart(v, *w);
      const Complex b = characteristic_number_u_chart(v, 1.0 / *w);
      CHECK(std::abs(a - b) < 1e-9 * (1.0 + std::abs(a)));
    }
  }
}

TEST_CASE("characteristic numbers are affine invariant") {
  Rng rng(73);
  for (int n = 0; n < 100; ++n) {
    const QuadraticField v = random_generic_field(rng);
    const QuadraticField w = transform(v, random_affine_map(rng));
    CHECK(multiset_error(mus(v), mus(w)) < 1e-8 * 100.0);
    CHECK(classify_by_infinity(v, w));
  }
}

TEST_CASE("from infinity data") {
  InfinityData d;
  d.mu = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  d.w = {0.0, -1.0, 2.5};
  d.kappa = {1.5, -0.5};
  CHECK(from_infinity_data(d).a(2) == d.kappa);

  InfinityData bad = d;
  bad.w[2] = bad.w[1];
  try {
    from_infinity_data(bad);
    FAIL("expected InvalidData");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidData);
  }
  bad = d;
  bad.mu[0] = 0.5;
  CHECK_THROWS_AS(from_infinity_data(bad), Error);
  bad = d;
  bad.kappa = 0.0;
  CHECK_THROWS_AS(from_infinity_data(bad), Error);
}

TEST_CASE("infinity data round trip") {
  Rng rng(74);
  for (int n = 0; n < 200; ++n) {
    const InfinityData d = random_infinity_data(rng);
    const QuadraticField v = from_infinity_data(d).field();

    const auto c = infinity_polynomial(v);
    const auto expected = oracle::expand_roots(d.kappa, {d.w[0], d.w[1], d.w[2]});
    double scale = 0.0;
    for (const auto& x : expected) scale = std::max(scale, std::abs(x));
    for (int k = 0; k < 4; ++k) CHECK(std::abs(c[k] - expected[k]) < 1e-8 * scale);

    const auto chars = characteristic_numbers(v);
    std::vector<std::pair<Complex, Complex>> got, want;
    for (const auto& s : chars) {
      REQUIRE(s.direction.chart_w().has_value());
      got.emplace_back(*s.direction.chart_w(), s.mu);
    }
    for (int j = 0; j < 3; ++j) want.emplace_back(d.w[j], d.mu[j]);
    const double err = oracle::best_matching(got, want, [](const auto& a, const auto& b) {
      return std::max(std::abs(a.first - b.first), std::abs(a.second - b.second) / (1.0 + std::abs(b.second)));
    });
    CHECK(err < 1e-7);
  }
}

TEST_CASE("infinity data of the reference field") {
  const QuadraticField v = oracle::example_v();
  const MarkedInfinityData m = infinity_data_of(v);
  const CanonicalCoefficients rebuilt = from_infinity_data(m.data);
  CHECK((rebuilt.a - m.normalization.coefficients.a).norm() < 1e-10);

  const ModuliPoint p = moduli_map(m.data);
  CHECK(std::abs(p.mu1 - m.data.mu[0]) == 0.0);
  CHECK(std::abs(p.mu2 - m.data.mu[1]) == 0.0);
  CHECK(multiset_error({m.data.mu[0], m.data.mu[1], m.data.mu[2]}, {0.5, -2.5, 3.0}) < 1e-12);
  const Locus l = singular_points(v);
  for (int k = 0; k < 3; ++k) {
    const Spectrum& s = l[m.triple[k]].spectrum;
    CHECK(std::abs(p.spectra6(2 * k) - s.trace) < 1e-10);
    CHECK(std::abs(p.spectra6(2 * k + 1) - s.determinant) < 1e-10);
  }
}

TEST_CASE("moduli map is invariant under relabelling at infinity") {
  Rng rng(75);
  for (int n = 0; n < 50; ++n) {
    const InfinityData d = random_infinity_data(rng);
    InfinityData swapped = d;
    std::swap(swapped.w[0], swapped.w[2]);
    std::swap(swapped.mu[0], swapped.mu[2]);
    const ModuliPoint a = canonical_relabel(moduli_map(d));
    const ModuliPoint b = canonical_relabel(moduli_map(swapped));
    CHECK(std::abs(a.mu1 - b.mu1) < 1e-12);
    CHECK(std::abs(a.mu2 - b.mu2) < 1e-12);
    CHECK((a.spectra6 - b.spectra6).norm() < 1e-9 * (1.0 + a.spectra6.norm()));
    CHECK(a.spectra6.allFinite());
  }
}

TEST_CASE("moduli rank") {
  Rng rng(76);
  for (int n = 0; n < 20; ++n) CHECK(moduli_rank_probe(random_infinity_data(rng)) == 6);
  InfinityData d = random_infinity_data(rng);
  d.w[1] = d.w[0];
  CHECK_THROWS_AS(moduli_rank_probe(d), Error);
}

TEST_CASE("Baum-Bott on the reference fields") {
  BaumBott b = baum_bott(oracle::example_v());
  CHECK(std::abs(b.finite_sum - 106.0 / 15.0) < 1e-12);
  CHECK(std::abs(b.infinity_sum - 134.0 / 15.0) < 1e-12);
  CHECK(std::abs(b.residual) < 1e-12);
  b = baum_bott(oracle::example_hamiltonian());
  CHECK(std::abs(b.finite_sum) < 1e-12);
  CHECK(std::abs(b.infinity_sum - 16.0) < 1e-12);
}

TEST_CASE("Baum-Bott on random fields") {
  Rng rng(77);
  for (int n = 0; n < 1000; ++n) {
    const BaumBott b = baum_bott(random_generic_field(rng));
    CHECK(std::abs(b.residual) < 1e-8 * b.scale);
  }
}

TEST_CASE("infinity classification separates the reference twins") {
  const QuadraticField v = oracle::example_v();
  CHECK_FALSE(classify_by_infinity(v, oracle::example_twin()));
  CHECK(classify_by_infinity(v, v));
  CHECK(classify_by_infinity(v, transform(v, AffineMap::rotation(0.3))));
}

}
