#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qvf/roots.hpp"
#include "qvf/sampling.hpp"

using namespace qvf;

namespace {

std::vector<Complex> sorted_values(const RootSet& r) {
  auto v = r.values();
  std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return v;
}

double max_pair_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  return oracle::best_matching(a, b, [](const Complex& x, const Complex& y) { return std::abs(x - y); });
}

}  // namespace

TEST_SUITE("roots") {

TEST_CASE("hand-factored quadratics") {
  auto r = sorted_values(solve_univariate(UnivariatePoly({-1.0, 0.0, 1.0})));
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] + 1.0) < 1e-14);
  CHECK(std::abs(r[1] - 1.0) < 1e-14);

  // w^2 - 2w stored as a cubic whose top coefficient vanishes.
  UnivariatePoly c({0.0, -2.0, 1.0, 0.0});
  CHECK(c.effective_degree() == 2);
  r = sorted_values(solve_univariate(c));
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0]) < 1e-14);
  CHECK(std::abs(r[1] - 2.0) < 1e-14);

  r = sorted_values(solve_univariate(UnivariatePoly({0.0, 3.0, 3.0})));
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] + 1.0) < 1e-14);
  CHECK(std::abs(r[1]) < 1e-14);
}

TEST_CASE("effective degree and errors") {
  CHECK(UnivariatePoly({1.0, 2.0, 3.0, 1e-12}).effective_degree() == 2);
  CHECK(UnivariatePoly({0.0, 0.0}).effective_degree() == -1);
  CHECK(UnivariatePoly({5.0}).effective_degree() == 0);
  try {
    solve_univariate(UnivariatePoly({5.0, 1e-13}));
    FAIL("expected DegenerateLeadingCoefficient");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateLeadingCoefficient);
  }
  try {
    UnivariatePoly(std::vector<Complex>(6, 1.0));
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
}

TEST_CASE("repeated roots are clustered with multiplicity") {
  const auto c = oracle::expand_roots(2.0, {1.0, 1.0, -2.0});
  const RootSet r = solve_univariate(UnivariatePoly(c));
  CHECK(r.count() == 3);
  CHECK_FALSE(r.all_simple());
  bool found_double = false;
  for (const auto& root : r.roots)
    if (root.multiplicity == 2) {
      found_double = true;
      CHECK(std::abs(root.value - 1.0) < 1e-6);
    }
  CHECK(found_double);

  const RootSet quad = solve_univariate(UnivariatePoly(oracle::expand_roots(1.0, {0.5, 0.5, 0.5, 0.5})));
  CHECK(quad.count() == 4);
}

TEST_CASE("reconstruction from roots of well-separated polynomials") {
  Rng rng(21);
  for (int n = 0; n < 2000; ++n) {
    const int degree = 1 + n % 4;
    std::vector<Complex> roots;
    while (static_cast<int>(roots.size()) < degree) {
      const Complex z = random_complex(rng, 2.0);
      bool separated = true;
      for (const auto& r : roots) separated = separated && std::abs(z - r) > 0.1;
      if (separated) roots.push_back(z);
    }
    const Complex lead = random_complex(rng) + 0.5;
    const auto coeffs = oracle::expand_roots(lead, roots);
    const RootSet found = solve_univariate(UnivariatePoly(coeffs));
    REQUIRE(found.count() == degree);
    CHECK(found.all_simple());
    const auto rebuilt = oracle::expand_roots(lead, found.values());
    double scale = 0.0, err = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      scale = std::max(scale, std::abs(coeffs[k]));
      err = std::max(err, std::abs(coeffs[k] - rebuilt[k]));
    }
    CHECK(err <= 1e-8 * scale);
    CHECK(max_pair_distance(found.values(), roots) < 1e-7 * (1.0 + 2.0 * 4));
  }
}

TEST_CASE("root count equals effective degree") {
  Rng rng(22);
  std::uniform_int_distribution<int> drop(0, 3);
  int failures = 0;
  for (int n = 0; n < 10000; ++n) {
    std::vector<Complex> c(5);
    for (auto& x : c) x = random_complex(rng);
    // Zero out some top coefficients so the effective degree varies.
    const int zeros = drop(rng);
    for (int k = 0; k < zeros; ++k) c[4 - k] = 0.0;
    const UnivariatePoly p(c);
    if (p.effective_degree() < 1) continue;
    if (solve_univariate(p).count() != p.effective_degree()) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("returned roots satisfy the residual bound") {
  Rng rng(23);
  for (int n = 0; n < 1000; ++n) {
    std::vector<Complex> c(5);
    for (auto& x : c) x = random_complex(rng);
    const UnivariatePoly p(c);
    double cmax = 0.0;
    for (const auto& x : c) cmax = std::max(cmax, std::abs(x));
    for (const Complex& z : solve_univariate(p).values()) {
      const double a = std::abs(z);
      CHECK(std::abs(p(z)) <= 1e-9 * cmax * (1 + a + a * a + a * a * a + a * a * a * a));
    }
  }
}

TEST_CASE("double root at the origin with vanishing low coefficients") {
  // Resultant shape produced by fields with two singularities on the y axis.
  const std::vector<Complex> c = {0.0, 0.0, {0.27697371344833766, -1.0347508770725529},
                                  {0.12660030039307657, 0.8717461274527003},
                                  {-0.40357401384141434, 0.1630047496198527}};
  const RootSet r = solve_univariate(UnivariatePoly(c));
  CHECK(r.count() == 4);
  int at_origin = 0;
  for (const Complex& z : r.values())
    if (std::abs(z) < 1e-6) ++at_origin;
  CHECK(at_origin == 2);
}

}
