#include "qvf/core.hpp"

#include <atomic>

namespace qvf {

namespace {
std::atomic<double> g_relative{1e-9};
std::atomic<double> g_absolute{1e-12};
}  // namespace

Tolerance default_tolerance() {
  return Tolerance{g_relative.load(std::memory_order_relaxed),
                   g_absolute.load(std::memory_order_relaxed)};
}

void set_default_tolerance(Tolerance tol) {
  if (!(tol.relative >= 0.0) || !(tol.absolute >= 0.0))
    throw Error(ErrorKind::InvalidArgument, "tolerances must be non-negative");
  g_relative.store(tol.relative, std::memory_order_relaxed);
  g_absolute.store(tol.absolute, std::memory_order_relaxed);
}

double max_coefficient_difference(const QuadraticField& a, const QuadraticField& b) {
  return (a.coefficients() - b.coefficients()).cwiseAbs().maxCoeff();
}

bool approx_equal(const QuadraticField& a, const QuadraticField& b, Tolerance tol) {
  const double scale = std::max(a.max_abs(), b.max_abs());
  return tol.negligible(max_coefficient_difference(a, b), scale);
}

}  // namespace qvf
