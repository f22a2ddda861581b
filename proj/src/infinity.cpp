#include "qvf/infinity.hpp"

#include <algorithm>

#include "qvf/roots.hpp"

namespace qvf {

namespace {

constexpr double kDicritical = 1e-10;
constexpr double kResonance = 1e-12;
constexpr double kMuSum = 1e-8;
constexpr double kFiniteChart = 1e-3;

bool complex_less(const Complex& a, const Complex& b) {
  return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

double quadratic_scale(const QuadraticField& v) {
  return std::max(v.P().quadratic_part().cwiseAbs().maxCoeff(),
                  v.Q().quadratic_part().cwiseAbs().maxCoeff());
}

// Homogeneous quadratic parts evaluated at (x, y).
Complex P2(const QuadraticField& v, const Complex& x, const Complex& y) {
  const auto& P = v.P();
  return P[Monomial::XX] * x * x + P[Monomial::XY] * x * y + P[Monomial::YY] * y * y;
}
Complex Q2(const QuadraticField& v, const Complex& x, const Complex& y) {
  const auto& Q = v.Q();
  return Q[Monomial::XX] * x * x + Q[Monomial::XY] * x * y + Q[Monomial::YY] * y * y;
}

CanonicalCoefficients coefficients_unchecked(const InfinityData& d) {
  const auto& w = d.w;
  const auto& m = d.mu;
  const Complex k = d.kappa;
  return CanonicalCoefficients(
      k * (m[0] * w[1] * w[2] + m[1] * w[0] * w[2] + m[2] * w[0] * w[1]),
      -k * (m[0] * (w[1] + w[2]) + m[1] * (w[0] + w[2]) + m[2] * (w[0] + w[1])),
      k,
      k * w[0] * w[1] * w[2],
      -k * (m[0] * w[0] * (w[1] + w[2]) + m[1] * w[1] * (w[0] + w[2]) +
            m[2] * w[2] * (w[0] + w[1])),
      k * (m[0] * w[0] + m[1] * w[1] + m[2] * w[2]));
}

Eigen::Matrix<Complex, 8, 1> moduli_unchecked(const Eigen::Matrix<Complex, 6, 1>& z) {
  InfinityData d;
  d.mu = {z(0), z(1), 1.0 - z(0) - z(1)};
  d.w = {z(2), z(3), z(4)};
  d.kappa = z(5);
  Eigen::Matrix<Complex, 8, 1> out;
  out << z(0), z(1), spec6(coefficients_unchecked(d));
  return out;
}

}  // namespace

ProjectiveDirection::ProjectiveDirection(const Complex& x, const Complex& y) {
  if (!is_finite(x) || !is_finite(y)) throw Error(ErrorKind::NonFinite, "non-finite direction");
  if (x == Complex(0.0) && y == Complex(0.0))
    throw Error(ErrorKind::InvalidArgument, "projective direction [0:0]");
  if (std::abs(x) >= std::abs(y)) {
    x_ = 1.0;
    y_ = y / x;
  } else {
    x_ = x / y;
    y_ = 1.0;
  }
}

std::optional<Complex> ProjectiveDirection::chart_w() const {
  if (x_ == Complex(0.0)) return std::nullopt;
  return y_ / x_;
}

bool ProjectiveDirection::same_as(const ProjectiveDirection& other, double tol) const {
  return std::abs(x_ * other.y_ - y_ * other.x_) <= tol;
}

std::array<Complex, 4> infinity_polynomial(const QuadraticField& v) {
  const auto& P = v.P();
  const auto& Q = v.Q();
  return {-Q[Monomial::XX], P[Monomial::XX] - Q[Monomial::XY], P[Monomial::XY] - Q[Monomial::YY],
          P[Monomial::YY]};
}

std::array<ProjectiveDirection, 3> singular_directions(const QuadraticField& v) {
  const auto c = infinity_polynomial(v);
  double largest = 0.0;
  for (const auto& x : c) largest = std::max(largest, std::abs(x));
  if (largest <= kDicritical * quadratic_scale(v))
    throw Error(ErrorKind::DicriticalInfinity, "x Q2 - y P2 vanishes identically");

  const UnivariatePoly C(std::vector<Complex>(c.begin(), c.end()));
  const int degree = C.effective_degree();
  if (degree < 2)
    throw Error(ErrorKind::MultipleDirection, "direction [0:1] is a repeated root at infinity");

  const RootSet roots = solve_univariate(C);
  if (!roots.all_simple())
    throw Error(ErrorKind::MultipleDirection, "repeated singular direction at infinity");
  std::vector<Complex> ws = roots.values();
  std::sort(ws.begin(), ws.end(), complex_less);

  std::vector<ProjectiveDirection> dirs;
  for (const auto& w : ws) dirs.push_back(ProjectiveDirection::from_chart(w));
  if (degree == 2) dirs.push_back(ProjectiveDirection::vertical());
  return {dirs[0], dirs[1], dirs[2]};
}

Complex characteristic_number_w_chart(const QuadraticField& v, const Complex& w) {
  const auto c = infinity_polynomial(v);
  const Complex dC = c[1] + 2.0 * c[2] * w + 3.0 * c[3] * w * w;
  const double scale = quadratic_scale(v) * (1.0 + std::abs(w) * std::abs(w));
  if (std::abs(dC) <= kResonance * scale)
    throw Error(ErrorKind::ResonantDirection, "vanishing denominator in the w chart");
  return P2(v, 1.0, w) / dC;
}

Complex characteristic_number_u_chart(const QuadraticField& v, const Complex& u) {
  const auto& P = v.P();
  const auto& Q = v.Q();
  // D(u) = Q_xx u^3 + (Q_xy - P_xx) u^2 + (Q_yy - P_xy) u - P_yy.
  const Complex dD = 3.0 * Q[Monomial::XX] * u * u +
                     2.0 * (Q[Monomial::XY] - P[Monomial::XX]) * u +
                     (Q[Monomial::YY] - P[Monomial::XY]);
  const double scale = quadratic_scale(v) * (1.0 + std::abs(u) * std::abs(u));
  if (std::abs(dD) <= kResonance * scale)
    throw Error(ErrorKind::ResonantDirection, "vanishing denominator in the u chart");
  return Q2(v, u, 1.0) / dD;
}

std::array<InfinitySingularity, 3> characteristic_numbers(const QuadraticField& v) {
  const auto dirs = singular_directions(v);
  std::array<InfinitySingularity, 3> out = {
      InfinitySingularity{dirs[0], 0.0}, InfinitySingularity{dirs[1], 0.0},
      InfinitySingularity{dirs[2], 0.0}};
  Complex sum = 0.0;
  double magnitude = 0.0;
  for (auto& s : out) {
    if (auto w = s.direction.chart_w())
      s.mu = characteristic_number_w_chart(v, *w);
    else
      s.mu = characteristic_number_u_chart(v, 0.0);
    sum += s.mu;
    magnitude += std::abs(s.mu);
  }
  if (std::abs(sum - 1.0) > kMuSum * (1.0 + magnitude))
    throw Error(ErrorKind::PostconditionFailed, "characteristic numbers do not sum to one");
  return out;
}

void InfinityData::validate(Tolerance tol) const {
  double wscale = 0.0, muscale = 0.0;
  Complex musum = 0.0;
  for (int j = 0; j < 3; ++j) {
    if (!is_finite(w[j]) || !is_finite(mu[j]))
      throw Error(ErrorKind::InvalidData, "infinity data must be finite");
    wscale = std::max(wscale, std::abs(w[j]));
    muscale += std::abs(mu[j]);
    musum += mu[j];
  }
  if (!is_finite(kappa) || kappa == Complex(0.0))
    throw Error(ErrorKind::InvalidData, "kappa must be finite and nonzero");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(w[i] - w[j]) <= kDegeneracyThreshold * (1.0 + wscale))
        throw Error(ErrorKind::InvalidData, "singular directions must be distinct");
  if (!tol.negligible(std::abs(musum - 1.0), 1.0 + muscale))
    throw Error(ErrorKind::InvalidData, "characteristic numbers must sum to one");
}

CanonicalCoefficients from_infinity_data(const InfinityData& data) {
  data.validate();
  return coefficients_unchecked(data);
}

MarkedInfinityData infinity_data_of(const QuadraticField& v) {
  const Locus locus = singular_points(v);
  std::optional<MarkedInfinityData> best;
  double best_quality = kFiniteChart;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        if (i == j || j == k || i == k) continue;
        const Normalization n = normalize(v, locus[i], locus[j], locus[k]);
        const double quality =
            std::abs(n.coefficients.a(2)) / n.coefficients.a.cwiseAbs().maxCoeff();
        if (quality <= best_quality) continue;
        const auto chars = characteristic_numbers(n.coefficients.field());
        MarkedInfinityData m{InfinityData{}, n, {i, j, k}};
        bool finite = true;
        for (int s = 0; s < 3; ++s) {
          const auto w = chars[s].direction.chart_w();
          if (!w) {
            finite = false;
            break;
          }
          m.data.w[s] = *w;
          m.data.mu[s] = chars[s].mu;
        }
        if (!finite) continue;
        m.data.kappa = n.coefficients.a(2);
        best = m;
        best_quality = quality;
      }
  if (!best)
    throw Error(ErrorKind::DegenerateConfiguration,
                "no marked triple puts every singular direction in the finite chart");
  return *best;
}

ModuliPoint moduli_map(const InfinityData& data) {
  return {data.mu[0], data.mu[1], spec6(from_infinity_data(data))};
}

ModuliPoint canonical_relabel(const ModuliPoint& m) {
  std::array<Complex, 3> mu = {m.mu1, m.mu2, 1.0 - m.mu1 - m.mu2};
  std::sort(mu.begin(), mu.end(), complex_less);
  return {mu[0], mu[1], m.spectra6};
}

Eigen::Matrix<Complex, 8, 6> moduli_jacobian(const InfinityData& data) {
  data.validate();
  Eigen::Matrix<Complex, 6, 1> z;
  z << data.mu[0], data.mu[1], data.w[0], data.w[1], data.w[2], data.kappa;
  Eigen::Matrix<Complex, 8, 6> J;
  for (int j = 0; j < 6; ++j) {
    const double h = 1e-6 * (1.0 + std::abs(z(j)));
    Eigen::Matrix<Complex, 6, 1> plus = z, minus = z;
    plus(j) += h;
    minus(j) -= h;
    J.col(j) = (moduli_unchecked(plus) - moduli_unchecked(minus)) / (2.0 * h);
  }
  return J;
}

int moduli_rank_probe(const InfinityData& data) { return numerical_rank(moduli_jacobian(data)); }

BaumBott baum_bott(const QuadraticField& v) {
  const Locus locus = singular_points(v);
  const auto chars = characteristic_numbers(v);
  BaumBott bb{};
  for (const auto& p : locus) {
    const Complex term = p.spectrum.trace * p.spectrum.trace / p.spectrum.determinant;
    bb.finite_sum += term;
    bb.scale += std::abs(term);
  }
  for (const auto& c : chars) {
    const Complex term = (1.0 + c.mu) * (1.0 + c.mu) / c.mu;
    bb.infinity_sum += term;
    bb.scale += std::abs(term);
  }
  bb.residual = bb.finite_sum + bb.infinity_sum - 16.0;
  bb.scale = std::max(bb.scale, 16.0);
  return bb;
}

Complex baum_bott_residual(const QuadraticField& v) { return baum_bott(v).residual; }

bool classify_by_infinity(const QuadraticField& v, const QuadraticField& w) {
  if (!same_spectra(spectra(v), spectra(w))) return false;
  const auto cv = characteristic_numbers(v);
  const auto cw = characteristic_numbers(w);
  double scale = 1.0;
  for (int i = 0; i < 3; ++i) scale = std::max({scale, std::abs(cv[i].mu), std::abs(cw[i].mu)});
  std::array<int, 3> perm = {0, 1, 2};
  do {
    bool match = true;
    for (int i = 0; i < 3 && match; ++i)
      match = kMatchTolerance.close(cv[i].mu, cw[perm[i]].mu, scale);
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace qvf
