#include "qvf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "qvf/affine.hpp"
#include "qvf/hamiltonian.hpp"
#include "qvf/infinity.hpp"
#include "qvf/io.hpp"
#include "qvf/locus.hpp"
#include "qvf/sampling.hpp"
#include "qvf/twin.hpp"

namespace qvf {

using nlohmann::json;

namespace {

// Bad command lines and unreadable or malformed input files.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_input_error(ErrorKind kind) {
  return kind == ErrorKind::SyntaxError || kind == ErrorKind::DegreeTooHigh ||
         kind == ErrorKind::InvalidDocument;
}

class ToleranceGuard {
 public:
  ToleranceGuard() : saved_(default_tolerance()) {}
  ~ToleranceGuard() { set_default_tolerance(saved_); }
  ToleranceGuard(const ToleranceGuard&) = delete;
  ToleranceGuard& operator=(const ToleranceGuard&) = delete;

 private:
  Tolerance saved_;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("input file '" + path + "' is not valid JSON: " + e.what());
  }
}

struct FieldSource {
  std::string input;
  std::string P, Q;

  void attach(CLI::App* sub, const std::string& suffix = "") {
    sub->add_option("--input" + suffix, input, "vector field document (JSON)");
    sub->add_option("--P" + suffix, P, "first component as a polynomial expression");
    sub->add_option("--Q" + suffix, Q, "second component as a polynomial expression");
  }

  QuadraticField load(const std::string& suffix = "") const {
    if (!input.empty()) {
      if (!P.empty() || !Q.empty())
        throw UsageError("give either --input" + suffix + " or --P" + suffix + "/--Q" + suffix + ", not both");
      const VectorFieldDocument doc = document_from_json(read_json_file(input));
      if (doc.tolerance) set_default_tolerance(*doc.tolerance);
      return to_field(doc);
    }
    if (P.empty() || Q.empty())
      throw UsageError("a field is required: --input" + suffix + " FILE or --P" + suffix + " EXPR --Q" +
                       suffix + " EXPR");
    return QuadraticField(parse_polynomial(P), parse_polynomial(Q));
  }
};

std::vector<Complex> complex_list(const std::vector<double>& flat, std::size_t count, const char* name) {
  if (flat.size() != 2 * count)
    throw UsageError(std::string(name) + " expects " + std::to_string(2 * count) +
                     " numbers (real and imaginary parts)");
  std::vector<Complex> out;
  for (std::size_t k = 0; k < count; ++k) out.emplace_back(flat[2 * k], flat[2 * k + 1]);
  return out;
}

json error_json(const std::string& kind, const std::string& message) {
  return json{{"kind", kind}, {"message", message}};
}

json locus_json(const Locus& locus) {
  json points = json::array();
  for (const auto& p : locus) points.push_back(singular_point_to_json(p));
  return points;
}

json matrix_json(const TwinMatrix& m) {
  return json{{"a", complex_to_json(m.a)},
              {"b", complex_to_json(m.b)},
              {"c", complex_to_json(m.c)},
              {"d", complex_to_json(m.d)},
              {"determinant", complex_to_json(m.determinant())}};
}

json infinity_json(const QuadraticField& v) {
  try {
    const auto chars = characteristic_numbers(v);
    json dirs = json::array();
    Complex total = 0.0;
    for (const auto& s : chars) {
      json entry{{"direction", json::array({complex_to_json(s.direction.x()), complex_to_json(s.direction.y())})},
                 {"mu", complex_to_json(s.mu)}};
      if (auto w = s.direction.chart_w()) entry["w"] = complex_to_json(*w);
      dirs.push_back(entry);
      total += s.mu;
    }
    return json{{"directions", dirs}, {"mu_sum", complex_to_json(total)}};
  } catch (const Error& e) {
    return json{{"error", error_json(std::string(to_string(e.kind())), e.what())}};
  }
}

json analyze(const QuadraticField& v) {
  const Locus locus = singular_points(v);
  json spectra_list = json::array();
  for (const auto& p : locus) spectra_list.push_back(spectrum_to_json(p.spectrum));

  const EulerJacobiResiduals ej = euler_jacobi_residuals(locus);
  json residuals = json::array();
  for (const auto& r : ej.values) residuals.push_back(complex_to_json(r));

  json out{{"field", field_to_json(v)},
           {"singular_points", locus_json(locus)},
           {"spectra", spectra_list},
           {"euler_jacobi", {{"residuals", residuals}, {"max_relative", ej.max_relative()}}}};

  const bool ham = is_hamiltonian(v);
  out["is_hamiltonian"] = ham;
  if (ham) {
    const CubicHamiltonian H = hamiltonian_function(v);
    json coeffs = json::array();
    for (int k = 0; k < 10; ++k) coeffs.push_back(complex_to_json(H.c(k)));
    out["hamiltonian"] = coeffs;
  }

  out["infinity"] = infinity_json(v);
  try {
    const BaumBott bb = baum_bott(v);
    out["baum_bott"] = {{"finite_sum", complex_to_json(bb.finite_sum)},
                        {"infinity_sum", complex_to_json(bb.infinity_sum)},
                        {"residual", complex_to_json(bb.residual)}};
  } catch (const Error& e) {
    out["baum_bott"] = {{"error", error_json(std::string(to_string(e.kind())), e.what())}};
  }
  return out;
}

json fourth(const std::string& path) {
  const json doc = read_json_file(path);
  const json& list = doc.is_object() && doc.contains("points") ? doc.at("points") : doc;
  if (!list.is_array() || list.size() != 3)
    throw Error(ErrorKind::InvalidDocument, "expected an array of exactly three singular points");
  std::array<SingularPoint, 3> three;
  for (int k = 0; k < 3; ++k) three[k] = singular_point_from_json(list[k]);
  return json{{"fourth", singular_point_to_json(fourth_from_three(three))}};
}

json realize(const std::vector<double>& numbers) {
  const auto d = complex_list(numbers, 4, "realize-hamiltonian");
  const HamiltonianSpectrumCollection collection({d[0], d[1], d[2], d[3]});
  const Realization r = realize_spectrum(collection);
  json labelling = json::array();
  for (const auto& x : r.labelling) labelling.push_back(complex_to_json(x));
  json out{{"class", std::string(to_string(r.kind))}, {"labelling", labelling}};
  json branches = json::array();
  for (const auto& b : r.branches)
    branches.push_back({{"coefficients", canonical_to_json(b)}, {"field", field_to_json(b.field())}});
  out["branches"] = branches;
  if (r.family) {
    const CanonicalCoefficients sample = r.family->member(1.0);
    out["family"] = {{"d", complex_to_json(r.family->d)},
                     {"parameterization", "a1 = 0, a3 = s, a4 = d/s, s != 0"},
                     {"member_at_s_1", {{"coefficients", canonical_to_json(sample)},
                                        {"field", field_to_json(sample.field())}}}};
  }
  return out;
}

struct InfinityArgs {
  std::vector<double> mu, w, kappa{1.0, 0.0};

  void attach(CLI::App* sub) {
    sub->add_option("--mu", mu, "mu1 mu2 mu3 as six numbers (re im pairs)")->required()->expected(6);
    sub->add_option("--w", w, "w1 w2 w3 as six numbers (re im pairs)")->required()->expected(6);
    sub->add_option("--kappa", kappa, "kappa as two numbers (re im)")->expected(2);
  }

  InfinityData data() const {
    InfinityData d;
    const auto m = complex_list(mu, 3, "--mu");
    const auto ws = complex_list(w, 3, "--w");
    const auto k = complex_list(kappa, 1, "--kappa");
    for (int j = 0; j < 3; ++j) {
      d.mu[j] = m[j];
      d.w[j] = ws[j];
    }
    d.kappa = k[0];
    d.validate();
    return d;
  }
};

json from_infinity(const InfinityData& d) {
  const CanonicalCoefficients c = from_infinity_data(d);
  return json{{"coefficients", canonical_to_json(c)}, {"field", field_to_json(c.field())}};
}

json moduli(const InfinityData& d) {
  const ModuliPoint m = moduli_map(d);
  json s6 = json::array();
  for (int k = 0; k < 6; ++k) s6.push_back(complex_to_json(m.spectra6(k)));
  return json{{"mu1", complex_to_json(m.mu1)},
              {"mu2", complex_to_json(m.mu2)},
              {"spectra6", s6},
              {"rank", moduli_rank_probe(d)}};
}

json probe_rank(int samples, std::uint64_t seed) {
  if (samples < 1) throw UsageError("--samples must be positive");
  Rng rng(seed);
  std::array<int, 7> spec_hist{}, moduli_hist{};
  for (int k = 0; k < samples; ++k) ++spec_hist[spec6_jacobian_rank(random_canonical(rng))];
  for (int k = 0; k < samples; ++k) ++moduli_hist[moduli_rank_probe(random_infinity_data(rng))];
  auto summary = [&](const std::array<int, 7>& h) {
    return json{{"full_rank", h[6]},
                {"fraction_full_rank", static_cast<double>(h[6]) / samples},
                {"rank_histogram", h}};
  };
  return json{{"samples", samples}, {"seed", seed}, {"spec6", summary(spec_hist)}, {"moduli", summary(moduli_hist)}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ToleranceGuard guard;

  CLI::App app{"Quadratic vector fields: singularities, twins, Hamiltonian realization and infinity data",
               "qvf"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_errors = false;
  std::optional<double> tol;
  app.add_flag("--json-errors", json_errors, "report errors as JSON on standard output");
  app.add_option("--tol", tol, "relative tolerance for equality and degeneracy tests")
      ->check(CLI::PositiveNumber);

  FieldSource field, other;
  std::string points_file;
  std::vector<double> determinants;
  InfinityArgs inf;
  int samples = 100;
  std::uint64_t seed = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "singular points, spectra and invariants of a field");
  field.attach(analyze_cmd);
  auto* twin_cmd = app.add_subcommand("twin", "the twin of a field");
  field.attach(twin_cmd);
  auto* equiv_cmd = app.add_subcommand("equiv", "classify two fields with the same spectra");
  field.attach(equiv_cmd);
  other.attach(equiv_cmd, "2");
  auto* fourth_cmd = app.add_subcommand("fourth", "fourth singularity from three points and spectra");
  fourth_cmd->add_option("--input", points_file, "JSON array of three singular points")->required();
  auto* realize_cmd = app.add_subcommand("realize-hamiltonian", "Hamiltonian fields with four given determinants");
  realize_cmd->add_option("determinants", determinants, "d1..d4 as eight numbers (re im pairs)")
      ->required()
      ->expected(8);
  auto* from_inf_cmd = app.add_subcommand("from-infinity", "canonical field from data at infinity");
  inf.attach(from_inf_cmd);
  auto* moduli_cmd = app.add_subcommand("moduli", "moduli map and its rank at data at infinity");
  inf.attach(moduli_cmd);
  auto* probe_cmd = app.add_subcommand("probe-rank", "rank statistics of the spectrum and moduli maps");
  probe_cmd->add_option("--samples", samples, "number of random samples");
  probe_cmd->add_option("--seed", seed, "random seed");
  auto* random_cmd = app.add_subcommand("random", "a random generic field document");
  random_cmd->add_option("--seed", seed, "random seed");

  json_errors = std::find(args.begin(), args.end(), "--json-errors") != args.end();

  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    err << "qvf: " << message << "\n";
    if (json_errors) out << json{{"error", error_json(kind, message)}}.dump(2) << "\n";
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail(2, "UsageError", e.what());
  }

  if (tol) set_default_tolerance({*tol, default_tolerance().absolute});

  try {
    json result;
    if (analyze_cmd->parsed()) {
      result = analyze(field.load());
    } else if (twin_cmd->parsed()) {
      const QuadraticField v = field.load();
      const Twin t = compute_twin(v);
      result = {{"field", field_to_json(v)}, {"twin", field_to_json(t.field)}, {"matrix", matrix_json(t.matrix)}};
    } else if (equiv_cmd->parsed()) {
      const QuadraticField v = field.load();
      const QuadraticField w = other.load("2");
      const SameSpectraClassification c = classify_same_spectra(v, w);
      result = {{"verdict", std::string(to_string(c.verdict))},
                {"witness", c.witness ? affine_map_to_json(*c.witness) : json(nullptr)}};
    } else if (fourth_cmd->parsed()) {
      result = fourth(points_file);
    } else if (realize_cmd->parsed()) {
      result = realize(determinants);
    } else if (from_inf_cmd->parsed()) {
      result = from_infinity(inf.data());
    } else if (moduli_cmd->parsed()) {
      result = moduli(inf.data());
    } else if (probe_cmd->parsed()) {
      result = probe_rank(samples, seed);
    } else if (random_cmd->parsed()) {
      Rng rng(seed);
      result = to_json(to_document(random_generic_field(rng), "random seed " + std::to_string(seed)));
    }
    out << result.dump(2) << "\n";
    return 0;
  } catch (const UsageError& e) {
    return fail(2, "UsageError", e.what());
  } catch (const Error& e) {
    return fail(is_input_error(e.kind()) ? 2 : 1, std::string(to_string(e.kind())), e.what());
  }
}

}  // namespace qvf
