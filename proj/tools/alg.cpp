// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0
//
// alg: command-line surface for the finalg library.
//
//   alg check FILE
//   alg spectrum FILE --element E.json
//   alg polymap FILE --element E.json --poly P.json [--tol T]
//   alg star FILE --star S.json [--samples N] [--seed K]
//
// Machine-readable JSON goes to stdout, a human summary to stderr.
// Exit codes: 0 all checks passed, 1 some check failed, 2 input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "finalg/io.hpp"
#include "finalg/polynomial.hpp"
#include "finalg/random.hpp"
#include "finalg/spectral.hpp"
#include "finalg/star.hpp"

namespace {

using finalg::Algebra;
using finalg::AlgebraElement;
using finalg::CVector;
using finalg::Complex;
using finalg::Spectrum;
using nlohmann::json;

struct Check {
  std::string name;
  bool ok = false;
  std::optional<double> residual;
};

// Raw invocation, echoed into every report.
std::vector<std::string> g_argv;

// FNV-1a over the raw bytes of every input file, echoed in reports so that
// runs over identical inputs are recognizable.
class Digest {
 public:
  void add_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw finalg::ParseError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    for (unsigned char byte : buffer.str()) {
      state_ ^= static_cast<std::uint64_t>(byte);
      state_ *= 1099511628211ULL;
    }
  }

  std::string hex() const {
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << state_;
    return out.str();
  }

 private:
  std::uint64_t state_ = 14695981039346656037ULL;
};

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const Check& c : checks) {
    json entry{{"name", c.name}, {"ok", c.ok}};
    entry["residual"] = c.residual.has_value() ? json(*c.residual) : json(nullptr);
    out.push_back(std::move(entry));
  }
  return out;
}

int emit_report(const std::string& command, const Digest& digest,
                const json& results, const std::vector<Check>& checks,
                bool input_error = false) {
  bool all_ok = true;
  for (const Check& c : checks) all_ok = all_ok && c.ok;
  const int exit_code = input_error ? 2 : (all_ok ? 0 : 1);

  json report{{"command", command},
              {"argv", g_argv},
              {"inputs_digest", digest.hex()},
              {"results", results},
              {"checks", checks_json(checks)},
              {"exit_code", exit_code}};
  std::cout << report.dump(2) << "\n";

  for (const Check& c : checks) {
    std::cerr << (c.ok ? "[ ok ] " : "[FAIL] ") << c.name;
    if (c.residual.has_value()) std::cerr << "  residual=" << *c.residual;
    std::cerr << "\n";
  }
  std::cerr << "exit " << exit_code << "\n";
  return exit_code;
}

int emit_input_error(const std::string& command, const Digest& digest,
                     const std::string& message) {
  std::vector<Check> checks{{"parse_inputs", false, std::nullopt}};
  return emit_report(command, digest, json{{"error", message}}, checks,
                     /*input_error=*/true);
}

json classification_json(const finalg::StarClassification& c) {
  return json{{"kind", finalg::star_kind_name(c.kind)},
              {"involutive", c.involutive},
              {"antimultiplicative", c.antimultiplicative},
              {"multiplicative", c.multiplicative},
              {"algebra_commutative", c.algebra_commutative},
              {"involutive_residual", c.involutive_residual},
              {"antimultiplicative_residual", c.antimultiplicative_residual},
              {"multiplicative_residual", c.multiplicative_residual}};
}

int run_check(const std::string& algebra_path) {
  Digest digest;
  digest.add_file(algebra_path);
  const json doc = finalg::io::read_json_file(algebra_path);

  json results;
  std::vector<Check> checks;
  std::optional<Algebra> algebra;

  const std::string kind = doc.contains("kind") && doc["kind"].is_string()
                               ? doc["kind"].get<std::string>()
                               : "";
  if (kind == "semigroup") {
    finalg::SemigroupTable table = finalg::io::parse_semigroup(doc);
    const finalg::SemigroupReport verdict = finalg::validate_semigroup(table);
    results["semigroup"] = json{{"associative", verdict.associative},
                                {"has_identity", verdict.has_identity},
                                {"is_group", verdict.is_group}};
    checks.push_back({"semigroup_associative", verdict.associative, std::nullopt});
    checks.push_back({"semigroup_identity", verdict.has_identity, std::nullopt});
    if (verdict.associative && verdict.has_identity) {
      algebra.emplace(finalg::semigroup_algebra(table));
    }
  } else {
    algebra.emplace(finalg::io::load_algebra(doc).algebra);
  }

  if (algebra.has_value()) {
    const Algebra& a = *algebra;
    results["dim"] = a.dim();
    results["labels"] = a.labels();
    const double tol = 1e-9 * (1.0 + a.constants().norm());

    const finalg::AssociativityReport assoc = finalg::check_associativity(a, tol);
    results["associativity"] = json{{"max_residual", assoc.max_residual},
                                    {"ok", assoc.ok}};
    checks.push_back({"associativity", assoc.ok, assoc.max_residual});

    if (a.has_identity()) {
      const finalg::IdentityElement e = a.identity();
      results["identity"] = json{{"found", true},
                                 {"coeffs", finalg::io::coeffs_json(e.element.coeffs())},
                                 {"residual", e.residual}};
      checks.push_back({"identity", true, e.residual});
    } else {
      results["identity"] = json{{"found", false},
                                 {"residual", a.identity_residual()}};
      checks.push_back({"identity", false, a.identity_residual()});
    }
  }
  return emit_report("check", digest, results, checks);
}

int run_spectrum(const std::string& algebra_path, const std::string& element_path) {
  Digest digest;
  digest.add_file(algebra_path);
  digest.add_file(element_path);

  const finalg::io::LoadedAlgebra loaded = finalg::io::load_algebra_file(algebra_path);
  const Algebra& a = loaded.algebra;
  const CVector coeffs = finalg::io::parse_coeff_vector(
      finalg::io::read_json_file(element_path));
  const AlgebraElement x = a.element(coeffs);

  std::vector<Check> checks;
  checks.push_back({"identity", a.has_identity(), a.identity_residual()});
  json results;
  if (a.has_identity()) {
    const Spectrum s = finalg::spectrum(a, x);
    results["spectrum"] = finalg::io::spectrum_json(s);
    results["cluster_tol"] = s.cluster_tol;
  }
  return emit_report("spectrum", digest, results, checks);
}

int run_polymap(const std::string& algebra_path, const std::string& element_path,
                const std::string& poly_path, double tol) {
  Digest digest;
  digest.add_file(algebra_path);
  digest.add_file(element_path);
  digest.add_file(poly_path);

  const finalg::io::LoadedAlgebra loaded = finalg::io::load_algebra_file(algebra_path);
  const Algebra& a = loaded.algebra;
  const AlgebraElement x = a.element(finalg::io::parse_coeff_vector(
      finalg::io::read_json_file(element_path)));
  const finalg::Polynomial p = finalg::io::parse_polynomial(
      finalg::io::read_json_file(poly_path));
  if (p.is_zero()) {
    throw finalg::ZeroPolynomialError("polymap: the zero polynomial is not allowed");
  }

  const finalg::SpectralMappingReport report =
      finalg::spectral_mapping_check(a, x, p, tol);

  json image = json::array();
  for (Complex v : report.image) image.push_back(finalg::io::complex_json(v));
  json direct = json::array();
  for (Complex v : report.direct) direct.push_back(finalg::io::complex_json(v));

  json results{{"image", std::move(image)},
               {"direct", std::move(direct)},
               {"hausdorff", report.hausdorff},
               {"tol", tol},
               {"ok", report.ok}};
  std::vector<Check> checks{{"spectral_mapping", report.ok, report.hausdorff}};
  return emit_report("polymap", digest, results, checks);
}

int run_star(const std::string& algebra_path, const std::string& star_path,
             int samples, std::uint64_t seed) {
  Digest digest;
  digest.add_file(algebra_path);
  digest.add_file(star_path);

  const finalg::io::LoadedAlgebra loaded = finalg::io::load_algebra_file(algebra_path);
  const Algebra& a = loaded.algebra;
  const json star_doc = finalg::io::read_json_file(star_path);

  std::vector<Check> checks;
  json results{{"options", json{{"samples", samples}, {"seed", seed}}}};

  finalg::StarStructure star{0, finalg::CMatrix(), finalg::StarKind::kUnspecified};
  try {
    star = finalg::io::load_star(star_doc, loaded);
  } catch (const finalg::NotAGroupError&) {
    checks.push_back({"group_inverse_requires_group", false, std::nullopt});
    return emit_report("star", digest, results, checks);
  }

  const finalg::StarClassification cls = finalg::classify_star(a, star);
  results["classification"] = classification_json(cls);
  checks.push_back({"classified", cls.kind != finalg::StarKind::kNeither,
                    cls.involutive_residual});

  const finalg::IdentityElement e = a.identity();
  const double e_residual = (finalg::apply_star(star, e.element) - e.element).norm();
  checks.push_back({"identity_star_fixed", e_residual <= 1e-10, e_residual});

  finalg::DiskSampler sampler(seed);
  double inverse_dev = 0.0;
  double conj_spectrum_dev = 0.0;
  double selfadjoint_dev = 0.0;
  for (int i = 0; i < samples; ++i) {
    const AlgebraElement x = a.element(sampler.coeffs(a.dim()));
    const AlgebraElement x_star = finalg::apply_star(star, x);

    const finalg::InvertResult inv = finalg::invert(a, x);
    if (inv.ok()) {
      const finalg::InvertResult star_inv = finalg::invert(a, x_star);
      if (star_inv.ok()) {
        const double dev =
            (finalg::apply_star(star, *inv.inverse) - *star_inv.inverse).norm() /
            (1.0 + star_inv.inverse->norm());
        inverse_dev = std::max(inverse_dev, dev);
      }
    }

    const Spectrum sx = finalg::spectrum(a, x);
    std::vector<Complex> conjugated;
    conjugated.reserve(sx.points.size());
    for (Complex p : sx.points) conjugated.push_back(std::conj(p));
    const Spectrum sxs = finalg::spectrum(a, x_star);
    conj_spectrum_dev = std::max(
        conj_spectrum_dev, finalg::hausdorff_distance(conjugated, sxs.points));

    if (cls.antimultiplicative) {
      const AlgebraElement xxs = finalg::multiply(a, x, x_star);
      selfadjoint_dev = std::max(
          selfadjoint_dev, (finalg::apply_star(star, xxs) - xxs).norm());
    }
  }
  checks.push_back({"inverse_compatibility", inverse_dev <= 1e-9, inverse_dev});
  checks.push_back({"spectrum_conjugation", conj_spectrum_dev <= 1e-8,
                    conj_spectrum_dev});
  if (cls.antimultiplicative) {
    checks.push_back({"x_xstar_selfadjoint", selfadjoint_dev <= 1e-10,
                      selfadjoint_dev});
  }

  const finalg::IsometryReport isometry =
      finalg::check_star_isometry(a, star, samples, 1e-8, seed);
  checks.push_back({"isometry", isometry.ok, isometry.max_ratio_dev});

  return emit_report("star", digest, results, checks);
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) g_argv.emplace_back(argv[i]);

  CLI::App app{"finite-dimensional complex algebras: spectra, polynomial "
               "calculus, star structures"};
  app.require_subcommand(1);

  std::string algebra_path, element_path, poly_path, star_path;
  double polymap_tol = 1e-7;
  int samples = 200;
  std::uint64_t seed = 0;

  CLI::App* cmd_check = app.add_subcommand("check", "validate an algebra file");
  cmd_check->add_option("file", algebra_path, "algebra JSON file")->required();

  CLI::App* cmd_spectrum =
      app.add_subcommand("spectrum", "spectrum of an element");
  cmd_spectrum->add_option("file", algebra_path, "algebra JSON file")->required();
  cmd_spectrum->add_option("--element", element_path, "element JSON file")->required();

  CLI::App* cmd_polymap = app.add_subcommand(
      "polymap", "compare p(spectrum(x)) with spectrum(p(x))");
  cmd_polymap->add_option("file", algebra_path, "algebra JSON file")->required();
  cmd_polymap->add_option("--element", element_path, "element JSON file")->required();
  cmd_polymap->add_option("--poly", poly_path, "polynomial JSON file")->required();
  cmd_polymap->add_option("--tol", polymap_tol, "Hausdorff tolerance");

  CLI::App* cmd_star = app.add_subcommand("star", "classify and verify a star");
  cmd_star->add_option("file", algebra_path, "algebra JSON file")->required();
  cmd_star->add_option("--star", star_path, "star JSON file")->required();
  cmd_star->add_option("--samples", samples, "sample count for randomized checks");
  cmd_star->add_option("--seed", seed, "RNG seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Digest digest_for_errors;
  try {
    if (cmd_check->parsed()) return run_check(algebra_path);
    if (cmd_spectrum->parsed()) return run_spectrum(algebra_path, element_path);
    if (cmd_polymap->parsed())
      return run_polymap(algebra_path, element_path, poly_path, polymap_tol);
    if (cmd_star->parsed()) return run_star(algebra_path, star_path, samples, seed);
  } catch (const finalg::ParseError& e) {
    return emit_input_error(command, digest_for_errors, e.what());
  } catch (const finalg::ZeroPolynomialError& e) {
    return emit_input_error(command, digest_for_errors, e.what());
  } catch (const finalg::DimensionMismatchError& e) {
    return emit_input_error(command, digest_for_errors, e.what());
  } catch (const finalg::Error& e) {
    return emit_input_error(command, digest_for_errors, e.what());
  }
  return 2;
}
