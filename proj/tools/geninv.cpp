// geninv: exact generalized inverses and core decompositions in finite
// semigroups and rational matrix rings, plus the verification suite.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "geninv/enumeration.hpp"
#include "geninv/exceptions.hpp"
#include "geninv/io.hpp"
#include "geninv/suite.hpp"

namespace {

using namespace geninv;

constexpr int kOk = 0;
constexpr int kNotExists = 1;    // nonexistence answered; not an error
constexpr int kInputError = 2;
constexpr int kViolation = 3;    // invariant violation, counterexample emitted

int worker_threads() {
  if (const char* env = std::getenv("GENINV_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) {
      return n;
    }
  }
  return 1;
}

void emit(const json& report, const std::string& out_path) {
  if (!out_path.empty()) {
    write_file(out_path, report.dump(2) + "\n");
  }
}

std::string pass_string(const std::vector<Certificate>& certs) {
  std::string out;
  for (const Certificate& c : certs) {
    out += std::string("  [") + (c.pass ? "ok" : "FAIL") + "] " + c.name + "\n";
  }
  return out;
}

int run_sg_analyze(const std::string& in, const std::string& out) {
  Semigroup s = load_semigroup(in);
  json j = semigroup_to_json(s);
  j["adjoined_identity"] = s.adjoined_identity();
  if (auto e = s.identity()) {
    j["identity"] = *e;
  } else {
    j["identity"] = nullptr;
  }
  json classes = json::array();
  for (element_id a = 0; a < s.order(); ++a) {
    classes.push_back({{"element", a},
                       {"L", s.green_class(GreenKind::L, a)},
                       {"R", s.green_class(GreenKind::R, a)},
                       {"H", s.green_class(GreenKind::H, a)}});
  }
  j["green_classes"] = std::move(classes);

  IdempotentPoset poset = s.idempotent_poset();
  json relations = json::array();
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    for (std::size_t k = 0; k < poset.elements.size(); ++k) {
      if (poset.leq[i][k]) {
        relations.push_back({poset.elements[i], poset.elements[k]});
      }
    }
  }
  j["idempotents"] = poset.elements;
  j["natural_order"] = std::move(relations);

  json commutants = json::array();
  for (element_id a = 0; a < s.order(); ++a) {
    commutants.push_back(s.commutant({a}));
  }
  j["commutants"] = std::move(commutants);

  std::cout << "semigroup of order " << s.order() << ", "
            << poset.elements.size() << " idempotent(s)\n";
  emit(j, out);
  return kOk;
}

int run_sg_invert_along(const std::string& in, int a, int d,
                        const std::string& out) {
  Semigroup s = load_semigroup(in);
  if (a < 0 || a >= s.order() || d < 0 || d >= s.order()) {
    throw InputError("--a and --d must be element ids below the order");
  }
  InverseReport report = inverse_along(s, a, d);
  emit(inverse_report_to_json(report), out);
  if (!report.exists) {
    std::cout << "a^{||d} does not exist\n";
    return kNotExists;
  }
  std::cout << "a^{||d} = " << *report.witness << "\n"
            << pass_string(report.certificates);
  return kOk;
}

int run_sg_sigma(const std::string& in, int a, int j_level,
                 const std::string& out) {
  Semigroup s = load_semigroup(in);
  if (a < 0 || a >= s.order()) {
    throw InputError("--a must be an element id below the order");
  }
  SigmaSet set = sigma(s, a, j_level);
  emit(sigma_to_json(set), out);
  std::cout << "Sigma_" << j_level << " has " << set.members.size()
            << " member(s), " << set.maximal.size() << " maximal, greatest "
            << (set.greatest ? std::to_string(*set.greatest) : "absent")
            << "\n";
  return kOk;
}

int run_sg_natural(const std::string& in, int a, int j_level,
                   const std::string& out) {
  Semigroup s = load_semigroup(in);
  if (a < 0 || a >= s.order()) {
    throw InputError("--a must be an element id below the order");
  }
  NaturalInverseResult result = natural_inverse(s, a, j_level);
  emit(natural_inverse_to_json(result), out);
  if (!result.decomposition) {
    std::cout << "no greatest element; maximal =";
    for (element_id m : result.sigma.maximal) {
      std::cout << " " << m;
    }
    std::cout << "\n";
    return kNotExists;
  }
  std::cout << "M = " << result.decomposition->greatest << ", a^{||M} = "
            << result.decomposition->inverse << ", core = "
            << result.decomposition->core << "\n";
  return kOk;
}

int run_sg_drazin(const std::string& in, int a, const std::string& out) {
  Semigroup s = load_semigroup(in);
  if (a < 0 || a >= s.order()) {
    throw InputError("--a must be an element id below the order");
  }
  DrazinResult result = drazin(s, a);
  emit(drazin_to_json(result), out);
  std::cout << "index " << result.index << ", a^D = " << result.inverse
            << "\n";
  return kOk;
}

int run_sg_example(const std::string& model_name, int j_level,
                   const std::string& out) {
  SymModel model;
  if (model_name == "paper-example-A") {
    model = SymModel::A;
  } else if (model_name == "paper-example-B") {
    model = SymModel::B;
  } else {
    throw InputError("--model must be paper-example-A or paper-example-B");
  }
  SymSigmaReport report = sym_sigma(model, j_level);
  emit(sym_sigma_to_json(report), out);
  std::cout << "Sigma_" << j_level << "(a) in " << model_name << ": {";
  for (std::size_t i = 0; i < report.members.size(); ++i) {
    std::cout << (i ? ", " : "") << report.members[i].str();
  }
  std::cout << "}, maximal {";
  for (std::size_t i = 0; i < report.maximal.size(); ++i) {
    std::cout << (i ? ", " : "") << report.maximal[i].str();
  }
  std::cout << "}, greatest "
            << (report.greatest ? report.greatest->str() : "absent") << "\n";
  return kOk;
}

int run_mat_invert_along(const std::string& a_path, const std::string& d_path,
                         const std::string& out) {
  RationalMatrix a = load_matrix(a_path);
  RationalMatrix d = load_matrix(d_path);
  MatrixInverseReport report = invert_along(a, d);
  emit(matrix_inverse_report_to_json(report), out);
  if (!report.exists) {
    std::cout << "a^{||d} does not exist (u singular)\n";
    return kNotExists;
  }
  std::cout << "a^{||d} computed\n" << pass_string(report.certificates);
  return kOk;
}

int run_mat_drazin(const std::string& in, const std::string& out) {
  RationalMatrix a = load_matrix(in);
  MatrixDrazinResult result = drazin_matrix(a);
  emit(matrix_drazin_to_json(result), out);
  std::cout << "Drazin index " << result.index << "\n"
            << pass_string(result.certificates);
  return kOk;
}

int run_mat_core_decomp(const std::string& in, const std::string& out) {
  RationalMatrix a = load_matrix(in);
  MatrixDecompositionReport report = natural_core_decomposition_matrix(a);
  emit(decomposition_to_json(report), out);
  std::cout << "core decomposition a = x + y, nilpotency degree "
            << report.nilpotency_degree << "\n"
            << pass_string(report.certificates);
  return kOk;
}

int run_mat_sigma2(const std::string& in, int max_members,
                   const std::string& out) {
  RationalMatrix a = load_matrix(in);
  Sigma2Report report = sigma2_greatest_check(a, max_members);
  emit(sigma2_report_to_json(report), out);
  std::cout << report.members.size()
            << " generated Sigma_2 member(s), battery "
            << (report.pass ? "passed" : "FAILED") << "\n"
            << pass_string(report.certificates);
  return report.pass ? kOk : kViolation;
}

int run_op_local_spectral(const std::string& in, const std::string& out) {
  RationalMatrix t = load_matrix(in);
  json j;
  j["hyperrange"] = subspace_to_json(hyperrange(t));
  j["hyperkernel"] = subspace_to_json(hyperkernel(t));
  QuasinilpotentPart h0 = quasinilpotent_part(t);
  j["quasinilpotent_part"] = subspace_to_json(h0.space);
  j["advisory"] = {{"probe_ran", h0.probe_ran},
                   {"probe_max_root_norm", h0.probe_max}};
  j["analytic_core"] = subspace_to_json(analytic_core(t));
  j["notes"] = {
      {"hyperrange",
       "intersection of R(T^k) stabilizes by k = dim; the result equals the "
       "analytic core K(T) in finite dimension"},
      {"hyperkernel",
       "union of N(T^k) stabilizes by k = dim; the result is the "
       "generalized eigenspace of 0 and equals H_0(T) in finite dimension"}};
  FittingDecomposition fit = fitting_decomposition(t);
  j["fitting"] = fitting_to_json(fit);
  j["core_range"] = subspace_to_json(core_range(t));
  emit(j, out);
  std::cout << "dim H0 = " << fit.h0.dim() << ", dim K = " << fit.k.dim()
            << "\n" << pass_string(fit.certificates);
  return kOk;
}

int run_op_rosenblum(const std::string& x_path, const std::string& y_path,
                     const std::string& out) {
  RationalMatrix x = load_matrix(x_path);
  RationalMatrix y = load_matrix(y_path);
  MatrixDecompositionReport report = rosenblum_block(x, y);
  emit(decomposition_to_json(report), out);
  std::cout << "block decomposition verified\n"
            << pass_string(report.certificates);
  return kOk;
}

int run_verify(const SuiteConfig& config, const std::string& out) {
  SuiteReport report = run_suite(config);
  emit(suite_report_json(report), out);
  for (const CheckResult& check : report.checks) {
    std::cout << (check.failures == 0 ? "[pass] " : "[FAIL] ") << check.name
              << ": " << check.cases << " case(s), " << check.failures
              << " failure(s)\n";
  }
  std::cout << "total: " << report.total_cases << " case(s), "
            << report.total_failures << " failure(s) in "
            << report.wall_seconds << " s\n";
  return report.total_failures == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact generalized inverses in finite semigroups and rational "
      "matrix rings"};
  app.require_subcommand(1);

  std::string in, out, a_path, d_path, x_path, y_path, model;
  int a = 0, d = 0, j_level = 2, max_members = 64;
  SuiteConfig config;
  config.threads = worker_threads();
  int exit_code = kOk;

  // sg ---------------------------------------------------------------------
  CLI::App* sg = app.add_subcommand("sg", "finite semigroup queries");
  sg->require_subcommand(1);

  CLI::App* sg_analyze = sg->add_subcommand(
      "analyze", "Green classes, idempotent poset, commutants");
  sg_analyze->add_option("--in", in, "semigroup JSON file")->required();
  sg_analyze->add_option("--out", out, "machine report path");
  sg_analyze->callback([&] { exit_code = run_sg_analyze(in, out); });

  CLI::App* sg_invert = sg->add_subcommand("invert-along",
                                           "inverse of a along d");
  sg_invert->add_option("--in", in)->required();
  sg_invert->add_option("--a", a)->required();
  sg_invert->add_option("--d", d)->required();
  sg_invert->add_option("--out", out);
  sg_invert->callback(
      [&] { exit_code = run_sg_invert_along(in, a, d, out); });

  CLI::App* sg_sigma = sg->add_subcommand("sigma", "Sigma_j(a)");
  sg_sigma->add_option("--in", in)->required();
  sg_sigma->add_option("--a", a)->required();
  sg_sigma->add_option("--j", j_level)->check(CLI::Range(0, 2));
  sg_sigma->add_option("--out", out);
  sg_sigma->callback([&] { exit_code = run_sg_sigma(in, a, j_level, out); });

  CLI::App* sg_natural = sg->add_subcommand("natural", "natural inverse");
  sg_natural->add_option("--in", in)->required();
  sg_natural->add_option("--a", a)->required();
  sg_natural->add_option("--j", j_level)->check(CLI::Range(0, 2));
  sg_natural->add_option("--out", out);
  sg_natural->callback(
      [&] { exit_code = run_sg_natural(in, a, j_level, out); });

  CLI::App* sg_drazin = sg->add_subcommand("drazin", "Drazin inverse");
  sg_drazin->add_option("--in", in)->required();
  sg_drazin->add_option("--a", a)->required();
  sg_drazin->add_option("--out", out);
  sg_drazin->callback([&] { exit_code = run_sg_drazin(in, a, out); });

  CLI::App* sg_example = sg->add_subcommand(
      "example", "symbolic Sigma report for the presented semigroups");
  sg_example->add_option("--model", model,
                         "paper-example-A or paper-example-B")->required();
  sg_example->add_option("--j", j_level)->check(CLI::Range(0, 2));
  sg_example->add_option("--out", out);
  sg_example->callback(
      [&] { exit_code = run_sg_example(model, j_level, out); });

  // mat --------------------------------------------------------------------
  CLI::App* mat = app.add_subcommand("mat", "exact rational matrix queries");
  mat->require_subcommand(1);

  CLI::App* mat_invert = mat->add_subcommand("invert-along",
                                             "inverse of a along d");
  mat_invert->add_option("--a", a_path, "matrix file for a")->required();
  mat_invert->add_option("--d", d_path, "matrix file for d")->required();
  mat_invert->add_option("--out", out);
  mat_invert->callback(
      [&] { exit_code = run_mat_invert_along(a_path, d_path, out); });

  CLI::App* mat_drazin = mat->add_subcommand("drazin", "Drazin inverse");
  mat_drazin->add_option("--in", in)->required();
  mat_drazin->add_option("--out", out);
  mat_drazin->callback([&] { exit_code = run_mat_drazin(in, out); });

  CLI::App* mat_core = mat->add_subcommand("core-decomp",
                                           "natural core decomposition");
  mat_core->add_option("--in", in)->required();
  mat_core->add_option("--out", out);
  mat_core->callback([&] { exit_code = run_mat_core_decomp(in, out); });

  CLI::App* mat_sigma2 = mat->add_subcommand("sigma2",
                                             "Sigma_2 greatest battery");
  mat_sigma2->add_option("--in", in)->required();
  mat_sigma2->add_option("--trials", max_members, "candidate cap");
  mat_sigma2->add_option("--out", out);
  mat_sigma2->callback(
      [&] { exit_code = run_mat_sigma2(in, max_members, out); });

  // op ---------------------------------------------------------------------
  CLI::App* op = app.add_subcommand("op", "finite-dimensional operator queries");
  op->require_subcommand(1);

  CLI::App* op_local = op->add_subcommand(
      "local-spectral", "hyperrange/hyperkernel/H0/K/Fitting/core-range");
  op_local->add_option("--in", in)->required();
  op_local->add_option("--out", out);
  op_local->callback([&] { exit_code = run_op_local_spectral(in, out); });

  CLI::App* op_rosen = op->add_subcommand("rosenblum",
                                          "diag(X, Y) block decomposition");
  op_rosen->add_option("--x", x_path)->required();
  op_rosen->add_option("--y", y_path)->required();
  op_rosen->add_option("--out", out);
  op_rosen->callback(
      [&] { exit_code = run_op_rosenblum(x_path, y_path, out); });

  // verify -----------------------------------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "theorem verification suite");
  verify->add_option("--suite", config.suite,
                     "semigroup | matrix | operator | all");
  verify->add_option("--order", config.order, "exhaustive enumeration bound")
      ->check(CLI::Range(1, 4));
  verify->add_option("--seed", config.seed);
  verify->add_option("--trials", config.trials);
  verify->add_option("--time-budget-ms", config.enumeration_budget_ms,
                     "cap on the exhaustive enumeration phase (0 = none)");
  verify->add_option("--out", out);
  verify->callback([&] { exit_code = run_verify(config, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  } catch (const EquivalenceMismatch& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kViolation;
  } catch (const BijectionFailure& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kViolation;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const GeninvError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return exit_code;
}
