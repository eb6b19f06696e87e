#include "geninv/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "geninv/enumeration.hpp"
#include "geninv/exceptions.hpp"
#include "geninv/io.hpp"
#include "geninv/local_spectral.hpp"

namespace geninv {

namespace {

constexpr std::size_t kMaxStoredCounterexamples = 5;

void record_failure(CheckResult& check, json payload) {
  ++check.failures;
  if (check.counterexamples.size() < kMaxStoredCounterexamples) {
    check.counterexamples.push_back(std::move(payload));
  }
}

std::vector<Semigroup> semigroup_corpus(const SuiteConfig& config) {
  std::vector<Semigroup> corpus;
  for (int order = 1; order <= std::min(config.order, 4); ++order) {
    EnumerationConfig ec;
    ec.order = order;
    ec.prune = true;
    ec.time_budget_ms = config.enumeration_budget_ms;
    ec.threads = config.threads;
    enumerate_semigroups(ec, [&](const Semigroup& s) { corpus.push_back(s); });
  }
  for (int i = 0; i < config.transformation_count; ++i) {
    int degree = 2 + i % 3;  // 2..4
    int generators = 1 + i % 3;
    corpus.push_back(random_transformation_semigroup(
        degree, generators, config.seed * 1009 + i));
  }
  return corpus;
}

json semigroup_payload(const std::string& check, const Semigroup& s) {
  return json{{"check", check}, {"semigroup", semigroup_to_json(s)}};
}

// ---------------------------------------------------------------- semigroup

void check_green_laws(const std::vector<Semigroup>& corpus,
                      std::vector<CheckResult>& results) {
  CheckResult check{"green-preorder-laws", 0, 0, {}};
  for (const Semigroup& s : corpus) {
    ++check.cases;
    bool ok = true;
    for (auto kind : {GreenKind::L, GreenKind::R, GreenKind::H}) {
      for (element_id a = 0; a < s.order() && ok; ++a) {
        ok = s.leq(kind, a, a);
        for (element_id b = 0; b < s.order() && ok; ++b) {
          if (kind == GreenKind::H) {
            ok = s.leq(GreenKind::H, a, b) ==
                 (s.leq(GreenKind::L, a, b) && s.leq(GreenKind::R, a, b));
          }
          if (!ok) {
            break;
          }
          for (element_id c = 0; c < s.order() && ok; ++c) {
            if (s.leq(kind, a, b) && s.leq(kind, b, c)) {
              ok = s.leq(kind, a, c);
            }
          }
        }
      }
    }
    // H-classes as intersections.
    for (element_id a = 0; a < s.order() && ok; ++a) {
      auto h = s.green_class(GreenKind::H, a);
      auto l = s.green_class(GreenKind::L, a);
      auto r = s.green_class(GreenKind::R, a);
      std::vector<element_id> lr;
      std::set_intersection(l.begin(), l.end(), r.begin(), r.end(),
                            std::back_inserter(lr));
      ok = h == lr;
    }
    if (!ok) {
      record_failure(check, semigroup_payload(check.name, s));
    }
  }
  results.push_back(std::move(check));
}

void check_idempotent_order(const std::vector<Semigroup>& corpus,
                            std::vector<CheckResult>& results) {
  CheckResult natural{"idempotent-order-coincides-with-H", 0, 0, {}};
  CheckResult unique{"h-class-contains-at-most-one-idempotent", 0, 0, {}};
  for (const Semigroup& s : corpus) {
    auto idems = s.idempotents();
    for (element_id e : idems) {
      for (element_id f : idems) {
        ++natural.cases;
        if (s.natural_leq(e, f) != s.leq(GreenKind::H, e, f)) {
          record_failure(natural, semigroup_payload(natural.name, s));
        }
      }
    }
    for (element_id a = 0; a < s.order(); ++a) {
      ++unique.cases;
      int count = 0;
      for (element_id b : s.green_class(GreenKind::H, a)) {
        count += s.is_idempotent(b) ? 1 : 0;
      }
      if (count > 1) {
        record_failure(unique, semigroup_payload(unique.name, s));
      }
    }
  }
  results.push_back(std::move(natural));
  results.push_back(std::move(unique));
}

void check_commutant_and_corner(const std::vector<Semigroup>& corpus,
                                std::vector<CheckResult>& results) {
  CheckResult triple{"commutant-triple-equals-commutant", 0, 0, {}};
  CheckResult corner{"corner-monoid-laws", 0, 0, {}};
  for (const Semigroup& s : corpus) {
    for (element_id a = 0; a < s.order(); ++a) {
      ++triple.cases;
      auto once = s.commutant({a});
      if (s.commutant(s.commutant(once)) != once) {
        record_failure(triple, semigroup_payload(triple.name, s));
      }
    }
    for (element_id e : s.idempotents()) {
      ++corner.cases;
      CornerMonoid m = s.corner_monoid(e);
      bool ok = std::binary_search(m.elements.begin(), m.elements.end(), e);
      for (element_id x : m.elements) {
        ok = ok && s.product(e, x) == x && s.product(x, e) == x;
        for (element_id y : m.elements) {
          ok = ok && std::binary_search(m.elements.begin(), m.elements.end(),
                                        s.product(x, y));
        }
      }
      if (!ok) {
        record_failure(corner, semigroup_payload(corner.name, s));
      }
    }
  }
  results.push_back(std::move(triple));
  results.push_back(std::move(corner));
}

void check_inverse_along_theorems(const std::vector<Semigroup>& corpus,
                                  std::vector<CheckResult>& results) {
  CheckResult fiveway{"theorem-2.3-five-way-equivalence", 0, 0, {}};
  CheckResult bicomm{"theorem-2.4-bicommutant", 0, 0, {}};
  CheckResult commuting{"corollary-2.5-commuting", 0, 0, {}};
  for (const Semigroup& s : corpus) {
    for (element_id a = 0; a < s.order(); ++a) {
      for (element_id d = 0; d < s.order(); ++d) {
        ++fiveway.cases;
        InverseReport report;
        try {
          report = inverse_along(s, a, d);
        } catch (const GeninvError& err) {
          json payload = semigroup_payload(fiveway.name, s);
          payload["a"] = a;
          payload["d"] = d;
          payload["error"] = err.what();
          record_failure(fiveway, std::move(payload));
          continue;
        }
        if (!report.exists) {
          continue;
        }
        element_id b = *report.witness;

        ++bicomm.cases;
        bool in_bicommutant = true;
        for (element_id x : s.commutant({a, d})) {
          if (s.product(x, b) != s.product(b, x)) {
            in_bicommutant = false;
            break;
          }
        }
        if (!in_bicommutant) {
          json payload = semigroup_payload(bicomm.name, s);
          payload["a"] = a;
          payload["d"] = d;
          record_failure(bicomm, std::move(payload));
        }

        if (s.product(a, d) == s.product(d, a)) {
          ++commuting.cases;
          bool ok = s.product(a, b) == s.product(b, a) &&
                    s.product(b, d) == s.product(d, b);
          if (!ok) {
            json payload = semigroup_payload(commuting.name, s);
            payload["a"] = a;
            payload["d"] = d;
            record_failure(commuting, std::move(payload));
          }
        }
      }
    }
  }
  results.push_back(std::move(fiveway));
  results.push_back(std::move(bicomm));
  results.push_back(std::move(commuting));
}

void check_sigma_and_tau(const std::vector<Semigroup>& corpus,
                         std::vector<CheckResult>& results) {
  CheckResult lemmas{"sigma-lemmas-and-corner-criterion", 0, 0, {}};
  CheckResult band{"sigma2-commutative-band", 0, 0, {}};
  CheckResult tau_check{"tau-bijection", 0, 0, {}};
  for (const Semigroup& s : corpus) {
    for (element_id a = 0; a < s.order(); ++a) {
      ++lemmas.cases;
      SigmaLemmasReport lemma_report = check_sigma_lemmas(s, a);
      if (!lemma_report.pass()) {
        json payload = semigroup_payload(lemmas.name, s);
        payload["a"] = a;
        payload["failures"] = lemma_report.failures;
        record_failure(lemmas, std::move(payload));
      }

      ++band.cases;
      SigmaSet sigma2 = sigma(s, a, 2);
      bool band_ok = true;
      for (element_id e : sigma2.members) {
        for (element_id f : sigma2.members) {
          element_id ef = s.product(e, f);
          band_ok = band_ok && ef == s.product(f, e) && s.is_idempotent(ef) &&
                    std::binary_search(sigma2.members.begin(),
                                       sigma2.members.end(), ef);
        }
      }
      if (!band_ok) {
        json payload = semigroup_payload(band.name, s);
        payload["a"] = a;
        record_failure(band, std::move(payload));
      }

      for (int j : {1, 2}) {
        ++tau_check.cases;
        try {
          tau(s, a, j);
        } catch (const GeninvError& err) {
          json payload = semigroup_payload(tau_check.name, s);
          payload["a"] = a;
          payload["j"] = j;
          payload["error"] = err.what();
          record_failure(tau_check, std::move(payload));
        }
      }
    }
  }
  results.push_back(std::move(lemmas));
  results.push_back(std::move(band));
  results.push_back(std::move(tau_check));
}

void check_drazin_natural(const std::vector<Semigroup>& corpus,
                          std::vector<CheckResult>& results) {
  CheckResult drazin_check{"drazin-implies-natural", 0, 0, {}};
  CheckResult distributive{"distributive-semilattice-greatest", 0, 0, {}};
  for (const Semigroup& s : corpus) {
    for (element_id a = 0; a < s.order(); ++a) {
      ++drazin_check.cases;
      try {
        DrazinResult dr = drazin(s, a);
        NaturalInverseResult nat1 = natural_inverse(s, a, 1);
        NaturalInverseResult nat2 = natural_inverse(s, a, 2);
        element_id m = s.product(a, dr.inverse);
        bool ok = nat1.decomposition && nat2.decomposition &&
                  nat1.decomposition->inverse == dr.inverse &&
                  nat2.decomposition->inverse == dr.inverse &&
                  nat2.decomposition->greatest == m;
        for (element_id f : sigma(s, a, 1).members) {
          ok = ok && s.natural_leq(f, m);
        }
        if (!ok) {
          json payload = semigroup_payload(drazin_check.name, s);
          payload["a"] = a;
          record_failure(drazin_check, std::move(payload));
        }
      } catch (const GeninvError& err) {
        json payload = semigroup_payload(drazin_check.name, s);
        payload["a"] = a;
        payload["error"] = err.what();
        record_failure(drazin_check, std::move(payload));
      }

      // Distributivity of the Sigma_2 semilattice forces a greatest element
      // whenever maximal elements exist.
      ++distributive.cases;
      SigmaSet sigma2 = sigma(s, a, 2);
      const auto& members = sigma2.members;
      auto leq = [&](element_id e, element_id f) {
        return s.natural_leq(e, f);
      };
      bool is_distributive = true;
      for (element_id e : members) {
        for (element_id f : members) {
          element_id meet = s.product(e, f);
          for (element_id x : members) {
            if (!leq(meet, x)) {
              continue;
            }
            bool witness = false;
            for (element_id e2 : members) {
              for (element_id f2 : members) {
                if (leq(e, e2) && leq(f, f2) && s.product(e2, f2) == x) {
                  witness = true;
                }
              }
            }
            is_distributive = is_distributive && witness;
          }
        }
      }
      if (is_distributive && !sigma2.maximal.empty() && !sigma2.greatest) {
        json payload = semigroup_payload(distributive.name, s);
        payload["a"] = a;
        record_failure(distributive, std::move(payload));
      }
    }
  }
  results.push_back(std::move(drazin_check));
  results.push_back(std::move(distributive));
}

// ------------------------------------------------------------------- matrix

json matrix_payload(const std::string& check, const RationalMatrix& m) {
  return json{{"check", check}, {"matrix", matrix_to_json(m)}};
}

void check_unit_criterion(const SuiteConfig& config,
                          std::vector<CheckResult>& results) {
  CheckResult check{"unit-criterion-cross-check", 0, 0, {}};
  SplitMix64 rng(config.seed * 7919 + 1);
  int n = 5;
  for (int trial = 0; trial < config.trials; ++trial) {
    ++check.cases;
    RationalMatrix a = random_integer_matrix(n, config.entry_bound, rng);
    RationalMatrix d =
        random_matrix(n, 1 + trial % (n - 1), config.entry_bound, rng);
    try {
      MatrixInverseReport report = invert_along(a, d);
      bool rank_route = rank(d * a * d) == rank(d);
      auto da_sharp = group_inverse_matrix(d * a);
      auto ad_sharp = group_inverse_matrix(a * d);
      bool green_route_r =
          matrix_leq(GreenKind::R, d, d * a) && da_sharp.has_value();
      bool green_route_l =
          matrix_leq(GreenKind::L, d, a * d) && ad_sharp.has_value();
      bool h_route = matrix_equiv(GreenKind::H, d * a * d, d);
      if (report.exists != rank_route || report.exists != green_route_r ||
          report.exists != green_route_l || report.exists != h_route) {
        json payload = matrix_payload(check.name, a);
        payload["d"] = matrix_to_json(d);
        record_failure(check, std::move(payload));
      }
    } catch (const GeninvError& err) {
      json payload = matrix_payload(check.name, a);
      payload["d"] = matrix_to_json(d);
      payload["error"] = err.what();
      record_failure(check, std::move(payload));
    }
  }
  results.push_back(std::move(check));
}

void check_quasipolarity(const SuiteConfig& config,
                         std::vector<CheckResult>& results) {
  CheckResult check{"quasipolar-spectral-idempotent", 0, 0, {}};
  SplitMix64 rng(config.seed * 7919 + 2);
  for (int trial = 0; trial < config.trials; ++trial) {
    ++check.cases;
    int n = 1 + trial % config.matrix_dim;
    int r = static_cast<int>(rng.below(n + 1));
    RationalMatrix a = random_matrix(n, r, config.entry_bound, rng);
    try {
      spectral_idempotent(a);  // certifies the whole quasipolarity battery
    } catch (const GeninvError& err) {
      json payload = matrix_payload(check.name, a);
      payload["error"] = err.what();
      record_failure(check, std::move(payload));
    }
  }
  results.push_back(std::move(check));
}

void check_core_decomposition(const SuiteConfig& config,
                              std::vector<CheckResult>& results) {
  CheckResult check{"natural-core-decomposition", 0, 0, {}};
  SplitMix64 rng(config.seed * 7919 + 3);
  for (int trial = 0; trial < config.trials; ++trial) {
    ++check.cases;
    int n = 1 + trial % config.matrix_dim;
    int r = static_cast<int>(rng.below(n + 1));
    RationalMatrix a = random_matrix(n, r, config.entry_bound, rng);
    try {
      natural_core_decomposition_matrix(a);
    } catch (const GeninvError& err) {
      json payload = matrix_payload(check.name, a);
      payload["error"] = err.what();
      record_failure(check, std::move(payload));
    }
  }
  results.push_back(std::move(check));
}

void check_bicommutant_powers(const SuiteConfig& config,
                              std::vector<CheckResult>& results) {
  CheckResult check{"bicommutant-equals-power-span", 0, 0, {}};
  SplitMix64 rng(config.seed * 7919 + 4);
  int batches = std::min(config.trials, 40);
  for (int trial = 0; trial < batches; ++trial) {
    ++check.cases;
    int n = 1 + trial % std::min(config.matrix_dim, 4);
    RationalMatrix a = random_integer_matrix(n, config.entry_bound, rng);
    std::vector<RationalMatrix> bicommutant = bicommutant_basis(a);
    int m = minimal_polynomial_degree(a);

    RationalMatrix power_rows(0, n * n);
    RationalMatrix p = RationalMatrix::identity(n);
    for (int k = 0; k < m; ++k) {
      power_rows = power_rows.rows() == 0
                       ? vectorize(p)
                       : vstack(power_rows, vectorize(p));
      p = p * a;
    }
    RationalMatrix bicommutant_rows(0, n * n);
    for (const RationalMatrix& b : bicommutant) {
      bicommutant_rows = bicommutant_rows.rows() == 0
                             ? vectorize(b)
                             : vstack(bicommutant_rows, vectorize(b));
    }
    bool same_span =
        static_cast<int>(bicommutant.size()) == m &&
        rref(power_rows).reduced == rref(bicommutant_rows).reduced;
    if (!same_span) {
      record_failure(check, matrix_payload(check.name, a));
    }
  }
  results.push_back(std::move(check));
}

void check_nilpotent_sigma1(const SuiteConfig& config,
                            std::vector<CheckResult>& results) {
  CheckResult check{"nilpotent-sigma1-certificate", 0, 0, {}};
  SplitMix64 rng(config.seed * 7919 + 5);
  std::vector<RationalMatrix> nilpotents;
  for (int n = 2; n <= 8; ++n) {
    nilpotents.push_back(jordan_block(n, Rational(0)));
  }
  for (int i = 0; i < 12; ++i) {
    nilpotents.push_back(
        random_nilpotent_matrix(2 + i % config.matrix_dim, config.entry_bound, rng));
  }
  for (const RationalMatrix& t : nilpotents) {
    ++check.cases;
    try {
      if (!all_pass(nilpotent_sigma1_certificate(t))) {
        record_failure(check, matrix_payload(check.name, t));
      }
    } catch (const GeninvError& err) {
      json payload = matrix_payload(check.name, t);
      payload["error"] = err.what();
      record_failure(check, std::move(payload));
    }
  }
  results.push_back(std::move(check));
}

void check_sigma2_battery(const SuiteConfig& config,
                          std::vector<CheckResult>& results) {
  CheckResult check{"sigma2-greatest-battery", 0, 0, {}};
  SplitMix64 rng(config.seed * 7919 + 6);
  for (int trial = 0; trial < config.trials; ++trial) {
    ++check.cases;
    int n = 1 + trial % config.matrix_dim;
    int r = static_cast<int>(rng.below(n + 1));
    RationalMatrix a = random_matrix(n, r, config.entry_bound, rng);
    try {
      if (!sigma2_greatest_check(a).pass) {
        record_failure(check, matrix_payload(check.name, a));
      }
    } catch (const GeninvError& err) {
      json payload = matrix_payload(check.name, a);
      payload["error"] = err.what();
      record_failure(check, std::move(payload));
    }
  }
  results.push_back(std::move(check));
}

// ----------------------------------------------------------------- operator

void check_local_spectral(const SuiteConfig& config,
                          std::vector<CheckResult>& results) {
  CheckResult intersect{"kernel-meets-core-trivially", 0, 0, {}};
  CheckResult collapse{"fin-dim-stabilization", 0, 0, {}};
  CheckResult fitting{"fitting-decomposition", 0, 0, {}};
  CheckResult inclusions{"proposition-6.2-inclusions", 0, 0, {}};
  CheckResult core{"core-range", 0, 0, {}};
  SplitMix64 rng(config.seed * 7919 + 7);
  for (int trial = 0; trial < config.trials; ++trial) {
    int n = 1 + trial % config.matrix_dim;
    int r = static_cast<int>(rng.below(n + 1));
    RationalMatrix t = random_matrix(n, r, config.entry_bound, rng);
    try {
      Subspace k = hyperrange(t);
      Subspace h0 = hyperkernel(t);

      ++intersect.cases;
      if (Subspace::kernel(t).intersect(k).dim() != 0) {
        record_failure(intersect, matrix_payload(intersect.name, t));
      }

      ++collapse.cases;
      bool stable =
          k == Subspace::column_space(t.power(n + 1)) &&
          h0 == Subspace::kernel(t.power(n + 1)) &&
          analytic_core(t) == k &&
          quasinilpotent_part(t).space == h0 &&
          h0.dim() + k.dim() == n;
      if (!stable) {
        record_failure(collapse, matrix_payload(collapse.name, t));
      }

      ++fitting.cases;
      FittingDecomposition fit = fitting_decomposition(t);

      ++inclusions.cases;
      bool inc_ok = true;
      InclusionReport on_projection = check_inclusions(t, fit.projection);
      inc_ok = on_projection.in_sigma1 && all_pass(on_projection.certificates);
      for (const SpectralProjection& c : spectral_cluster_projections(t)) {
        if (!in_sigma1(t, c.projection)) {
          continue;
        }
        InclusionReport rep = check_inclusions(t, c.projection);
        inc_ok = inc_ok && rep.in_sigma1 && all_pass(rep.certificates);
      }
      if (!inc_ok) {
        record_failure(inclusions, matrix_payload(inclusions.name, t));
      }

      ++core.cases;
      Subspace k_nu = core_range(t);
      if (k_nu != Subspace::column_space(fit.projection)) {
        record_failure(core, matrix_payload(core.name, t));
      }
    } catch (const GeninvError& err) {
      json payload = matrix_payload("local-spectral", t);
      payload["error"] = err.what();
      record_failure(fitting, std::move(payload));
    }
  }
  results.push_back(std::move(intersect));
  results.push_back(std::move(collapse));
  results.push_back(std::move(fitting));
  results.push_back(std::move(inclusions));
  results.push_back(std::move(core));
}

void check_rosenblum(const SuiteConfig& config,
                     std::vector<CheckResult>& results) {
  CheckResult check{"rosenblum-block-decomposition", 0, 0, {}};
  SplitMix64 rng(config.seed * 7919 + 8);
  for (int trial = 0; trial < 20; ++trial) {
    ++check.cases;
    int nx = 1 + trial % 3;
    int ny = 1 + static_cast<int>(rng.below(3));
    RationalMatrix x = random_matrix(nx, nx, config.entry_bound, rng);
    RationalMatrix y = random_nilpotent_matrix(ny, config.entry_bound, rng);
    try {
      rosenblum_block(x, y);
    } catch (const GeninvError& err) {
      json payload = matrix_payload(check.name, block_diag(x, y));
      payload["error"] = err.what();
      record_failure(check, std::move(payload));
    }
  }
  results.push_back(std::move(check));
}

void check_shift_truncation(std::vector<CheckResult>& results) {
  CheckResult check{"shift-truncation-hyperrange", 0, 0, {}};
  for (int n = 2; n <= 8; ++n) {
    ++check.cases;
    RationalMatrix t = jordan_block(n, Rational(0));
    bool ok = hyperrange(t).dim() == 0 &&
              all_pass(nilpotent_sigma1_certificate(t));
    if (!ok) {
      record_failure(check, matrix_payload(check.name, t));
    }
  }
  results.push_back(std::move(check));
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.config = config;

  bool do_semigroup = config.suite == "all" || config.suite == "semigroup";
  bool do_matrix = config.suite == "all" || config.suite == "matrix";
  bool do_operator = config.suite == "all" || config.suite == "operator";
  if (!do_semigroup && !do_matrix && !do_operator) {
    throw InputError("unknown suite '" + config.suite + "'");
  }

  if (do_semigroup) {
    std::vector<Semigroup> corpus = semigroup_corpus(config);
    check_green_laws(corpus, report.checks);
    check_idempotent_order(corpus, report.checks);
    check_commutant_and_corner(corpus, report.checks);
    check_inverse_along_theorems(corpus, report.checks);
    check_sigma_and_tau(corpus, report.checks);
    check_drazin_natural(corpus, report.checks);
  }
  if (do_matrix) {
    check_unit_criterion(config, report.checks);
    check_quasipolarity(config, report.checks);
    check_core_decomposition(config, report.checks);
    check_bicommutant_powers(config, report.checks);
    check_nilpotent_sigma1(config, report.checks);
    check_sigma2_battery(config, report.checks);
  }
  if (do_operator) {
    check_local_spectral(config, report.checks);
    check_rosenblum(config, report.checks);
    check_shift_truncation(report.checks);
  }

  for (const CheckResult& check : report.checks) {
    report.total_cases += check.cases;
    report.total_failures += check.failures;
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

nlohmann::json suite_report_json(const SuiteReport& report,
                                 bool include_timing) {
  json checks = json::array();
  for (const CheckResult& check : report.checks) {
    checks.push_back({{"name", check.name},
                      {"cases", check.cases},
                      {"failures", check.failures},
                      {"counterexamples", check.counterexamples}});
  }
  json j;
  j["config"] = {{"suite", report.config.suite},
                 {"order", report.config.order},
                 {"seed", report.config.seed},
                 {"trials", report.config.trials},
                 {"transformation_count", report.config.transformation_count},
                 {"matrix_dim", report.config.matrix_dim},
                 {"entry_bound", report.config.entry_bound}};
  j["conventions"] = {
      {"weak_inverse", "outer reading xax = x"},
      {"drazin_index", "invertible elements report index 1"}};
  j["checks"] = std::move(checks);
  j["total_cases"] = report.total_cases;
  j["total_failures"] = report.total_failures;
  if (include_timing) {
    j["wall_seconds"] = report.wall_seconds;
  }
  return j;
}

}  // namespace geninv
