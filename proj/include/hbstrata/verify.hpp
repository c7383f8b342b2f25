// Parameterized verification suites.  Each check re-derives its expected
// values through an independent route (direct enumeration, brute force, or a
// pinned constant) and compares against the library implementation.  The CLI
// runs them at a configurable depth; the acceptance binary pins the full
// depths.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hbstrata {

struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> notes;  // first few failure descriptions

  void expect(bool ok, const std::string& what);
  bool passed() const { return failures == 0; }

  bool operator==(const SuiteResult&) const = default;
};

struct VerifyConfig {
  int max_g_weight = 16;       // weight-sum identities
  int max_g_order = 6;         // exhaustive partial-order checks
  int max_g_classifiers = 12;  // genericity/supersingularity cross-checks
  int max_g_components = 8;    // component dimension/count sweep
  int max_g_oracle = 5;        // Dieudonne-vs-equations sweep
  int max_g_alpha_oracle = 7;  // alpha type of the standard module
  int max_g_counting = 10;     // two-route totals
  int max_g_slopes = 10;       // slope decomposition
  int samples = 200;           // random tuples per (g, tau, field)
  int h_samples = 50;          // random class factors per profile
  std::vector<std::pair<int, int>> fields = {{2, 2}, {3, 2}, {5, 2}, {3, 3}};
  std::vector<int> frobenius_genera = {2, 4};
  std::vector<long long> frobenius_primes = {2, 3, 5};
  std::uint64_t seed = 20260809;
};

// --- core checks (acceptance criteria run these at pinned depths) ---
SuiteResult check_weight_sum_identity(int max_g);
SuiteResult check_weight_refinement(int max_g);
SuiteResult check_component_fixtures();
SuiteResult check_dimension_counts(int max_g);
SuiteResult check_dieudonne_equivalence(int max_g,
                                        const std::vector<std::pair<int, int>>& fields,
                                        int samples, std::uint64_t seed);
SuiteResult check_alpha_type_oracle(int max_g, const std::vector<int>& primes);
SuiteResult check_frobenius_locus(const std::vector<int>& genera,
                                  const std::vector<long long>& primes, int m);
SuiteResult check_zeta_values();
SuiteResult check_class_factor_pipeline();
SuiteResult check_formula_equivalence(int max_g, int h_samples,
                                      std::uint64_t seed);
SuiteResult check_slope_decomposition(int max_g);
SuiteResult check_p_independence(const std::vector<long long>& primes);

// --- further module invariants ---
SuiteResult check_partial_order(int max_g);
SuiteResult check_lambda_properties(int max_g);
SuiteResult check_ss_classifier(int max_g);
SuiteResult check_strata_maximality(int max_g);
SuiteResult check_line_placement(int max_g);
SuiteResult check_field_automorphisms(const std::vector<std::pair<int, int>>& fields,
                                      int samples, std::uint64_t seed);
SuiteResult check_sl2_orders();
SuiteResult check_split_types();
SuiteResult check_zeta_positivity(long long max_d);
SuiteResult check_order_invariance();

std::vector<SuiteResult> run_all_suites(const VerifyConfig& config);

}  // namespace hbstrata
