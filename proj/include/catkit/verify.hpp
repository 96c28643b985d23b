#ifndef CATKIT_VERIFY_HPP_
#define CATKIT_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "catkit/coxeter.hpp"

namespace catkit {

  // Outcome of one exhaustive or randomized suite.
  struct CheckResult {
    std::string key;
    bool        passed = false;
    std::string summary;         // one line, human readable
    std::string counterexample;  // JSON text, empty when passed
  };

  // Each suite runs over n = 1 .. n_max unless noted.

  CheckResult check_catalan_count(std::size_t n_max);
  CheckResult check_dc_count(std::size_t n_max);
  // Self-dual elements vs 4321-avoiding involutions vs Motzkin numbers.
  CheckResult check_self_dual_count(std::size_t n_max);
  // H_n has 2^{n-1} idempotents and those of DC_n are the all-ones block
  // diagonal matrices.
  CheckResult check_idempotents(std::size_t n_max);
  // z_w -> [e, w] is an injective homomorphism into subsets under A.B.
  CheckResult check_subset_realization(std::size_t n_max);
  // Theta on CB_n: exhaustive for n <= n_exhaustive, then `samples` random
  // pairs for each n up to n_random.
  CheckResult check_theta_isomorphism(std::size_t   n_exhaustive,
                                      std::size_t   n_random,
                                      std::size_t   samples,
                                      std::uint64_t seed);
  // eps word product = interval fill, and Psi is a homomorphism.
  CheckResult check_psi_two_routes(std::size_t n_max);
  CheckResult check_fiber_structure(std::size_t n_max);
  CheckResult check_catalan_fibers(std::size_t n_max);
  // i is an involution fixing (UD)^n. With `require_full_fixed` the check
  // also demands that U^n D^n is fixed.
  CheckResult check_kreweras_derivative(std::size_t n_max, bool require_full_fixed);
  CheckResult check_h_order_vs_covers(std::size_t n_max);
  CheckResult check_admissible_pairs(std::size_t n_max);
  // n = n_min .. n_max.
  CheckResult check_presentation(std::size_t n_min,
                                 std::size_t n_max,
                                 std::size_t word_cap);
  // Maximal coset representatives, exhaustive over every subset J.
  CheckResult check_max_coset_reps(std::vector<CoxeterType> const& types);
  CheckResult check_eigenspaces(std::vector<CoxeterType> const& types);
  CheckResult check_simple_socle(std::vector<CoxeterType> const& types);
  // sum of P'_(s) is effective of dimension v(W) - r(W).
  CheckResult check_hecke_min_dim(std::vector<CoxeterType> const& types);
  // n = 2 .. n_max.
  CheckResult check_dc_min_dim(std::size_t n_max);
  // DC(S_n)_(s_{n-1}) against DC_n and |C(S_n)_(s_{n-1})| = C_n for
  // n = 2 .. n_max.
  CheckResult check_generalized_quotients(std::size_t n_max);

  struct VerifyOptions {
    std::size_t   n_max    = 6;
    std::uint64_t seed     = 1;
    std::size_t   samples  = 10'000;
    std::size_t   word_cap = std::size_t{1} << 26;
    unsigned      jobs     = 1;
  };

  // The Coxeter systems used by the representation suites.
  std::vector<CoxeterType> standard_coxeter_types();

  // Every suite at the sizes implied by n_max, in a fixed order. Suites run
  // on up to `jobs` threads; results are returned in the fixed order.
  std::vector<CheckResult> run_verify_all(VerifyOptions const& opts);

}  // namespace catkit

#endif  // CATKIT_VERIFY_HPP_
