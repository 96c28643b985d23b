// Acceptance criteria runner. With no arguments every criterion runs; a
// number runs just that one. --with-n5 adds the n = 5 presentation check.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "catkit/coxeter.hpp"
#include "catkit/dcm.hpp"
#include "catkit/repmin.hpp"
#include "catkit/verify.hpp"

using namespace catkit;

namespace {

  struct Outcome {
    bool        passed;
    std::string detail;
  };

  Outcome from(CheckResult const& r) {
    return {r.passed, r.summary + (r.passed ? "" : " " + r.counterexample)};
  }

  Outcome both(Outcome const& a, Outcome const& b) {
    return {a.passed && b.passed, a.detail + "; " + b.detail};
  }

  std::vector<CoxeterType> types(std::vector<std::string> const& names) {
    std::vector<CoxeterType> out;
    for (auto const& n : names) {
      out.push_back(parse_coxeter_type(n));
    }
    return out;
  }

  bool with_n5 = false;

  Outcome presentation() {
    std::vector<std::size_t> want = {2, 6, 23};
    std::size_t const        top  = with_n5 ? 5 : 4;
    if (with_n5) {
      want.push_back(103);
    }
    std::string detail = "presented sizes";
    bool        ok     = true;
    for (std::size_t n = 2; n <= top; ++n) {
      PresentationOptions opts;
      // Words up to length l(w0) + 3 over 4 letters need a larger cap.
      opts.word_cap = n == 5 ? std::size_t{1} << 27 : default_word_cap;
      auto const r  = verify_presentation(n, opts);
      ok = ok && r.matches && r.stable && r.presented_size == want[n - 2];
      detail += " " + std::to_string(r.presented_size);
    }
    return {ok, detail};
  }

  Outcome minimal_dimensions() {
    bool        ok = true;
    std::string detail;
    for (std::size_t n = 3; n <= 5; ++n) {
      auto const sys = CoxeterSystem::build({CoxeterType::Family::A, n - 1});
      auto const r   = min_dim_report(sys);
      std::size_t const formula = (std::size_t{1} << n) - n - 1;
      ok = ok && r.constructed_dim == formula && r.claimed == formula && r.effective;
      detail += (detail.empty() ? "A" : " A") + std::to_string(n - 1) + ":"
                + std::to_string(r.constructed_dim);
    }
    auto const rest = check_hecke_min_dim(types({"B2", "B3", "I2:3", "I2:4", "I2:5", "I2:6"}));
    auto const dc   = check_dc_min_dim(6);
    return both({ok, detail}, both(from(rest), from(dc)));
  }

  Outcome quotients() {
    auto const r  = check_generalized_quotients(5);
    bool       ok = true;
    for (std::size_t n = 2; n <= 6; ++n) {
      auto const sys = CoxeterSystem::build({CoxeterType::Family::A, n - 1});
      ok = ok && generalized_catalan_quotient(sys, sys.complement_of(n - 2)).size()
                     == catalan_number(n);
    }
    return both(from(r), {ok, "C(S_n) quotient sizes are Catalan for n <= 6"});
  }

  struct Criterion {
    int                      id;
    std::string              name;
    double                   seconds;  // time limit, 0 for none
    std::function<Outcome()> run;
  };

  std::vector<Criterion> const criteria = {
      {1, "Catalan counts", 5, [] { return from(check_catalan_count(7)); }},
      {2, "double Catalan counts", 60, [] { return from(check_dc_count(7)); }},
      {3, "Motzkin counts", 60, [] { return from(check_self_dual_count(7)); }},
      {4, "idempotents", 0, [] { return from(check_idempotents(6)); }},
      {5, "subset realization", 0, [] { return from(check_subset_realization(5)); }},
      {6, "Theta isomorphism", 0,
       [] { return from(check_theta_isomorphism(4, 6, 10'000, 20'241'015)); }},
      {7, "Psi two routes", 0, [] { return from(check_psi_two_routes(6)); }},
      {8, "fiber structure", 0,
       [] { return both(from(check_fiber_structure(5)), from(check_catalan_fibers(6))); }},
      {9, "Kreweras derivative", 0,
       [] { return from(check_kreweras_derivative(7, true)); }},
      {10, "h-order vs covers", 0, [] { return from(check_h_order_vs_covers(5)); }},
      {11, "admissible pairs", 300, [] { return from(check_admissible_pairs(6)); }},
      {12, "presentation", 0, presentation},
      {13, "simple socle", 60,
       [] {
         return from(check_simple_socle(
             types({"A2", "A3", "A4", "B2", "B3", "I2:3", "I2:4", "I2:5", "I2:6"})));
       }},
      {14, "minimal dimensions", 0, minimal_dimensions},
      {15, "generalized quotients", 0, quotients},
  };

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int k = 1; k < argc; ++k) {
    std::string const arg = argv[k];
    if (arg == "--with-n5") {
      with_n5 = true;
    } else {
      only = std::atoi(arg.c_str());
    }
  }
  bool all_ok = true;
  for (auto const& c : criteria) {
    if (only != 0 && c.id != only) {
      continue;
    }
    auto const start = std::chrono::steady_clock::now();
    Outcome    out;
    try {
      out = c.run();
    } catch (std::exception const& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.seconds > 0 && secs > c.seconds) {
      out.passed = false;
      out.detail += " (time limit " + std::to_string(c.seconds) + " s exceeded)";
    }
    all_ok = all_ok && out.passed;
    std::cout << "criterion " << c.id << " [" << c.name << "]: "
              << (out.passed ? "PASS" : "FAIL") << " - " << out.detail << " ("
              << static_cast<int>(secs * 1000) << " ms)\n";
  }
  return all_ok ? 0 : 1;
}
