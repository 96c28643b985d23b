#include "doctest.h"

#include "catkit/coxeter.hpp"
#include "catkit/dcm.hpp"

using namespace catkit;
using F = CoxeterType::Family;

TEST_SUITE("coxeter") {
  TEST_CASE("built-in systems") {
    auto const a2 = CoxeterSystem::build({F::A, 2});
    CHECK(a2.size() == 6);
    CHECK(a2.length(a2.longest()) == 3);
    auto const i4 = CoxeterSystem::build(parse_coxeter_type("I2:4"));
    CHECK(i4.size() == 8);
    CHECK(i4.length(i4.longest()) == 4);
    CHECK(CoxeterSystem::build({F::A, 1}).size() == 2);
    CHECK(CoxeterSystem::build({F::B, 3}).size() == 48);
    CHECK(CoxeterSystem::build({F::A, 4}).size() == 120);
    CHECK(CoxeterSystem::build(parse_coxeter_type("I2(6)")).size() == 12);
    CHECK(parse_coxeter_type("B3") == CoxeterType{F::B, 3});
    CHECK_THROWS(parse_coxeter_type("E8"));
    CHECK_THROWS_AS(CoxeterSystem::build({F::A, 4}, 100), CapExceeded);
  }

  TEST_CASE("type A agrees with permutations") {
    auto const sys = CoxeterSystem::build({F::A, 3});
    for (CoxeterSystem::element_type w = 0; w < sys.size(); ++w) {
      auto const p = parse_permutation(sys.label(w));
      CHECK(sys.length(w) == p.length());
      for (CoxeterSystem::element_type u = 0; u < sys.size(); ++u) {
        auto const q = parse_permutation(sys.label(u));
        CHECK(sys.bruhat_leq(u, w) == bruhat_leq(q, p));
        CHECK(parse_permutation(sys.label(sys.hecke_mul(u, w)))
              == hecke_mul(HeckeElement(q), HeckeElement(p)).permutation());
      }
    }
  }

  TEST_CASE("user supplied generators are validated") {
    // S_3 on three points.
    std::vector<CoxeterSystem::carrier_perm> gens = {{1, 0, 2}, {0, 2, 1}};
    auto const sys = CoxeterSystem::from_generators(gens, {{1, 3}, {3, 1}});
    CHECK(sys.size() == 6);
    CHECK_THROWS(CoxeterSystem::from_generators(gens, {{1, 2}, {2, 1}}));
    CHECK_THROWS(CoxeterSystem::from_generators({{0, 1, 2}, {0, 2, 1}}, {{1, 3}, {3, 1}}));
  }

  TEST_CASE("Hecke action") {
    auto const sys = CoxeterSystem::build({F::B, 2});
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      CHECK(sys.hecke_generator_mul(s, sys.identity(), Side::left) == sys.generator(s));
      CHECK(sys.hecke_generator_mul(s, sys.longest(), Side::left) == sys.longest());
    }
  }

  TEST_CASE("maximal coset representatives") {
    auto const sys = CoxeterSystem::build({F::A, 2});
    auto const w   = *sys.find({1, 0, 2});  // 213
    auto const r   = coset_max_rep(sys, GeneratorMask{0b10}, w);
    CHECK(sys.label(r) == "231");
    CHECK(coset_max_rep(sys, sys.all_generators(), sys.identity()) == sys.longest());
    auto const par = parabolic(sys, GeneratorMask{0b10});
    for (auto x : par.max_reps) {
      CHECK(coset_max_rep(sys, GeneratorMask{0b10}, x) == x);
    }
  }

  TEST_CASE("generalized Catalan quotients") {
    for (std::size_t n = 2; n <= 6; ++n) {
      auto const sys = CoxeterSystem::build({F::A, n - 1});
      CHECK(generalized_catalan_quotient(sys, sys.complement_of(n - 2)).size()
            == catalan_number(n));
    }
    auto const a3 = CoxeterSystem::build({F::A, 3});
    auto const top = generalized_catalan_quotient(a3, a3.all_generators());
    CHECK(top.size() == 1);
    CHECK(top.elements[0].degree() == 1);
    CHECK(generalized_catalan_quotient(a3, 0).size() == hecke_monoid(a3).size());
  }

  TEST_CASE("generalized double Catalan quotients") {
    for (std::size_t n = 2; n <= 5; ++n) {
      auto const sys = CoxeterSystem::build({F::A, n - 1});
      CHECK(generalized_double_catalan(sys, sys.complement_of(n - 2)).monoid.size()
            == dc_monoid(n).size());
    }
    auto const a3 = CoxeterSystem::build({F::A, 3});
    CHECK(generalized_double_catalan(a3, a3.all_generators()).monoid.size() == 1);
    // Regression value for I2(4) with J = {t}.
    auto const i4 = CoxeterSystem::build(parse_coxeter_type("I2:4"));
    CHECK(generalized_double_catalan(i4, GeneratorMask{0b10}).monoid.size() == 7);
  }

  TEST_CASE("vertex counts") {
    for (std::size_t n = 2; n <= 5; ++n) {
      CHECK(vertex_count(CoxeterSystem::build({F::A, n - 1})) == (std::size_t{1} << n) - 2);
    }
    for (std::size_t m = 3; m <= 6; ++m) {
      CHECK(vertex_count(CoxeterSystem::build({F::I2, m})) == 2 * m);
    }
    CHECK(vertex_count(CoxeterSystem::build({F::A, 1})) == 2);
  }

  TEST_CASE("union of maximal ideals acts effectively") {
    for (auto t : {"A2", "A3", "B3", "I2:5"}) {
      auto const sys = CoxeterSystem::build(parse_coxeter_type(t));
      auto const u   = maximal_ideal_union_action(sys);
      CHECK(u.carrier_size == vertex_count(sys));
      CHECK(u.effective);
    }
  }

  TEST_CASE("generator subsets") {
    CHECK(parse_generator_subset("1,3", 3) == 0b101);
    CHECK(parse_generator_subset("{s1,s3}", 3) == 0b101);
    CHECK(generator_subset_to_string(0b101, 3) == "{s1,s3}");
    CHECK_THROWS(parse_generator_subset("4", 3));
  }
}
