#include "doctest.h"

#include "catkit/repmin.hpp"

using namespace catkit;
using F = CoxeterType::Family;

namespace {
  std::size_t basis_index(HeckeModule const& m, std::string const& label) {
    for (std::size_t k = 0; k < m.basis_elements.size(); ++k) {
      if (m.sys->label(m.basis_elements[k]) == label) {
        return k;
      }
    }
    FAIL("no basis vector " << label);
    return 0;
  }
}  // namespace

TEST_SUITE("repmin") {
  TEST_CASE("projective modules") {
    auto const a2 = CoxeterSystem::build({F::A, 2});
    auto const p  = build_P(a2, 0);
    CHECK(p.dimension() == 3);
    CHECK(satisfies_hecke_relations(p));
    CHECK(p.basis_elements.back() == a2.longest());
    auto const [prime, trivial] = split_P(p);
    CHECK(prime.dimension() == 2);
    CHECK(trivial.dimension() == 1);
    CHECK(satisfies_hecke_relations(prime));
    auto const a3 = CoxeterSystem::build({F::A, 3});
    // [S_4 : S_3] - 1 for the end nodes, [S_4 : S_2 x S_2] - 1 for the middle.
    CHECK(split_P(build_P(a3, 0)).first.dimension() == 3);
    CHECK(split_P(build_P(a3, 1)).first.dimension() == 5);
    CHECK(split_P(build_P(a3, 2)).first.dimension() == 3);
    for (auto t : {"B3", "I2:5"}) {
      auto const sys = CoxeterSystem::build(parse_coxeter_type(t));
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        auto const m = build_P(sys, s);
        CHECK(m.dimension() == sys.size() / parabolic(sys, sys.complement_of(s)).elements.size());
        CHECK(satisfies_hecke_relations(m));
      }
    }
  }

  TEST_CASE("eigenspaces") {
    auto const a2 = CoxeterSystem::build({F::A, 2});
    auto const p  = build_P(a2, 0);
    std::vector<std::string> labels;
    for (auto w : p.basis_elements) {
      labels.push_back(a2.label(w));
    }
    CHECK(labels == std::vector<std::string>{"132", "231", "321"});
    auto const e = eigen_structure(p, 1);
    CHECK(e.fixed.size() == 2);
    CHECK(e.kernel.size() == 1);
    auto const o = orbit_eigen_structure(p, 1);
    CHECK(o.fixed.size() == 2);
    for (auto const& v : o.fixed) {
      CHECK(p.action[1] * v == v);
    }
    CHECK(span_dimension(o.fixed, 3) + span_dimension(o.kernel, 3) == 3);
  }

  TEST_CASE("socle of P' for A2") {
    auto const a2    = CoxeterSystem::build({F::A, 2});
    auto const prime = split_P(build_P(a2, 0)).first;
    auto const soc   = socle(prime);
    REQUIRE(soc.dimension == 1);
    CHECK(soc.components[0].type == 0b01);
    auto const& v = soc.components[0].basis[0];
    CHECK(v[basis_index(prime, "231")] != 0);
    CHECK(v[basis_index(prime, "132")] == 0);

    auto const trivial = split_P(build_P(a2, 0)).second;
    auto const ts      = socle(trivial);
    REQUIRE(ts.dimension == 1);
    CHECK(ts.components[0].type == a2.all_generators());
  }

  TEST_CASE("simple socles") {
    for (auto t : {"A2", "A3", "A4", "B2", "B3", "I2:3", "I2:4", "I2:5", "I2:6"}) {
      auto const sys = CoxeterSystem::build(parse_coxeter_type(t));
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        auto const c = check_simple_socle(sys, s);
        CHECK(c.simple);
        CHECK(c.vector_ok);
        CHECK(c.type_ok);
        auto const prime = split_P(build_P(sys, s)).first;
        CHECK(socle_dimension_mod_p(prime, 2) == 1);
        CHECK(socle_dimension_mod_p(prime, 3) == 1);
      }
    }
  }

  TEST_CASE("effectiveness") {
    auto const a2 = CoxeterSystem::build({F::A, 2});
    auto const m  = sum_of_reduced_projectives(a2);
    CHECK(m.dimension() == 4);
    CHECK(effective_check(m));
    CHECK_FALSE(effective_check(split_P(build_P(a2, 0)).second));
    auto const a3 = CoxeterSystem::build({F::A, 3});
    auto const m3 = sum_of_reduced_projectives(a3);
    CHECK(m3.dimension() == 11);
    CHECK(effective_check(m3));
  }

  TEST_CASE("minimal dimension reports") {
    CHECK(min_dim_report(CoxeterSystem::build({F::A, 2})).claimed == 4);
    CHECK(min_dim_report(CoxeterSystem::build({F::A, 3})).claimed == 11);
    auto const i4 = min_dim_report(CoxeterSystem::build({F::I2, 4}));
    CHECK(i4.claimed == 6);
    CHECK(i4.constructed_dim == 6);
    CHECK(i4.effective);
    CHECK(i4.socle_verified);
  }

  TEST_CASE("DC_n modules") {
    auto const two = dc_min_dim_check(2);
    CHECK(two.dim == 2);
    CHECK(two.monoid_size == 2);
    CHECK(two.effective);
    auto const three = dc_min_dim_check(3);
    CHECK(three.dim == 4);
    CHECK(three.monoid_size == 6);
    CHECK(three.effective);
    auto const four = dc_min_dim_check(4);
    CHECK(four.dim == 6);
    CHECK(four.monoid_size == 23);
    CHECK(four.well_defined);
    CHECK(four.effective);
    CHECK_THROWS(dc_min_dim_check(1));
  }
}
