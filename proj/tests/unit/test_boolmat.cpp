#include "doctest.h"

#include <random>

#include "catkit/boolmat.hpp"
#include "catkit/dcm.hpp"

using namespace catkit;

namespace {
  // Columns given as 1-based supports.
  BoolMatrix from_columns(std::size_t n, std::vector<std::vector<int>> const& cols) {
    BoolMatrix m(n);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (int i : cols[j]) {
        m.set(static_cast<std::size_t>(i - 1), j);
      }
    }
    return m;
  }

  BoolMatrix const xi = from_columns(4, {{1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {4}});
}  // namespace

TEST_SUITE("boolmat") {
  TEST_CASE("products") {
    auto const e1 = epsilon(1, 3).matrix();
    auto const e2 = epsilon(2, 3).matrix();
    CHECK(e1 * e2 == from_columns(3, {{1, 2}, {1, 2, 3}, {1, 2, 3}}));
    CHECK(BoolMatrix::identity(4) * xi == xi);
    for (std::size_t i = 1; i < 5; ++i) {
      auto const e = epsilon(i, 5).matrix();
      CHECK(e * e == e);
    }
  }

  TEST_CASE("row merge is left multiplication by epsilon") {
    auto const e2 = epsilon(2, 4).matrix();
    CHECK(xi.merge_rows(1) == e2 * xi);
    CHECK(xi.merge_columns(1) == xi * e2);
  }

  TEST_CASE("convexity") {
    CHECK(is_convex(BoolMatrix::identity(5)));
    CHECK(is_convex(xi));
    BoolMatrix bad = BoolMatrix::identity(3);
    bad.set(0, 2);
    CHECK_FALSE(is_convex(bad));
    CHECK_THROWS_AS(ConvexRelation{bad}, std::invalid_argument);
  }

  TEST_CASE("max and min maps") {
    ConvexRelation const x(xi);
    CHECK(to_string(max_map(x)) == "(2,3,4,4)");
    CHECK(to_string(min_map(x)) == "(1,1,1,4)");
    auto const id = ConvexRelation::identity(4);
    CHECK(max_map(id) == MonotoneMap::identity(4, MonotoneMap::Direction::nondecreasing));
    CHECK(min_map(id) == MonotoneMap::identity(4, MonotoneMap::Direction::nonincreasing));
    ConvexRelation const ones(BoolMatrix::ones(4));
    CHECK(to_string(max_map(ones)) == "(4,4,4,4)");
    CHECK(to_string(min_map(ones)) == "(1,1,1,1)");
  }

  TEST_CASE("theta") {
    auto const [u, l] = theta(ConvexRelation::identity(3));
    CHECK(u == MonotoneMap::identity(3, MonotoneMap::Direction::nondecreasing));
    CHECK(l == MonotoneMap::identity(3, MonotoneMap::Direction::nonincreasing));
    auto const t = theta_inverse(
        parse_monotone_map("(2,3,3)", MonotoneMap::Direction::nondecreasing),
        parse_monotone_map("(1,1,1)", MonotoneMap::Direction::nonincreasing));
    CHECK(t.matrix() == from_columns(3, {{1, 2}, {1, 2, 3}, {1, 2, 3}}));
    auto const [xu, xl] = theta(ConvexRelation(xi));
    CHECK(theta_inverse(xu, xl).matrix() == xi);
  }

  TEST_CASE("convex relations: closure, homomorphism, order") {
    std::mt19937_64 rng(7);
    for (std::size_t n = 1; n <= 7; ++n) {
      auto const all = all_convex_relations(n);
      CHECK(all.size() == catalan_number(n) * catalan_number(n));
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      std::size_t const samples = n <= 3 ? all.size() * all.size() : 2000;
      for (std::size_t k = 0; k < samples; ++k) {
        auto const& a = n <= 3 ? all[k / all.size()] : all[pick(rng)];
        auto const& b = n <= 3 ? all[k % all.size()] : all[pick(rng)];
        BoolMatrix const ab = a.matrix() * b.matrix();
        REQUIRE(is_convex(ab));
        ConvexRelation const c(ab);
        CHECK(max_map(c) == compose(max_map(a), max_map(b)));
        CHECK(min_map(c) == compose(min_map(a), min_map(b)));
        CHECK(transpose(ab) == transpose(b.matrix()) * transpose(a.matrix()));
        if (a.matrix().is_subset_of(b.matrix())) {
          CHECK(leq(max_map(a), max_map(b)));
          CHECK(leq(min_map(a), min_map(b)));
        }
      }
    }
  }

  TEST_CASE("degenerate degree") {
    CHECK(all_convex_relations(1).size() == 1);
    CHECK(is_convex(BoolMatrix::identity(1)));
  }

  TEST_CASE("text formats") {
    CHECK(to_text(xi) == "1110\n1110\n0110\n0011\n");
    CHECK(parse_bool_matrix("1110/1110/0110/0011") == xi);
    CHECK(parse_bool_matrix("1110111001100011") == xi);
    CHECK(parse_bool_matrix(to_text(xi)) == xi);
    CHECK_THROWS(parse_bool_matrix("101"));
  }
}
