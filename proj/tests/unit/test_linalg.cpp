#include "doctest.h"

#include "catkit/linalg.hpp"

using namespace catkit;

namespace {
  RationalMatrix make(std::vector<std::vector<long>> const& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        m.at(i, j) = rows[i][j];
      }
    }
    return m;
  }
}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("nullspace basics") {
    auto const a = make({{1, 2, 3}, {2, 4, 6}});
    auto const n = nullspace(a);
    CHECK(n.size() == 2);
    for (auto const& v : n) {
      CHECK(a * v == RationalVector(2));
    }
    CHECK(rank(a) == 1);
    CHECK(nullspace(RationalMatrix::identity(3)).empty());
    CHECK(nullspace(RationalMatrix(0, 3)).size() == 3);
  }

  TEST_CASE("deterministic basis with x_f = 1") {
    auto const n = nullspace(make({{2, 1, 0}, {0, 0, 3}}));
    REQUIRE(n.size() == 1);
    CHECK(to_string(n[0]) == "[-1/2,1,0]");
  }

  TEST_CASE("fractions") {
    RationalMatrix a(2, 2);
    a.at(0, 0) = Rational(1, 3);
    a.at(0, 1) = Rational(1, 2);
    a.at(1, 0) = Rational(2, 3);
    a.at(1, 1) = 1;
    auto const n = nullspace(a);
    REQUIRE(n.size() == 1);
    CHECK(a * n[0] == RationalVector(2));
    CHECK(rank(a) == 1);
  }

  TEST_CASE("mod p") {
    auto const n = nullspace_mod_p(make({{1, 1}, {1, 1}}), 7);
    REQUIRE(n.size() == 1);
    CHECK(n[0] == std::vector<std::uint64_t>{6, 1});
    CHECK(nullspace_mod_p(make({{2, 0}, {0, 2}}), 2).size() == 2);
  }

  TEST_CASE("block operations") {
    auto const a = make({{1}});
    auto const b = make({{2, 3}, {4, 5}});
    auto const d = direct_sum(a, b);
    CHECK(d.rows() == 3);
    CHECK(d.at(0, 1) == 0);
    CHECK(d.at(2, 2) == 5);
    CHECK(stack(b, b).rows() == 4);
    CHECK(RationalMatrix::identity(2) * b == b);
    CHECK(b - b == RationalMatrix(2, 2));
  }
}
