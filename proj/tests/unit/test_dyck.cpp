#include "doctest.h"

#include <set>

#include "catkit/dyck.hpp"
#include "oracles.hpp"

using namespace catkit;
using D = MonotoneMap::Direction;

namespace {
  MonotoneMap up(char const* text) {
    return parse_monotone_map(text, D::nondecreasing);
  }
  std::string stairs(std::size_t n) {
    std::string s;
    for (std::size_t k = 0; k < n; ++k) {
      s += "UD";
    }
    return s;
  }
}  // namespace

TEST_SUITE("dyck") {
  TEST_CASE("paths validate") {
    CHECK_NOTHROW(DyckPath("UUDD"));
    CHECK_THROWS(DyckPath("UDDU"));
    CHECK_THROWS(DyckPath("UUD"));
    CHECK_THROWS(DyckPath("UXDD"));
    CHECK(DyckPath("UDUUDD").valleys() == std::vector<std::size_t>{1});
  }

  TEST_CASE("delta") {
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(delta(MonotoneMap::identity(n, D::nondecreasing)).steps() == stairs(n));
      std::vector<int> full(n, static_cast<int>(n));
      CHECK(delta(MonotoneMap(full, D::nondecreasing)).steps()
            == std::string(n, 'U') + std::string(n, 'D'));
    }
    CHECK(delta(up("(3,3,4,5,5,6)")).steps() == "UDUUDUDUUDDD");
  }

  TEST_CASE("delta is a bijection") {
    for (std::size_t n = 1; n <= 7; ++n) {
      auto const paths = all_dyck_paths(n);
      CHECK(paths.size() == oracle::catalan(n));
      std::set<DyckPath> images;
      for (auto const& a : all_monotone_maps(n, D::nondecreasing)) {
        auto const p = delta(a);
        CHECK(delta_inverse(p) == a);
        images.insert(p);
      }
      CHECK(images == std::set<DyckPath>(paths.begin(), paths.end()));
    }
  }

  TEST_CASE("kreweras derivative") {
    for (std::size_t n = 1; n <= 6; ++n) {
      DyckPath const s(stairs(n));
      CHECK(kreweras_derivative(s) == s);
    }
    CHECK(kreweras_derivative(delta(up("233"))) == delta(up("333")));
    CHECK(kreweras_derivative(delta(up("333"))) == delta(up("233")));
    // pi for the constant map is n 1 2 ... n-1; its inverse has alpha (2,...,n,n).
    CHECK(kreweras_derivative(DyckPath("UUUDDD")).steps() == "UUDUDD");
    CHECK(kreweras_derivative(DyckPath("UUDD")).steps() == "UUDD");
    for (std::size_t n = 1; n <= 7; ++n) {
      for (auto const& p : all_dyck_paths(n)) {
        CHECK(kreweras_derivative(kreweras_derivative(p)) == p);
      }
    }
  }

  TEST_CASE("h-order") {
    for (auto const& b : all_monotone_maps(3, D::nondecreasing)) {
      CHECK(h_order_prec(MonotoneMap::identity(3, D::nondecreasing), b));
    }
    CHECK(h_order_prec(up("233"), up("333")));
    CHECK_FALSE(h_order_prec(up("333"), up("233")));
  }

  TEST_CASE("h-order is a partial order") {
    for (std::size_t n = 1; n <= 5; ++n) {
      auto const t = h_order_table(n);
      std::size_t const m = t.maps.size();
      for (std::size_t i = 0; i < m; ++i) {
        CHECK(t.holds[i][i]);
        for (std::size_t j = 0; j < m; ++j) {
          if (i != j) {
            CHECK_FALSE((t.holds[i][j] && t.holds[j][i]));
          }
          for (std::size_t k = 0; k < m; ++k) {
            if (t.holds[i][j] && t.holds[j][k]) {
              CHECK(t.holds[i][k]);
            }
          }
        }
      }
    }
  }

  TEST_CASE("rectangular covers") {
    auto const c = rectangular_covers(DyckPath("UDUD"));
    CHECK(c == std::vector<DyckPath>{DyckPath("UDUD"), DyckPath("UUDD")});
    auto const big = rectangular_covers(DyckPath("UUDDUUUDDUUDUDDUDD"));
    CHECK(std::find(big.begin(), big.end(), DyckPath("UUDDUUUUUDDUDDDUDD")) != big.end());
  }

  TEST_CASE("h-order equals the cover closure") {
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(h_order_table(n).holds == prec_prime_table(n).holds);
    }
  }

  TEST_CASE("admissible pairs") {
    for (std::size_t n = 1; n <= 4; ++n) {
      PathPair const id{DyckPath(stairs(n)), DyckPath(stairs(n))};
      CHECK(admissible_pair_of(Permutation::identity(n)) == id);
      CHECK(is_admissible(id));
      DyckPath const full(std::string(n, 'U') + std::string(n, 'D'));
      CHECK(admissible_pair_of(Permutation::longest(n)) == PathPair{full, full});
    }
    PathPair const p231{delta(up("233")), delta(up("333"))};
    CHECK(admissible_pair_of(Permutation{2, 3, 1}) == p231);
    CHECK(is_admissible(p231));
    CHECK_FALSE(is_admissible(PathPair{delta(up("233")), delta(up("233"))}));
    for (std::size_t n = 1; n <= 5; ++n) {
      auto const pairs = admissible_pairs(n);
      auto const paths = all_dyck_paths(n);
      for (auto const& a : paths) {
        for (auto const& b : paths) {
          PathPair const pair{a, b};
          CHECK(is_admissible(pair) == (pairs.count(pair) != 0));
          CHECK(is_admissible_brute(pair) == (pairs.count(pair) != 0));
        }
      }
    }
  }
}
