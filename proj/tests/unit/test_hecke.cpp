#include "doctest.h"

#include <algorithm>
#include <map>

#include "catkit/hecke.hpp"

using namespace catkit;

namespace {
  HeckeElement z(std::initializer_list<int> w) {
    return HeckeElement(Permutation(w));
  }
}  // namespace

TEST_SUITE("hecke") {
  TEST_CASE("generator action") {
    CHECK(hecke_generator_mul(1, z({2, 1, 3}), Side::left) == z({2, 1, 3}));
    CHECK(hecke_generator_mul(1, z({1, 3, 2}), Side::left) == z({2, 3, 1}));
    for (std::size_t i = 1; i < 4; ++i) {
      CHECK(hecke_generator_mul(i, z({4, 3, 2, 1}), Side::left) == z({4, 3, 2, 1}));
      CHECK(hecke_generator_mul(i, z({4, 3, 2, 1}), Side::right) == z({4, 3, 2, 1}));
    }
  }

  TEST_CASE("products") {
    CHECK(hecke_mul(z({2, 1, 3}), z({1, 3, 2})) == z({2, 3, 1}));
    for (auto const& w : all_permutations(4)) {
      CHECK(hecke_mul(z({4, 3, 2, 1}), HeckeElement(w)) == z({4, 3, 2, 1}));
      CHECK(hecke_mul(HeckeElement(w), z({4, 3, 2, 1})) == z({4, 3, 2, 1}));
    }
  }

  TEST_CASE("reversal is an anti-involution") {
    auto const perms = all_permutations(4);
    for (auto const& a : perms) {
      for (auto const& b : perms) {
        HeckeElement const x(a);
        HeckeElement const y(b);
        CHECK(reversal(hecke_mul(x, y)) == hecke_mul(reversal(y), reversal(x)));
      }
    }
  }

  TEST_CASE("bruhat ideals") {
    CHECK(bruhat_ideal(Permutation::identity(3)) == PermutationSet{Permutation::identity(3)});
    CHECK(bruhat_ideal(Permutation{2, 1, 3}).size() == 2);
    auto const i231 = bruhat_ideal(Permutation{2, 3, 1});
    CHECK(i231 == PermutationSet{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}});
    CHECK(ideal_product(PermutationSet{Permutation::identity(3)}, i231) == i231);
    CHECK(ideal_product(bruhat_ideal(Permutation{2, 1, 3}), bruhat_ideal(Permutation{1, 3, 2}))
          == i231);
  }

  TEST_CASE("subset realization and order compatibility") {
    auto const perms = all_permutations(4);
    for (auto const& u : perms) {
      for (auto const& w : perms) {
        auto const h = hecke_mul(HeckeElement(u), HeckeElement(w)).permutation();
        CHECK(ideal_product(bruhat_ideal(u), bruhat_ideal(w)) == bruhat_ideal(h));
        if (bruhat_leq(u, w)) {
          for (auto const& v : perms) {
            auto const a = hecke_mul(HeckeElement(u), HeckeElement(v)).permutation();
            auto const b = hecke_mul(HeckeElement(w), HeckeElement(v)).permutation();
            CHECK(bruhat_leq(a, b));
          }
        }
      }
    }
  }

  TEST_CASE("idempotents") {
    auto const three = idempotents(3);
    CHECK(three == std::vector<HeckeElement>{z({1, 2, 3}), z({1, 3, 2}), z({2, 1, 3}),
                                             z({3, 2, 1})});
    for (std::size_t n = 2; n <= 6; ++n) {
      CHECK(idempotents(n).size() == std::size_t{1} << (n - 1));
    }
    CHECK(parabolic_longest(4, {1, 2}) == Permutation{3, 2, 1, 4});
    CHECK(parabolic_longest(4, {}) == Permutation::identity(4));
  }

  TEST_CASE("H_n is J-trivial") {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const m   = hecke_monoid(n);
      auto const tab = m.table.product_table();
      std::vector<std::vector<bool>> ideal(m.size(), std::vector<bool>(m.size(), false));
      for (std::size_t x = 0; x < m.size(); ++x) {
        for (std::size_t a = 0; a < m.size(); ++a) {
          for (std::size_t b = 0; b < m.size(); ++b) {
            ideal[x][tab[tab[a][x]][b]] = true;
          }
        }
      }
      std::sort(ideal.begin(), ideal.end());
      CHECK(std::adjacent_find(ideal.begin(), ideal.end()) == ideal.end());
    }
  }

  TEST_CASE("foldings") {
    auto const f = parse_ordered_set_partition("({1,3},{2,4})");
    CHECK(to_string(fold(1, f)) == "({2,3},{1,4})");
    CHECK(to_string(fold(2, parse_ordered_set_partition("({2},{1,3})"))) == "({3},{1,2})");
    auto const same = parse_ordered_set_partition("({1,2},{3,4})");
    CHECK(fold(1, same) == same);
    CHECK_THROWS(parse_ordered_set_partition("({1,2},{2,3})"));
  }

  TEST_CASE("folding words act on chambers like H_n") {
    for (std::size_t n = 2; n <= 4; ++n) {
      auto const perms = all_permutations(n);
      auto const m     = hecke_monoid(n);
      std::map<std::vector<OrderedSetPartition>, Permutation> seen;
      for (std::size_t x = 0; x < m.size(); ++x) {
        auto const word = m.table.word(static_cast<MonoidTable::index_type>(x));
        std::vector<OrderedSetPartition> images;
        for (auto const& c : perms) {
          auto f = OrderedSetPartition::chamber(c);
          for (auto it = word.rbegin(); it != word.rend(); ++it) {
            f = fold(*it + 1, f);
          }
          images.push_back(f);
        }
        auto [it, inserted] = seen.emplace(images, m.elements[x].permutation());
        CHECK(inserted);
        // The chamber of the identity goes to the chamber of w.
        CHECK(images.front().to_permutation() == m.elements[x].permutation());
      }
      CHECK(seen.size() == perms.size());
    }
  }
}
