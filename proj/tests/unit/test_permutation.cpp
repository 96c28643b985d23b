#include "doctest.h"

#include "catkit/hecke.hpp"
#include "catkit/permutation.hpp"
#include "oracles.hpp"

using namespace catkit;

TEST_SUITE("perm") {
  TEST_CASE("compose follows u(w(j))") {
    auto const s1 = Permutation::simple(3, 1);
    auto const s2 = Permutation::simple(3, 2);
    CHECK(compose(Permutation::identity(3), s2) == s2);
    CHECK(to_string(compose(s1, s2)) == "231");
    CHECK(to_string(compose(Permutation{3, 2, 1}, s1)) == "231");
  }

  TEST_CASE("reduced words") {
    CHECK(reduced_word(Permutation::identity(4)).size() == 0);
    auto const w0 = Permutation{4, 3, 2, 1};
    auto const rw = reduced_word(w0);
    CHECK(rw.size() == 6);
    CHECK(evaluate_word(4, rw.letters) == w0);
    CHECK(evaluate_word(4, {1, 2, 3, 1, 2, 1}) == w0);
    CHECK(reduced_word(Permutation{2, 3, 1}).letters == std::vector<int>{1, 2});
    for (auto const& w : all_permutations(5)) {
      auto const r = reduced_word(w);
      CHECK(r.size() == w.length());
      CHECK(evaluate_word(5, r.letters) == w);
    }
  }

  TEST_CASE("reduced word length is additive") {
    for (auto const& w : all_permutations(4)) {
      for (std::size_t i = 1; i < 4; ++i) {
        auto const ws = compose(w, Permutation::simple(4, i));
        if (ws.length() > w.length()) {
          CHECK(reduced_word(ws).size() == reduced_word(w).size() + 1);
        }
      }
    }
  }

  TEST_CASE("bruhat order") {
    CHECK(bruhat_leq(Permutation{2, 3, 1}, Permutation{3, 2, 1}));
    CHECK_FALSE(bruhat_leq(Permutation{2, 3, 1}, Permutation{3, 1, 2}));
    CHECK_FALSE(bruhat_leq(Permutation{3, 1, 2}, Permutation{2, 3, 1}));
    for (auto const& w : all_permutations(4)) {
      CHECK(bruhat_leq(Permutation::identity(4), w));
    }
  }

  TEST_CASE("bruhat order agrees with ideal inclusion") {
    for (std::size_t n = 1; n <= 5; ++n) {
      auto const perms = all_permutations(n);
      std::vector<PermutationSet> ideals;
      for (auto const& w : perms) {
        ideals.push_back(bruhat_ideal(w));
      }
      for (std::size_t a = 0; a < perms.size(); ++a) {
        for (std::size_t b = 0; b < perms.size(); ++b) {
          bool const incl = std::includes(ideals[b].begin(), ideals[b].end(),
                                          ideals[a].begin(), ideals[a].end());
          CHECK(bruhat_leq(perms[a], perms[b]) == incl);
        }
      }
    }
  }

  TEST_CASE("pattern containment") {
    CHECK(contains_pattern(Permutation{2, 1, 4, 3}, Permutation{2, 1, 4, 3}));
    CHECK_FALSE(contains_pattern(Permutation{3, 4, 1, 2}, Permutation{3, 2, 1}));
    CHECK_FALSE(contains_pattern(Permutation{4, 2, 3, 1}, Permutation{4, 3, 2, 1}));
    CHECK_FALSE(contains_pattern(Permutation{4, 3, 2, 1}, Permutation{4, 2, 3, 1}));
    CHECK(avoids(Permutation{2, 1}, Permutation{3, 2, 1}));
    for (std::size_t n = 1; n <= 6; ++n) {
      for (auto const& w : all_permutations(n)) {
        for (auto const& p : {Permutation{3, 2, 1}, Permutation{4, 3, 2, 1}}) {
          bool const c = contains_pattern(w, p);
          CHECK(c == oracle::contains(w.values(), p.values()));
          CHECK(c == contains_pattern(invert(w), invert(p)));
        }
      }
    }
  }

  TEST_CASE("alpha and beta") {
    CHECK(alpha(Permutation::identity(4)) == MonotoneMap::identity(4, MonotoneMap::Direction::nondecreasing));
    CHECK(beta(Permutation::identity(4)) == MonotoneMap::identity(4, MonotoneMap::Direction::nonincreasing));
    CHECK(to_string(alpha(Permutation{3, 4, 1, 2})) == "(3,4,4,4)");
    CHECK(to_string(beta(Permutation{3, 4, 1, 2})) == "(1,1,1,2)");
    CHECK(to_string(alpha(Permutation{2, 3, 1})) == "(2,3,3)");
    CHECK(to_string(beta(Permutation{2, 3, 1})) == "(1,1,1)");
    for (std::size_t n = 1; n <= 6; ++n) {
      for (auto const& w : all_permutations(n)) {
        auto const a = alpha(w);
        auto const b = beta(w);
        for (int i = 1; i <= static_cast<int>(n); ++i) {
          CHECK(a(i) >= i);
          CHECK(b(i) <= i);
        }
      }
    }
  }

  TEST_CASE("invert") {
    CHECK(invert(Permutation::identity(3)) == Permutation::identity(3));
    CHECK(to_string(invert(Permutation{2, 3, 1})) == "312");
    CHECK(invert(Permutation{3, 2, 1}) == Permutation{3, 2, 1});
  }

  TEST_CASE("serialization") {
    CHECK(to_string(Permutation{4, 2, 3, 1}) == "4231");
    CHECK(parse_permutation("4231") == Permutation{4, 2, 3, 1});
    std::vector<int> big{10, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK(to_string(Permutation(big)) == "10,1,2,3,4,5,6,7,8,9");
    CHECK(parse_permutation("10,1,2,3,4,5,6,7,8,9") == Permutation(big));
    CHECK_THROWS(parse_permutation("1223"));
    CHECK_THROWS(Permutation(std::vector<int>{1, 3}));
    CHECK(parse_monotone_map("(2,3,3)", MonotoneMap::Direction::nondecreasing)
          == parse_monotone_map("233", MonotoneMap::Direction::nondecreasing));
  }

  TEST_CASE("monotone map counts") {
    for (std::size_t n = 1; n <= 7; ++n) {
      CHECK(all_monotone_maps(n, MonotoneMap::Direction::nondecreasing).size()
            == oracle::monotone_maps(n));
      CHECK(all_monotone_maps(n, MonotoneMap::Direction::nonincreasing).size()
            == oracle::catalan(n));
    }
  }
}
