#include "doctest.h"

#include "catkit/dcm.hpp"
#include "catkit/hecke.hpp"
#include "catkit/monoid.hpp"

using namespace catkit;

TEST_SUITE("monoid") {
  TEST_CASE("closure sizes") {
    CHECK(dc_monoid(4).size() == 23);
    CHECK(catalan_monoid(4, MonotoneMap::Direction::nondecreasing).size() == 14);
    auto const trivial = generate_monoid(
        Transformation::identity(3), {Transformation::identity(3)},
        [](Transformation const& a, Transformation const& b) { return a * b; },
        [](Transformation const& a) { return to_string(a); });
    CHECK(trivial.size() == 1);
  }

  TEST_CASE("breadth-first numbering and words") {
    auto const m = dc_monoid(4);
    auto const& t = m.table;
    CHECK(t.word(MonoidTable::identity()).empty());
    for (std::size_t x = 1; x < t.size(); ++x) {
      auto const idx = static_cast<MonoidTable::index_type>(x);
      CHECK(t.word_length(idx) >= t.word_length(idx - 1));
      auto const w = t.word(idx);
      CHECK(w.size() == t.word_length(idx));
      ConvexRelation v = ConvexRelation::identity(4);
      for (auto g : w) {
        v = v * epsilon(g + 1, 4);
      }
      CHECK(v == m.elements[x]);
    }
  }

  TEST_CASE("product table matches element products") {
    auto const m   = dc_monoid(4);
    auto const tab = m.table.product_table();
    for (std::size_t x = 0; x < m.size(); ++x) {
      for (std::size_t y = 0; y < m.size(); ++y) {
        CHECK(m.elements[tab[x][y]] == m.elements[x] * m.elements[y]);
      }
    }
  }

  TEST_CASE("left edges") {
    ClosureOptions opts;
    opts.left_edges = true;
    auto const m = hecke_monoid(4, opts);
    REQUIRE(m.table.has_left());
    for (std::size_t x = 0; x < m.size(); ++x) {
      for (std::size_t g = 0; g < 3; ++g) {
        auto const y = m.table.left(static_cast<MonoidTable::index_type>(x), g);
        CHECK(m.elements[y]
              == hecke_generator_mul(g + 1, m.elements[x], Side::left));
      }
    }
  }

  TEST_CASE("cap") {
    ClosureOptions opts;
    opts.cap = 10;
    CHECK_THROWS_AS(hecke_monoid(4, opts), CapExceeded);
  }

  TEST_CASE("dot export") {
    auto const m   = dc_monoid(3);
    auto const dot = to_dot(m.table, {"eps1", "eps2"}, "dc3");
    std::size_t nodes = 0;
    for (std::size_t pos = 0; (pos = dot.find("[label=\"", pos)) != std::string::npos; ++pos) {
      ++nodes;
    }
    CHECK(nodes == 6 + 6 * 2);
    CHECK(dot.find("label=\"eps2\"") != std::string::npos);
    auto const h = hecke_monoid(3);
    CHECK(h.size() == 6);
    auto const one = dc_monoid(1);
    CHECK(to_dot(one.table, {}, "one").find("n0 [label=\"0\"]") != std::string::npos);
  }
}
