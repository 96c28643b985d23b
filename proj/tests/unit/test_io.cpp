#include "doctest.h"

#include "catkit/dcm.hpp"
#include "catkit/io.hpp"
#include "catkit/verify.hpp"

using namespace catkit;

TEST_SUITE("io") {
  TEST_CASE("matrix JSON round trip") {
    auto const x = epsilon(2, 4).matrix();
    auto const j = to_json(x);
    CHECK(j.dump() == R"({"n":4,"rows":["1000","0110","0110","0001"]})");
    CHECK(bool_matrix_from_json(j) == x);
    CHECK_THROWS(bool_matrix_from_json(Json::parse(R"({"n":2,"rows":["10"]})")));
  }

  TEST_CASE("monoid table JSON") {
    auto const m = dc_monoid(3);
    auto const j = to_json(m.table, {"eps1", "eps2"});
    CHECK(j["size"] == 6);
    CHECK(j["elements"].size() == 6);
    CHECK(j["product"].size() == 6);
    CHECK(j["elements"][0]["word"] == "");
  }

  TEST_CASE("reports are deterministic") {
    auto const a = make_report("x", {{"n", 3}}, 5, {{"ok", true}}).dump();
    auto const b = make_report("x", {{"n", 3}}, 5, {{"ok", true}}).dump();
    CHECK(a == b);
    auto const j = Json::parse(a);
    CHECK(j["seed"] == 5);
    CHECK(j["version"] == version);
  }

  TEST_CASE("rational vectors as fraction strings") {
    RationalVector v{Rational(1), Rational(-1, 2)};
    CHECK(to_json(v).dump() == R"(["1","-1/2"])");
  }
}

TEST_SUITE("verify") {
  TEST_CASE("small runs pass") {
    VerifyOptions opts;
    opts.n_max   = 3;
    opts.samples = 100;
    for (auto const& r : run_verify_all(opts)) {
      INFO(r.key << ": " << r.summary << " " << r.counterexample);
      CHECK(r.passed);
    }
  }

  TEST_CASE("degenerate n") {
    VerifyOptions opts;
    opts.n_max   = 1;
    opts.samples = 10;
    for (auto const& r : run_verify_all(opts)) {
      INFO(r.key << ": " << r.summary << " " << r.counterexample);
      CHECK(r.passed);
    }
  }

  TEST_CASE("threads do not change results") {
    VerifyOptions opts;
    opts.n_max   = 4;
    opts.samples = 200;
    auto const one = run_verify_all(opts);
    opts.jobs      = 3;
    auto const three = run_verify_all(opts);
    REQUIRE(one.size() == three.size());
    for (std::size_t k = 0; k < one.size(); ++k) {
      CHECK(one[k].key == three[k].key);
      CHECK(one[k].summary == three[k].summary);
      CHECK(one[k].passed == three[k].passed);
    }
  }

  TEST_CASE("the strict Kreweras check reports its counterexample") {
    auto const r = check_kreweras_derivative(3, true);
    CHECK_FALSE(r.passed);
    CHECK(Json::parse(r.counterexample)["image"] == "UUDUDD");
    CHECK(check_kreweras_derivative(2, true).passed);
  }
}
