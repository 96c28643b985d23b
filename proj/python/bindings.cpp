#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "catkit/coxeter.hpp"
#include "catkit/dcm.hpp"
#include "catkit/dyck.hpp"
#include "catkit/hecke.hpp"
#include "catkit/io.hpp"
#include "catkit/repmin.hpp"
#include "catkit/verify.hpp"

namespace py = pybind11;
using namespace catkit;

namespace {
  std::vector<std::string> rows_of(BoolMatrix const& m) {
    return to_json(m)["rows"].get<std::vector<std::string>>();
  }

  std::vector<std::string> strings(std::vector<Permutation> const& ws) {
    std::vector<std::string> out;
    for (auto const& w : ws) {
      out.push_back(to_string(w));
    }
    return out;
  }
}  // namespace

PYBIND11_MODULE(_catkit, m) {
  m.doc() = "0-Hecke monoids, double Catalan monoids and Dyck paths";
  m.attr("__version__") = version;

  py::register_exception<CapExceeded>(m, "CapExceeded");
  py::register_exception<InternalError>(m, "InternalError");

  m.def("hecke_mul", [](std::string const& a, std::string const& b) {
    return to_string(hecke_mul(HeckeElement(parse_permutation(a)),
                               HeckeElement(parse_permutation(b)))
                         .permutation());
  });
  m.def("bruhat_ideal", [](std::string const& w) {
    auto const s = bruhat_ideal(parse_permutation(w));
    return strings({s.begin(), s.end()});
  });
  m.def("hecke_idempotents", [](std::size_t n) {
    std::vector<Permutation> ws;
    for (auto const& z : idempotents(n)) {
      ws.push_back(z.permutation());
    }
    return strings(ws);
  });
  m.def("fold", [](std::size_t i, std::string const& f) {
    return to_string(fold(i, parse_ordered_set_partition(f)));
  });

  m.def("psi", [](std::string const& w) { return rows_of(psi(parse_permutation(w)).matrix()); },
        "Psi(z_w) as row strings");
  m.def("dc_size", [](std::size_t n) { return dc_monoid(n).size(); });
  m.def("catalan_size", [](std::size_t n) {
    return catalan_monoid(n, MonotoneMap::Direction::nondecreasing).size();
  });
  m.def("self_dual_count", [](std::size_t n) { return self_dual_count(n); });
  m.def("count_avoiders", [](std::size_t n, std::string const& p) {
    return count_avoiders(n, parse_permutation(p));
  });
  m.def("fiber", [](std::vector<std::string> const& rows) {
    auto const members = fiber(BoolMatrix::from_rows(rows));
    py::dict   out;
    out["members"] = strings(members);
    if (!members.empty()) {
      auto const r             = fiber_analysis(members);
      out["tau"]               = to_string(r.tau);
      out["maximal"]           = strings(r.maximal);
      out["convex"]            = r.convex;
    }
    return out;
  });
  m.def("verify_presentation", [](std::size_t n, std::size_t word_cap) {
    PresentationOptions opts;
    opts.word_cap = word_cap;
    auto const r  = verify_presentation(n, opts);
    py::dict   out;
    out["presented_size"] = r.presented_size;
    out["dc_size"]        = r.dc_size;
    out["matches"]        = r.matches;
    out["stable"]         = r.stable;
    return out;
  }, py::arg("n"), py::arg("word_cap") = default_word_cap);

  m.def("kreweras_derivative",
        [](std::string const& p) { return kreweras_derivative(DyckPath(p)).steps(); });
  m.def("is_admissible", [](std::string const& a, std::string const& b) {
    return is_admissible(PathPair{DyckPath(a), DyckPath(b)});
  });
  m.def("prec", [](std::string const& a, std::string const& b) {
    return h_order_prec(delta_inverse(DyckPath(a)), delta_inverse(DyckPath(b)));
  });

  m.def("coxeter_size", [](std::string const& t) {
    return CoxeterSystem::build(parse_coxeter_type(t)).size();
  });
  m.def("min_dim_report", [](std::string const& t) {
    auto const sys = CoxeterSystem::build(parse_coxeter_type(t));
    auto const r   = min_dim_report(sys);
    py::dict   out;
    out["claimed"]         = r.claimed;
    out["constructed_dim"] = r.constructed_dim;
    out["effective"]       = r.effective;
    out["socle_verified"]  = r.socle_verified;
    return out;
  });
  m.def("dc_min_dim", [](std::size_t n) {
    auto const r = dc_min_dim_check(n);
    py::dict   out;
    out["dim"]         = r.dim;
    out["monoid_size"] = r.monoid_size;
    out["effective"]   = r.effective;
    return out;
  });

  m.def("verify_all", [](std::size_t n_max, std::uint64_t seed, std::size_t samples) {
    VerifyOptions opts;
    opts.n_max   = n_max;
    opts.seed    = seed;
    opts.samples = samples;
    py::list out;
    for (auto const& r : run_verify_all(opts)) {
      py::dict d;
      d["key"]     = r.key;
      d["passed"]  = r.passed;
      d["summary"] = r.summary;
      out.append(d);
    }
    return out;
  }, py::arg("n_max") = 6, py::arg("seed") = 1, py::arg("samples") = 10'000);
}
