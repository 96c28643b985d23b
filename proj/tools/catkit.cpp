#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catkit/boolmat.hpp"
#include "catkit/coxeter.hpp"
#include "catkit/dcm.hpp"
#include "catkit/dyck.hpp"
#include "catkit/error.hpp"
#include "catkit/hecke.hpp"
#include "catkit/io.hpp"
#include "catkit/repmin.hpp"
#include "catkit/verify.hpp"

using namespace catkit;

namespace {

  // Exit codes.
  constexpr int exit_ok       = 0;
  constexpr int exit_failed   = 1;  // a requested check failed
  constexpr int exit_usage    = 2;  // bad input
  constexpr int exit_cap      = 3;  // element or word cap exceeded
  constexpr int exit_internal = 4;  // an internal assertion fired

  struct Globals {
    bool          json = false;
    bool          dot  = false;
    std::size_t   cap  = 0;  // 0: CATKIT_CAP or the built-in default
    unsigned      jobs = 1;
    std::uint64_t seed = 1;

    std::size_t element_cap() const {
      return cap != 0 ? cap : element_cap_from_env();
    }
  };

  Globals g;

  void emit(std::string const& command, Json const& config, Json const& result) {
    if (g.json) {
      std::cout << make_report(command, config, g.seed, result).dump(2) << '\n';
      return;
    }
    for (auto const& [key, value] : result.items()) {
      std::cout << key << ": "
                << (value.is_string() ? value.get<std::string>() : value.dump())
                << '\n';
    }
  }

  void counterexample(Json const& ce) {
    std::cerr << ce.dump() << '\n';
  }

  Json perm_array(std::vector<Permutation> const& ws) {
    Json out = Json::array();
    for (auto const& w : ws) {
      out.push_back(to_string(w));
    }
    return out;
  }

  Json perm_array(PermutationSet const& ws) {
    return perm_array(std::vector<Permutation>(ws.begin(), ws.end()));
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw std::invalid_argument("cannot read " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::vector<std::vector<long>> read_int_rows(std::string const& path) {
    std::vector<std::vector<long>> rows;
    std::istringstream             in(read_file(path));
    std::string                    line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::vector<long>  row;
      long               x = 0;
      while (ls >> x) {
        row.push_back(x);
      }
      if (!row.empty()) {
        rows.push_back(std::move(row));
      }
    }
    return rows;
  }

  // Generators as 1-based one-line images, one per line; the Coxeter matrix
  // as whitespace separated rows.
  CoxeterSystem system_from_files(std::string const& gens, std::string const& matrix) {
    std::vector<CoxeterSystem::carrier_perm> generators;
    for (auto const& row : read_int_rows(gens)) {
      CoxeterSystem::carrier_perm p;
      for (long x : row) {
        if (x < 1) {
          throw std::invalid_argument("generator images are 1-based");
        }
        p.push_back(static_cast<std::uint32_t>(x - 1));
      }
      generators.push_back(std::move(p));
    }
    CoxeterSystem::coxeter_matrix_type m;
    for (auto const& row : read_int_rows(matrix)) {
      m.emplace_back(row.begin(), row.end());
    }
    return CoxeterSystem::from_generators(std::move(generators), std::move(m),
                                          g.element_cap(), gens);
  }

  std::vector<std::string> generator_names(std::size_t count, std::string const& prefix) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < count; ++k) {
      out.push_back(prefix + std::to_string(k + 1));
    }
    return out;
  }

  Json coxeter_summary(CoxeterSystem const& sys) {
    Json gens = Json::array();
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      gens.push_back(sys.label(sys.generator(s)));
    }
    return {{"name", sys.name()},
            {"rank", sys.rank()},
            {"size", sys.size()},
            {"carrier_size", sys.carrier_size()},
            {"coxeter_matrix", sys.coxeter_matrix()},
            {"generators", gens},
            {"longest", sys.label(sys.longest())},
            {"longest_length", sys.length(sys.longest())},
            {"vertex_count", vertex_count(sys)}};
  }

  Json socle_json(SocleReport const& soc, std::size_t rank) {
    Json comps = Json::array();
    for (auto const& c : soc.components) {
      Json basis = Json::array();
      for (auto const& v : c.basis) {
        basis.push_back(to_json(v));
      }
      comps.push_back({{"type", generator_subset_to_string(c.type, rank)},
                       {"basis", basis}});
    }
    return {{"dimension", soc.dimension}, {"components", comps}};
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke, double Catalan and Dyck path toolkit"};
  app.set_version_flag("--version", std::string(version));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "Emit a JSON report");
  app.add_flag("--dot", g.dot, "Emit Graphviz DOT where supported");
  app.add_option("--cap", g.cap, "Element cap (overrides CATKIT_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized suites");

  // hecke
  auto* hecke = app.add_subcommand("hecke", "0-Hecke monoid H_n");
  std::size_t              hecke_n = 0;
  std::vector<std::string> hecke_mul_args;
  std::string              hecke_ideal;
  bool                     hecke_idem = false;
  std::vector<std::string> hecke_fold;
  hecke->add_option("--n", hecke_n, "Degree");
  hecke->add_option("--mul", hecke_mul_args, "Product z_A z_B")->expected(2);
  hecke->add_option("--ideal", hecke_ideal, "Bruhat ideal [e, W]");
  hecke->add_flag("--idempotents", hecke_idem, "Idempotents of H_n");
  hecke->add_option("--fold", hecke_fold, "Folding phi_i applied to F")->expected(2);

  // dcm
  auto* dcm = app.add_subcommand("dcm", "Double Catalan monoid DC_n");
  dcm->require_subcommand(1);
  std::size_t dcm_n = 0;
  dcm->add_option("--n", dcm_n, "Degree");
  std::string dcm_w, dcm_matrix;
  std::size_t word_cap = default_word_cap;
  auto*       dcm_psi  = dcm->add_subcommand("psi", "Psi(z_W)");
  dcm_psi->add_option("W", dcm_w)->required();
  auto* dcm_fiber = dcm->add_subcommand("fiber", "Fiber of Psi over a matrix");
  dcm_fiber->add_option("MATRIX", dcm_matrix)->required();
  auto* dcm_count    = dcm->add_subcommand("count", "|DC_n| and 4321-avoiders");
  auto* dcm_selfdual = dcm->add_subcommand("self-dual", "Self-dual elements");
  auto* dcm_present  = dcm->add_subcommand("verify-presentation",
                                           "Check the presentation of DC_n");
  dcm_present->add_option("--word-cap", word_cap)->check(CLI::PositiveNumber);
  for (auto* sub : {dcm_psi, dcm_fiber, dcm_count, dcm_selfdual, dcm_present}) {
    sub->add_option("--n", dcm_n, "Degree");
  }

  // dyck
  auto* dyck = app.add_subcommand("dyck", "Dyck paths");
  dyck->require_subcommand(1);
  std::string path_a, path_b;
  auto*       dyck_der = dyck->add_subcommand("derivative", "Kreweras derivative");
  dyck_der->add_option("PATH", path_a)->required();
  auto* dyck_adm = dyck->add_subcommand("admissible", "Is (P1, P2) admissible");
  dyck_adm->add_option("P1", path_a)->required();
  dyck_adm->add_option("P2", path_b)->required();
  auto* dyck_prec = dyck->add_subcommand("prec", "A before B in the H-order");
  dyck_prec->add_option("A", path_a)->required();
  dyck_prec->add_option("B", path_b)->required();

  // coxeter
  auto* cox = app.add_subcommand("coxeter", "Finite Coxeter systems");
  std::string cox_type, cox_gens, cox_matrix, cox_J, cox_kind = "double";
  cox->add_option("--type", cox_type, "A4, B3, I2:6, ...");
  cox->add_option("--gens", cox_gens, "File of generator images");
  cox->add_option("--matrix", cox_matrix, "File with the Coxeter matrix");
  auto* cox_quot = cox->add_subcommand("quotient", "DC(W)_J or C(W)_J");
  cox_quot->add_option("--J", cox_J, "Generators in J, 1-based")->required();
  cox_quot->add_option("--kind", cox_kind, "double or catalan")
      ->check(CLI::IsMember({"double", "catalan"}));
  cox_quot->add_option("--type", cox_type);

  // repmin
  auto* repmin = app.add_subcommand("repmin", "Minimal effective modules");
  std::string rep_type;
  std::size_t rep_n   = 0;
  std::uint64_t rep_p = 0;
  repmin->add_option("--type", rep_type, "Coxeter type");
  repmin->add_option("--n", rep_n, "DC_n module of dimension 2n-2");
  repmin->add_option("--mod-p", rep_p, "Also compute socle dimensions over Z/p");

  // verify-all
  auto* verify = app.add_subcommand("verify-all", "Run every invariant suite");
  VerifyOptions vopts;
  verify->add_option("--n", vopts.n_max, "Largest degree")->check(CLI::PositiveNumber);
  verify->add_option("--samples", vopts.samples, "Random samples per degree");
  verify->add_option("--word-cap", vopts.word_cap)->check(CLI::PositiveNumber);

  // export
  auto* exp = app.add_subcommand("export", "Cayley graph of a monoid");
  std::string exp_monoid = "dc";
  std::size_t exp_n      = 3;
  std::string exp_type;
  exp->add_option("--monoid", exp_monoid, "hecke, dc, catalan+, catalan-")
      ->check(CLI::IsMember({"hecke", "dc", "catalan+", "catalan-"}));
  exp->add_option("--n", exp_n, "Degree");
  exp->add_option("--type", exp_type, "Coxeter type (H(W) instead of H_n)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  }

  try {
    ClosureOptions copts;
    copts.cap = g.element_cap();

    if (*hecke) {
      Json config = {{"n", hecke_n}};
      Json result;
      if (hecke_mul_args.size() == 2) {
        auto const a = HeckeElement(parse_permutation(hecke_mul_args[0]));
        auto const b = HeckeElement(parse_permutation(hecke_mul_args[1]));
        config["mul"] = hecke_mul_args;
        result["product"] = to_string(hecke_mul(a, b).permutation());
      }
      if (!hecke_ideal.empty()) {
        config["ideal"] = hecke_ideal;
        result["ideal"] = perm_array(bruhat_ideal(parse_permutation(hecke_ideal)));
      }
      if (hecke_idem) {
        if (hecke_n == 0) {
          throw std::invalid_argument("--idempotents needs --n");
        }
        std::vector<Permutation> ws;
        for (auto const& z : idempotents(hecke_n)) {
          ws.push_back(z.permutation());
        }
        result["idempotents"] = perm_array(ws);
      }
      if (hecke_fold.size() == 2) {
        config["fold"] = hecke_fold;
        auto const i   = static_cast<std::size_t>(std::stoul(hecke_fold[0]));
        result["fold"] = to_string(fold(i, parse_ordered_set_partition(hecke_fold[1])));
      }
      if (result.is_null() && hecke_n != 0) {
        auto const m = hecke_monoid(hecke_n, copts);
        result["size"] = m.size();
      }
      if (result.is_null()) {
        throw std::invalid_argument("hecke: nothing requested");
      }
      emit("hecke", config, result);
      return exit_ok;
    }

    if (*dcm) {
      DcOptions dopts;
      dopts.closure = copts;
      if (*dcm_psi) {
        auto const w = parse_permutation(dcm_w);
        auto const x = psi(w);
        emit("dcm psi", {{"w", dcm_w}},
             {{"matrix", to_json(x.matrix())},
              {"max", to_string(max_map(x))},
              {"min", to_string(min_map(x))}});
        return exit_ok;
      }
      if (*dcm_fiber) {
        auto const x       = parse_bool_matrix(dcm_matrix);
        auto       members = fiber(x);
        if (members.empty()) {
          throw std::invalid_argument("matrix is not in DC_n");
        }
        auto const r = fiber_analysis(members);
        emit("dcm fiber", {{"matrix", to_json(x)}},
             {{"members", perm_array(r.members)},
              {"tau", to_string(r.tau)},
              {"maximal", perm_array(r.maximal)},
              {"tau_is_minimum", r.tau_is_minimum},
              {"maximal_are_4231_avoiders", r.maximal_are_4231_avoiders},
              {"convex", r.convex}});
        return exit_ok;
      }
      if (dcm_n == 0) {
        throw std::invalid_argument("dcm: --n is required");
      }
      if (*dcm_count) {
        auto const size = dc_monoid(dcm_n, dopts).size();
        auto const avd  = count_avoiders(dcm_n, Permutation{4, 3, 2, 1});
        emit("dcm count", {{"n", dcm_n}, {"cap", copts.cap}},
             {{"dc_size", size}, {"avoiders_4321", avd},
              {"catalan", catalan_number(dcm_n)}});
        if (size != avd) {
          counterexample({{"n", dcm_n}, {"dc_size", size}, {"avoiders_4321", avd}});
          return exit_failed;
        }
        return exit_ok;
      }
      if (*dcm_selfdual) {
        auto const sd   = self_dual_count(dcm_n, dopts);
        auto const invs = count_avoiding_involutions(dcm_n, Permutation{4, 3, 2, 1});
        auto const motz = motzkin_number(dcm_n);
        emit("dcm self-dual", {{"n", dcm_n}, {"cap", copts.cap}},
             {{"self_dual", sd}, {"involutions_4321", invs}, {"motzkin", motz}});
        if (sd != invs || sd != motz) {
          counterexample({{"n", dcm_n}, {"self_dual", sd},
                          {"involutions_4321", invs}, {"motzkin", motz}});
          return exit_failed;
        }
        return exit_ok;
      }
      if (*dcm_present) {
        PresentationOptions popts;
        popts.word_cap   = word_cap;
        popts.max_degree = std::max<std::size_t>(dcm_n, popts.max_degree);
        auto const r     = verify_presentation(dcm_n, popts);
        Json const body  = {{"n", r.n},
                            {"length_bound", r.length_bound},
                            {"word_count", r.word_count},
                            {"presented_size", r.presented_size},
                            {"dc_size", r.dc_size},
                            {"consistent", r.consistent},
                            {"injective", r.injective},
                            {"matches", r.matches},
                            {"stable", r.stable}};
        emit("dcm verify-presentation", {{"n", dcm_n}, {"word_cap", word_cap}}, body);
        if (!r.matches || !r.stable) {
          counterexample(body);
          return exit_failed;
        }
        return exit_ok;
      }
    }

    if (*dyck) {
      if (*dyck_der) {
        DyckPath const p(path_a);
        auto const     q = kreweras_derivative(p);
        bool const     inv = kreweras_derivative(q) == p;
        emit("dyck derivative", {{"path", path_a}},
             {{"derivative", q.steps()}, {"involution", inv}});
        if (!inv) {
          counterexample({{"path", path_a}, {"derivative", q.steps()}});
          return exit_failed;
        }
        return exit_ok;
      }
      if (*dyck_adm) {
        PathPair const pair{DyckPath(path_a), DyckPath(path_b)};
        if (pair.first.semilength() != pair.second.semilength()) {
          throw std::invalid_argument("paths have different semilengths");
        }
        bool const fast  = is_admissible(pair);
        bool const brute = is_admissible_brute(pair);
        emit("dyck admissible", {{"first", path_a}, {"second", path_b}},
             {{"admissible", fast}, {"brute_force", brute}});
        if (fast != brute) {
          counterexample({{"first", path_a}, {"second", path_b},
                          {"criterion", fast}, {"brute_force", brute}});
          return exit_failed;
        }
        return exit_ok;
      }
      if (*dyck_prec) {
        auto const a = delta_inverse(DyckPath(path_a));
        auto const b = delta_inverse(DyckPath(path_b));
        if (a.degree() != b.degree()) {
          throw std::invalid_argument("paths have different semilengths");
        }
        bool const alg   = h_order_prec(a, b);
        bool const cover = prec_prime(a, b);
        emit("dyck prec", {{"a", path_a}, {"b", path_b}},
             {{"alpha", to_string(a)}, {"beta", to_string(b)},
              {"prec", alg}, {"cover_closure", cover}});
        if (alg != cover) {
          counterexample({{"a", path_a}, {"b", path_b},
                          {"prec", alg}, {"cover_closure", cover}});
          return exit_failed;
        }
        return exit_ok;
      }
    }

    if (*cox) {
      std::optional<CoxeterSystem> sys;
      if (!cox_type.empty()) {
        sys.emplace(CoxeterSystem::build(parse_coxeter_type(cox_type), g.element_cap()));
      } else if (!cox_gens.empty() && !cox_matrix.empty()) {
        sys.emplace(system_from_files(cox_gens, cox_matrix));
      } else {
        throw std::invalid_argument("coxeter: give --type or --gens with --matrix");
      }
      Json config = {{"type", cox_type}, {"gens", cox_gens}, {"matrix", cox_matrix}};
      if (*cox_quot) {
        GeneratorMask const J = parse_generator_subset(cox_J, sys->rank());
        config["J"]           = generator_subset_to_string(J, sys->rank());
        config["kind"]        = cox_kind;
        auto const names      = generator_names(sys->rank(), "e");
        MonoidTable const* table = nullptr;
        std::optional<Closure<Transformation>> cat;
        std::optional<DoubleCatalanQuotient>   dbl;
        if (cox_kind == "catalan") {
          cat.emplace(generalized_catalan_quotient(*sys, J, copts));
          table = &cat->table;
        } else {
          dbl.emplace(generalized_double_catalan(*sys, J, copts));
          table = &dbl->monoid.table;
        }
        if (g.dot) {
          std::cout << to_dot(*table, names, "quotient");
          return exit_ok;
        }
        emit("coxeter quotient", config, to_json(*table, names));
        return exit_ok;
      }
      Json result = coxeter_summary(*sys);
      auto const u = maximal_ideal_union_action(*sys);
      result["ideal_union_carrier"]   = u.carrier_size;
      result["ideal_union_effective"] = u.effective;
      emit("coxeter", config, result);
      return exit_ok;
    }

    if (*repmin) {
      Json config = {{"type", rep_type}, {"n", rep_n}, {"mod_p", rep_p}};
      Json result;
      bool ok = true;
      if (!rep_type.empty()) {
        auto const sys = CoxeterSystem::build(parse_coxeter_type(rep_type), g.element_cap());
        Json       mods = Json::array();
        for (std::size_t s = 0; s < sys.rank(); ++s) {
          auto const prime = split_P(build_P(sys, s)).first;
          auto const soc   = socle(prime);
          auto const c     = check_simple_socle(sys, s);
          Json       entry = {{"s", sys.generator_name(s)},
                              {"dimension", prime.dimension()},
                              {"socle", socle_json(soc, sys.rank())},
                              {"simple", c.simple},
                              {"vector_ok", c.vector_ok},
                              {"type_ok", c.type_ok},
                              {"expected_type",
                               generator_subset_to_string(c.expected_type, sys.rank())}};
          if (rep_p != 0) {
            entry["socle_dimension_mod_p"] = socle_dimension_mod_p(prime, rep_p);
          }
          ok = ok && c.simple && c.vector_ok && c.type_ok;
          mods.push_back(entry);
        }
        auto const r = min_dim_report(sys);
        ok = ok && r.claimed == r.constructed_dim && r.effective && r.socle_verified;
        result["type"]    = rep_type;
        result["modules"] = mods;
        result["claimed_dimension"]     = r.claimed;
        result["constructed_dimension"] = r.constructed_dim;
        result["effective"]             = r.effective;
      }
      if (rep_n != 0) {
        auto const r = dc_min_dim_check(rep_n);
        ok = ok && r.dim == 2 * rep_n - 2 && r.well_defined && r.effective;
        result["dc"] = {{"n", rep_n},
                        {"dimension", r.dim},
                        {"monoid_size", r.monoid_size},
                        {"well_defined", r.well_defined},
                        {"effective", r.effective}};
      }
      if (result.is_null()) {
        throw std::invalid_argument("repmin: give --type or --n");
      }
      emit("repmin", config, result);
      if (!ok) {
        counterexample(result);
        return exit_failed;
      }
      return exit_ok;
    }

    if (*verify) {
      vopts.seed = g.seed;
      vopts.jobs = g.jobs;
      auto const results = run_verify_all(vopts);
      Json       body    = Json::array();
      bool       ok      = true;
      for (auto const& r : results) {
        body.push_back(to_json(r));
        ok = ok && r.passed;
        if (!r.passed) {
          counterexample({{"key", r.key}, {"counterexample", Json::parse(r.counterexample)}});
        }
      }
      Json const config = {{"n_max", vopts.n_max}, {"samples", vopts.samples},
                           {"word_cap", vopts.word_cap}};
      if (g.json) {
        std::cout << make_report("verify-all", config, g.seed, body).dump(2) << '\n';
      } else {
        for (auto const& r : results) {
          std::cout << (r.passed ? "PASS " : "FAIL ") << r.key << ": " << r.summary
                    << '\n';
        }
      }
      return ok ? exit_ok : exit_failed;
    }

    if (*exp) {
      MonoidTable              table;
      std::vector<std::string> names;
      std::string              label;
      if (!exp_type.empty()) {
        auto const sys = CoxeterSystem::build(parse_coxeter_type(exp_type), g.element_cap());
        table = hecke_monoid(sys, copts).table;
        names = generator_names(sys.rank(), "e");
        label = "hecke_" + exp_type;
      } else if (exp_monoid == "hecke") {
        table = hecke_monoid(exp_n, copts).table;
        names = generator_names(exp_n - 1, "e");
        label = "hecke";
      } else if (exp_monoid == "dc") {
        DcOptions dopts;
        dopts.closure = copts;
        table = dc_monoid(exp_n, dopts).table;
        names = generator_names(exp_n - 1, "eps");
        label = "dc";
      } else {
        auto const dir = exp_monoid == "catalan+" ? MonotoneMap::Direction::nondecreasing
                                                  : MonotoneMap::Direction::nonincreasing;
        table = catalan_monoid(exp_n, dir, copts).table;
        names = generator_names(exp_n - 1, "f");
        label = "catalan";
      }
      Json const config = {{"monoid", exp_monoid}, {"n", exp_n}, {"type", exp_type}};
      if (g.json) {
        std::cout << make_report("export", config, g.seed, to_json(table, names)).dump(2)
                  << '\n';
      } else {
        std::cout << to_dot(table, names, label);
      }
      return exit_ok;
    }
  } catch (CapExceeded const& e) {
    counterexample({{"error", "cap_exceeded"}, {"message", e.what()}});
    return exit_cap;
  } catch (InternalError const& e) {
    counterexample({{"error", "internal"}, {"message", e.what()}});
    return exit_internal;
  } catch (std::invalid_argument const& e) {
    counterexample({{"error", "invalid_argument"}, {"message", e.what()}});
    return exit_usage;
  } catch (std::out_of_range const& e) {
    counterexample({{"error", "out_of_range"}, {"message", e.what()}});
    return exit_usage;
  }
  return exit_usage;
}
