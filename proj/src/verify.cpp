#include "catkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>

#include "catkit/boolmat.hpp"
#include "catkit/dcm.hpp"
#include "catkit/dyck.hpp"
#include "catkit/hecke.hpp"
#include "catkit/repmin.hpp"
#include "json.hpp"

namespace catkit {

  namespace {
    using json = nlohmann::json;
    using Dir  = MonotoneMap::Direction;

    CheckResult pass(std::string key, std::string summary) {
      return {std::move(key), true, std::move(summary), ""};
    }

    CheckResult fail(std::string key, std::string summary, json const& ce) {
      return {std::move(key), false, std::move(summary), ce.dump()};
    }

    std::string join_sizes(std::vector<std::size_t> const& xs) {
      std::string out;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        out += (k == 0 ? "" : ",") + std::to_string(xs[k]);
      }
      return out;
    }
  }  // namespace

  CheckResult check_catalan_count(std::size_t n_max) {
    std::string const        key = "catalan_count";
    std::vector<std::size_t> sizes;
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::size_t const plus  = catalan_monoid(n, Dir::nondecreasing).size();
      std::size_t const minus = catalan_monoid(n, Dir::nonincreasing).size();
      std::size_t const all   = all_monotone_maps(n, Dir::nondecreasing).size();
      if (plus != catalan_number(n) || minus != catalan_number(n) || all != plus) {
        return fail(key, "Catalan monoid size mismatch",
                    {{"n", n}, {"plus", plus}, {"minus", minus},
                     {"expected", catalan_number(n)}});
      }
      sizes.push_back(plus);
    }
    return pass(key, "|C_n^+| = " + join_sizes(sizes));
  }

  CheckResult check_dc_count(std::size_t n_max) {
    std::string const        key = "dc_count";
    std::vector<std::size_t> sizes;
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::size_t const size     = dc_monoid(n).size();
      std::size_t const avoiders = count_avoiders(n, Permutation{4, 3, 2, 1});
      if (size != avoiders) {
        return fail(key, "|DC_n| differs from the 4321-avoider count",
                    {{"n", n}, {"dc_size", size}, {"avoiders", avoiders}});
      }
      sizes.push_back(size);
    }
    return pass(key, "|DC_n| = " + join_sizes(sizes));
  }

  CheckResult check_self_dual_count(std::size_t n_max) {
    std::string const        key = "self_dual_count";
    std::vector<std::size_t> sizes;
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::size_t const sd   = self_dual_count(n);
      std::size_t const invs = count_avoiding_involutions(n, Permutation{4, 3, 2, 1});
      auto const        motz = motzkin_number(n);
      if (sd != invs || sd != motz) {
        return fail(key, "self-dual count mismatch",
                    {{"n", n}, {"self_dual", sd}, {"involutions", invs},
                     {"motzkin", motz}});
      }
      sizes.push_back(sd);
    }
    return pass(key, "self-dual = " + join_sizes(sizes));
  }

  CheckResult check_idempotents(std::size_t n_max) {
    std::string const key = "idempotents";
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::size_t const expected = std::size_t{1} << (n - 1);
      auto const        hecke    = idempotents(n);
      if (hecke.size() != expected) {
        return fail(key, "H_n idempotent count",
                    {{"n", n}, {"count", hecke.size()}, {"expected", expected}});
      }
      for (auto const& z : hecke) {
        std::vector<int> letters;
        for (int i : reduced_word(z.permutation()).letters) {
          letters.push_back(i);
        }
        if (parabolic_longest(n, letters) != z.permutation()) {
          return fail(key, "idempotent is not a parabolic longest element",
                      {{"n", n}, {"w", to_string(z.permutation())}});
        }
      }
      auto const dc = dc_idempotents(n);
      std::set<BoolMatrix> found;
      for (auto const& x : dc) {
        if (!is_block_ones(x.matrix())) {
          return fail(key, "DC_n idempotent is not block diagonal all-ones",
                      {{"n", n}, {"matrix", to_string(x.matrix())}});
        }
        found.insert(x.matrix());
      }
      // Compositions of n give the all-ones block matrices.
      std::set<BoolMatrix> blocks;
      for (std::size_t mask = 0; mask < expected; ++mask) {
        BoolMatrix  m(n);
        std::size_t start = 0;
        for (std::size_t i = 0; i < n; ++i) {
          bool const cut = i + 1 == n || (mask >> i & 1U) != 0;
          if (cut) {
            for (std::size_t a = start; a <= i; ++a) {
              for (std::size_t b = start; b <= i; ++b) {
                m.set(a, b);
              }
            }
            start = i + 1;
          }
        }
        blocks.insert(m);
      }
      if (found != blocks) {
        return fail(key, "DC_n idempotents differ from the block matrices",
                    {{"n", n}, {"found", found.size()}, {"blocks", blocks.size()}});
      }
    }
    return pass(key, "2^{n-1} idempotents in H_n and DC_n for n <= "
                         + std::to_string(n_max));
  }

  CheckResult check_subset_realization(std::size_t n_max) {
    std::string const key = "subset_realization";
    for (std::size_t n = 1; n <= n_max; ++n) {
      auto const        perms = all_permutations(n);
      std::size_t const m     = perms.size();
      std::unordered_map<Permutation, std::uint32_t> index;
      for (std::size_t i = 0; i < m; ++i) {
        index.emplace(perms[i], static_cast<std::uint32_t>(i));
      }
      std::vector<std::uint32_t> mult(m * m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          mult[i * m + j] = index.at(compose(perms[i], perms[j]));
        }
      }
      std::vector<std::vector<std::uint32_t>> members(m);
      std::vector<std::vector<bool>>          bits(m, std::vector<bool>(m, false));
      for (std::size_t w = 0; w < m; ++w) {
        for (std::size_t u = 0; u < m; ++u) {
          if (bruhat_leq(perms[u], perms[w])) {
            members[w].push_back(static_cast<std::uint32_t>(u));
            bits[w][u] = true;
          }
        }
      }
      if (std::set<std::vector<bool>>(bits.begin(), bits.end()).size() != m) {
        return fail(key, "two permutations share a Bruhat ideal", {{"n", n}});
      }
      std::vector<bool> product(m);
      for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t w = 0; w < m; ++w) {
          std::fill(product.begin(), product.end(), false);
          for (auto x : members[u]) {
            for (auto y : members[w]) {
              product[mult[x * m + y]] = true;
            }
          }
          auto const h = index.at(
              hecke_mul(HeckeElement(perms[u]), HeckeElement(perms[w])).permutation());
          if (product != bits[h]) {
            return fail(key, "ideal product differs from the ideal of the Hecke product",
                        {{"u", to_string(perms[u])}, {"w", to_string(perms[w])},
                         {"hecke_product", to_string(perms[h])}});
          }
        }
      }
    }
    return pass(key, "injective homomorphism for n <= " + std::to_string(n_max));
  }

  CheckResult check_theta_isomorphism(std::size_t   n_exhaustive,
                                      std::size_t   n_random,
                                      std::size_t   samples,
                                      std::uint64_t seed) {
    std::string const key = "theta_isomorphism";
    auto check_pair = [&](ConvexRelation const& a,
                          ConvexRelation const& b) -> std::optional<json> {
      ConvexRelation const ab = a * b;
      if (!is_convex(ab.matrix())) {
        return json{{"reason", "product not convex"},
                    {"a", to_string(a.matrix())}, {"b", to_string(b.matrix())}};
      }
      auto const [ma, na] = theta(a);
      auto const [mb, nb] = theta(b);
      auto const [mab, nab] = theta(ab);
      if (mab != compose(ma, mb) || nab != compose(na, nb)) {
        return json{{"reason", "not a homomorphism"},
                    {"a", to_string(a.matrix())}, {"b", to_string(b.matrix())}};
      }
      bool const sub   = a.matrix().is_subset_of(b.matrix());
      bool const order = leq(ma, mb) && leq(na, nb);
      if (sub != order) {
        return json{{"reason", "order not preserved and reflected"},
                    {"a", to_string(a.matrix())}, {"b", to_string(b.matrix())}};
      }
      return std::nullopt;
    };
    auto check_bijective = [&](std::vector<ConvexRelation> const& all,
                               std::size_t n) -> std::optional<json> {
      std::set<std::pair<MonotoneMap, MonotoneMap>> images;
      for (auto const& a : all) {
        auto const t = theta(a);
        if (!(theta_inverse(t.first, t.second) == a)) {
          return json{{"reason", "theta_inverse(theta(a)) != a"},
                      {"a", to_string(a.matrix())}};
        }
        images.insert(t);
      }
      std::size_t const c = catalan_number(n);
      if (images.size() != all.size() || images.size() != c * c) {
        return json{{"reason", "theta is not a bijection onto C_n^+ x C_n^-"},
                    {"n", n}, {"images", images.size()}};
      }
      return std::nullopt;
    };

    std::size_t pairs = 0;
    for (std::size_t n = 1; n <= n_exhaustive; ++n) {
      auto const all = all_convex_relations(n);
      if (auto ce = check_bijective(all, n)) {
        return fail(key, "Theta is not bijective", *ce);
      }
      for (auto const& a : all) {
        for (auto const& b : all) {
          if (auto ce = check_pair(a, b)) {
            return fail(key, "Theta fails on an exhaustive pair", *ce);
          }
          ++pairs;
        }
      }
    }
    std::mt19937_64 rng(seed);
    for (std::size_t n = n_exhaustive + 1; n <= n_random; ++n) {
      auto const all = all_convex_relations(n);
      if (auto ce = check_bijective(all, n)) {
        return fail(key, "Theta is not bijective", *ce);
      }
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      for (std::size_t k = 0; k < samples; ++k) {
        auto const& a = all[pick(rng)];
        // Half the samples compare a with a superset to exercise the order.
        ConvexRelation b = all[pick(rng)];
        if (k % 2 == 1) {
          BoolMatrix const joined = a.matrix() | b.matrix();
          if (is_convex(joined)) {
            b = ConvexRelation(joined);
          }
        }
        if (auto ce = check_pair(a, b)) {
          (*ce)["seed"] = seed;
          return fail(key, "Theta fails on a random pair", *ce);
        }
        ++pairs;
      }
    }
    return pass(key, std::to_string(pairs) + " pairs checked");
  }

  CheckResult check_psi_two_routes(std::size_t n_max) {
    std::string const key = "psi_two_routes";
    std::size_t       checked = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      auto const perms = all_permutations(n);
      std::unordered_map<Permutation, ConvexRelation> image;
      for (auto const& w : perms) {
        auto a = psi_word_product(w);
        auto b = psi_interval_fill(w);
        if (!(a == b)) {
          return fail(key, "epsilon product differs from interval fill",
                      {{"w", to_string(w)}, {"word_product", to_string(a.matrix())},
                       {"interval_fill", to_string(b.matrix())}});
        }
        if (!(transpose(a.matrix()) == psi_interval_fill(invert(w)).matrix())) {
          return fail(key, "Psi does not respect the involutions",
                      {{"w", to_string(w)}});
        }
        image.emplace(w, std::move(a));
        ++checked;
      }
      if (n > 5) {
        continue;
      }
      for (auto const& u : perms) {
        for (auto const& w : perms) {
          auto const h = hecke_mul(HeckeElement(u), HeckeElement(w)).permutation();
          if (!(image.at(h) == image.at(u) * image.at(w))) {
            return fail(key, "Psi is not a homomorphism",
                        {{"u", to_string(u)}, {"w", to_string(w)}});
          }
        }
      }
    }
    return pass(key, std::to_string(checked) + " permutations agree");
  }

  CheckResult check_fiber_structure(std::size_t n_max) {
    std::string const key = "fiber_structure";
    std::size_t       fibers = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::size_t total = 0;
      for (auto& [x, members] : all_fibers(n)) {
        total += members.size();
        FiberReport r;
        try {
          r = fiber_analysis(members);
        } catch (InternalError const& e) {
          return fail(key, e.what(), {{"matrix", to_string(x)}});
        }
        if (!r.tau_is_minimum || !r.maximal_are_4231_avoiders || !r.convex) {
          return fail(key, "fiber property violated",
                      {{"matrix", to_string(x)}, {"tau", to_string(r.tau)},
                       {"tau_is_minimum", r.tau_is_minimum},
                       {"maximal_are_4231_avoiders", r.maximal_are_4231_avoiders},
                       {"convex", r.convex}});
        }
        ++fibers;
      }
      std::size_t factorial = 1;
      for (std::size_t k = 2; k <= n; ++k) {
        factorial *= k;
      }
      if (total != factorial) {
        return fail(key, "fibers do not partition S_n", {{"n", n}});
      }
    }
    return pass(key, std::to_string(fibers) + " fibers checked");
  }

  CheckResult check_catalan_fibers(std::size_t n_max) {
    std::string const key = "catalan_fibers";
    std::size_t       count = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (auto const& a : all_monotone_maps(n, Dir::nondecreasing)) {
        CatalanFiberReport r;
        try {
          r = catalan_fiber_analysis(a);
        } catch (InternalError const& e) {
          return fail(key, e.what(), {{"alpha", to_string(a)}});
        }
        if (!r.pi_is_unique_321_avoider || !r.interval) {
          return fail(key, "Catalan fiber property violated",
                      {{"alpha", to_string(a)}, {"pi", to_string(r.pi)},
                       {"pi_prime", to_string(r.pi_prime)},
                       {"pi_is_unique_321_avoider", r.pi_is_unique_321_avoider},
                       {"interval", r.interval}});
        }
        ++count;
      }
    }
    return pass(key, std::to_string(count) + " fibers checked");
  }

  CheckResult check_kreweras_derivative(std::size_t n_max, bool require_full_fixed) {
    std::string const key = "kreweras_derivative";
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (auto const& p : all_dyck_paths(n)) {
        auto const q = kreweras_derivative(p);
        if (kreweras_derivative(q) != p) {
          return fail(key, "not an involution",
                      {{"path", p.steps()}, {"image", q.steps()}});
        }
      }
      std::string staircase;
      for (std::size_t k = 0; k < n; ++k) {
        staircase += "UD";
      }
      DyckPath const stairs(staircase);
      if (kreweras_derivative(stairs) != stairs) {
        return fail(key, "(UD)^n is not fixed", {{"n", n}});
      }
      DyckPath const full(std::string(n, 'U') + std::string(n, 'D'));
      auto const     image = kreweras_derivative(full);
      if (require_full_fixed && image != full) {
        return fail(key, "U^n D^n is not fixed",
                    {{"n", n}, {"path", full.steps()}, {"image", image.steps()}});
      }
    }
    return pass(key, std::string("involution on Dyck paths")
                         + (require_full_fixed ? " fixing (UD)^n and U^nD^n"
                                               : " fixing (UD)^n")
                         + " for n <= " + std::to_string(n_max));
  }

  CheckResult check_h_order_vs_covers(std::size_t n_max) {
    std::string const key = "h_order_vs_covers";
    std::size_t       pairs = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      auto const h = h_order_table(n);
      auto const c = prec_prime_table(n);
      for (std::size_t i = 0; i < h.maps.size(); ++i) {
        for (std::size_t j = 0; j < h.maps.size(); ++j) {
          if (h.holds[i][j] != c.holds[i][j]) {
            return fail(key, "the two orders differ",
                        {{"alpha", to_string(h.maps[i])},
                         {"beta", to_string(h.maps[j])},
                         {"h_order", static_cast<bool>(h.holds[i][j])},
                         {"cover_closure", static_cast<bool>(c.holds[i][j])}});
          }
          ++pairs;
        }
      }
    }
    return pass(key, std::to_string(pairs) + " pairs agree");
  }

  CheckResult check_admissible_pairs(std::size_t n_max) {
    std::string const key = "admissible_pairs";
    std::size_t       pairs = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      auto const brute = admissible_pairs(n);
      auto const paths = all_dyck_paths(n);
      for (auto const& a : paths) {
        for (auto const& b : paths) {
          PathPair const pair{a, b};
          bool const     fast = is_admissible(pair);
          bool const     slow = brute.count(pair) != 0;
          if (fast != slow) {
            return fail(key, "criterion disagrees with brute force",
                        {{"first", a.steps()}, {"second", b.steps()},
                         {"criterion", fast}, {"brute_force", slow}});
          }
          ++pairs;
        }
      }
    }
    return pass(key, std::to_string(pairs) + " path pairs agree");
  }

  CheckResult check_presentation(std::size_t n_min, std::size_t n_max,
                                 std::size_t word_cap) {
    std::string const        key = "presentation";
    std::vector<std::size_t> sizes;
    for (std::size_t n = n_min; n <= n_max; ++n) {
      PresentationOptions opts;
      opts.word_cap   = word_cap;
      opts.max_degree = std::max<std::size_t>(n, 5);
      auto const r    = verify_presentation(n, opts);
      if (!r.matches || !r.stable) {
        return fail(key, "presentation check failed",
                    {{"n", n}, {"presented_size", r.presented_size},
                     {"dc_size", r.dc_size}, {"consistent", r.consistent},
                     {"injective", r.injective}, {"stable", r.stable}});
      }
      sizes.push_back(r.presented_size);
    }
    return pass(key, "presented sizes " + join_sizes(sizes));
  }

  CheckResult check_max_coset_reps(std::vector<CoxeterType> const& types) {
    std::string const key = "max_coset_reps";
    for (auto const& type : types) {
      auto const sys = CoxeterSystem::build(type);
      using E        = CoxeterSystem::element_type;
      std::vector<std::vector<bool>> ideal(sys.size());
      for (E w = 0; w < sys.size(); ++w) {
        ideal[w] = sys.bruhat_ideal(w);
      }
      for (GeneratorMask J = 0; J <= sys.all_generators(); ++J) {
        auto const par = parabolic(sys, J);
        if (par.max_reps.size() * par.elements.size() != sys.size()) {
          return fail(key, "|W^J| != [W : W_J]",
                      {{"type", to_string(type)}, {"J", J}});
        }
        std::vector<E> rep(sys.size());
        for (E w = 0; w < sys.size(); ++w) {
          // Longest element of w W_J, found directly.
          E           best  = w;
          std::size_t ties  = 0;
          for (E x : par.elements) {
            E const y = sys.multiply(w, x);
            if (sys.length(y) > sys.length(best)) {
              best = y;
              ties = 0;
            } else if (sys.length(y) == sys.length(best) && y != best) {
              ++ties;
            }
          }
          rep[w] = sys.hecke_mul(w, par.longest);
          if (ties != 0 || rep[w] != best
              || !std::binary_search(par.max_reps.begin(), par.max_reps.end(), best)) {
            return fail(key, "z_w e_J is not the longest element of w W_J",
                        {{"type", to_string(type)}, {"J", J},
                         {"w", sys.label(w)}});
          }
        }
        for (E w : par.max_reps) {
          for (std::size_t s = 0; s < sys.rank(); ++s) {
            E const sw = sys.left_mul(s, w);
            if (rep[sw] != w
                && !std::binary_search(par.max_reps.begin(), par.max_reps.end(), sw)) {
              return fail(key, "s w left the coset but is not a maximal representative",
                          {{"type", to_string(type)}, {"J", J},
                           {"w", sys.label(w)}, {"s", s + 1}});
            }
          }
        }
        for (E u = 0; u < sys.size(); ++u) {
          for (E w = 0; w < sys.size(); ++w) {
            if (ideal[w][u] && !ideal[rep[w]][rep[u]]) {
              return fail(key, "w -> w^J is not order preserving",
                          {{"type", to_string(type)}, {"J", J},
                           {"u", sys.label(u)}, {"w", sys.label(w)}});
            }
          }
        }
      }
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        auto const par = parabolic(sys, sys.complement_of(s));
        E const    w0s = sys.right_mul(sys.longest(), s);
        std::vector<E> below;
        for (E w : par.max_reps) {
          if (sys.length(w) + 1 == sys.length(sys.longest())) {
            below.push_back(w);
          }
        }
        GeneratorMask const want = sys.complement_of(sys.conjugate_by_longest(s));
        if (below != std::vector<E>{w0s} || sys.left_descents(w0s) != want) {
          return fail(key, "w0 s is not the unique coatom of W^(s) with the stated descents",
                      {{"type", to_string(type)}, {"s", s + 1}});
        }
      }
    }
    return pass(key, std::to_string(types.size()) + " Coxeter systems, all subsets J");
  }

  CheckResult check_eigenspaces(std::vector<CoxeterType> const& types) {
    std::string const key = "eigenspaces";
    std::size_t       cases = 0;
    for (auto const& type : types) {
      auto const sys = CoxeterSystem::build(type);
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        auto const p = build_P(sys, s);
        if (!satisfies_hecke_relations(p)) {
          return fail(key, "generator matrices break the 0-Hecke relations",
                      {{"type", to_string(type)}, {"s", s + 1}});
        }
        for (std::size_t t = 0; t < sys.rank(); ++t) {
          auto const algebraic = eigen_structure(p, t);
          auto const orbit     = orbit_eigen_structure(p, t);
          auto const& a        = p.action[t];
          bool ok = algebraic.fixed.size() == orbit.fixed.size()
                    && algebraic.kernel.size() == orbit.kernel.size()
                    && orbit.fixed.size() + orbit.kernel.size() == p.dimension();
          for (auto const& v : orbit.fixed) {
            ok = ok && a * v == v;
          }
          for (auto const& v : orbit.kernel) {
            ok = ok && a * v == RationalVector(p.dimension());
          }
          auto all = orbit.fixed;
          all.insert(all.end(), orbit.kernel.begin(), orbit.kernel.end());
          ok = ok && span_dimension(all, p.dimension()) == p.dimension();
          if (!ok) {
            return fail(key, "eigenspace decomposition differs from the orbit description",
                        {{"type", to_string(type)}, {"s", s + 1}, {"t", t + 1}});
          }
          ++cases;
        }
      }
    }
    return pass(key, std::to_string(cases) + " (module, generator) pairs");
  }

  CheckResult check_simple_socle(std::vector<CoxeterType> const& types) {
    std::string const key = "simple_socle";
    std::size_t       cases = 0;
    for (auto const& type : types) {
      auto const sys = CoxeterSystem::build(type);
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        auto const c = catkit::check_simple_socle(sys, s);
        if (!c.simple || !c.vector_ok || !c.type_ok) {
          return fail(key, "socle of P'_(s) is not as stated",
                      {{"type", to_string(type)}, {"s", s + 1},
                       {"dimension", c.dimension}, {"vector_ok", c.vector_ok},
                       {"type_ok", c.type_ok}});
        }
        ++cases;
      }
    }
    return pass(key, std::to_string(cases) + " simple socles");
  }

  CheckResult check_hecke_min_dim(std::vector<CoxeterType> const& types) {
    std::string const key = "hecke_min_dim";
    std::string       dims;
    for (auto const& type : types) {
      auto const sys = CoxeterSystem::build(type);
      auto const r   = min_dim_report(sys);
      if (r.claimed != r.constructed_dim || !r.effective || !r.socle_verified) {
        return fail(key, "sum of P'_(s) is not as stated",
                    {{"type", to_string(type)}, {"claimed", r.claimed},
                     {"constructed_dim", r.constructed_dim},
                     {"effective", r.effective},
                     {"socle_verified", r.socle_verified}});
      }
      dims += (dims.empty() ? "" : ", ") + to_string(type) + ":"
              + std::to_string(r.constructed_dim);
    }
    return pass(key, dims);
  }

  CheckResult check_dc_min_dim(std::size_t n_max) {
    std::string const        key = "dc_min_dim";
    std::vector<std::size_t> dims;
    for (std::size_t n = 2; n <= n_max; ++n) {
      auto const r = dc_min_dim_check(n);
      std::size_t const avoiders = count_avoiders(n, Permutation{4, 3, 2, 1});
      if (r.dim != 2 * n - 2 || !r.well_defined || !r.effective
          || r.monoid_size != avoiders) {
        return fail(key, "DC_n module is not as stated",
                    {{"n", n}, {"dim", r.dim}, {"well_defined", r.well_defined},
                     {"effective", r.effective}, {"monoid_size", r.monoid_size}});
      }
      dims.push_back(r.dim);
    }
    return pass(key, "dimensions " + join_sizes(dims));
  }

  CheckResult check_generalized_quotients(std::size_t n_max) {
    std::string const key = "generalized_quotients";
    for (std::size_t n = 2; n <= n_max; ++n) {
      auto const          sys = CoxeterSystem::build({CoxeterType::Family::A, n - 1});
      GeneratorMask const J   = sys.complement_of(n - 2);
      auto const catalan = generalized_catalan_quotient(sys, J);
      if (catalan.size() != catalan_number(n)) {
        return fail(key, "|C(S_n)_(s_{n-1})| is not Catalan",
                    {{"n", n}, {"size", catalan.size()}});
      }
      auto const q  = generalized_double_catalan(sys, J);
      auto const dc = dc_monoid(n);
      if (q.monoid.size() != dc.size()) {
        return fail(key, "DC(S_n)_(s_{n-1}) and DC_n differ in size",
                    {{"n", n}, {"quotient", q.monoid.size()}, {"dc", dc.size()}});
      }
      // Coset x W_J corresponds to the point x(n).
      std::vector<std::size_t> point;
      for (auto x : q.min_reps) {
        point.push_back(sys.carrier_permutation(x)[n - 1]);
      }
      auto relabel = [&](BoolMatrix const& m) {
        BoolMatrix out(n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (m.get(i, j)) {
              out.set(point[i], point[j]);
            }
          }
        }
        return out;
      };
      std::vector<MonoidTable::index_type> to_dc(q.monoid.size());
      for (std::size_t k = 0; k < q.monoid.size(); ++k) {
        auto const found = dc.table.find(to_string(relabel(q.monoid.elements[k])));
        if (!found) {
          return fail(key, "quotient element has no counterpart in DC_n",
                      {{"n", n}, {"element", to_string(q.monoid.elements[k])}});
        }
        to_dc[k] = *found;
      }
      for (std::size_t g = 0; g + 1 < n; ++g) {
        if (to_dc[q.monoid.table.generator(g)] != dc.table.generator(g)) {
          return fail(key, "generator does not map to epsilon", {{"n", n}, {"g", g + 1}});
        }
      }
      auto const tq = q.monoid.table.product_table();
      auto const td = dc.table.product_table();
      for (std::size_t x = 0; x < tq.size(); ++x) {
        for (std::size_t y = 0; y < tq.size(); ++y) {
          if (to_dc[tq[x][y]] != td[to_dc[x]][to_dc[y]]) {
            return fail(key, "product tables differ after relabeling",
                        {{"n", n}, {"x", x}, {"y", y}});
          }
        }
      }
    }
    return pass(key, "DC(S_n) and C(S_n) quotients for n <= " + std::to_string(n_max));
  }

  std::vector<CoxeterType> standard_coxeter_types() {
    using F = CoxeterType::Family;
    return {{F::A, 1},  {F::A, 2},  {F::A, 3},  {F::A, 4},  {F::B, 2}, {F::B, 3},
            {F::I2, 3}, {F::I2, 4}, {F::I2, 5}, {F::I2, 6}};
  }

  std::vector<CheckResult> run_verify_all(VerifyOptions const& opts) {
    std::size_t const n = opts.n_max;
    auto const        types = standard_coxeter_types();
    std::vector<CoxeterType> small;
    for (auto const& t : types) {
      if (!(t.family == CoxeterType::Family::A && t.param == 4)
          && !(t.family == CoxeterType::Family::B && t.param == 3)) {
        small.push_back(t);
      }
    }
    std::vector<std::function<CheckResult()>> suites = {
        [&] { return check_catalan_count(n); },
        [&] { return check_dc_count(n); },
        [&] { return check_self_dual_count(n); },
        [&] { return check_idempotents(n); },
        [&] { return check_subset_realization(std::min<std::size_t>(n, 5)); },
        [&] {
          return check_theta_isomorphism(std::min<std::size_t>(n, 4), n,
                                         opts.samples, opts.seed);
        },
        [&] { return check_psi_two_routes(n); },
        [&] { return check_fiber_structure(std::min<std::size_t>(n, 5)); },
        [&] { return check_catalan_fibers(n); },
        [&] { return check_kreweras_derivative(n, false); },
        [&] { return check_h_order_vs_covers(std::min<std::size_t>(n, 5)); },
        [&] { return check_admissible_pairs(n); },
        [&] {
          return check_presentation(1, std::min<std::size_t>(n, 4), opts.word_cap);
        },
        [&] { return check_max_coset_reps(small); },
        [&] { return check_eigenspaces(types); },
        [&] { return check_simple_socle(types); },
        [&] { return check_hecke_min_dim(types); },
        [&] { return check_dc_min_dim(n); },
        [&] { return check_generalized_quotients(std::min<std::size_t>(n, 5)); },
    };
    std::vector<CheckResult> results(suites.size());
    auto run = [&](std::size_t k) {
      try {
        results[k] = suites[k]();
      } catch (std::exception const& e) {
        results[k] = {"", false, std::string("exception: ") + e.what(),
                      json{{"exception", e.what()}}.dump()};
      }
    };
    unsigned const jobs = std::max(1U, opts.jobs);
    if (jobs == 1) {
      for (std::size_t k = 0; k < suites.size(); ++k) {
        run(k);
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < jobs; ++j) {
        pool.emplace_back([&] {
          for (std::size_t k = next++; k < suites.size(); k = next++) {
            run(k);
          }
        });
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    static char const* const keys[] = {
        "catalan_count",      "dc_count",           "self_dual_count",
        "idempotents",        "subset_realization", "theta_isomorphism",
        "psi_two_routes",     "fiber_structure",    "catalan_fibers",
        "kreweras_derivative", "h_order_vs_covers", "admissible_pairs",
        "presentation",       "max_coset_reps",     "eigenspaces",
        "simple_socle",       "hecke_min_dim",      "dc_min_dim",
        "generalized_quotients"};
    for (std::size_t k = 0; k < results.size(); ++k) {
      results[k].key = keys[k];
    }
    return results;
  }

}  // namespace catkit
