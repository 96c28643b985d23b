#include "catkit/dcm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "catkit/error.hpp"

namespace catkit {

  namespace {
    void check_degree(std::size_t n, std::size_t max_degree) {
      if (n == 0) {
        throw std::invalid_argument("degree must be positive");
      }
      if (n > max_degree) {
        throw CapExceeded("degree " + std::to_string(n)
                          + " exceeds the configured maximum "
                          + std::to_string(max_degree));
      }
    }

    bool contains(std::vector<Permutation> const& sorted, Permutation const& w) {
      return std::binary_search(sorted.begin(), sorted.end(), w);
    }
  }  // namespace

  std::uint64_t catalan_number(std::size_t n) {
    // C_{k+1} = C_k * 2(2k+1) / (k+2), exact at every step.
    std::uint64_t c = 1;
    for (std::size_t k = 0; k < n; ++k) {
      c = c * 2 * (2 * k + 1) / (k + 2);
    }
    return c;
  }

  std::uint64_t motzkin_number(std::size_t n) {
    std::vector<std::uint64_t> m{1, 1};
    for (std::size_t k = 1; k < n; ++k) {
      std::uint64_t next = m[k];
      for (std::size_t i = 0; i + 1 <= k; ++i) {
        next += m[i] * m[k - 1 - i];
      }
      m.push_back(next);
    }
    return m[n];
  }

  std::size_t count_avoiders(std::size_t n, Permutation const& pattern) {
    std::size_t count = 0;
    for (auto const& w : all_permutations(n)) {
      count += avoids(w, pattern) ? 1 : 0;
    }
    return count;
  }

  std::size_t count_avoiding_involutions(std::size_t        n,
                                         Permutation const& pattern) {
    std::size_t count = 0;
    for (auto const& w : all_permutations(n)) {
      count += (w.is_involution() && avoids(w, pattern)) ? 1 : 0;
    }
    return count;
  }

  ConvexRelation epsilon(std::size_t i, std::size_t n) {
    if (i < 1 || i >= n) {
      throw std::invalid_argument("epsilon index " + std::to_string(i)
                                  + " out of range for n = " + std::to_string(n));
    }
    BoolMatrix m = BoolMatrix::identity(n);
    m.set(i - 1, i);
    m.set(i, i - 1);
    return ConvexRelation(std::move(m));
  }

  ConvexRelation psi_word_product(Permutation const& w) {
    ConvexRelation out = ConvexRelation::identity(w.degree());
    for (int i : reduced_word(w).letters) {
      out = out * epsilon(static_cast<std::size_t>(i), w.degree());
    }
    return out;
  }

  ConvexRelation psi_interval_fill(Permutation const& w) {
    return theta_inverse(alpha(w), beta(w));
  }

  ConvexRelation psi(Permutation const& w) {
    ConvexRelation a = psi_word_product(w);
    ConvexRelation b = psi_interval_fill(w);
    if (!(a == b)) {
      throw InternalError("psi(" + to_string(w)
                          + "): epsilon product and interval fill disagree ("
                          + to_string(a.matrix()) + " vs "
                          + to_string(b.matrix()) + ")");
    }
    return a;
  }

  Closure<ConvexRelation> dc_monoid(std::size_t n, DcOptions const& opts) {
    check_degree(n, opts.max_degree);
    std::vector<ConvexRelation> gens;
    for (std::size_t i = 1; i < n; ++i) {
      gens.push_back(epsilon(i, n));
    }
    return generate_monoid(
        ConvexRelation::identity(n),
        gens,
        [](ConvexRelation const& a, ConvexRelation const& b) { return a * b; },
        [](ConvexRelation const& a) { return to_string(a.matrix()); },
        opts.closure);
  }

  Closure<MonotoneMap> catalan_monoid(std::size_t            n,
                                      MonotoneMap::Direction dir,
                                      ClosureOptions const&  opts) {
    if (n == 0) {
      throw std::invalid_argument("degree must be positive");
    }
    std::vector<MonotoneMap> gens;
    for (std::size_t i = 1; i < n; ++i) {
      auto const e = epsilon(i, n);
      gens.push_back(dir == MonotoneMap::Direction::nondecreasing ? max_map(e)
                                                                  : min_map(e));
    }
    return generate_monoid(
        MonotoneMap::identity(n, dir),
        gens,
        [](MonotoneMap const& a, MonotoneMap const& b) { return compose(a, b); },
        [](MonotoneMap const& a) { return to_string(a); },
        opts);
  }

  std::vector<Permutation> fiber(BoolMatrix const& x) {
    check_degree(x.degree(), default_dc_max_degree);
    std::vector<Permutation> out;
    for (auto const& w : all_permutations(x.degree())) {
      if (psi(w).matrix() == x) {
        out.push_back(w);
      }
    }
    return out;
  }

  std::map<BoolMatrix, std::vector<Permutation>> all_fibers(std::size_t n) {
    check_degree(n, default_dc_max_degree);
    std::map<BoolMatrix, std::vector<Permutation>> out;
    for (auto const& w : all_permutations(n)) {
      out[psi(w).matrix()].push_back(w);
    }
    return out;
  }

  FiberReport fiber_analysis(std::vector<Permutation> members) {
    if (members.empty()) {
      throw std::invalid_argument("empty fiber: the matrix is not in DC_n");
    }
    std::sort(members.begin(), members.end());
    std::size_t const n = members.front().degree();
    Permutation const p4321{4, 3, 2, 1};
    Permutation const p4231{4, 2, 3, 1};

    FiberReport out;
    std::vector<Permutation> avoiders;
    for (auto const& w : members) {
      if (avoids(w, p4321)) {
        avoiders.push_back(w);
      }
    }
    if (avoiders.size() != 1) {
      throw InternalError("fiber of " + to_string(psi(members.front()).matrix())
                          + " has " + std::to_string(avoiders.size())
                          + " 4321-avoiding members");
    }
    out.tau = avoiders.front();

    out.tau_is_minimum = std::all_of(
        members.begin(), members.end(),
        [&](Permutation const& w) { return bruhat_leq(out.tau, w); });

    std::vector<Permutation> avoid4231;
    for (auto const& w : members) {
      bool top = true;
      for (auto const& v : members) {
        if (v != w && bruhat_leq(w, v)) {
          top = false;
          break;
        }
      }
      if (top) {
        out.maximal.push_back(w);
      }
      if (avoids(w, p4231)) {
        avoid4231.push_back(w);
      }
    }
    out.maximal_are_4231_avoiders = out.maximal == avoid4231;

    out.convex = true;
    for (auto const& v : all_permutations(n)) {
      if (contains(members, v)) {
        continue;
      }
      bool above = std::any_of(members.begin(), members.end(),
                               [&](Permutation const& u) { return bruhat_leq(u, v); });
      if (!above) {
        continue;
      }
      bool below = std::any_of(out.maximal.begin(), out.maximal.end(),
                               [&](Permutation const& w) { return bruhat_leq(v, w); });
      if (below) {
        out.convex = false;
        break;
      }
    }
    out.members = std::move(members);
    return out;
  }

  FiberReport fiber_analysis(BoolMatrix const& x) {
    return fiber_analysis(fiber(x));
  }

  std::optional<FiberReport> first_multi_maximal_fiber(std::size_t max_n) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (auto& [x, members] : all_fibers(n)) {
        auto report = fiber_analysis(members);
        if (report.maximal.size() > 1) {
          return report;
        }
      }
    }
    return std::nullopt;
  }

  Permutation catalan_pi(MonotoneMap const& alpha) {
    if (alpha.direction() != MonotoneMap::Direction::nondecreasing) {
      throw std::invalid_argument("catalan_pi expects an element of C_n^+");
    }
    std::size_t const n = alpha.degree();
    std::vector<bool> used(n + 1, false);
    std::vector<int>  pi(n);
    int               prev = 0;
    int               low  = 1;
    for (std::size_t i = 0; i < n; ++i) {
      int const a = alpha.values()[i];
      if (a > prev) {
        pi[i] = a;
      } else {
        while (used[static_cast<std::size_t>(low)]) {
          ++low;
        }
        pi[i] = low;
      }
      if (used[static_cast<std::size_t>(pi[i])]) {
        throw InternalError("catalan_pi recursion repeated a value");
      }
      used[static_cast<std::size_t>(pi[i])] = true;
      prev                                  = a;
    }
    return Permutation(std::move(pi));
  }

  CatalanFiberReport catalan_fiber_analysis(MonotoneMap const& a) {
    if (a.direction() != MonotoneMap::Direction::nondecreasing) {
      throw std::invalid_argument("expected an element of C_n^+");
    }
    check_degree(a.degree(), default_dc_max_degree);
    Permutation const p321{3, 2, 1};
    Permutation const p312{3, 1, 2};

    CatalanFiberReport       out;
    std::vector<Permutation> avoid321;
    std::vector<Permutation> avoid312;
    for (auto const& w : all_permutations(a.degree())) {
      if (alpha(w) != a) {
        continue;
      }
      out.members.push_back(w);
      if (avoids(w, p321)) {
        avoid321.push_back(w);
      }
      if (avoids(w, p312)) {
        avoid312.push_back(w);
      }
    }
    out.pi = catalan_pi(a);
    out.pi_is_unique_321_avoider =
        avoid321.size() == 1 && avoid321.front() == out.pi;
    if (avoid312.size() != 1) {
      throw InternalError("fiber of " + to_string(a) + " has "
                          + std::to_string(avoid312.size())
                          + " 312-avoiding members");
    }
    out.pi_prime = avoid312.front();

    std::vector<Permutation> interval;
    for (auto const& v : all_permutations(a.degree())) {
      if (bruhat_leq(out.pi, v) && bruhat_leq(v, out.pi_prime)) {
        interval.push_back(v);
      }
    }
    out.interval = interval == out.members;
    return out;
  }

  std::size_t self_dual_count(std::size_t n, DcOptions const& opts) {
    auto const  dc    = dc_monoid(n, opts);
    std::size_t count = 0;
    for (auto const& x : dc.elements) {
      count += x.matrix().is_symmetric() ? 1 : 0;
    }
    return count;
  }

  std::vector<ConvexRelation> dc_idempotents(std::size_t n, DcOptions const& opts) {
    auto const                  dc = dc_monoid(n, opts);
    std::vector<ConvexRelation> out;
    for (auto const& x : dc.elements) {
      if (x * x == x) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool is_block_ones(BoolMatrix const& a) {
    std::size_t const n     = a.degree();
    std::size_t       start = 0;
    while (start < n) {
      auto const  row = a.row_support(start);
      if (row.empty() || row.front() != start) {
        return false;
      }
      std::size_t const end = row.back();
      if (row.size() != end - start + 1) {
        return false;
      }
      for (std::size_t i = start; i <= end; ++i) {
        if (a.row_support(i) != row) {
          return false;
        }
      }
      start = end + 1;
    }
    return true;
  }

  PresentationInstance presentation_relations(std::size_t n) {
    if (n == 0) {
      throw std::invalid_argument("degree must be positive");
    }
    PresentationInstance out;
    out.n                = n;
    std::size_t const g  = n - 1;
    out.generators       = g;
    for (std::size_t i = 0; i < g; ++i) {
      out.relations.push_back({{i, i}, {i}});
    }
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = i + 2; j < g; ++j) {
        out.relations.push_back({{i, j}, {j, i}});
      }
    }
    for (std::size_t i = 0; i + 1 < g; ++i) {
      out.relations.push_back({{i, i + 1, i}, {i + 1, i, i + 1}});
    }
    for (std::size_t i = 0; i + 2 < g; ++i) {
      out.relations.push_back(
          {{i, i + 1, i + 2, i + 1, i}, {i, i + 1, i + 2, i, i + 1, i}});
    }
    return out;
  }

  namespace {
    struct CongruenceCount {
      std::size_t words      = 0;
      std::size_t classes    = 0;
      bool        consistent = false;
      bool        injective  = false;
    };

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : parent_(n) {
        for (std::size_t i = 0; i < n; ++i) {
          parent_[i] = static_cast<std::uint32_t>(i);
        }
      }
      std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }
      void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a < b) {
          parent_[b] = a;
        } else if (b < a) {
          parent_[a] = b;
        }
      }

     private:
      std::vector<std::uint32_t> parent_;
    };

    // Words over g letters of length <= L, indexed length-major and then as
    // base-g numerals with the first letter most significant.
    CongruenceCount congruence_count(MonoidTable const&          table,
                                     PresentationInstance const& pres,
                                     std::size_t                 L,
                                     std::size_t                 short_bound,
                                     std::size_t                 word_cap) {
      std::size_t const        g = pres.generators;
      std::vector<std::size_t> pow{1};
      std::vector<std::size_t> offset{0};
      std::size_t              total = 1;
      for (std::size_t k = 1; k <= L && g > 0; ++k) {
        if (pow.back() > word_cap / g) {
          throw CapExceeded("presentation word graph exceeds the word cap of "
                            + std::to_string(word_cap));
        }
        pow.push_back(pow.back() * g);
        offset.push_back(total);
        total += pow.back();
        if (total > word_cap || total > UINT32_MAX) {
          throw CapExceeded("presentation word graph exceeds the word cap of "
                            + std::to_string(word_cap));
        }
      }
      std::size_t const maxlen = pow.size() - 1;
      if (table.size() > UINT16_MAX) {
        throw CapExceeded("monoid too large for the presentation checker");
      }

      std::vector<std::uint16_t> eval(total);
      eval[0] = static_cast<std::uint16_t>(MonoidTable::identity());
      for (std::size_t k = 1; k <= maxlen; ++k) {
        for (std::size_t v = 0; v < pow[k]; ++v) {
          auto const prefix = eval[offset[k - 1] + v / g];
          eval[offset[k] + v] =
              static_cast<std::uint16_t>(table.right(prefix, v % g));
        }
      }

      auto numeral = [g](Word const& w) {
        std::size_t x = 0;
        for (auto a : w) {
          x = x * g + a;
        }
        return x;
      };

      UnionFind uf(total);
      for (auto const& [lhs, rhs] : pres.relations) {
        std::size_t const r = std::max(lhs.size(), rhs.size());
        if (r > maxlen) {
          continue;
        }
        std::size_t const nl = numeral(lhs);
        std::size_t const nr = numeral(rhs);
        for (std::size_t lu = 0; lu + r <= maxlen; ++lu) {
          for (std::size_t lv = 0; lu + r + lv <= maxlen; ++lv) {
            std::size_t const ol = offset[lu + lhs.size() + lv];
            std::size_t const orr = offset[lu + rhs.size() + lv];
            for (std::size_t u = 0; u < pow[lu]; ++u) {
              std::size_t const bl = (u * pow[lhs.size()] + nl) * pow[lv];
              std::size_t const br = (u * pow[rhs.size()] + nr) * pow[lv];
              for (std::size_t v = 0; v < pow[lv]; ++v) {
                uf.unite(static_cast<std::uint32_t>(ol + bl + v),
                         static_cast<std::uint32_t>(orr + br + v));
              }
            }
          }
        }
      }

      CongruenceCount out;
      out.words      = total;
      out.consistent = true;
      for (std::size_t x = 0; x < total; ++x) {
        if (eval[x] != eval[uf.find(static_cast<std::uint32_t>(x))]) {
          out.consistent = false;
          break;
        }
      }
      std::size_t const sb          = std::min(short_bound, maxlen);
      std::size_t const short_words = sb + 1 < offset.size() ? offset[sb + 1] : total;
      std::set<std::uint32_t> roots;
      std::set<std::uint16_t> images;
      for (std::size_t x = 0; x < short_words; ++x) {
        auto const root = uf.find(static_cast<std::uint32_t>(x));
        if (roots.insert(root).second) {
          images.insert(eval[root]);
        }
      }
      out.classes   = roots.size();
      out.injective = images.size() == roots.size();
      return out;
    }
  }  // namespace

  PresentationReport verify_presentation(std::size_t                n,
                                         PresentationOptions const& opts) {
    check_degree(n, opts.max_degree);
    auto const dc   = dc_monoid(n, {.max_degree = std::max(n, default_dc_max_degree)});
    auto const pres = presentation_relations(n);
    std::size_t const short_bound = n * (n - 1) / 2;

    PresentationReport out;
    out.n            = n;
    out.length_bound = short_bound + 2;
    out.dc_size      = dc.size();
    auto const first =
        congruence_count(dc.table, pres, out.length_bound, short_bound, opts.word_cap);
    out.word_count     = first.words;
    out.presented_size = first.classes;
    out.consistent     = first.consistent;
    out.injective      = first.injective;
    out.matches        = first.consistent && first.injective
                  && first.classes == dc.size();
    auto const second = congruence_count(
        dc.table, pres, out.length_bound + 1, short_bound, opts.word_cap);
    out.stable = second.classes == first.classes && second.consistent
                 && second.injective;
    return out;
  }

}  // namespace catkit
