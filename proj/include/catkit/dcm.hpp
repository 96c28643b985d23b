#ifndef CATKIT_DCM_HPP_
#define CATKIT_DCM_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "catkit/boolmat.hpp"
#include "catkit/monoid.hpp"
#include "catkit/permutation.hpp"

namespace catkit {

  // Default upper bound on n for anything that enumerates DC_n or S_n.
  inline constexpr std::size_t default_dc_max_degree = 8;

  std::uint64_t catalan_number(std::size_t n);
  // M_0 = M_1 = 1, M_{k+1} = M_k + sum_{i=0}^{k-1} M_i M_{k-1-i}.
  std::uint64_t motzkin_number(std::size_t n);
  std::size_t   count_avoiders(std::size_t n, Permutation const& pattern);
  std::size_t   count_avoiding_involutions(std::size_t n, Permutation const& pattern);

  // eps_i = Phi(id) + Phi(s_i).
  ConvexRelation epsilon(std::size_t i, std::size_t n);

  // Psi(z_w) through the product of eps over a reduced word of w.
  ConvexRelation psi_word_product(Permutation const& w);
  // Psi(z_w) as the interval fill of (alpha_w, beta_w).
  ConvexRelation psi_interval_fill(Permutation const& w);
  // Both routes; throws InternalError if they disagree.
  ConvexRelation psi(Permutation const& w);

  struct DcOptions {
    std::size_t    max_degree = default_dc_max_degree;
    ClosureOptions closure    = {};
  };

  // The submonoid of B_n generated by eps_1 .. eps_{n-1}; generator g of the
  // table is eps_{g+1}.
  Closure<ConvexRelation> dc_monoid(std::size_t n, DcOptions const& opts = {});

  // The Catalan monoid C_n^+ (resp. C_n^-) generated by max(eps_i)
  // (resp. min(eps_i)).
  Closure<MonotoneMap> catalan_monoid(std::size_t n, MonotoneMap::Direction dir,
                                      ClosureOptions const& opts = {});

  // {w in S_n : psi(w) = x}, in lexicographic order. Empty iff x is not in
  // DC_n.
  std::vector<Permutation> fiber(BoolMatrix const& x);
  // All fibers of Psi on S_n in one scan, keyed by the image.
  std::map<BoolMatrix, std::vector<Permutation>> all_fibers(std::size_t n);

  struct FiberReport {
    std::vector<Permutation> members;
    Permutation              tau;       // the 4321-avoiding member
    std::vector<Permutation> maximal;   // Bruhat-maximal members
    bool tau_is_minimum                = false;
    bool maximal_are_4231_avoiders     = false;
    bool convex                        = false;
  };

  // Throws InternalError unless the fiber has exactly one 4321-avoiding
  // member; the remaining properties are reported as flags.
  FiberReport fiber_analysis(std::vector<Permutation> members);
  FiberReport fiber_analysis(BoolMatrix const& x);

  // First fiber in S_n (n <= max_n, lexicographic by image) with more than
  // one Bruhat-maximal element.
  std::optional<FiberReport> first_multi_maximal_fiber(std::size_t max_n);

  // pi_alpha by the recursion pi(i) = alpha(i) if alpha(i) > alpha(i-1),
  // else the least value not yet used.
  Permutation catalan_pi(MonotoneMap const& alpha);

  struct CatalanFiberReport {
    std::vector<Permutation> members;    // {w : alpha_w = alpha}
    Permutation              pi;         // recursion output
    Permutation              pi_prime;   // the 312-avoiding member
    bool pi_is_unique_321_avoider = false;
    bool interval                 = false;  // members = [pi, pi_prime]
  };

  // Throws InternalError unless there is exactly one 312-avoiding member.
  CatalanFiberReport catalan_fiber_analysis(MonotoneMap const& alpha);

  // Number of x in DC_n with x^t = x.
  std::size_t self_dual_count(std::size_t n, DcOptions const& opts = {});

  std::vector<ConvexRelation> dc_idempotents(std::size_t n, DcOptions const& opts = {});
  // Block diagonal with every diagonal block all ones.
  bool is_block_ones(BoolMatrix const& a);

  using Word = std::vector<std::size_t>;  // 0-based letters; letter i is f_{i+1}

  struct PresentationInstance {
    std::size_t                      n          = 0;
    std::size_t                      generators = 0;
    std::vector<std::pair<Word, Word>> relations;
  };

  // f_i^2 = f_i, commutations, braids and
  // f_i f_{i+1} f_{i+2} f_{i+1} f_i = f_i f_{i+1} f_{i+2} f_i f_{i+1} f_i.
  PresentationInstance presentation_relations(std::size_t n);

  inline constexpr std::size_t default_word_cap = std::size_t{1} << 26;

  struct PresentationOptions {
    std::size_t word_cap   = default_word_cap;
    std::size_t max_degree = 5;
  };

  struct PresentationReport {
    std::size_t n              = 0;
    std::size_t length_bound   = 0;  // L
    std::size_t word_count     = 0;  // words of length <= L
    std::size_t presented_size = 0;  // classes containing a word of length <= l(w0)
    std::size_t dc_size        = 0;
    bool        consistent     = false;  // every class evaluates to one element
    bool        injective      = false;  // distinct classes, distinct elements
    bool        matches        = false;
    bool        stable         = false;  // recount at L + 1 agrees
  };

  PresentationReport verify_presentation(std::size_t                n,
                                         PresentationOptions const& opts = {});

}  // namespace catkit

#endif  // CATKIT_DCM_HPP_
