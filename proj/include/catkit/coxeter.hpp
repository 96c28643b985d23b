#ifndef CATKIT_COXETER_HPP_
#define CATKIT_COXETER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "catkit/boolmat.hpp"
#include "catkit/hecke.hpp"
#include "catkit/monoid.hpp"

namespace catkit {

  inline constexpr std::size_t default_coxeter_cap = 10'000;

  // Built-in finite Coxeter families with faithful permutation models:
  //   A_k  on k+1 points, s_i = (i, i+1);
  //   B_k  on 2k signed points, s_1 = sign change of 1, s_{i+1} = (i, i+1);
  //   I2(m) on the 2m chambers of a 2m-gon (regular action).
  struct CoxeterType {
    enum class Family { A, B, I2 };
    Family      family = Family::A;
    std::size_t param  = 1;  // rank for A and B, m for I2

    bool operator==(CoxeterType const&) const = default;
  };

  // "A4", "B3", "I2:6" (also "I2(6)").
  CoxeterType parse_coxeter_type(std::string_view text);
  std::string to_string(CoxeterType const& t);

  // Bit s set iff generator s is in the subset.
  using GeneratorMask = std::uint64_t;

  // A finite Coxeter group materialised as permutations of a finite carrier
  // set. Elements are indexed in breadth-first order from the identity with
  // respect to right multiplication by generators, so index 0 is the
  // identity and indices are non-decreasing in length.
  class CoxeterSystem {
   public:
    using element_type    = std::uint32_t;
    using carrier_perm    = std::vector<std::uint32_t>;
    using coxeter_matrix_type = std::vector<std::vector<int>>;

    static CoxeterSystem build(CoxeterType const& type,
                               std::size_t        cap = default_coxeter_cap);
    // Validates that each generator is a non-trivial involution and that
    // s t has order exactly m(s, t).
    static CoxeterSystem from_generators(std::vector<carrier_perm> generators,
                                         coxeter_matrix_type       matrix,
                                         std::size_t cap = default_coxeter_cap,
                                         std::string name = "custom");

    std::string const& name() const noexcept {
      return name_;
    }
    std::optional<CoxeterType> const& type() const noexcept {
      return type_;
    }
    std::size_t rank() const noexcept {
      return generators_.size();
    }
    std::size_t size() const noexcept {
      return elements_.size();
    }
    std::size_t carrier_size() const noexcept {
      return carrier_size_;
    }
    coxeter_matrix_type const& coxeter_matrix() const noexcept {
      return matrix_;
    }
    GeneratorMask all_generators() const noexcept {
      return rank() == 64 ? ~GeneratorMask{0}
                          : (GeneratorMask{1} << rank()) - 1;
    }
    // (s) = S \ {s}
    GeneratorMask complement_of(std::size_t s) const noexcept {
      return all_generators() & ~(GeneratorMask{1} << s);
    }

    static constexpr element_type identity() noexcept {
      return 0;
    }
    element_type longest() const noexcept {
      return longest_;
    }
    element_type generator(std::size_t s) const {
      return right_mul(identity(), s);
    }

    std::size_t length(element_type w) const {
      return length_.at(w);
    }
    element_type right_mul(element_type w, std::size_t s) const {
      return right_[w * rank() + s];
    }
    element_type left_mul(std::size_t s, element_type w) const {
      return left_[w * rank() + s];
    }
    element_type multiply(element_type u, element_type w) const;
    element_type inverse(element_type w) const;

    GeneratorMask left_descents(element_type w) const;
    GeneratorMask right_descents(element_type w) const;

    std::vector<std::size_t> reduced_word(element_type w) const;
    carrier_perm const&      carrier_permutation(element_type w) const {
      return elements_.at(w);
    }
    std::optional<element_type> find(carrier_perm const& p) const;

    // The generator t with w_0 s w_0 = t.
    std::size_t conjugate_by_longest(std::size_t s) const;

    // One-line notation for type A, otherwise a reduced word such as
    // "s1s2s1" ("e" for the identity).
    std::string label(element_type w) const;
    std::string generator_name(std::size_t s) const {
      return "s" + std::to_string(s + 1);
    }

    // 0-Hecke monoid H(W): z_w indexed by w.
    element_type hecke_generator_mul(std::size_t  s,
                                     element_type w,
                                     Side         side) const;
    element_type hecke_mul(element_type u, element_type w) const;

    // Lower Bruhat interval [e, w] as a membership vector, computed as the
    // set of products of subwords of a reduced word of w.
    std::vector<bool> bruhat_ideal(element_type w) const;
    bool              bruhat_leq(element_type u, element_type w) const;

   private:
    CoxeterSystem() = default;
    void enumerate(std::size_t cap);

    struct PermHash {
      std::size_t operator()(carrier_perm const& p) const noexcept;
    };

    std::string                                          name_;
    std::optional<CoxeterType>                           type_;
    std::size_t                                          carrier_size_ = 0;
    std::vector<carrier_perm>                            generators_;
    coxeter_matrix_type                                  matrix_;
    std::vector<carrier_perm>                            elements_;
    std::unordered_map<carrier_perm, element_type, PermHash> lookup_;
    std::vector<element_type>                            right_;
    std::vector<element_type>                            left_;
    std::vector<std::uint32_t>                           length_;
    std::vector<element_type>                            parent_;
    std::vector<std::uint32_t>                           last_letter_;
    element_type                                         longest_ = 0;
  };

  // W_J, its longest element w_J, and the maximal-length coset
  // representatives W^J = {w : D_R(w) contains J}.
  struct ParabolicData {
    GeneratorMask                            subset = 0;
    std::vector<CoxeterSystem::element_type> elements;
    CoxeterSystem::element_type              longest = 0;
    std::vector<CoxeterSystem::element_type> max_reps;
  };

  ParabolicData parabolic(CoxeterSystem const& sys, GeneratorMask subset);

  // w^J, computed as the Hecke product z_w e_J.
  CoxeterSystem::element_type coset_max_rep(CoxeterSystem const&        sys,
                                            GeneratorMask               subset,
                                            CoxeterSystem::element_type w);

  // H(W) as a monoid table on the generators e_s.
  Closure<CoxeterSystem::element_type>
  hecke_monoid(CoxeterSystem const& sys, ClosureOptions const& opts = {});

  // The effective quotient of H(W) acting on the left ideal H(W) e_J by
  // z -> e_s z. Points of the transformations index `max_reps` of
  // parabolic(sys, subset) in increasing element order.
  Closure<Transformation>
  generalized_catalan_quotient(CoxeterSystem const&  sys,
                               GeneratorMask         subset,
                               ClosureOptions const& opts = {});

  struct DoubleCatalanQuotient {
    Closure<BoolMatrix> monoid;
    // Coset k is x W_J for x = min_reps[k]; cosets are ordered by the
    // position of their first element in breadth-first order.
    std::vector<CoxeterSystem::element_type> min_reps;
  };

  // The boolean-matrix image of H(W) under e_s -> I + Phi(rho(s)) where rho
  // is the action of W on W / W_J.
  DoubleCatalanQuotient
  generalized_double_catalan(CoxeterSystem const&  sys,
                             GeneratorMask         subset,
                             ClosureOptions const& opts = {});

  // v(W) = sum over s of [W : W_(s)], the number of vertices of the Coxeter
  // complex.
  std::size_t vertex_count(CoxeterSystem const& sys);

  // Action of H(W) on the disjoint union of the left ideals H(W) e_(s).
  struct IdealUnionAction {
    std::size_t carrier_size = 0;
    bool        effective    = false;
  };
  IdealUnionAction maximal_ideal_union_action(CoxeterSystem const& sys);

  GeneratorMask parse_generator_subset(std::string_view text, std::size_t rank);
  std::string   generator_subset_to_string(GeneratorMask mask, std::size_t rank);

}  // namespace catkit

#endif  // CATKIT_COXETER_HPP_
