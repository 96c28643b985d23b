#ifndef CATKIT_HECKE_HPP_
#define CATKIT_HECKE_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "catkit/monoid.hpp"
#include "catkit/permutation.hpp"

namespace catkit {

  enum class Side { left, right };

  // The element z_w of the 0-Hecke monoid H_n, represented by w itself.
  class HeckeElement {
   public:
    HeckeElement() = default;
    explicit HeckeElement(Permutation w) : w_(std::move(w)) {}

    static HeckeElement identity(std::size_t n) {
      return HeckeElement(Permutation::identity(n));
    }
    // The generator e_i.
    static HeckeElement generator(std::size_t n, std::size_t i) {
      return HeckeElement(Permutation::simple(n, i));
    }

    Permutation const& permutation() const noexcept {
      return w_;
    }
    std::size_t degree() const noexcept {
      return w_.degree();
    }

    auto operator<=>(HeckeElement const&) const = default;

   private:
    Permutation w_;
  };

  // e_i z_w = z_{s_i w} if that is longer, else z_w; dually on the right.
  HeckeElement hecke_generator_mul(std::size_t         i,
                                   HeckeElement const& z,
                                   Side                side);
  HeckeElement hecke_mul(HeckeElement const& a, HeckeElement const& b);
  // The canonical involution induced by word reversal: z_w -> z_{w^{-1}}.
  HeckeElement reversal(HeckeElement const& z);

  using PermutationSet = std::set<Permutation>;

  // {u : u <= w in the Bruhat order}.
  PermutationSet bruhat_ideal(Permutation const& w);
  // {ab : a in A, b in B}.
  PermutationSet ideal_product(PermutationSet const& a, PermutationSet const& b);

  // All z_w with z_w z_w = z_w, in lexicographic order of w.
  std::vector<HeckeElement> idempotents(std::size_t n);

  // The longest element of the parabolic subgroup generated by the s_i with
  // i in `letters`.
  Permutation parabolic_longest(std::size_t n, std::vector<int> const& letters);

  // H_n as a monoid table on generators e_1 .. e_{n-1}.
  Closure<HeckeElement> hecke_monoid(std::size_t           n,
                                     ClosureOptions const& opts = {});

  // An ordered set partition of {1..n}; a face of the Coxeter complex of S_n.
  // Blocks are kept sorted internally.
  class OrderedSetPartition {
   public:
    OrderedSetPartition() = default;
    explicit OrderedSetPartition(std::vector<std::vector<int>> blocks);

    // The chamber ({w(1)}, ..., {w(n)}) associated with w.
    static OrderedSetPartition chamber(Permutation const& w);

    std::vector<std::vector<int>> const& blocks() const noexcept {
      return blocks_;
    }
    std::size_t degree() const noexcept {
      return n_;
    }
    // Index of the block containing x.
    std::size_t block_of(int x) const;

    // Chambers correspond to permutations; only valid when every block is
    // a singleton.
    Permutation to_permutation() const;

    auto operator<=>(OrderedSetPartition const&) const = default;

   private:
    std::size_t                   n_ = 0;
    std::vector<std::vector<int>> blocks_;
  };

  // The folding phi_i: swap i and i+1 when they lie in different blocks and
  // the block of i comes first; otherwise fix the partition.
  OrderedSetPartition fold(std::size_t i, OrderedSetPartition const& f);

  // "({1,3},{2,4})"
  std::string         to_string(OrderedSetPartition const& f);
  OrderedSetPartition parse_ordered_set_partition(std::string_view text);

}  // namespace catkit

#endif  // CATKIT_HECKE_HPP_
