#ifndef CATKIT_DYCK_HPP_
#define CATKIT_DYCK_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catkit/permutation.hpp"

namespace catkit {

  // A Dyck path as a string over 'U' and 'D'.
  class DyckPath {
   public:
    DyckPath() = default;
    // Throws std::invalid_argument unless every prefix has at least as many
    // U steps as D steps and the totals agree.
    explicit DyckPath(std::string steps);

    std::string const& steps() const noexcept {
      return steps_;
    }
    std::size_t semilength() const noexcept {
      return steps_.size() / 2;
    }
    // Indices k with steps[k] = 'D' and steps[k + 1] = 'U'.
    std::vector<std::size_t> valleys() const;

    auto operator<=>(DyckPath const&) const = default;

   private:
    std::string steps_;
  };

  inline std::string const& to_string(DyckPath const& p) {
    return p.steps();
  }

  struct PathPair {
    DyckPath first;
    DyckPath second;

    auto operator<=>(PathPair const&) const = default;
  };

  // All Dyck paths of semilength n, in lexicographic order of the step
  // string.
  std::vector<DyckPath> all_dyck_paths(std::size_t n);

  // For j = n down to 1 emit U followed by alpha(j) - alpha(j-1) copies of D
  // (alpha(0) = 0). The identity goes to (UD)^n and the constant map n to
  // U^n D^n.
  DyckPath    delta(MonotoneMap const& alpha);
  MonotoneMap delta_inverse(DyckPath const& p);

  // i(Delta(alpha)) = Delta(alpha of pi_alpha^{-1}).
  DyckPath kreweras_derivative(DyckPath const& p);

  // alpha < beta iff beta = g1 alpha = alpha g2 for some g1, g2 in C_n^+.
  bool h_order_prec(MonotoneMap const& a, MonotoneMap const& b);

  // Every path obtained by choosing a run of consecutive valleys (possibly
  // empty) and completing each chosen valley D^b U^a to U^a D^b. The first
  // entry is p itself.
  std::vector<DyckPath> rectangular_covers(DyckPath const& p);

  // Reflexive-transitive closure of the covers, pulled back through Delta.
  bool prec_prime(MonotoneMap const& a, MonotoneMap const& b);

  // A relation on all_monotone_maps(n, nondecreasing), in that order.
  struct OrderTable {
    std::vector<MonotoneMap>       maps;
    std::vector<std::vector<bool>> holds;  // holds[i][j]: maps[i] before maps[j]
  };
  OrderTable h_order_table(std::size_t n);
  OrderTable prec_prime_table(std::size_t n);

  // (Delta(alpha_w), Delta(alpha_{w^{-1}})).
  PathPair admissible_pair_of(Permutation const& w);

  // Delta^{-1}(i first) < Delta^{-1}(second) and
  // Delta^{-1}(i second) < Delta^{-1}(first).
  bool is_admissible(PathPair const& pair);
  // Some w in S_n realizes the pair.
  bool is_admissible_brute(PathPair const& pair);
  // Every admissible pair of semilength n.
  std::set<PathPair> admissible_pairs(std::size_t n);

}  // namespace catkit

#endif  // CATKIT_DYCK_HPP_
