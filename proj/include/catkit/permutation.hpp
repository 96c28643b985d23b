#ifndef CATKIT_PERMUTATION_HPP_
#define CATKIT_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace catkit {

  // A permutation of {1, ..., n} in one-line notation. Values are 1-based
  // throughout: p(j) is the image of j.
  //
  // Composition convention: compose(u, w)(j) = u(w(j)), i.e. w is applied
  // first. Under this convention right multiplication by s_i swaps the
  // entries in positions i and i+1, and left multiplication by s_i swaps the
  // values i and i+1.
  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);
    Permutation(std::initializer_list<int> one_line)
        : Permutation(std::vector<int>(one_line)) {}

    static Permutation identity(std::size_t n);
    // The simple transposition s_i = (i, i+1), 1 <= i <= n-1.
    static Permutation simple(std::size_t n, std::size_t i);
    // The longest element n (n-1) ... 1.
    static Permutation longest(std::size_t n);

    std::size_t degree() const noexcept {
      return values_.size();
    }
    int operator()(int j) const {
      return values_[static_cast<std::size_t>(j - 1)];
    }
    std::vector<int> const& values() const noexcept {
      return values_;
    }

    // Number of inversions, which is the Coxeter length.
    std::size_t length() const;
    bool is_identity() const;
    bool is_involution() const;

    auto operator<=>(Permutation const&) const = default;

   private:
    std::vector<int> values_;
  };

  // Word in the simple transpositions, letters are indices i of s_i.
  struct ReducedWord {
    std::vector<int> letters;

    std::size_t size() const noexcept {
      return letters.size();
    }
    bool operator==(ReducedWord const&) const = default;
  };

  Permutation compose(Permutation const& u, Permutation const& w);
  Permutation invert(Permutation const& w);

  // s_{l_1} s_{l_2} ... s_{l_k} in S_n. Letters need not form a reduced word.
  Permutation evaluate_word(std::size_t n, std::vector<int> const& letters);
  ReducedWord reduced_word(Permutation const& w);

  // Bruhat order through the prefix dominance criterion, O(n^2).
  bool bruhat_leq(Permutation const& u, Permutation const& w);

  // True iff some subsequence of w is order-isomorphic to p (exhaustive).
  bool contains_pattern(Permutation const& w, Permutation const& p);
  inline bool avoids(Permutation const& w, Permutation const& p) {
    return !contains_pattern(w, p);
  }

  // All permutations of degree n in lexicographic order.
  std::vector<Permutation> all_permutations(std::size_t n);

  // Permutations with n <= 9 are written without separators ("4231"); larger
  // degrees use commas ("1,2,...,10").
  std::string to_string(Permutation const& w);
  Permutation parse_permutation(std::string_view text);

  // An order preserving map of {1..n} that is either non-decreasing
  // (f(i) >= i, an element of the Catalan monoid C_n^+) or non-increasing
  // (f(i) <= i, an element of C_n^-).
  class MonotoneMap {
   public:
    enum class Direction : std::uint8_t { nondecreasing, nonincreasing };

    MonotoneMap() = default;
    MonotoneMap(std::vector<int> values, Direction dir);

    static MonotoneMap identity(std::size_t n, Direction dir);

    std::size_t degree() const noexcept {
      return values_.size();
    }
    Direction direction() const noexcept {
      return dir_;
    }
    int operator()(int i) const {
      return values_[static_cast<std::size_t>(i - 1)];
    }
    std::vector<int> const& values() const noexcept {
      return values_;
    }

    auto operator<=>(MonotoneMap const&) const = default;

   private:
    std::vector<int> values_;
    Direction        dir_ = Direction::nondecreasing;
  };

  // (f g)(i) = f(g(i)), matching relation composition of the graphs.
  MonotoneMap compose(MonotoneMap const& f, MonotoneMap const& g);

  // Pointwise order for C_n^+, opposite pointwise order for C_n^-.
  bool leq(MonotoneMap const& f, MonotoneMap const& g);

  // alpha(w)(i) = max{w(j) : j <= i}, the left-to-right maximum map.
  MonotoneMap alpha(Permutation const& w);
  // beta(w)(i) = min{w(j) : j >= i}, the right-to-left minimum map.
  MonotoneMap beta(Permutation const& w);

  // Every element of C_n^+ (resp. C_n^-), in lexicographic order of values.
  std::vector<MonotoneMap> all_monotone_maps(std::size_t            n,
                                             MonotoneMap::Direction dir);

  // "(2,3,3)"
  std::string to_string(MonotoneMap const& f);
  // Accepts "(2,3,3)", "2,3,3" or, for n <= 9, "233".
  MonotoneMap parse_monotone_map(std::string_view       text,
                                 MonotoneMap::Direction dir);

}  // namespace catkit

template <>
struct std::hash<catkit::Permutation> {
  std::size_t operator()(catkit::Permutation const& p) const noexcept;
};

template <>
struct std::hash<catkit::MonotoneMap> {
  std::size_t operator()(catkit::MonotoneMap const& f) const noexcept;
};

#endif  // CATKIT_PERMUTATION_HPP_
