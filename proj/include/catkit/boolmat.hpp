#ifndef CATKIT_BOOLMAT_HPP_
#define CATKIT_BOOLMAT_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catkit/permutation.hpp"

namespace catkit {

  // An n x n matrix over the boolean semiring, i.e. a binary relation on
  // {1..n} with (i, j) in the relation iff entry (i, j) is set. Rows are
  // packed into 64-bit words. Indices in this class are 0-based.
  class BoolMatrix {
   public:
    using word_type = std::uint64_t;

    BoolMatrix() = default;
    explicit BoolMatrix(std::size_t n);

    static BoolMatrix identity(std::size_t n);
    static BoolMatrix ones(std::size_t n);
    // Phi(w): column j has its unique 1 in row w(j).
    static BoolMatrix from_permutation(Permutation const& w);
    // One string of '0'/'1' per row.
    static BoolMatrix from_rows(std::vector<std::string> const& rows);

    std::size_t degree() const noexcept {
      return n_;
    }

    bool get(std::size_t i, std::size_t j) const noexcept {
      return (bits_[i * stride_ + j / 64] >> (j % 64)) & 1U;
    }
    void set(std::size_t i, std::size_t j, bool value = true) noexcept {
      word_type const mask = word_type{1} << (j % 64);
      if (value) {
        bits_[i * stride_ + j / 64] |= mask;
      } else {
        bits_[i * stride_ + j / 64] &= ~mask;
      }
    }

    // xi(j) = {i : (i, j) set} as a sorted list of row indices.
    std::vector<std::size_t> column_support(std::size_t j) const;
    std::vector<std::size_t> row_support(std::size_t i) const;

    // Replace rows i and i+1 by their sum; equals left multiplication by
    // epsilon_{i+1} (0-based i).
    BoolMatrix merge_rows(std::size_t i) const;
    // Replace columns i and i+1 by their sum; right multiplication.
    BoolMatrix merge_columns(std::size_t i) const;

    bool is_symmetric() const;
    // Entrywise inclusion: every set entry of *this is set in other.
    bool is_subset_of(BoolMatrix const& other) const;

    std::size_t hash() const noexcept;

    bool operator==(BoolMatrix const& other) const = default;
    bool operator<(BoolMatrix const& other) const {
      return n_ != other.n_ ? n_ < other.n_ : bits_ < other.bits_;
    }

    friend BoolMatrix operator*(BoolMatrix const& a, BoolMatrix const& b);
    friend BoolMatrix operator|(BoolMatrix const& a, BoolMatrix const& b);

   private:
    word_type const* row_ptr(std::size_t i) const noexcept {
      return bits_.data() + i * stride_;
    }
    word_type* row_ptr(std::size_t i) noexcept {
      return bits_.data() + i * stride_;
    }

    std::size_t            n_      = 0;
    std::size_t            stride_ = 0;
    std::vector<word_type> bits_;
  };

  inline BoolMatrix bool_product(BoolMatrix const& a, BoolMatrix const& b) {
    return a * b;
  }
  BoolMatrix transpose(BoolMatrix const& a);

  // Canonical encoding: the row-major bit string, e.g. "1100110000100001".
  std::string to_string(BoolMatrix const& a);
  // Text format: one line of '0'/'1' per row.
  std::string to_text(BoolMatrix const& a);
  // Accepts n rows separated by newlines, '/' or ','; or the n*n row-major
  // bit string when n*n has an integer square root.
  BoolMatrix parse_bool_matrix(std::string_view text);

  // Reflexive, and every row support and column support is an interval.
  bool is_convex(BoolMatrix const& a);

  // A BoolMatrix known to be convex.
  class ConvexRelation {
   public:
    // Throws std::invalid_argument when m is not convex.
    explicit ConvexRelation(BoolMatrix m);

    static ConvexRelation identity(std::size_t n) {
      return ConvexRelation(BoolMatrix::identity(n));
    }

    BoolMatrix const& matrix() const noexcept {
      return m_;
    }
    std::size_t degree() const noexcept {
      return m_.degree();
    }

    bool operator==(ConvexRelation const&) const = default;

    friend ConvexRelation operator*(ConvexRelation const& a,
                                    ConvexRelation const& b);

   private:
    struct trusted {};
    ConvexRelation(BoolMatrix m, trusted) : m_(std::move(m)) {}
    friend ConvexRelation theta_inverse(MonotoneMap const&, MonotoneMap const&);

    BoolMatrix m_;
  };

  // max(xi)(j) = max xi(j), an element of C_n^+.
  MonotoneMap max_map(ConvexRelation const& a);
  // min(xi)(j) = min xi(j), an element of C_n^-.
  MonotoneMap min_map(ConvexRelation const& a);
  // Overloads that validate convexity first.
  MonotoneMap max_map(BoolMatrix const& a);
  MonotoneMap min_map(BoolMatrix const& a);

  std::pair<MonotoneMap, MonotoneMap> theta(ConvexRelation const& a);
  // The relation with (i, j) set iff lower(j) <= i <= upper(j).
  ConvexRelation theta_inverse(MonotoneMap const& upper,
                               MonotoneMap const& lower);

  // Every convex relation of degree n, as theta_inverse over C_n^+ x C_n^-.
  std::vector<ConvexRelation> all_convex_relations(std::size_t n);

}  // namespace catkit

template <>
struct std::hash<catkit::BoolMatrix> {
  std::size_t operator()(catkit::BoolMatrix const& m) const noexcept {
    return m.hash();
  }
};

#endif  // CATKIT_BOOLMAT_HPP_
