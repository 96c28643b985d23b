#ifndef CATKIT_LINALG_HPP_
#define CATKIT_LINALG_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace catkit {

  using Rational       = mpq_class;
  using RationalVector = std::vector<Rational>;

  // Dense row-major matrix over the rationals.
  class RationalMatrix {
   public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }
    Rational& at(std::size_t i, std::size_t j) {
      return data_[i * cols_ + j];
    }
    Rational const& at(std::size_t i, std::size_t j) const {
      return data_[i * cols_ + j];
    }

    bool operator==(RationalMatrix const& other) const;

    friend RationalMatrix operator*(RationalMatrix const& a, RationalMatrix const& b);
    friend RationalMatrix operator-(RationalMatrix const& a, RationalMatrix const& b);
    RationalVector        operator*(RationalVector const& v) const;

   private:
    std::size_t           rows_ = 0;
    std::size_t           cols_ = 0;
    std::vector<Rational> data_;
  };

  // Rows of a on top of rows of b.
  RationalMatrix stack(RationalMatrix const& a, RationalMatrix const& b);
  // Block diagonal.
  RationalMatrix direct_sum(RationalMatrix const& a, RationalMatrix const& b);

  std::string to_string(RationalMatrix const& a);
  std::string to_string(RationalVector const& v);

  // Basis of {x : a x = 0}. Rows are cleared of denominators, reduced to
  // echelon form by fraction-free (Bareiss) elimination pivoting on the
  // first nonzero column at the smallest row index, and each free column f
  // yields the solution with x_f = 1 and every other free variable 0.
  std::vector<RationalVector> nullspace(RationalMatrix const& a);
  std::size_t                 rank(RationalMatrix const& a);

  // Same pivoting over Z/p; entries must be integers. Returns a basis of
  // the nullspace with entries in [0, p).
  std::vector<std::vector<std::uint64_t>> nullspace_mod_p(RationalMatrix const& a,
                                                          std::uint64_t         p);

}  // namespace catkit

#endif  // CATKIT_LINALG_HPP_
