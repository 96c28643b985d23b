#include "catkit/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "catkit/error.hpp"

namespace catkit {

  RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.at(i, i) = 1;
    }
    return m;
  }

  bool RationalMatrix::operator==(RationalMatrix const& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  RationalMatrix operator*(RationalMatrix const& a, RationalMatrix const& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("matrix product: dimension mismatch");
    }
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        Rational const& x = a.at(i, k);
        if (sgn(x) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (sgn(b.at(k, j)) != 0) {
            out.at(i, j) += x * b.at(k, j);
          }
        }
      }
    }
    return out;
  }

  RationalMatrix operator-(RationalMatrix const& a, RationalMatrix const& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw std::invalid_argument("matrix difference: dimension mismatch");
    }
    RationalMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) {
      out.data_[k] = a.data_[k] - b.data_[k];
    }
    return out;
  }

  RationalVector RationalMatrix::operator*(RationalVector const& v) const {
    if (v.size() != cols_) {
      throw std::invalid_argument("matrix-vector product: dimension mismatch");
    }
    RationalVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        out[i] += at(i, j) * v[j];
      }
    }
    return out;
  }

  RationalMatrix stack(RationalMatrix const& a, RationalMatrix const& b) {
    if (a.cols() != b.cols()) {
      throw std::invalid_argument("stack: column mismatch");
    }
    RationalMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        out.at(i, j) = a.at(i, j);
      }
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(a.rows() + i, j) = b.at(i, j);
      }
    }
    return out;
  }

  RationalMatrix direct_sum(RationalMatrix const& a, RationalMatrix const& b) {
    RationalMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        out.at(i, j) = a.at(i, j);
      }
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
      }
    }
    return out;
  }

  std::string to_string(RationalVector const& v) {
    std::string out = "[";
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j > 0) {
        out += ',';
      }
      out += v[j].get_str();
    }
    return out + "]";
  }

  std::string to_string(RationalMatrix const& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i > 0) {
        out += ',';
      }
      RationalVector row(a.cols());
      for (std::size_t j = 0; j < a.cols(); ++j) {
        row[j] = a.at(i, j);
      }
      out += to_string(row);
    }
    return out + "]";
  }

  namespace {
    struct Echelon {
      std::vector<std::vector<mpz_class>> rows;
      std::vector<std::size_t>            pivots;  // pivot column of row k
    };

    Echelon bareiss(RationalMatrix const& a) {
      std::size_t const m = a.rows();
      std::size_t const n = a.cols();
      Echelon           e;
      e.rows.assign(m, std::vector<mpz_class>(n));
      for (std::size_t i = 0; i < m; ++i) {
        mpz_class den = 1;
        for (std::size_t j = 0; j < n; ++j) {
          mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                  a.at(i, j).get_den_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
          mpq_class scaled = a.at(i, j) * den;
          e.rows[i][j]     = scaled.get_num();
        }
      }
      auto&       A    = e.rows;
      mpz_class   prev = 1;
      std::size_t r    = 0;
      for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && sgn(A[p][c]) == 0) {
          ++p;
        }
        if (p == m) {
          continue;
        }
        std::swap(A[p], A[r]);
        for (std::size_t i = r + 1; i < m; ++i) {
          for (std::size_t j = c + 1; j < n; ++j) {
            mpz_class t = A[r][c] * A[i][j] - A[i][c] * A[r][j];
            if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t())) {
              throw InternalError("fraction-free elimination lost exactness");
            }
            mpz_divexact(A[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          }
          A[i][c] = 0;
        }
        prev = A[r][c];
        e.pivots.push_back(c);
        ++r;
      }
      return e;
    }
  }  // namespace

  std::vector<RationalVector> nullspace(RationalMatrix const& a) {
    std::size_t const n = a.cols();
    Echelon const     e = bareiss(a);
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) {
      is_pivot[c] = true;
    }
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
      if (is_pivot[f]) {
        continue;
      }
      RationalVector x(n);
      x[f] = 1;
      for (std::size_t k = e.pivots.size(); k-- > 0;) {
        std::size_t const c = e.pivots[k];
        Rational          s = 0;
        for (std::size_t j = c + 1; j < n; ++j) {
          if (sgn(e.rows[k][j]) != 0 && sgn(x[j]) != 0) {
            s += Rational(e.rows[k][j]) * x[j];
          }
        }
        x[c] = -s / Rational(e.rows[k][c]);
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

  std::size_t rank(RationalMatrix const& a) {
    return bareiss(a).pivots.size();
  }

  std::vector<std::vector<std::uint64_t>> nullspace_mod_p(RationalMatrix const& a,
                                                          std::uint64_t         p) {
    if (p < 2 || p > (std::uint64_t{1} << 31)) {
      throw std::invalid_argument("modulus must be a prime below 2^31");
    }
    std::size_t const m = a.rows();
    std::size_t const n = a.cols();
    using u64           = std::uint64_t;
    std::vector<std::vector<u64>> A(m, std::vector<u64>(n));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational const& q = a.at(i, j);
        if (q.get_den() != 1) {
          throw std::invalid_argument("nullspace_mod_p needs an integer matrix");
        }
        mpz_class r = q.get_num() % static_cast<unsigned long>(p);
        if (r < 0) {
          r += static_cast<unsigned long>(p);
        }
        A[i][j] = r.get_ui();
      }
    }
    auto inv = [p](u64 x) {
      u64 result = 1;
      u64 e      = p - 2;
      while (e > 0) {
        if (e & 1U) {
          result = result * x % p;
        }
        x = x * x % p;
        e >>= 1U;
      }
      return result;
    };
    std::vector<std::size_t> pivots;
    std::size_t              r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
      std::size_t q = r;
      while (q < m && A[q][c] == 0) {
        ++q;
      }
      if (q == m) {
        continue;
      }
      std::swap(A[q], A[r]);
      u64 const s = inv(A[r][c]);
      for (auto& x : A[r]) {
        x = x * s % p;
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (i == r || A[i][c] == 0) {
          continue;
        }
        u64 const f = A[i][c];
        for (std::size_t j = 0; j < n; ++j) {
          A[i][j] = (A[i][j] + (p - f) * A[r][j]) % p;
        }
      }
      pivots.push_back(c);
      ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) {
      is_pivot[c] = true;
    }
    std::vector<std::vector<u64>> basis;
    for (std::size_t f = 0; f < n; ++f) {
      if (is_pivot[f]) {
        continue;
      }
      std::vector<u64> x(n, 0);
      x[f] = 1;
      for (std::size_t k = 0; k < pivots.size(); ++k) {
        x[pivots[k]] = (p - A[k][f]) % p;
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

}  // namespace catkit
