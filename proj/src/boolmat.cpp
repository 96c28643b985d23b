#include "catkit/boolmat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace catkit {

  namespace {
    void require_same_degree(BoolMatrix const& a, BoolMatrix const& b) {
      if (a.degree() != b.degree()) {
        throw std::invalid_argument(
            "boolean matrix degree mismatch (" + std::to_string(a.degree())
            + " vs " + std::to_string(b.degree()) + ")");
      }
    }

    bool is_interval(std::vector<std::size_t> const& support) {
      return !support.empty()
             && support.back() - support.front() + 1 == support.size();
    }
  }  // namespace

  BoolMatrix::BoolMatrix(std::size_t n)
      : n_(n), stride_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

  BoolMatrix BoolMatrix::identity(std::size_t n) {
    BoolMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m.set(i, i);
    }
    return m;
  }

  BoolMatrix BoolMatrix::ones(std::size_t n) {
    BoolMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m.set(i, j);
      }
    }
    return m;
  }

  BoolMatrix BoolMatrix::from_permutation(Permutation const& w) {
    BoolMatrix m(w.degree());
    for (std::size_t j = 0; j < w.degree(); ++j) {
      m.set(static_cast<std::size_t>(w.values()[j] - 1), j);
    }
    return m;
  }

  BoolMatrix BoolMatrix::from_rows(std::vector<std::string> const& rows) {
    BoolMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw std::invalid_argument("boolean matrix row " + std::to_string(i)
                                    + " has length "
                                    + std::to_string(rows[i].size())
                                    + ", expected "
                                    + std::to_string(rows.size()));
      }
      for (std::size_t j = 0; j < rows.size(); ++j) {
        char const c = rows[i][j];
        if (c != '0' && c != '1') {
          throw std::invalid_argument("boolean matrix entries must be 0 or 1");
        }
        m.set(i, j, c == '1');
      }
    }
    return m;
  }

  std::vector<std::size_t> BoolMatrix::column_support(std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (get(i, j)) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<std::size_t> BoolMatrix::row_support(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_; ++j) {
      if (get(i, j)) {
        out.push_back(j);
      }
    }
    return out;
  }

  BoolMatrix BoolMatrix::merge_rows(std::size_t i) const {
    if (i + 1 >= n_) {
      throw std::invalid_argument("merge_rows: index out of range");
    }
    BoolMatrix out = *this;
    for (std::size_t k = 0; k < stride_; ++k) {
      word_type const w    = row_ptr(i)[k] | row_ptr(i + 1)[k];
      out.row_ptr(i)[k]     = w;
      out.row_ptr(i + 1)[k] = w;
    }
    return out;
  }

  BoolMatrix BoolMatrix::merge_columns(std::size_t i) const {
    if (i + 1 >= n_) {
      throw std::invalid_argument("merge_columns: index out of range");
    }
    BoolMatrix out = *this;
    for (std::size_t r = 0; r < n_; ++r) {
      bool const v = get(r, i) || get(r, i + 1);
      out.set(r, i, v);
      out.set(r, i + 1, v);
    }
    return out;
  }

  bool BoolMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (get(i, j) != get(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  bool BoolMatrix::is_subset_of(BoolMatrix const& other) const {
    require_same_degree(*this, other);
    for (std::size_t k = 0; k < bits_.size(); ++k) {
      if ((bits_[k] & ~other.bits_[k]) != 0) {
        return false;
      }
    }
    return true;
  }

  std::size_t BoolMatrix::hash() const noexcept {
    std::size_t seed = n_;
    for (word_type w : bits_) {
      seed ^= static_cast<std::size_t>(w * 0x9e3779b97f4a7c15ULL) + (seed << 6)
              + (seed >> 2);
    }
    return seed;
  }

  BoolMatrix operator*(BoolMatrix const& a, BoolMatrix const& b) {
    require_same_degree(a, b);
    BoolMatrix out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      BoolMatrix::word_type* dst = out.row_ptr(i);
      for (std::size_t s = 0; s < a.n_; ++s) {
        if (a.get(i, s)) {
          BoolMatrix::word_type const* src = b.row_ptr(s);
          for (std::size_t k = 0; k < a.stride_; ++k) {
            dst[k] |= src[k];
          }
        }
      }
    }
    return out;
  }

  BoolMatrix operator|(BoolMatrix const& a, BoolMatrix const& b) {
    require_same_degree(a, b);
    BoolMatrix out = a;
    for (std::size_t k = 0; k < out.bits_.size(); ++k) {
      out.bits_[k] |= b.bits_[k];
    }
    return out;
  }

  BoolMatrix transpose(BoolMatrix const& a) {
    BoolMatrix out(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) {
      for (std::size_t j = 0; j < a.degree(); ++j) {
        if (a.get(i, j)) {
          out.set(j, i);
        }
      }
    }
    return out;
  }

  std::string to_string(BoolMatrix const& a) {
    std::string out;
    out.reserve(a.degree() * a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) {
      for (std::size_t j = 0; j < a.degree(); ++j) {
        out += a.get(i, j) ? '1' : '0';
      }
    }
    return out;
  }

  std::string to_text(BoolMatrix const& a) {
    std::string out;
    for (std::size_t i = 0; i < a.degree(); ++i) {
      for (std::size_t j = 0; j < a.degree(); ++j) {
        out += a.get(i, j) ? '1' : '0';
      }
      out += '\n';
    }
    return out;
  }

  BoolMatrix parse_bool_matrix(std::string_view text) {
    std::vector<std::string> rows;
    std::string              current;
    for (char c : text) {
      if (c == '\n' || c == '/' || c == ',' || c == ';') {
        if (!current.empty()) {
          rows.push_back(current);
          current.clear();
        }
      } else if (c == ' ' || c == '\r' || c == '\t') {
        continue;
      } else {
        current += c;
      }
    }
    if (!current.empty()) {
      rows.push_back(current);
    }
    if (rows.size() == 1 && rows[0].size() > 1) {
      auto const len = rows[0].size();
      auto const n   = static_cast<std::size_t>(
          std::llround(std::sqrt(static_cast<double>(len))));
      if (n * n != len) {
        throw std::invalid_argument("bit string length " + std::to_string(len)
                                    + " is not a perfect square");
      }
      std::vector<std::string> split;
      for (std::size_t i = 0; i < n; ++i) {
        split.push_back(rows[0].substr(i * n, n));
      }
      rows = std::move(split);
    }
    return BoolMatrix::from_rows(rows);
  }

  bool is_convex(BoolMatrix const& a) {
    for (std::size_t i = 0; i < a.degree(); ++i) {
      if (!a.get(i, i)) {
        return false;
      }
    }
    for (std::size_t k = 0; k < a.degree(); ++k) {
      if (!is_interval(a.column_support(k)) || !is_interval(a.row_support(k))) {
        return false;
      }
    }
    return true;
  }

  ConvexRelation::ConvexRelation(BoolMatrix m) : m_(std::move(m)) {
    if (!is_convex(m_)) {
      throw std::invalid_argument("relation is not convex:\n" + to_text(m_));
    }
  }

  ConvexRelation operator*(ConvexRelation const& a, ConvexRelation const& b) {
    // Closed under product, no need to re-validate.
    return ConvexRelation(a.m_ * b.m_, ConvexRelation::trusted{});
  }

  MonotoneMap max_map(ConvexRelation const& a) {
    std::vector<int> v(a.degree());
    for (std::size_t j = 0; j < a.degree(); ++j) {
      v[j] = static_cast<int>(a.matrix().column_support(j).back() + 1);
    }
    return MonotoneMap(std::move(v), MonotoneMap::Direction::nondecreasing);
  }

  MonotoneMap min_map(ConvexRelation const& a) {
    std::vector<int> v(a.degree());
    for (std::size_t j = 0; j < a.degree(); ++j) {
      v[j] = static_cast<int>(a.matrix().column_support(j).front() + 1);
    }
    return MonotoneMap(std::move(v), MonotoneMap::Direction::nonincreasing);
  }

  MonotoneMap max_map(BoolMatrix const& a) {
    return max_map(ConvexRelation(a));
  }

  MonotoneMap min_map(BoolMatrix const& a) {
    return min_map(ConvexRelation(a));
  }

  std::pair<MonotoneMap, MonotoneMap> theta(ConvexRelation const& a) {
    return {max_map(a), min_map(a)};
  }

  ConvexRelation theta_inverse(MonotoneMap const& upper,
                               MonotoneMap const& lower) {
    if (upper.direction() != MonotoneMap::Direction::nondecreasing
        || lower.direction() != MonotoneMap::Direction::nonincreasing) {
      throw std::invalid_argument(
          "theta_inverse expects (non-decreasing, non-increasing) maps");
    }
    if (upper.degree() != lower.degree()) {
      throw std::invalid_argument("theta_inverse: degree mismatch");
    }
    BoolMatrix m(upper.degree());
    for (std::size_t j = 0; j < upper.degree(); ++j) {
      for (int i = lower.values()[j]; i <= upper.values()[j]; ++i) {
        m.set(static_cast<std::size_t>(i - 1), j);
      }
    }
    return ConvexRelation(std::move(m), ConvexRelation::trusted{});
  }

  std::vector<ConvexRelation> all_convex_relations(std::size_t n) {
    auto const ups = all_monotone_maps(n, MonotoneMap::Direction::nondecreasing);
    auto const downs
        = all_monotone_maps(n, MonotoneMap::Direction::nonincreasing);
    std::vector<ConvexRelation> out;
    out.reserve(ups.size() * downs.size());
    for (auto const& a : ups) {
      for (auto const& b : downs) {
        out.push_back(theta_inverse(a, b));
      }
    }
    return out;
  }

}  // namespace catkit
