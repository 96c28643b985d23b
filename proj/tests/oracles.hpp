// Brute-force reference values computed without the library.
#ifndef CATKIT_TESTS_ORACLES_HPP_
#define CATKIT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

  using Perm = std::vector<int>;

  inline std::vector<Perm> permutations(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Perm> out;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  // Every k-subset of positions, compared against the pattern's relative order.
  inline bool contains(Perm const& w, Perm const& p) {
    std::size_t const n = w.size();
    std::size_t const k = p.size();
    if (k > n) {
      return false;
    }
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
    do {
      std::vector<int> sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask[i]) {
          sub.push_back(w[i]);
        }
      }
      bool same = true;
      for (std::size_t a = 0; a < k && same; ++a) {
        for (std::size_t b = 0; b < k && same; ++b) {
          same = (sub[a] < sub[b]) == (p[a] < p[b]);
        }
      }
      if (same) {
        return true;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return false;
  }

  inline bool is_involution(Perm const& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[static_cast<std::size_t>(w[i] - 1)] != static_cast<int>(i + 1)) {
        return false;
      }
    }
    return true;
  }

  inline std::size_t avoiders(std::size_t n, Perm const& p, bool involutions = false) {
    std::size_t count = 0;
    for (auto const& w : permutations(n)) {
      if (!contains(w, p) && (!involutions || is_involution(w))) {
        ++count;
      }
    }
    return count;
  }

  // binom(2n, n) / (n + 1)
  inline std::uint64_t catalan(std::size_t n) {
    std::uint64_t c = 1;
    for (std::size_t k = 0; k < n; ++k) {
      c = c * 2 * (2 * k + 1) / (k + 2);
    }
    return c;
  }

  // Motzkin paths of length n counted by dynamic programming on height.
  inline std::uint64_t motzkin(std::size_t n) {
    std::vector<std::uint64_t> h(n + 2, 0);
    h[0] = 1;
    for (std::size_t step = 0; step < n; ++step) {
      std::vector<std::uint64_t> next(n + 2, 0);
      for (std::size_t y = 0; y <= n; ++y) {
        next[y] += h[y];
        next[y + 1] += h[y];
        if (y > 0) {
          next[y - 1] += h[y];
        }
      }
      h = next;
    }
    return h[0];
  }

  // Non-decreasing f with f(i) >= i, by enumeration of all maps.
  inline std::size_t monotone_maps(std::size_t n) {
    std::size_t      count = 0;
    std::vector<int> f(n, 1);
    while (true) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        ok = f[i] >= static_cast<int>(i + 1) && (i == 0 || f[i] >= f[i - 1]);
      }
      count += ok ? 1 : 0;
      std::size_t k = 0;
      while (k < n && f[k] == static_cast<int>(n)) {
        f[k++] = 1;
      }
      if (k == n) {
        break;
      }
      ++f[k];
    }
    return count;
  }

  inline std::size_t factorial(std::size_t n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
  }

}  // namespace oracle

#endif  // CATKIT_TESTS_ORACLES_HPP_
