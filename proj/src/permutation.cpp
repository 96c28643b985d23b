#include "catkit/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace catkit {

  namespace {
    void require_same_degree(std::size_t a, std::size_t b, char const* what) {
      if (a != b) {
        throw std::invalid_argument(std::string(what) + ": degree mismatch ("
                                    + std::to_string(a) + " vs "
                                    + std::to_string(b) + ")");
      }
    }

    std::size_t hash_ints(std::vector<int> const& v, std::size_t seed) {
      for (int x : v) {
        seed ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL
                + (seed << 6) + (seed >> 2);
      }
      return seed;
    }

    std::vector<int> parse_ints(std::string_view text) {
      std::string_view body = text;
      if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') {
          throw std::invalid_argument("unbalanced parenthesis in \""
                                      + std::string(text) + "\"");
        }
        body = body.substr(1, body.size() - 2);
      }
      std::vector<int> out;
      if (body.find(',') == std::string_view::npos) {
        for (char c : body) {
          if (c < '0' || c > '9') {
            throw std::invalid_argument("bad character in \""
                                        + std::string(text) + "\"");
          }
          out.push_back(c - '0');
        }
        return out;
      }
      std::size_t pos = 0;
      while (pos <= body.size()) {
        std::size_t next = body.find(',', pos);
        if (next == std::string_view::npos) {
          next = body.size();
        }
        auto token = body.substr(pos, next - pos);
        while (!token.empty() && token.front() == ' ') {
          token.remove_prefix(1);
        }
        while (!token.empty() && token.back() == ' ') {
          token.remove_suffix(1);
        }
        int  value = 0;
        auto res   = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
        if (token.empty() || res.ec != std::errc()
            || res.ptr != token.data() + token.size()) {
          throw std::invalid_argument("bad integer in \"" + std::string(text)
                                      + "\"");
        }
        out.push_back(value);
        pos = next + 1;
      }
      return out;
    }

    std::string join(std::vector<int> const& v, bool commas) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (commas && i > 0) {
          out += ',';
        }
        out += std::to_string(v[i]);
      }
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<int> one_line)
      : values_(std::move(one_line)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
      if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[v]) {
        throw std::invalid_argument("not a permutation of 1.."
                                    + std::to_string(values_.size()) + ": "
                                    + join(values_, true));
      }
      seen[v] = true;
    }
  }

  Permutation Permutation::identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  Permutation Permutation::simple(std::size_t n, std::size_t i) {
    if (i < 1 || i >= n) {
      throw std::invalid_argument("simple transposition index "
                                  + std::to_string(i) + " out of range for n = "
                                  + std::to_string(n));
    }
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::swap(v[i - 1], v[i]);
    return Permutation(std::move(v));
  }

  Permutation Permutation::longest(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<int>(n - i);
    }
    return Permutation(std::move(v));
  }

  std::size_t Permutation::length() const {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      for (std::size_t j = i + 1; j < values_.size(); ++j) {
        inv += values_[i] > values_[j] ? 1 : 0;
      }
    }
    return inv;
  }

  bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] != static_cast<int>(i + 1)) {
        return false;
      }
    }
    return true;
  }

  bool Permutation::is_involution() const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[values_[i] - 1] != static_cast<int>(i + 1)) {
        return false;
      }
    }
    return true;
  }

  Permutation compose(Permutation const& u, Permutation const& w) {
    require_same_degree(u.degree(), w.degree(), "compose");
    std::vector<int> v(w.degree());
    for (std::size_t j = 0; j < v.size(); ++j) {
      v[j] = u(w.values()[j]);
    }
    return Permutation(std::move(v));
  }

  Permutation invert(Permutation const& w) {
    std::vector<int> v(w.degree());
    for (std::size_t j = 0; j < v.size(); ++j) {
      v[w.values()[j] - 1] = static_cast<int>(j + 1);
    }
    return Permutation(std::move(v));
  }

  Permutation evaluate_word(std::size_t n, std::vector<int> const& letters) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    for (int i : letters) {
      if (i < 1 || static_cast<std::size_t>(i) >= n) {
        throw std::invalid_argument("letter " + std::to_string(i)
                                    + " out of range for n = "
                                    + std::to_string(n));
      }
      std::swap(v[i - 1], v[i]);
    }
    return Permutation(std::move(v));
  }

  ReducedWord reduced_word(Permutation const& w) {
    // Sort w to the identity by right multiplications, moving the largest
    // misplaced value rightwards first. Each swap removes one inversion, so
    // reversing the swap sequence yields a reduced word for w.
    std::vector<int> v = w.values();
    std::vector<int> swaps;
    for (int value = static_cast<int>(v.size()); value >= 1; --value) {
      auto pos = static_cast<int>(
          std::find(v.begin(), v.end(), value) - v.begin());
      while (pos + 1 < value) {
        std::swap(v[pos], v[pos + 1]);
        swaps.push_back(pos + 1);
        ++pos;
      }
    }
    std::reverse(swaps.begin(), swaps.end());
    return ReducedWord{std::move(swaps)};
  }

  bool bruhat_leq(Permutation const& u, Permutation const& w) {
    require_same_degree(u.degree(), w.degree(), "bruhat_leq");
    // u <= w iff #{j <= i : u(j) >= k} <= #{j <= i : w(j) >= k} for all i, k.
    std::size_t const n = u.degree();
    std::vector<int>  cu(n + 2, 0), cw(n + 2, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (int k = 1; k <= u.values()[i]; ++k) {
        ++cu[k];
      }
      for (int k = 1; k <= w.values()[i]; ++k) {
        ++cw[k];
      }
      for (std::size_t k = 1; k <= n; ++k) {
        if (cu[k] > cw[k]) {
          return false;
        }
      }
    }
    return true;
  }

  bool contains_pattern(Permutation const& w, Permutation const& p) {
    std::size_t const n = w.degree();
    std::size_t const k = p.degree();
    if (k > n) {
      return false;
    }
    if (k == 0) {
      return true;
    }
    // Enumerate k-subsets of positions in lexicographic order.
    std::vector<std::size_t> pos(k);
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
      bool match = true;
      for (std::size_t a = 0; a < k && match; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
          bool const lt_w = w.values()[pos[a]] < w.values()[pos[b]];
          bool const lt_p = p.values()[a] < p.values()[b];
          if (lt_w != lt_p) {
            match = false;
            break;
          }
        }
      }
      if (match) {
        return true;
      }
      std::size_t i = k;
      while (i > 0 && pos[i - 1] == n - k + i - 1) {
        --i;
      }
      if (i == 0) {
        return false;
      }
      ++pos[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        pos[j] = pos[j - 1] + 1;
      }
    }
  }

  std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
      out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

  std::string to_string(Permutation const& w) {
    return join(w.values(), w.degree() >= 10);
  }

  Permutation parse_permutation(std::string_view text) {
    return Permutation(parse_ints(text));
  }

  ////////////////////////////////////////////////////////////////////////
  // MonotoneMap
  ////////////////////////////////////////////////////////////////////////

  MonotoneMap::MonotoneMap(std::vector<int> values, Direction dir)
      : values_(std::move(values)), dir_(dir) {
    auto const n = static_cast<int>(values_.size());
    for (int i = 1; i <= n; ++i) {
      int const v = values_[i - 1];
      bool      ok = v >= 1 && v <= n;
      ok = ok && (dir == Direction::nondecreasing ? v >= i : v <= i);
      ok = ok && (i == 1 || values_[i - 2] <= v);
      if (!ok) {
        throw std::invalid_argument(
            "not an order preserving "
            + std::string(dir == Direction::nondecreasing ? "non-decreasing"
                                                          : "non-increasing")
            + " map: " + join(values_, true));
      }
    }
  }

  MonotoneMap MonotoneMap::identity(std::size_t n, Direction dir) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return MonotoneMap(std::move(v), dir);
  }

  MonotoneMap compose(MonotoneMap const& f, MonotoneMap const& g) {
    require_same_degree(f.degree(), g.degree(), "compose");
    if (f.direction() != g.direction()) {
      throw std::invalid_argument("compose: direction mismatch");
    }
    std::vector<int> v(g.degree());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = f(g.values()[i]);
    }
    return MonotoneMap(std::move(v), f.direction());
  }

  bool leq(MonotoneMap const& f, MonotoneMap const& g) {
    require_same_degree(f.degree(), g.degree(), "leq");
    bool const up = f.direction() == MonotoneMap::Direction::nondecreasing;
    for (std::size_t i = 0; i < f.degree(); ++i) {
      int const a = f.values()[i];
      int const b = g.values()[i];
      if (up ? a > b : a < b) {
        return false;
      }
    }
    return true;
  }

  MonotoneMap alpha(Permutation const& w) {
    std::vector<int> v(w.degree());
    int              running = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      running = std::max(running, w.values()[i]);
      v[i]    = running;
    }
    return MonotoneMap(std::move(v), MonotoneMap::Direction::nondecreasing);
  }

  MonotoneMap beta(Permutation const& w) {
    std::vector<int> v(w.degree());
    auto             running = static_cast<int>(w.degree()) + 1;
    for (std::size_t i = v.size(); i-- > 0;) {
      running = std::min(running, w.values()[i]);
      v[i]    = running;
    }
    return MonotoneMap(std::move(v), MonotoneMap::Direction::nonincreasing);
  }

  std::vector<MonotoneMap> all_monotone_maps(std::size_t            n,
                                             MonotoneMap::Direction dir) {
    std::vector<MonotoneMap> out;
    std::vector<int>         v(n, 0);
    bool const up = dir == MonotoneMap::Direction::nondecreasing;
    auto const N  = static_cast<int>(n);
    // Depth-first over positions; values at position i range over
    // [max(prev, i), N] for C_n^+ and [prev, i] for C_n^-.
    std::function<void(int)> rec = [&](int i) {
      if (i > N) {
        out.emplace_back(v, dir);
        return;
      }
      int const prev = i == 1 ? 1 : v[i - 2];
      int const lo   = up ? std::max(prev, i) : prev;
      int const hi   = up ? N : i;
      for (int x = lo; x <= hi; ++x) {
        v[i - 1] = x;
        rec(i + 1);
      }
    };
    rec(1);
    return out;
  }

  std::string to_string(MonotoneMap const& f) {
    return "(" + join(f.values(), true) + ")";
  }

  MonotoneMap parse_monotone_map(std::string_view       text,
                                 MonotoneMap::Direction dir) {
    return MonotoneMap(parse_ints(text), dir);
  }

}  // namespace catkit

std::size_t
std::hash<catkit::Permutation>::operator()(catkit::Permutation const& p) const
    noexcept {
  return catkit::hash_ints(p.values(), p.degree());
}

std::size_t
std::hash<catkit::MonotoneMap>::operator()(catkit::MonotoneMap const& f) const
    noexcept {
  return catkit::hash_ints(f.values(), static_cast<std::size_t>(f.direction()));
}
