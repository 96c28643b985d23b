#include "catkit/dyck.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "catkit/dcm.hpp"

namespace catkit {

  namespace {
    using Dir = MonotoneMap::Direction;

    void check_plus(MonotoneMap const& a) {
      if (a.direction() != Dir::nondecreasing) {
        throw std::invalid_argument("expected an element of C_n^+");
      }
    }

    void generate(std::string& cur, std::size_t up, std::size_t down,
                  std::size_t n, std::vector<DyckPath>& out) {
      if (down == n) {
        out.emplace_back(cur);
        return;
      }
      if (down < up) {
        cur.push_back('D');
        generate(cur, up, down + 1, n, out);
        cur.pop_back();
      }
      if (up < n) {
        cur.push_back('U');
        generate(cur, up + 1, down, n, out);
        cur.pop_back();
      }
    }

    struct Run {
      char        step;
      std::size_t length;
    };

    std::vector<Run> runs_of(std::string const& s) {
      std::vector<Run> out;
      for (char c : s) {
        if (!out.empty() && out.back().step == c) {
          ++out.back().length;
        } else {
          out.push_back({c, 1});
        }
      }
      return out;
    }

    std::size_t index_of(std::vector<MonotoneMap> const& maps,
                         MonotoneMap const&              a) {
      auto it = std::lower_bound(maps.begin(), maps.end(), a);
      return static_cast<std::size_t>(it - maps.begin());
    }
  }  // namespace

  DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) {
    long height = 0;
    for (char c : steps_) {
      if (c == 'U') {
        ++height;
      } else if (c == 'D') {
        --height;
      } else {
        throw std::invalid_argument("Dyck path steps must be 'U' or 'D'");
      }
      if (height < 0) {
        throw std::invalid_argument("Dyck path \"" + steps_
                                    + "\" goes below the axis");
      }
    }
    if (height != 0) {
      throw std::invalid_argument("Dyck path \"" + steps_
                                  + "\" does not return to the axis");
    }
  }

  std::vector<std::size_t> DyckPath::valleys() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k + 1 < steps_.size(); ++k) {
      if (steps_[k] == 'D' && steps_[k + 1] == 'U') {
        out.push_back(k);
      }
    }
    return out;
  }

  std::vector<DyckPath> all_dyck_paths(std::size_t n) {
    std::vector<DyckPath> out;
    std::string           cur;
    generate(cur, 0, 0, n, out);
    return out;
  }

  DyckPath delta(MonotoneMap const& a) {
    check_plus(a);
    std::string s;
    for (std::size_t j = a.degree(); j >= 1; --j) {
      int const prev = j == 1 ? 0 : a.values()[j - 2];
      s.push_back('U');
      s.append(static_cast<std::size_t>(a.values()[j - 1] - prev), 'D');
    }
    return DyckPath(std::move(s));
  }

  MonotoneMap delta_inverse(DyckPath const& p) {
    // Block k (a U and the D's after it) records alpha(j) - alpha(j-1) for
    // j = n - k.
    std::vector<int> d;
    for (char c : p.steps()) {
      if (c == 'U') {
        d.push_back(0);
      } else {
        ++d.back();
      }
    }
    std::reverse(d.begin(), d.end());
    std::vector<int> values(d.size());
    int              acc = 0;
    for (std::size_t j = 0; j < d.size(); ++j) {
      acc += d[j];
      values[j] = acc;
    }
    return MonotoneMap(std::move(values), Dir::nondecreasing);
  }

  DyckPath kreweras_derivative(DyckPath const& p) {
    Permutation const pi = catalan_pi(delta_inverse(p));
    return delta(alpha(invert(pi)));
  }

  bool h_order_prec(MonotoneMap const& a, MonotoneMap const& b) {
    check_plus(a);
    check_plus(b);
    if (a.degree() != b.degree()) {
      throw std::invalid_argument("h_order_prec: degree mismatch");
    }
    auto const all  = all_monotone_maps(a.degree(), Dir::nondecreasing);
    bool       left = std::any_of(all.begin(), all.end(), [&](MonotoneMap const& g) {
      return compose(g, a) == b;
    });
    if (!left) {
      return false;
    }
    return std::any_of(all.begin(), all.end(), [&](MonotoneMap const& g) {
      return compose(a, g) == b;
    });
  }

  std::vector<DyckPath> rectangular_covers(DyckPath const& p) {
    std::vector<DyckPath> out{p};
    auto const            runs = runs_of(p.steps());
    // Runs alternate U, D, U, D, ...; valley v sits between D-run 2v+1 and
    // U-run 2v+2.
    std::size_t const valleys = runs.size() / 2 == 0 ? 0 : runs.size() / 2 - 1;
    for (std::size_t first = 0; first < valleys; ++first) {
      for (std::size_t last = first; last < valleys; ++last) {
        auto swapped = runs;
        for (std::size_t v = first; v <= last; ++v) {
          std::swap(swapped[2 * v + 1], swapped[2 * v + 2]);
        }
        std::string s;
        for (auto const& r : swapped) {
          s.append(r.length, r.step);
        }
        out.emplace_back(std::move(s));
      }
    }
    return out;
  }

  bool prec_prime(MonotoneMap const& a, MonotoneMap const& b) {
    check_plus(a);
    check_plus(b);
    if (a.degree() != b.degree()) {
      throw std::invalid_argument("prec_prime: degree mismatch");
    }
    DyckPath const        target = delta(b);
    std::set<DyckPath>    seen{delta(a)};
    std::vector<DyckPath> stack{delta(a)};
    while (!stack.empty()) {
      DyckPath cur = std::move(stack.back());
      stack.pop_back();
      if (cur == target) {
        return true;
      }
      for (auto& next : rectangular_covers(cur)) {
        if (seen.insert(next).second) {
          stack.push_back(std::move(next));
        }
      }
    }
    return false;
  }

  OrderTable h_order_table(std::size_t n) {
    OrderTable t;
    t.maps             = all_monotone_maps(n, Dir::nondecreasing);
    std::size_t const m = t.maps.size();
    // left[i][j]: maps[j] = g maps[i] for some g; right dually.
    std::vector<std::vector<bool>> left(m, std::vector<bool>(m, false));
    std::vector<std::vector<bool>> right(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
      for (auto const& g : t.maps) {
        left[i][index_of(t.maps, compose(g, t.maps[i]))]  = true;
        right[i][index_of(t.maps, compose(t.maps[i], g))] = true;
      }
    }
    t.holds.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        t.holds[i][j] = left[i][j] && right[i][j];
      }
    }
    return t;
  }

  OrderTable prec_prime_table(std::size_t n) {
    OrderTable t;
    t.maps             = all_monotone_maps(n, Dir::nondecreasing);
    std::size_t const m = t.maps.size();
    std::map<DyckPath, std::size_t> index;
    for (std::size_t i = 0; i < m; ++i) {
      index.emplace(delta(t.maps[i]), i);
    }
    std::vector<std::vector<std::size_t>> covers(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (auto const& c : rectangular_covers(delta(t.maps[i]))) {
        covers[i].push_back(index.at(c));
      }
    }
    t.holds.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::size_t> stack{i};
      t.holds[i][i] = true;
      while (!stack.empty()) {
        std::size_t const x = stack.back();
        stack.pop_back();
        for (std::size_t y : covers[x]) {
          if (!t.holds[i][y]) {
            t.holds[i][y] = true;
            stack.push_back(y);
          }
        }
      }
    }
    return t;
  }

  PathPair admissible_pair_of(Permutation const& w) {
    return {delta(alpha(w)), delta(alpha(invert(w)))};
  }

  bool is_admissible(PathPair const& pair) {
    if (pair.first.semilength() != pair.second.semilength()) {
      throw std::invalid_argument("path pair has different semilengths");
    }
    auto const a  = delta_inverse(pair.first);
    auto const b  = delta_inverse(pair.second);
    auto const ia = delta_inverse(kreweras_derivative(pair.first));
    auto const ib = delta_inverse(kreweras_derivative(pair.second));
    return h_order_prec(ia, b) && h_order_prec(ib, a);
  }

  bool is_admissible_brute(PathPair const& pair) {
    if (pair.first.semilength() != pair.second.semilength()) {
      throw std::invalid_argument("path pair has different semilengths");
    }
    auto const all = all_permutations(pair.first.semilength());
    return std::any_of(all.begin(), all.end(), [&](Permutation const& w) {
      return admissible_pair_of(w) == pair;
    });
  }

  std::set<PathPair> admissible_pairs(std::size_t n) {
    std::set<PathPair> out;
    for (auto const& w : all_permutations(n)) {
      out.insert(admissible_pair_of(w));
    }
    return out;
  }

}  // namespace catkit
