#include "catkit/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace catkit {

  HeckeElement hecke_generator_mul(std::size_t         i,
                                   HeckeElement const& z,
                                   Side                side) {
    std::size_t const n = z.degree();
    if (i < 1 || i >= n) {
      throw std::invalid_argument("generator index " + std::to_string(i)
                                  + " out of range for n = "
                                  + std::to_string(n));
    }
    std::vector<int> v = z.permutation().values();
    if (side == Side::left) {
      // s_i w swaps the values i and i+1; longer iff i precedes i+1 in w.
      auto pi  = std::find(v.begin(), v.end(), static_cast<int>(i));
      auto pi1 = std::find(v.begin(), v.end(), static_cast<int>(i + 1));
      if (pi < pi1) {
        std::iter_swap(pi, pi1);
      }
    } else if (v[i - 1] < v[i]) {
      // w s_i swaps the entries in positions i and i+1.
      std::swap(v[i - 1], v[i]);
    }
    return HeckeElement(Permutation(std::move(v)));
  }

  HeckeElement hecke_mul(HeckeElement const& a, HeckeElement const& b) {
    if (a.degree() != b.degree()) {
      throw std::invalid_argument("hecke_mul: degree mismatch");
    }
    HeckeElement out = a;
    for (int i : reduced_word(b.permutation()).letters) {
      out = hecke_generator_mul(static_cast<std::size_t>(i), out, Side::right);
    }
    return out;
  }

  HeckeElement reversal(HeckeElement const& z) {
    return HeckeElement(invert(z.permutation()));
  }

  PermutationSet bruhat_ideal(Permutation const& w) {
    PermutationSet out;
    for (auto const& u : all_permutations(w.degree())) {
      if (bruhat_leq(u, w)) {
        out.insert(u);
      }
    }
    return out;
  }

  PermutationSet ideal_product(PermutationSet const& a,
                               PermutationSet const& b) {
    PermutationSet out;
    for (auto const& x : a) {
      for (auto const& y : b) {
        out.insert(compose(x, y));
      }
    }
    return out;
  }

  std::vector<HeckeElement> idempotents(std::size_t n) {
    std::vector<HeckeElement> out;
    for (auto const& w : all_permutations(n)) {
      HeckeElement z(w);
      if (hecke_mul(z, z) == z) {
        out.push_back(std::move(z));
      }
    }
    return out;
  }

  Permutation parabolic_longest(std::size_t n, std::vector<int> const& letters) {
    // The parabolic generated by a set of adjacent transpositions is a product
    // of symmetric groups on maximal runs; its longest element reverses each
    // run.
    std::vector<bool> in(n + 1, false);
    for (int i : letters) {
      if (i < 1 || static_cast<std::size_t>(i) >= n) {
        throw std::invalid_argument("parabolic_longest: letter out of range");
      }
      in[static_cast<std::size_t>(i)] = true;
    }
    std::vector<int> v(n);
    std::size_t      start = 1;
    while (start <= n) {
      std::size_t end = start;
      while (end < n && in[end]) {
        ++end;
      }
      for (std::size_t k = start; k <= end; ++k) {
        v[k - 1] = static_cast<int>(start + end - k);
      }
      start = end + 1;
    }
    return Permutation(std::move(v));
  }

  Closure<HeckeElement> hecke_monoid(std::size_t           n,
                                     ClosureOptions const& opts) {
    std::vector<HeckeElement> gens;
    for (std::size_t i = 1; i < n; ++i) {
      gens.push_back(HeckeElement::generator(n, i));
    }
    return generate_monoid(
        HeckeElement::identity(n),
        gens,
        [](HeckeElement const& a, HeckeElement const& b) {
          return hecke_mul(a, b);
        },
        [](HeckeElement const& z) { return to_string(z.permutation()); },
        opts);
  }

  ////////////////////////////////////////////////////////////////////////
  // OrderedSetPartition
  ////////////////////////////////////////////////////////////////////////

  OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> blocks)
      : blocks_(std::move(blocks)) {
    for (auto const& b : blocks_) {
      if (b.empty()) {
        throw std::invalid_argument("ordered set partition has an empty block");
      }
      n_ += b.size();
    }
    std::vector<bool> seen(n_ + 1, false);
    for (auto& b : blocks_) {
      std::sort(b.begin(), b.end());
      for (int x : b) {
        if (x < 1 || static_cast<std::size_t>(x) > n_ || seen[x]) {
          throw std::invalid_argument(
              "blocks must partition {1.." + std::to_string(n_) + "}");
        }
        seen[x] = true;
      }
    }
    if (blocks_.size() < 2) {
      throw std::invalid_argument(
          "ordered set partition needs at least two blocks");
    }
  }

  OrderedSetPartition OrderedSetPartition::chamber(Permutation const& w) {
    std::vector<std::vector<int>> blocks;
    for (int v : w.values()) {
      blocks.push_back({v});
    }
    return OrderedSetPartition(std::move(blocks));
  }

  std::size_t OrderedSetPartition::block_of(int x) const {
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      if (std::binary_search(blocks_[k].begin(), blocks_[k].end(), x)) {
        return k;
      }
    }
    throw std::invalid_argument("value " + std::to_string(x)
                                + " not in partition");
  }

  Permutation OrderedSetPartition::to_permutation() const {
    std::vector<int> v;
    for (auto const& b : blocks_) {
      if (b.size() != 1) {
        throw std::invalid_argument("partition is not a chamber");
      }
      v.push_back(b.front());
    }
    return Permutation(std::move(v));
  }

  OrderedSetPartition fold(std::size_t i, OrderedSetPartition const& f) {
    if (i < 1 || i >= f.degree()) {
      throw std::invalid_argument("fold index out of range");
    }
    auto const a = static_cast<int>(i);
    std::size_t const bi  = f.block_of(a);
    std::size_t const bi1 = f.block_of(a + 1);
    if (bi >= bi1) {
      return f;
    }
    auto blocks = f.blocks();
    std::replace(blocks[bi].begin(), blocks[bi].end(), a, a + 1);
    std::replace(blocks[bi1].begin(), blocks[bi1].end(), a + 1, a);
    return OrderedSetPartition(std::move(blocks));
  }

  std::string to_string(OrderedSetPartition const& f) {
    std::string out = "(";
    for (std::size_t k = 0; k < f.blocks().size(); ++k) {
      if (k > 0) {
        out += ',';
      }
      out += '{';
      for (std::size_t j = 0; j < f.blocks()[k].size(); ++j) {
        if (j > 0) {
          out += ',';
        }
        out += std::to_string(f.blocks()[k][j]);
      }
      out += '}';
    }
    return out + ")";
  }

  OrderedSetPartition parse_ordered_set_partition(std::string_view text) {
    std::vector<std::vector<int>> blocks;
    std::vector<int>*             current = nullptr;
    int                           value   = -1;
    for (char c : text) {
      if (c == '{') {
        if (current != nullptr) {
          throw std::invalid_argument("nested '{' in partition");
        }
        blocks.emplace_back();
        current = &blocks.back();
      } else if (c == '}' || c == ',') {
        if (current != nullptr && value >= 0) {
          current->push_back(value);
          value = -1;
        }
        if (c == '}') {
          if (current == nullptr) {
            throw std::invalid_argument("unbalanced '}' in partition");
          }
          current = nullptr;
        }
      } else if (c >= '0' && c <= '9') {
        if (current == nullptr) {
          throw std::invalid_argument("digit outside a block in partition");
        }
        value = (value < 0 ? 0 : value * 10) + (c - '0');
      } else if (c != '(' && c != ')' && c != ' ') {
        throw std::invalid_argument("unexpected character in partition: \""
                                    + std::string(text) + "\"");
      }
    }
    if (current != nullptr) {
      throw std::invalid_argument("unterminated block in partition");
    }
    return OrderedSetPartition(std::move(blocks));
  }

}  // namespace catkit
