#ifndef CATKIT_MONOID_HPP_
#define CATKIT_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catkit/error.hpp"

namespace catkit {

  inline constexpr std::size_t default_element_cap = 1'000'000;

  // Reads CATKIT_CAP from the environment, falling back to the argument.
  std::size_t element_cap_from_env(std::size_t fallback = default_element_cap);

  // Index-level description of a finitely generated monoid: element 0 is the
  // identity, elements are numbered in breadth-first order (shortlex order of
  // their least word), and every element carries its shortest word.
  class MonoidTable {
   public:
    using index_type = std::uint32_t;

    std::size_t size() const noexcept {
      return encodings_.size();
    }
    std::size_t generator_count() const noexcept {
      return generators_.size();
    }
    static constexpr index_type identity() noexcept {
      return 0;
    }
    index_type generator(std::size_t g) const {
      return generators_.at(g);
    }
    std::vector<index_type> const& generators() const noexcept {
      return generators_;
    }

    std::string const& encoding(index_type x) const {
      return encodings_.at(x);
    }
    std::vector<std::string> const& encodings() const noexcept {
      return encodings_;
    }

    // x * generator(g)
    index_type right(index_type x, std::size_t g) const {
      return right_[x * generators_.size() + g];
    }
    // generator(g) * x; only available when built with left edges.
    index_type left(index_type x, std::size_t g) const;
    bool has_left() const noexcept {
      return !left_.empty();
    }

    // Shortest word (generator indices) whose product is x.
    std::vector<std::size_t> word(index_type x) const;
    std::size_t word_length(index_type x) const {
      return length_[x];
    }

    // x * y, folding the word of y through the right Cayley graph.
    index_type multiply(index_type x, index_type y) const;
    // Full table, entry [x][y] = x * y.
    std::vector<std::vector<index_type>> product_table() const;

    std::optional<index_type> find(std::string const& encoding) const;

    bool is_idempotent(index_type x) const {
      return multiply(x, x) == x;
    }

   private:
    template <class T, class Product, class Encode>
    friend class ClosureBuilder;

    std::vector<std::string>                    encodings_;
    std::unordered_map<std::string, index_type> lookup_;
    std::vector<index_type>                     generators_;
    std::vector<index_type>                     right_;
    std::vector<index_type>                     left_;
    std::vector<index_type>                     parent_;
    std::vector<std::uint32_t>                  last_letter_;
    std::vector<std::uint32_t>                  length_;
  };

  // Elements plus their table.
  template <class T>
  struct Closure {
    std::vector<T> elements;
    MonoidTable    table;

    std::size_t size() const noexcept {
      return elements.size();
    }
  };

  struct ClosureOptions {
    std::size_t cap        = default_element_cap;
    bool        left_edges = false;
  };

  template <class T, class Product, class Encode>
  class ClosureBuilder {
   public:
    ClosureBuilder(Product product, Encode encode)
        : product_(std::move(product)), encode_(std::move(encode)) {}

    Closure<T> run(T const&              identity,
                   std::vector<T> const& generators,
                   ClosureOptions const& opts) {
      using index_type = MonoidTable::index_type;
      Closure<T>   out;
      MonoidTable& tab     = out.table;
      std::size_t  ngens   = generators.size();

      auto insert = [&](T&& value, index_type parent, std::uint32_t letter,
                        std::uint32_t length) -> index_type {
        std::string key = encode_(value);
        auto        it  = tab.lookup_.find(key);
        if (it != tab.lookup_.end()) {
          return it->second;
        }
        if (out.elements.size() >= opts.cap) {
          throw CapExceeded("monoid closure exceeded the element cap of "
                            + std::to_string(opts.cap));
        }
        auto const idx = static_cast<index_type>(out.elements.size());
        tab.lookup_.emplace(key, idx);
        tab.encodings_.push_back(std::move(key));
        out.elements.push_back(std::move(value));
        tab.parent_.push_back(parent);
        tab.last_letter_.push_back(letter);
        tab.length_.push_back(length);
        return idx;
      };

      insert(T(identity), 0, 0, 0);
      for (std::size_t g = 0; g < ngens; ++g) {
        tab.generators_.push_back(insert(T(generators[g]),
                                         MonoidTable::identity(),
                                         static_cast<std::uint32_t>(g),
                                         1));
      }
      // Breadth-first: elements are processed in index order, and each
      // element's right multiples by generators in generator order.
      for (std::size_t x = 0; x < out.elements.size(); ++x) {
        for (std::size_t g = 0; g < ngens; ++g) {
          T          y   = product_(out.elements[x], generators[g]);
          index_type idx = insert(std::move(y),
                                  static_cast<index_type>(x),
                                  static_cast<std::uint32_t>(g),
                                  tab.length_[x] + 1);
          tab.right_.push_back(idx);
        }
      }
      if (opts.left_edges) {
        tab.left_.reserve(out.elements.size() * ngens);
        for (std::size_t x = 0; x < out.elements.size(); ++x) {
          for (std::size_t g = 0; g < ngens; ++g) {
            auto key = encode_(product_(generators[g], out.elements[x]));
            auto it  = tab.lookup_.find(key);
            if (it == tab.lookup_.end()) {
              throw InternalError("left multiple escaped the closure");
            }
            tab.left_.push_back(it->second);
          }
        }
      }
      return out;
    }

   private:
    Product product_;
    Encode  encode_;
  };

  // Breadth-first (Froidure-Pin style) closure of the submonoid generated by
  // `generators` under the associative operation `product`. `encode` maps an
  // element to its canonical encoding, used for hash-consing.
  template <class T, class Product, class Encode>
  Closure<T> generate_monoid(T const&              identity,
                             std::vector<T> const& generators,
                             Product               product,
                             Encode                encode,
                             ClosureOptions const& opts = {}) {
    ClosureBuilder<T, Product, Encode> builder(std::move(product),
                                               std::move(encode));
    return builder.run(identity, generators, opts);
  }

  // A full transformation of {0, ..., n-1}; (f * g)(x) = f(g(x)).
  struct Transformation {
    std::vector<std::uint32_t> images;

    static Transformation identity(std::size_t n);
    std::size_t degree() const noexcept {
      return images.size();
    }
    bool operator==(Transformation const&) const = default;
  };

  Transformation operator*(Transformation const& f, Transformation const& g);
  std::string    to_string(Transformation const& f);

  // Graphviz rendering of the right Cayley graph, one edge per (element,
  // generator) pair labelled with the generator name.
  std::string to_dot(MonoidTable const&              table,
                     std::vector<std::string> const& generator_names,
                     std::string const&              graph_name = "cayley");

}  // namespace catkit

#endif  // CATKIT_MONOID_HPP_
