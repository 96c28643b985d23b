#include "catkit/monoid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace catkit {

  std::size_t element_cap_from_env(std::size_t fallback) {
    char const* env = std::getenv("CATKIT_CAP");
    if (env == nullptr || *env == '\0') {
      return fallback;
    }
    std::size_t value = 0;
    char const* end   = env + std::char_traits<char>::length(env);
    auto        res   = std::from_chars(env, end, value);
    if (res.ec != std::errc() || res.ptr != end || value == 0) {
      throw std::invalid_argument("CATKIT_CAP must be a positive integer");
    }
    return value;
  }

  MonoidTable::index_type MonoidTable::left(index_type x, std::size_t g) const {
    if (left_.empty()) {
      throw std::logic_error("monoid table was built without left edges");
    }
    return left_[x * generators_.size() + g];
  }

  std::vector<std::size_t> MonoidTable::word(index_type x) const {
    std::vector<std::size_t> w(length_.at(x));
    for (std::size_t k = w.size(); k-- > 0;) {
      w[k] = last_letter_[x];
      x    = parent_[x];
    }
    return w;
  }

  MonoidTable::index_type MonoidTable::multiply(index_type x,
                                                index_type y) const {
    for (std::size_t g : word(y)) {
      x = right(x, g);
    }
    return x;
  }

  std::vector<std::vector<MonoidTable::index_type>>
  MonoidTable::product_table() const {
    std::vector<std::vector<index_type>> out(size(),
                                             std::vector<index_type>(size()));
    // Row y is filled along the BFS tree: x * y = (x * parent(y)) * last(y).
    for (std::size_t x = 0; x < size(); ++x) {
      out[x][0] = static_cast<index_type>(x);
    }
    for (std::size_t y = 1; y < size(); ++y) {
      for (std::size_t x = 0; x < size(); ++x) {
        out[x][y] = right(out[x][parent_[y]], last_letter_[y]);
      }
    }
    return out;
  }

  std::optional<MonoidTable::index_type>
  MonoidTable::find(std::string const& encoding) const {
    auto it = lookup_.find(encoding);
    if (it == lookup_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Transformation Transformation::identity(std::size_t n) {
    Transformation t;
    t.images.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      t.images[i] = static_cast<std::uint32_t>(i);
    }
    return t;
  }

  Transformation operator*(Transformation const& f, Transformation const& g) {
    if (f.degree() != g.degree()) {
      throw std::invalid_argument("transformation degree mismatch");
    }
    Transformation out;
    out.images.resize(g.degree());
    for (std::size_t x = 0; x < g.degree(); ++x) {
      out.images[x] = f.images[g.images[x]];
    }
    return out;
  }

  std::string to_string(Transformation const& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.images.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(f.images[i]);
    }
    return out + "]";
  }

  std::string to_dot(MonoidTable const&              table,
                     std::vector<std::string> const& generator_names,
                     std::string const&              graph_name) {
    if (generator_names.size() != table.generator_count()) {
      throw std::invalid_argument("to_dot: one name per generator required");
    }
    std::string out = "digraph " + graph_name + " {\n";
    out += "  node [shape=circle];\n";
    for (std::size_t x = 0; x < table.size(); ++x) {
      out += "  n" + std::to_string(x) + " [label=\"" + std::to_string(x)
             + "\"];\n";
    }
    for (std::size_t x = 0; x < table.size(); ++x) {
      for (std::size_t g = 0; g < table.generator_count(); ++g) {
        auto const y = table.right(static_cast<MonoidTable::index_type>(x), g);
        out += "  n" + std::to_string(x) + " -> n" + std::to_string(y)
               + " [label=\"" + generator_names[g] + "\"];\n";
      }
    }
    out += "}\n";
    return out;
  }

}  // namespace catkit
