#include "catkit/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

namespace catkit {

  namespace {
    using carrier_perm = CoxeterSystem::carrier_perm;

    carrier_perm identity_perm(std::size_t n) {
      carrier_perm p(n);
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = static_cast<std::uint32_t>(i);
      }
      return p;
    }

    // (x o y)(p) = x(y(p))
    carrier_perm compose_perm(carrier_perm const& x, carrier_perm const& y) {
      carrier_perm out(y.size());
      for (std::size_t p = 0; p < y.size(); ++p) {
        out[p] = x[y[p]];
      }
      return out;
    }

    carrier_perm transpositions(std::size_t                                      n,
                                std::vector<std::pair<std::size_t, std::size_t>> swaps) {
      carrier_perm p = identity_perm(n);
      for (auto [a, b] : swaps) {
        std::swap(p[a], p[b]);
      }
      return p;
    }

    std::size_t parse_size(std::string_view text, std::string_view whole) {
      std::size_t value = 0;
      auto        res   = std::from_chars(text.data(), text.data() + text.size(), value);
      if (text.empty() || res.ec != std::errc()
          || res.ptr != text.data() + text.size()) {
        throw std::invalid_argument("malformed Coxeter type \"" + std::string(whole)
                                    + "\"");
      }
      return value;
    }

    std::size_t order_of(carrier_perm const& x) {
      carrier_perm const id  = identity_perm(x.size());
      carrier_perm       cur = x;
      for (std::size_t k = 1; k <= 100'000; ++k) {
        if (cur == id) {
          return k;
        }
        cur = compose_perm(cur, x);
      }
      throw std::invalid_argument("generator product has excessive order");
    }
  }  // namespace

  CoxeterType parse_coxeter_type(std::string_view text) {
    if (text.size() < 2) {
      throw std::invalid_argument("malformed Coxeter type \"" + std::string(text)
                                  + "\"");
    }
    CoxeterType t;
    if (text.substr(0, 2) == "I2") {
      t.family              = CoxeterType::Family::I2;
      std::string_view rest = text.substr(2);
      if (!rest.empty() && (rest.front() == ':' || rest.front() == '(')) {
        rest.remove_prefix(1);
      }
      if (!rest.empty() && rest.back() == ')') {
        rest.remove_suffix(1);
      }
      t.param = parse_size(rest, text);
      if (t.param < 2) {
        throw std::invalid_argument("I2(m) needs m >= 2");
      }
      return t;
    }
    if (text.front() == 'A' || text.front() == 'a') {
      t.family = CoxeterType::Family::A;
    } else if (text.front() == 'B' || text.front() == 'b') {
      t.family = CoxeterType::Family::B;
    } else {
      throw std::invalid_argument("unknown Coxeter family in \"" + std::string(text)
                                  + "\"");
    }
    t.param = parse_size(text.substr(1), text);
    if (t.param < 1) {
      throw std::invalid_argument("Coxeter rank must be positive");
    }
    return t;
  }

  std::string to_string(CoxeterType const& t) {
    switch (t.family) {
      case CoxeterType::Family::A:
        return "A" + std::to_string(t.param);
      case CoxeterType::Family::B:
        return "B" + std::to_string(t.param);
      case CoxeterType::Family::I2:
        return "I2:" + std::to_string(t.param);
    }
    return "?";
  }

  std::size_t CoxeterSystem::PermHash::operator()(
      carrier_perm const& p) const noexcept {
    std::size_t h = p.size();
    for (auto x : p) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  CoxeterSystem CoxeterSystem::build(CoxeterType const& type, std::size_t cap) {
    std::vector<carrier_perm> gens;
    std::size_t const         k = type.param;
    coxeter_matrix_type       m;
    switch (type.family) {
      case CoxeterType::Family::A: {
        if (k < 1) {
          throw std::invalid_argument("A_k needs k >= 1");
        }
        for (std::size_t i = 0; i < k; ++i) {
          gens.push_back(transpositions(k + 1, {{i, i + 1}}));
        }
        m.assign(k, std::vector<int>(k, 2));
        for (std::size_t i = 0; i + 1 < k; ++i) {
          m[i][i + 1] = m[i + 1][i] = 3;
        }
        break;
      }
      case CoxeterType::Family::B: {
        if (k < 1) {
          throw std::invalid_argument("B_k needs k >= 1");
        }
        // Point p < k stands for +(p+1), point k+p for -(p+1).
        gens.push_back(transpositions(2 * k, {{0, k}}));
        for (std::size_t i = 1; i < k; ++i) {
          gens.push_back(transpositions(2 * k, {{i - 1, i}, {k + i - 1, k + i}}));
        }
        m.assign(k, std::vector<int>(k, 2));
        for (std::size_t i = 0; i + 1 < k; ++i) {
          m[i][i + 1] = m[i + 1][i] = (i == 0 ? 4 : 3);
        }
        break;
      }
      case CoxeterType::Family::I2: {
        if (k < 2) {
          throw std::invalid_argument("I2(m) needs m >= 2");
        }
        std::vector<std::pair<std::size_t, std::size_t>> s, t;
        for (std::size_t j = 0; j < k; ++j) {
          s.emplace_back(2 * j, 2 * j + 1);
          t.emplace_back(2 * j + 1, (2 * j + 2) % (2 * k));
        }
        gens.push_back(transpositions(2 * k, s));
        gens.push_back(transpositions(2 * k, t));
        m.assign(2, std::vector<int>(2, static_cast<int>(k)));
        break;
      }
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i][i] = 1;
    }
    CoxeterSystem sys = from_generators(std::move(gens), std::move(m), cap,
                                        to_string(type));
    sys.type_         = type;
    return sys;
  }

  CoxeterSystem CoxeterSystem::from_generators(std::vector<carrier_perm> generators,
                                               coxeter_matrix_type       matrix,
                                               std::size_t               cap,
                                               std::string               name) {
    std::size_t const r = generators.size();
    if (r == 0 || r > 64) {
      throw std::invalid_argument("Coxeter rank must be between 1 and 64");
    }
    std::size_t const n = generators.front().size();
    if (n == 0) {
      throw std::invalid_argument("empty carrier set");
    }
    carrier_perm const id = identity_perm(n);
    for (auto const& g : generators) {
      if (g.size() != n) {
        throw std::invalid_argument("generators act on carriers of different size");
      }
      std::vector<bool> seen(n, false);
      for (auto x : g) {
        if (x >= n || seen[x]) {
          throw std::invalid_argument("generator is not a permutation");
        }
        seen[x] = true;
      }
      if (g == id) {
        throw std::invalid_argument("generator acts trivially");
      }
    }
    if (matrix.size() != r) {
      throw std::invalid_argument("Coxeter matrix has the wrong size");
    }
    for (std::size_t s = 0; s < r; ++s) {
      if (matrix[s].size() != r) {
        throw std::invalid_argument("Coxeter matrix has the wrong size");
      }
      for (std::size_t t = 0; t < r; ++t) {
        int const want = matrix[s][t];
        if (want != matrix[t][s] || (s == t) != (want == 1) || want < 1) {
          throw std::invalid_argument(
              "Coxeter matrix must be symmetric with m(s,s) = 1 and "
              "m(s,t) >= 2 otherwise");
        }
        auto const got = order_of(compose_perm(generators[s], generators[t]));
        if (got != static_cast<std::size_t>(want)) {
          throw std::invalid_argument(
              "generators " + std::to_string(s + 1) + " and "
              + std::to_string(t + 1) + ": product has order "
              + std::to_string(got) + ", Coxeter matrix says "
              + std::to_string(want));
        }
      }
    }
    CoxeterSystem sys;
    sys.name_         = std::move(name);
    sys.carrier_size_ = n;
    sys.generators_   = std::move(generators);
    sys.matrix_       = std::move(matrix);
    sys.enumerate(cap);
    return sys;
  }

  void CoxeterSystem::enumerate(std::size_t cap) {
    std::size_t const r = rank();
    auto insert = [&](carrier_perm p, element_type parent, std::uint32_t letter,
                      std::uint32_t len) -> element_type {
      auto it = lookup_.find(p);
      if (it != lookup_.end()) {
        return it->second;
      }
      if (elements_.size() >= cap) {
        throw CapExceeded("Coxeter group exceeded the element cap of "
                          + std::to_string(cap));
      }
      auto const idx = static_cast<element_type>(elements_.size());
      lookup_.emplace(p, idx);
      elements_.push_back(std::move(p));
      parent_.push_back(parent);
      last_letter_.push_back(letter);
      length_.push_back(len);
      return idx;
    };
    insert(identity_perm(carrier_size_), 0, 0, 0);
    for (std::size_t x = 0; x < elements_.size(); ++x) {
      for (std::size_t s = 0; s < r; ++s) {
        auto y = insert(compose_perm(elements_[x], generators_[s]),
                        static_cast<element_type>(x),
                        static_cast<std::uint32_t>(s),
                        length_[x] + 1);
        right_.push_back(y);
      }
    }
    left_.resize(elements_.size() * r);
    for (std::size_t x = 0; x < elements_.size(); ++x) {
      for (std::size_t s = 0; s < r; ++s) {
        left_[x * r + s] = lookup_.at(compose_perm(generators_[s], elements_[x]));
        // A Coxeter group has a sign character, so every edge changes the
        // length by exactly one.
        auto const y = right_[x * r + s];
        if (length_[y] + 1 != length_[x] && length_[x] + 1 != length_[y]) {
          throw std::invalid_argument(
              "generators do not define a Coxeter system: Cayley graph edge "
              "between equal lengths");
        }
      }
    }
    longest_ = static_cast<element_type>(elements_.size() - 1);
    for (std::size_t x = 0; x + 1 < elements_.size(); ++x) {
      if (length_[x] == length_[longest_]) {
        throw std::invalid_argument(
            "generators do not define a Coxeter system: no unique longest "
            "element");
      }
    }
  }

  CoxeterSystem::element_type CoxeterSystem::multiply(element_type u,
                                                      element_type w) const {
    for (auto s : reduced_word(w)) {
      u = right_mul(u, s);
    }
    return u;
  }

  CoxeterSystem::element_type CoxeterSystem::inverse(element_type w) const {
    auto         word = reduced_word(w);
    element_type out  = identity();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      out = right_mul(out, *it);
    }
    return out;
  }

  GeneratorMask CoxeterSystem::left_descents(element_type w) const {
    GeneratorMask out = 0;
    for (std::size_t s = 0; s < rank(); ++s) {
      if (length_[left_mul(s, w)] < length_[w]) {
        out |= GeneratorMask{1} << s;
      }
    }
    return out;
  }

  GeneratorMask CoxeterSystem::right_descents(element_type w) const {
    GeneratorMask out = 0;
    for (std::size_t s = 0; s < rank(); ++s) {
      if (length_[right_mul(w, s)] < length_[w]) {
        out |= GeneratorMask{1} << s;
      }
    }
    return out;
  }

  std::vector<std::size_t> CoxeterSystem::reduced_word(element_type w) const {
    std::vector<std::size_t> out(length_.at(w));
    for (std::size_t k = out.size(); k-- > 0;) {
      out[k] = last_letter_[w];
      w      = parent_[w];
    }
    return out;
  }

  std::optional<CoxeterSystem::element_type>
  CoxeterSystem::find(carrier_perm const& p) const {
    auto it = lookup_.find(p);
    if (it == lookup_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t CoxeterSystem::conjugate_by_longest(std::size_t s) const {
    element_type const x = multiply(multiply(longest_, generator(s)), longest_);
    for (std::size_t t = 0; t < rank(); ++t) {
      if (generator(t) == x) {
        return t;
      }
    }
    throw InternalError("w0 s w0 is not a simple reflection");
  }

  std::string CoxeterSystem::label(element_type w) const {
    if (type_ && type_->family == CoxeterType::Family::A) {
      std::vector<int> v;
      for (auto x : elements_.at(w)) {
        v.push_back(static_cast<int>(x) + 1);
      }
      return to_string(Permutation(std::move(v)));
    }
    if (w == identity()) {
      return "e";
    }
    std::string out;
    for (auto s : reduced_word(w)) {
      out += generator_name(s);
    }
    return out;
  }

  CoxeterSystem::element_type
  CoxeterSystem::hecke_generator_mul(std::size_t s, element_type w, Side side) const {
    if (s >= rank()) {
      throw std::invalid_argument("generator index out of range");
    }
    element_type const y = side == Side::left ? left_mul(s, w) : right_mul(w, s);
    return length_[y] > length_[w] ? y : w;
  }

  CoxeterSystem::element_type CoxeterSystem::hecke_mul(element_type u,
                                                       element_type w) const {
    for (auto s : reduced_word(w)) {
      u = hecke_generator_mul(s, u, Side::right);
    }
    return u;
  }

  std::vector<bool> CoxeterSystem::bruhat_ideal(element_type w) const {
    std::vector<bool>         in(size(), false);
    std::vector<element_type> members{identity()};
    in[identity()] = true;
    for (auto s : reduced_word(w)) {
      std::size_t const count = members.size();
      for (std::size_t k = 0; k < count; ++k) {
        element_type const y = right_mul(members[k], s);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
    return in;
  }

  bool CoxeterSystem::bruhat_leq(element_type u, element_type w) const {
    if (length_.at(u) > length_.at(w)) {
      return false;
    }
    return bruhat_ideal(w)[u];
  }

  ////////////////////////////////////////////////////////////////////////
  // Parabolics and quotients
  ////////////////////////////////////////////////////////////////////////

  ParabolicData parabolic(CoxeterSystem const& sys, GeneratorMask subset) {
    if ((subset & ~sys.all_generators()) != 0) {
      throw std::invalid_argument("generator subset out of range");
    }
    ParabolicData out;
    out.subset = subset;
    std::vector<bool> seen(sys.size(), false);
    out.elements.push_back(CoxeterSystem::identity());
    seen[CoxeterSystem::identity()] = true;
    for (std::size_t k = 0; k < out.elements.size(); ++k) {
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        if ((subset >> s & 1U) == 0) {
          continue;
        }
        auto const y = sys.right_mul(out.elements[k], s);
        if (!seen[y]) {
          seen[y] = true;
          out.elements.push_back(y);
        }
      }
    }
    std::sort(out.elements.begin(), out.elements.end());
    out.longest = out.elements.back();
    for (CoxeterSystem::element_type w = 0; w < sys.size(); ++w) {
      if ((sys.right_descents(w) & subset) == subset) {
        out.max_reps.push_back(w);
      }
    }
    return out;
  }

  CoxeterSystem::element_type coset_max_rep(CoxeterSystem const&        sys,
                                            GeneratorMask               subset,
                                            CoxeterSystem::element_type w) {
    return sys.hecke_mul(w, parabolic(sys, subset).longest);
  }

  Closure<CoxeterSystem::element_type> hecke_monoid(CoxeterSystem const&  sys,
                                                    ClosureOptions const& opts) {
    using E = CoxeterSystem::element_type;
    std::vector<E> gens;
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      gens.push_back(sys.generator(s));
    }
    return generate_monoid<E>(
        CoxeterSystem::identity(),
        gens,
        [&sys](E a, E b) { return sys.hecke_mul(a, b); },
        [](E x) { return std::to_string(x); },
        opts);
  }

  Closure<Transformation>
  generalized_catalan_quotient(CoxeterSystem const&  sys,
                               GeneratorMask         subset,
                               ClosureOptions const& opts) {
    auto const                                 par = parabolic(sys, subset);
    std::vector<std::uint32_t>                 point(sys.size(), UINT32_MAX);
    for (std::size_t k = 0; k < par.max_reps.size(); ++k) {
      point[par.max_reps[k]] = static_cast<std::uint32_t>(k);
    }
    std::vector<Transformation> gens;
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      Transformation t;
      for (auto w : par.max_reps) {
        auto const y = sys.hecke_generator_mul(s, w, Side::left);
        if (point[y] == UINT32_MAX) {
          throw InternalError("left ideal H(W) e_J is not closed under e_s");
        }
        t.images.push_back(point[y]);
      }
      gens.push_back(std::move(t));
    }
    return generate_monoid(
        Transformation::identity(par.max_reps.size()),
        gens,
        [](Transformation const& a, Transformation const& b) { return a * b; },
        [](Transformation const& t) { return to_string(t); },
        opts);
  }

  DoubleCatalanQuotient generalized_double_catalan(CoxeterSystem const&  sys,
                                                   GeneratorMask         subset,
                                                   ClosureOptions const& opts) {
    auto const par = parabolic(sys, subset);
    DoubleCatalanQuotient                                      out;
    std::vector<std::uint32_t>                                 coset(sys.size());
    std::unordered_map<CoxeterSystem::element_type, std::uint32_t> by_max;
    for (CoxeterSystem::element_type w = 0; w < sys.size(); ++w) {
      auto const top = sys.hecke_mul(w, par.longest);
      auto [it, inserted] =
          by_max.emplace(top, static_cast<std::uint32_t>(out.min_reps.size()));
      if (inserted) {
        out.min_reps.push_back(w);
      }
      coset[w] = it->second;
    }
    std::size_t const       m = out.min_reps.size();
    std::vector<BoolMatrix> gens;
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      BoolMatrix g = BoolMatrix::identity(m);
      for (std::size_t k = 0; k < m; ++k) {
        g.set(coset[sys.left_mul(s, out.min_reps[k])], k);
      }
      gens.push_back(std::move(g));
    }
    out.monoid = generate_monoid(
        BoolMatrix::identity(m),
        gens,
        [](BoolMatrix const& a, BoolMatrix const& b) { return a * b; },
        [](BoolMatrix const& a) { return to_string(a); },
        opts);
    return out;
  }

  std::size_t vertex_count(CoxeterSystem const& sys) {
    std::size_t v = 0;
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      v += sys.size() / parabolic(sys, sys.complement_of(s)).elements.size();
    }
    return v;
  }

  IdealUnionAction maximal_ideal_union_action(CoxeterSystem const& sys) {
    using E = CoxeterSystem::element_type;
    std::vector<E>                          points;
    std::vector<std::size_t>                block_start;
    std::vector<std::unordered_map<E, std::uint32_t>> index(sys.rank());
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      block_start.push_back(points.size());
      for (E w : parabolic(sys, sys.complement_of(s)).max_reps) {
        index[s].emplace(w, static_cast<std::uint32_t>(points.size()));
        points.push_back(w);
      }
    }
    block_start.push_back(points.size());
    auto block_of = [&](std::size_t p) {
      return static_cast<std::size_t>(
          std::upper_bound(block_start.begin(), block_start.end(), p)
          - block_start.begin() - 1);
    };
    // gen[s][p] = e_s applied to point p.
    std::vector<std::vector<std::uint32_t>> gen(sys.rank());
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      for (std::size_t p = 0; p < points.size(); ++p) {
        E const y = sys.hecke_generator_mul(s, points[p], Side::left);
        gen[s].push_back(index[block_of(p)].at(y));
      }
    }
    // z_u = z_{parent} e_s, so z_u(p) = z_parent(e_s(p)).
    std::vector<std::vector<std::uint32_t>> act(sys.size());
    act[0].resize(points.size());
    for (std::size_t p = 0; p < points.size(); ++p) {
      act[0][p] = static_cast<std::uint32_t>(p);
    }
    std::set<std::vector<std::uint32_t>> distinct{act[0]};
    for (E u = 1; u < sys.size(); ++u) {
      auto const word   = sys.reduced_word(u);
      std::size_t const s = word.back();
      E parent = CoxeterSystem::identity();
      for (std::size_t k = 0; k + 1 < word.size(); ++k) {
        parent = sys.right_mul(parent, word[k]);
      }
      act[u].resize(points.size());
      for (std::size_t p = 0; p < points.size(); ++p) {
        act[u][p] = act[parent][gen[s][p]];
      }
      distinct.insert(act[u]);
    }
    return {points.size(), distinct.size() == sys.size()};
  }

  GeneratorMask parse_generator_subset(std::string_view text, std::size_t rank) {
    GeneratorMask mask  = 0;
    std::size_t   value = 0;
    bool          have  = false;
    auto          flush = [&] {
      if (!have) {
        return;
      }
      if (value < 1 || value > rank) {
        throw std::invalid_argument("generator index " + std::to_string(value)
                                    + " out of range 1.." + std::to_string(rank));
      }
      mask |= GeneratorMask{1} << (value - 1);
      value = 0;
      have  = false;
    };
    for (char c : text) {
      if (c >= '0' && c <= '9') {
        value = value * 10 + static_cast<std::size_t>(c - '0');
        have  = true;
      } else if (c == ',' || c == ' ' || c == 's' || c == '{' || c == '}') {
        flush();
      } else {
        throw std::invalid_argument("malformed generator subset \""
                                    + std::string(text) + "\"");
      }
    }
    flush();
    return mask;
  }

  std::string generator_subset_to_string(GeneratorMask mask, std::size_t rank) {
    std::string out = "{";
    bool        first = true;
    for (std::size_t s = 0; s < rank; ++s) {
      if ((mask >> s & 1U) != 0) {
        if (!first) {
          out += ',';
        }
        out += 's' + std::to_string(s + 1);
        first = false;
      }
    }
    return out + "}";
  }

}  // namespace catkit
