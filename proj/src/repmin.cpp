#include "catkit/repmin.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "catkit/dcm.hpp"
#include "catkit/error.hpp"

namespace catkit {

  namespace {
    using E = CoxeterSystem::element_type;

    std::size_t index_in(std::vector<E> const& elements, E w) {
      for (std::size_t k = 0; k < elements.size(); ++k) {
        if (elements[k] == w) {
          return k;
        }
      }
      throw InternalError("element is not a basis label of the module");
    }

    RationalVector unit(std::size_t dim, std::size_t k) {
      RationalVector v(dim);
      v[k] = 1;
      return v;
    }

    RationalMatrix from_rows(std::vector<RationalVector> const& rows, std::size_t dim) {
      RationalMatrix m(rows.size(), dim);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          m.at(i, j) = rows[i][j];
        }
      }
      return m;
    }

    // Stacked conditions e_t v = v (t in J) and e_t v = 0 (t not in J).
    RationalMatrix type_conditions(HeckeModule const& m, GeneratorMask J) {
      std::size_t const dim = m.dimension();
      RationalMatrix    out(0, dim);
      RationalMatrix const id = RationalMatrix::identity(dim);
      for (std::size_t t = 0; t < m.action.size(); ++t) {
        bool const in = (J >> t & 1U) != 0;
        out = stack(out, in ? m.action[t] - id : m.action[t]);
      }
      return out;
    }
  }  // namespace

  HeckeModule build_P(CoxeterSystem const& sys, std::size_t s) {
    if (s >= sys.rank()) {
      throw std::invalid_argument("generator index out of range");
    }
    auto const reps = parabolic(sys, sys.complement_of(s)).max_reps;
    HeckeModule m;
    m.sys            = &sys;
    m.basis_elements = reps;
    for (E w : reps) {
      m.basis.push_back("z[" + sys.label(w) + "]");
    }
    std::map<E, std::size_t> index;
    for (std::size_t k = 0; k < reps.size(); ++k) {
      index.emplace(reps[k], k);
    }
    for (std::size_t t = 0; t < sys.rank(); ++t) {
      RationalMatrix a(reps.size(), reps.size());
      for (std::size_t k = 0; k < reps.size(); ++k) {
        E const y = sys.hecke_generator_mul(t, reps[k], Side::left);
        auto    it = index.find(y);
        if (it == index.end()) {
          throw InternalError("left ideal is not closed under e_t");
        }
        a.at(it->second, k) = 1;
      }
      m.action.push_back(std::move(a));
    }
    return m;
  }

  std::pair<HeckeModule, HeckeModule> split_P(HeckeModule const& p) {
    if (p.sys == nullptr || p.basis_elements.size() != p.dimension()) {
      throw std::invalid_argument("split_P expects a module from build_P");
    }
    CoxeterSystem const& sys = *p.sys;
    E const              w0  = sys.longest();
    std::size_t const    top = index_in(p.basis_elements, w0);

    HeckeModule prime;
    prime.sys = p.sys;
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < p.dimension(); ++k) {
      if (k != top) {
        keep.push_back(k);
        prime.basis_elements.push_back(p.basis_elements[k]);
        prime.basis.push_back("z[" + sys.label(p.basis_elements[k]) + "]-z["
                              + sys.label(w0) + "]");
      }
    }
    // e_t (z_w - z_w0) = z_{e_t w} - z_w0, which is 0 when e_t w = w0.
    for (auto const& a : p.action) {
      RationalMatrix b(keep.size(), keep.size());
      for (std::size_t c = 0; c < keep.size(); ++c) {
        for (std::size_t r = 0; r < keep.size(); ++r) {
          b.at(r, c) = a.at(keep[r], keep[c]);
        }
      }
      prime.action.push_back(std::move(b));
    }

    HeckeModule trivial;
    trivial.sys            = p.sys;
    trivial.basis          = {"z[" + sys.label(w0) + "]"};
    trivial.basis_elements = {w0};
    for (std::size_t t = 0; t < p.action.size(); ++t) {
      trivial.action.push_back(RationalMatrix::identity(1));
    }
    return {std::move(prime), std::move(trivial)};
  }

  bool satisfies_hecke_relations(HeckeModule const& m) {
    if (m.sys == nullptr) {
      throw std::invalid_argument("module has no Coxeter system");
    }
    auto const& mat = m.sys->coxeter_matrix();
    for (std::size_t s = 0; s < m.action.size(); ++s) {
      if (!(m.action[s] * m.action[s] == m.action[s])) {
        return false;
      }
      for (std::size_t t = s + 1; t < m.action.size(); ++t) {
        RationalMatrix lhs = RationalMatrix::identity(m.dimension());
        RationalMatrix rhs = lhs;
        for (int k = 0; k < mat[s][t]; ++k) {
          lhs = lhs * m.action[k % 2 == 0 ? s : t];
          rhs = rhs * m.action[k % 2 == 0 ? t : s];
        }
        if (!(lhs == rhs)) {
          return false;
        }
      }
    }
    return true;
  }

  EigenStructure eigen_structure(HeckeModule const& m, std::size_t t) {
    RationalMatrix const& a = m.action.at(t);
    return {nullspace(a - RationalMatrix::identity(m.dimension())), nullspace(a)};
  }

  EigenStructure orbit_eigen_structure(HeckeModule const& p, std::size_t t) {
    if (p.sys == nullptr || p.basis_elements.size() != p.dimension()) {
      throw std::invalid_argument("orbit_eigen_structure expects a module from build_P");
    }
    CoxeterSystem const& sys = *p.sys;
    std::size_t const    dim = p.dimension();
    EigenStructure       out;
    for (std::size_t k = 0; k < dim; ++k) {
      E const w  = p.basis_elements[k];
      E const tw = sys.left_mul(t, w);
      if ((sys.left_descents(w) >> t & 1U) != 0) {
        out.fixed.push_back(unit(dim, k));
      } else {
        RationalVector v = unit(dim, k);
        v[index_in(p.basis_elements, tw)] = -1;
        out.kernel.push_back(std::move(v));
      }
    }
    return out;
  }

  std::size_t span_dimension(std::vector<RationalVector> const& vectors,
                             std::size_t                        dim) {
    return rank(from_rows(vectors, dim));
  }

  SocleReport socle(HeckeModule const& m) {
    SocleReport       out;
    std::size_t const r = m.action.size();
    if (r >= 20) {
      throw CapExceeded("socle: too many generator subsets");
    }
    for (GeneratorMask J = 0; J < (GeneratorMask{1} << r); ++J) {
      auto basis = nullspace(type_conditions(m, J));
      if (!basis.empty()) {
        out.dimension += basis.size();
        out.components.push_back({J, std::move(basis)});
      }
    }
    return out;
  }

  std::size_t socle_dimension_mod_p(HeckeModule const& m, std::uint64_t p) {
    std::size_t       total = 0;
    std::size_t const r     = m.action.size();
    for (GeneratorMask J = 0; J < (GeneratorMask{1} << r); ++J) {
      total += nullspace_mod_p(type_conditions(m, J), p).size();
    }
    return total;
  }

  SimpleSocleCheck check_simple_socle(CoxeterSystem const& sys, std::size_t s) {
    auto const [prime, trivial] = split_P(build_P(sys, s));
    auto const       soc        = socle(prime);
    SimpleSocleCheck out;
    out.dimension     = soc.dimension;
    out.simple        = soc.dimension == 1;
    out.expected_type = sys.complement_of(sys.conjugate_by_longest(s));
    if (!out.simple) {
      return out;
    }
    auto const& comp = soc.components.front();
    out.type_ok      = comp.type == out.expected_type;
    std::size_t const k =
        index_in(prime.basis_elements, sys.right_mul(sys.longest(), s));
    RationalVector const& v = comp.basis.front();
    out.vector_ok           = sgn(v[k]) != 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j != k && sgn(v[j]) != 0) {
        out.vector_ok = false;
      }
    }
    return out;
  }

  HeckeModule direct_sum(HeckeModule const& a, HeckeModule const& b) {
    if (a.action.size() != b.action.size()) {
      throw std::invalid_argument("direct_sum: modules over different systems");
    }
    HeckeModule out;
    out.sys   = a.sys;
    out.basis = a.basis;
    out.basis.insert(out.basis.end(), b.basis.begin(), b.basis.end());
    for (std::size_t t = 0; t < a.action.size(); ++t) {
      out.action.push_back(direct_sum(a.action[t], b.action[t]));
    }
    return out;
  }

  std::vector<RationalMatrix> element_matrices(HeckeModule const& m) {
    if (m.sys == nullptr) {
      throw std::invalid_argument("module has no Coxeter system");
    }
    CoxeterSystem const&        sys = *m.sys;
    std::vector<RationalMatrix> out(sys.size());
    out[0] = RationalMatrix::identity(m.dimension());
    for (E u = 1; u < sys.size(); ++u) {
      std::size_t const s      = sys.reduced_word(u).back();
      E const           parent = sys.right_mul(u, s);
      // z_u = z_parent e_s
      out[u] = out[parent] * m.action[s];
    }
    return out;
  }

  bool effective_check(HeckeModule const& m) {
    std::set<std::string> distinct;
    for (auto const& a : element_matrices(m)) {
      distinct.insert(to_string(a));
    }
    return distinct.size() == m.sys->size();
  }

  HeckeModule sum_of_reduced_projectives(CoxeterSystem const& sys) {
    HeckeModule out = split_P(build_P(sys, 0)).first;
    for (std::size_t s = 1; s < sys.rank(); ++s) {
      out = direct_sum(out, split_P(build_P(sys, s)).first);
    }
    return out;
  }

  MinDimReport min_dim_report(CoxeterSystem const& sys) {
    MinDimReport out;
    out.claimed         = vertex_count(sys) - sys.rank();
    HeckeModule const m = sum_of_reduced_projectives(sys);
    out.constructed_dim = m.dimension();
    out.effective       = effective_check(m);
    out.socle_verified  = true;
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      auto const c = check_simple_socle(sys, s);
      out.socle_verified = out.socle_verified && c.simple && c.vector_ok && c.type_ok;
    }
    return out;
  }

  DcMinDimReport dc_min_dim_check(std::size_t n) {
    if (n < 2) {
      throw std::invalid_argument("dc_min_dim_check needs n >= 2");
    }
    auto const sys = CoxeterSystem::build({CoxeterType::Family::A, n - 1});
    HeckeModule const m = direct_sum(split_P(build_P(sys, 0)).first,
                                     split_P(build_P(sys, n - 2)).first);
    auto const mats = element_matrices(m);

    std::map<BoolMatrix, std::string> by_image;
    DcMinDimReport                    out;
    out.dim          = m.dimension();
    out.well_defined = true;
    for (E u = 0; u < sys.size(); ++u) {
      std::vector<int> v;
      for (auto x : sys.carrier_permutation(u)) {
        v.push_back(static_cast<int>(x) + 1);
      }
      BoolMatrix const image = psi(Permutation(std::move(v))).matrix();
      std::string      enc   = to_string(mats[u]);
      auto [it, inserted]    = by_image.emplace(image, enc);
      if (!inserted && it->second != enc) {
        out.well_defined = false;
      }
    }
    std::set<std::string> distinct;
    for (auto const& [image, enc] : by_image) {
      distinct.insert(enc);
    }
    out.monoid_size = by_image.size();
    out.effective   = distinct.size() == by_image.size();
    return out;
  }

}  // namespace catkit
