#ifndef CATKIT_REPMIN_HPP_
#define CATKIT_REPMIN_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "catkit/coxeter.hpp"
#include "catkit/linalg.hpp"

namespace catkit {

  // A finite-dimensional H(W)-module given by the matrices of the
  // generators e_s, acting on column vectors. `sys` is not owned.
  struct HeckeModule {
    CoxeterSystem const*        sys = nullptr;
    std::vector<std::string>    basis;   // labels
    std::vector<RationalMatrix> action;  // one per generator
    // For build_P the w of basis vector z_w, for split_P the w of z_w - z_{w0};
    // empty otherwise.
    std::vector<CoxeterSystem::element_type> basis_elements;

    std::size_t dimension() const noexcept {
      return basis.size();
    }
  };

  // P_(s) = k H(W) e_(s) on the basis z_w, w in W^(s) (increasing element
  // order, so z_{w0} comes last). e_t z_w = z_{tw} if longer, else z_w.
  HeckeModule build_P(CoxeterSystem const& sys, std::size_t s);

  // P' on the basis z_w - z_{w0} (w != w0) and the trivial summand k z_{w0}.
  std::pair<HeckeModule, HeckeModule> split_P(HeckeModule const& p);

  // Generator matrices are idempotent and satisfy the braid relations.
  bool satisfies_hecke_relations(HeckeModule const& m);

  struct EigenStructure {
    std::vector<RationalVector> fixed;   // e_t v = v
    std::vector<RationalVector> kernel;  // e_t v = 0
  };

  // Bases of the two eigenspaces of e_t by exact elimination.
  EigenStructure eigen_structure(HeckeModule const& m, std::size_t t);
  // The orbit description for P_(s): fixed space spanned by z_w with t in
  // D_L(w), kernel by z_w - z_{tw} over two-element orbits.
  EigenStructure orbit_eigen_structure(HeckeModule const& p, std::size_t t);

  // dim span(vectors)
  std::size_t span_dimension(std::vector<RationalVector> const& vectors,
                             std::size_t                        dim);

  struct SocleComponent {
    GeneratorMask               type = 0;  // J of theta_J
    std::vector<RationalVector> basis;
  };

  struct SocleReport {
    std::vector<SocleComponent> components;  // nonzero ones only
    std::size_t                 dimension = 0;
  };

  // For each J, {v : e_t v = v for t in J, e_t v = 0 for t not in J}.
  SocleReport socle(HeckeModule const& m);
  // Total socle dimension over Z/p.
  std::size_t socle_dimension_mod_p(HeckeModule const& m, std::uint64_t p);

  struct SimpleSocleCheck {
    std::size_t   dimension     = 0;
    bool          simple        = false;
    bool          vector_ok     = false;  // spanned by z_{w0 s} - z_{w0}
    bool          type_ok       = false;  // theta_{(w0 s w0)}
    GeneratorMask expected_type = 0;
  };

  SimpleSocleCheck check_simple_socle(CoxeterSystem const& sys, std::size_t s);

  HeckeModule direct_sum(HeckeModule const& a, HeckeModule const& b);

  // Matrix of z_w for every w, built along breadth-first parents.
  std::vector<RationalMatrix> element_matrices(HeckeModule const& m);
  // Distinct elements act by distinct matrices.
  bool effective_check(HeckeModule const& m);

  // The sum of P'_(s) over all s.
  HeckeModule sum_of_reduced_projectives(CoxeterSystem const& sys);

  struct MinDimReport {
    std::size_t claimed         = 0;  // v(W) - r(W)
    std::size_t constructed_dim = 0;
    bool        effective       = false;
    bool        socle_verified  = false;
  };

  MinDimReport min_dim_report(CoxeterSystem const& sys);

  struct DcMinDimReport {
    std::size_t dim          = 0;
    std::size_t monoid_size  = 0;  // number of distinct Psi images
    bool        well_defined = false;  // matrices constant on Psi fibers
    bool        effective    = false;  // distinct images, distinct matrices
  };

  // P'_(s_1) + P'_(s_{n-1}) for A_{n-1}, as a module over DC_n.
  DcMinDimReport dc_min_dim_check(std::size_t n);

}  // namespace catkit

#endif  // CATKIT_REPMIN_HPP_
