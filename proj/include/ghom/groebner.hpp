#pragma once

#include <optional>
#include <vector>

#include "ghom/freemodule.hpp"

namespace ghom {

// Lead term of a module element under position-over-term: the first component
// with a nonzero polynomial wins (lower position beats any monomial), ties
// broken by the ring's monomial order inside the component.
struct ModuleLead {
  int pos;
  Monomial m;
  Coeff c;
};

std::optional<ModuleLead> module_lead(const Vec& v);
// -1/0/+1 comparison of module terms (pos, m) under position-over-term.
int compare_module_terms(const PolyRing& S, int pos_a, const Monomial& ma,
                         int pos_b, const Monomial& mb);

// Canonical reduced Groebner basis of a submodule of a graded free module
// over the ambient polynomial ring S.  When over_ideal is nonempty the basis
// also spans q*e_i for every ideal generator q, so normal forms realize the
// quotient ring R = S/I semantics.
struct GroebnerBasis {
  GradedFreeModule ambient;
  std::vector<Vec> gens;               // interreduced, monic, sorted descending
  std::vector<long long> degrees;      // homogeneous degree of each gen
  std::vector<Polynomial> over_ideal;
};

// Completes `gens` (plus over_ideal * e_i for every position) to the canonical
// reduced basis.  Normal S-pair strategy: lowest degree first, queue stable
// under input order.  Inputs must be homogeneous; zero vectors are dropped.
GroebnerBasis buchberger(const PolyRing& S, const GradedFreeModule& ambient,
                         const std::vector<Vec>& gens,
                         std::vector<Polynomial> over_ideal);

// Rank-one convenience for ideals.
GroebnerBasis buchberger_ideal(const PolyRing& S, const std::vector<Polynomial>& gens);

// Full normal form: every term of the result is irreducible modulo gb.
Vec normal_form(const PolyRing& S, const GroebnerBasis& gb, const Vec& v);
Polynomial normal_form_poly(const PolyRing& S, const GroebnerBasis& gb,
                            const Polynomial& f);

// Division coefficients of v over gb.gens (exact: sum of c_k * gens_k == v);
// nullopt when the remainder is nonzero.
std::optional<std::vector<Polynomial>> lift(const PolyRing& S, const GroebnerBasis& gb,
                                            const Vec& v);

struct SyzygyCertificate {
  HomogeneousMatrix basis_matrix;   // free-on-gens -> ambient
  HomogeneousMatrix syzygy_matrix;  // free-on-syzygies -> free-on-gens
  std::vector<Polynomial> over_ideal;
  // Checks basis_matrix * syzygy_matrix == 0 modulo the quotient ideal
  // (exactly zero when over_ideal is empty).  Throws TheoryViolation.
  void verify(const PolyRing& S) const;
};

// Generators of the kernel of "evaluate on gb.gens" over R = S/over_ideal.
SyzygyCertificate syzygies(const PolyRing& S, const GroebnerBasis& gb);

// Generators of the R-syzygies among the columns of `cols` (source twists of
// `cols` are taken as the declared column degrees).  Result: matrix whose
// target is free on the columns of `cols`.  Entries are reduced modulo the
// ideal; columns that vanish modulo the ideal are dropped.
HomogeneousMatrix syzygy_columns(const PolyRing& S, const HomogeneousMatrix& cols,
                                 const std::vector<Polynomial>& ideal);

struct KernelPresentation {
  HomogeneousMatrix generators;  // free-on-kernel-gens -> source of f
  HomogeneousMatrix relations;   // free-on-relations -> free-on-kernel-gens
};

// Presentation of ker(f) over R = S/ideal via two nested syzygy computations.
KernelPresentation kernel_presentation(const PolyRing& S, const HomogeneousMatrix& f,
                                       const std::vector<Polynomial>& ideal);

// Coefficients c with v == sum c_j * col_j modulo ideal * ambient, or nullopt
// when v is not in the span over R.  Deterministic canonical representative.
std::optional<std::vector<Polynomial>> lift_through_columns(
    const PolyRing& S, const Vec& v, const HomogeneousMatrix& cols,
    const std::vector<Polynomial>& ideal);

// Membership of v in the R-span of the columns.
bool in_column_span(const PolyRing& S, const Vec& v, const HomogeneousMatrix& cols,
                    const std::vector<Polynomial>& ideal);

}  // namespace ghom
