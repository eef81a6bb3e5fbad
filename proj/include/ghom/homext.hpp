#pragma once

#include <vector>

#include "ghom/maps.hpp"

namespace ghom {

// Hom(F, N) for a free module F.  Cover index (a, b) = b * rank(cover N) + a
// stands for the hom sending the b-th basis vector of F to the a-th generator
// of N; its degree is twist_N(a) - twist_F(b).  Relations are per-b copies of
// the relations of N.
FPModule hom_into(const GradedFreeModule& F, const FPModule& N);
inline int hom_index(int a, int b, int n_rank) { return b * n_rank + a; }

// Matrix on covers of (- after d): Hom(G, N) -> Hom(F, N), for d: F -> G.
HomogeneousMatrix hom_map(const PolyRing& S, const HomogeneousMatrix& d,
                          const FPModule& N);

// Ext^i(M, N) read off an already computed free resolution of M; needs either
// i+1 maps or earlier termination.  The embedding lands in the cover of
// Hom(F_i, N).
Subquotient ext_from_resolution(const Resolution& res, int i, const FPModule& N);

Subquotient ext_with_embedding(int i, const FPModule& M, const FPModule& N);

// Minimalized Ext^i(M, N).
FPModule ext_module(int i, const FPModule& M, const FPModule& N);

// Ext^0..Ext^upto sharing one resolution of M; entries minimalized.
std::vector<FPModule> ext_range(const FPModule& M, const FPModule& N, int upto);

FPModule hom_module(const FPModule& M, const FPModule& N);

}  // namespace ghom
