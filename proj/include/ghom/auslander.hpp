#pragma once

#include <optional>
#include <vector>

#include "ghom/homext.hpp"

namespace ghom {

// coker of the transposed minimal presentation.  Well defined up to free
// summands; we always transpose the canonical minimal presentation.
FPModule auslander_transpose(const FPModule& M);

// Hom(M, R) as a submodule of cover(M)^*, computed from the presentation as
// given (no minimalization) so that covers of derived maps stay predictable.
Subquotient dual_with_embedding(const FPModule& M);

// The natural map sigma: M -> M** together with its kernel and cokernel,
// computed two independent ways: directly, and as Ext^1 / Ext^2 of the
// transpose.  A Hilbert-series mismatch between the two routes throws
// TheoryViolation.
struct SigmaAnalysis {
  FPModule M;             // minimalized input
  FPModule dual;          // M*
  FPModule double_dual;   // M**
  ModuleMap sigma;        // M -> M**
  FPModule kernel_mod;    // ker sigma, minimalized
  FPModule cokernel_mod;  // coker sigma, minimalized
  FPModule kernel_ext;    // Ext^1(transpose, R), minimalized
  FPModule cokernel_ext;  // Ext^2(transpose, R), minimalized
  bool torsionless;       // ker sigma = 0
  bool reflexive;         // sigma is an isomorphism
};
SigmaAnalysis sigma_analysis(const FPModule& M);

// Ext^i(transpose, R) = 0 for i = 1..k, with the first failing index and its
// Hilbert series when the answer is no.
struct TorsionlessReport {
  int k = 0;
  bool ok = false;
  int first_failure = -1;
  std::optional<HilbertSeries> witness;
};
TorsionlessReport is_k_torsionless(const FPModule& M, int k);

// 0 -> M -> P -> N -> 0 with P free on the minimal generators of M*
// (ascending degree).  Injectivity of M -> P is equivalent to M being
// torsionless; dual_exact records Ext^1(N, R) = 0.
struct Pushforward {
  FPModule M;        // minimalized
  FPModule target;   // the free module P
  FPModule N;        // coker(M -> P)
  ModuleMap into;    // M -> P
  ModuleMap onto;    // P -> N
  bool injective;
  bool dual_exact;
};
Pushforward universal_pushforward(const FPModule& M);

// For 0 -> A -> B -> C -> 0, the induced
//   0 -> C* -> B* -> A* -> tr(C) -> tr(B) -> tr(A) -> 0
// built from the stacked (horseshoe) presentation of B; the middle dual and
// transpose refer to that presentation.  exact[] holds the six verdicts in
// order: C* -> B* injective, exact at B*, at A*, at tr(C), at tr(B),
// B -> tr(A) surjective.
struct SixTerm {
  FPModule dual_right;  // C*
  FPModule dual_mid;    // B* (stacked presentation)
  FPModule dual_left;   // A*
  FPModule tr_right, tr_mid, tr_left;
  ModuleMap pull_to_mid;    // C* -> B*
  ModuleMap pull_to_left;   // B* -> A*
  ModuleMap connecting;     // A* -> tr(C)
  ModuleMap tr_of_surj;     // tr(C) -> tr(B)
  ModuleMap tr_of_inj;      // tr(B) -> tr(A)
  FPModule dual_cokernel;   // coker(B* -> A*), minimalized
  bool exact[6] = {false, false, false, false, false, false};
  bool all_exact() const;
};
SixTerm six_term(const ShortExactSequence& ses);

// Iterated pushforwards: on success M embeds as a k-th syzygy through the
// recorded chain of short exact sequences.  Semi-decision: fails honestly at
// the first step whose running cokernel is not torsionless.
struct SyzygyEmbedding {
  bool ok = false;
  int steps_completed = 0;
  int failed_at = -1;  // 1-based step index, -1 on success
  std::optional<HilbertSeries> obstruction;  // Ext^1(transpose, R) at failure
  std::vector<Pushforward> chain;
};
SyzygyEmbedding syzygy_embedding(const FPModule& M, int k);

}  // namespace ghom
