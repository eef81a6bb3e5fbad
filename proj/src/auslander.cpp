#include "ghom/auslander.hpp"

#include <algorithm>

#include "ghom/errors.hpp"
#include "ghom/groebner.hpp"

namespace ghom {

FPModule auslander_transpose(const FPModule& M) {
  FPModule Mmin = minimalize(M);
  return FPModule(M.ring(), matrix_transpose(M.S(), Mmin.presentation()));
}

Subquotient dual_with_embedding(const FPModule& M) {
  const PolyRing& S = M.S();
  HomogeneousMatrix uT = matrix_transpose(S, M.presentation());
  HomogeneousMatrix num = syzygy_columns(S, uT, M.ring()->ideal());
  HomogeneousMatrix den = HomogeneousMatrix::zero(GradedFreeModule{}, uT.source());
  return subquotient(M.ring(), num, den);
}

SigmaAnalysis sigma_analysis(const FPModule& M0) {
  const PolyRing& S = M0.S();
  const RingPtr& ring = M0.ring();
  const std::vector<Polynomial>& ideal = ring->ideal();
  FPModule M = minimalize(M0);
  Subquotient star = dual_with_embedding(M);
  Subquotient dstar = dual_with_embedding(star.module);

  // sigma sends the i-th generator of M to evaluation at it; in the ambient
  // cover(M*)^* its column is the i-th coordinate row of the generators of M*.
  HomogeneousMatrix Zt = matrix_transpose(S, star.gens);
  std::vector<Vec> cols;
  for (int i = 0; i < Zt.cols(); ++i) {
    auto c = lift_through_columns(S, Zt.column(i), dstar.gens, ideal);
    if (!c) throw TheoryViolation("sigma lands outside the double dual");
    cols.push_back(std::move(*c));
  }
  HomogeneousMatrix sig =
      HomogeneousMatrix::from_columns(M.cover(), dstar.module.cover(), cols);
  sig.validate(S);
  ModuleMap sigma(M, dstar.module, sig);

  FPModule K = minimalize(kernel(sigma));
  FPModule C = minimalize(cokernel(sigma));

  FPModule D = auslander_transpose(M);
  FPModule RM = FPModule::ring_module(ring);
  std::vector<FPModule> exts = ext_range(D, RM, 2);
  const FPModule& Ke = exts[1];
  const FPModule& Ce = exts[2];
  if (!(hilbert_series(K) == hilbert_series(Ke)))
    throw TheoryViolation("sigma kernel disagrees with ext of the transpose");
  if (!(hilbert_series(C) == hilbert_series(Ce)))
    throw TheoryViolation("sigma cokernel disagrees with ext of the transpose");

  bool tl = is_zero_module(K);
  bool refl = tl && is_zero_module(C);
  return SigmaAnalysis{std::move(M),  star.module,     dstar.module,
                       std::move(sigma), std::move(K), std::move(C),
                       Ke,             Ce,              tl,
                       refl};
}

TorsionlessReport is_k_torsionless(const FPModule& M, int k) {
  if (k < 0) throw InputError("torsionless level must be >= 0");
  TorsionlessReport rep;
  rep.k = k;
  rep.ok = true;
  if (k == 0) return rep;  // vacuous
  FPModule D = auslander_transpose(M);
  FPModule RM = FPModule::ring_module(M.ring());
  std::vector<FPModule> exts = ext_range(D, RM, k);
  for (int i = 1; i <= k; ++i)
    if (!is_zero_module(exts[i])) {
      rep.ok = false;
      rep.first_failure = i;
      rep.witness = hilbert_series(exts[i]);
      break;
    }
  return rep;
}

Pushforward universal_pushforward(const FPModule& M0) {
  const PolyRing& S = M0.S();
  const RingPtr& ring = M0.ring();
  FPModule M = minimalize(M0);
  Subquotient star = dual_with_embedding(M);
  // Columns of phi list, per generator of M, its values under the minimal
  // generators of M* (ascending degree).
  HomogeneousMatrix phi = matrix_transpose(S, star.gens);
  FPModule P = FPModule::free_module(ring, phi.target());
  FPModule N(ring, phi);
  ModuleMap into(M, P, phi);
  ModuleMap onto(P, N, HomogeneousMatrix::identity(S, phi.target()));
  bool inj = is_injective(into);
  bool dx = is_zero_module(ext_module(1, N, FPModule::ring_module(ring)));
  return Pushforward{std::move(M),   std::move(P), std::move(N),
                     std::move(into), std::move(onto), inj, dx};
}

bool SixTerm::all_exact() const {
  return std::all_of(std::begin(exact), std::end(exact), [](bool b) { return b; });
}

SixTerm six_term(const ShortExactSequence& ses) {
  ses.validate();
  const ModuleMap& f = ses.inj;   // A -> B
  const ModuleMap& g = ses.surj;  // B -> C
  const PolyRing& S = f.S();
  const RingPtr& ring = f.ring();
  const std::vector<Polynomial>& ideal = ring->ideal();
  const FPModule& A = f.src();
  const FPModule& B = f.tgt();
  const FPModule& C = g.tgt();
  const HomogeneousMatrix& uA = A.presentation();
  const HomogeneousMatrix& uC = C.presentation();
  const int rA = A.cover().rank();
  const int rB = B.cover().rank();
  const int rC = C.cover().rank();

  // Lift each generator of C through the surjection.
  std::vector<Vec> vcols;
  for (int j = 0; j < rC; ++j) {
    Vec e = vec_zero(rC);
    e[j] = S.one();
    auto c = lift_through_columns(S, e, matrix_augment(g.matrix(), uC), ideal);
    if (!c) throw TheoryViolation("surjection admits no lift of a generator");
    vcols.emplace_back(c->begin(), c->begin() + rB);
  }
  HomogeneousMatrix V = HomogeneousMatrix::from_columns(C.cover(), B.cover(), vcols);
  V.validate(S);

  // Each lifted relation of C falls into the image of A; record coefficients.
  std::vector<Vec> acols;
  HomogeneousMatrix span = matrix_augment(f.matrix(), B.presentation());
  for (int j = 0; j < uC.cols(); ++j) {
    Vec w = matrix_apply(S, V, uC.column(j));
    auto c = lift_through_columns(S, w, span, ideal);
    if (!c) throw TheoryViolation("lifted relation misses the image of the injection");
    acols.emplace_back(c->begin(), c->begin() + rA);
  }
  HomogeneousMatrix Amat =
      HomogeneousMatrix::from_columns(uC.source(), A.cover(), acols);
  Amat.validate(S);

  // Stacked presentation of B over the covers of A and C.
  GradedFreeModule Q0 = A.cover().concat(C.cover());
  GradedFreeModule Q1 = uA.source().concat(uC.source());
  std::vector<std::vector<Polynomial>> st(
      Q0.rank(), std::vector<Polynomial>(Q1.rank(), S.zero()));
  for (int i = 0; i < rA; ++i) {
    for (int j = 0; j < uA.cols(); ++j) st[i][j] = uA.entry(i, j);
    for (int j = 0; j < uC.cols(); ++j)
      st[i][uA.cols() + j] = S.neg(Amat.entry(i, j));
  }
  for (int i = 0; i < rC; ++i)
    for (int j = 0; j < uC.cols(); ++j) st[rA + i][uA.cols() + j] = uC.entry(i, j);
  HomogeneousMatrix stacked(Q1, Q0, std::move(st));
  stacked.validate(S);
  FPModule Bst(ring, stacked);
  if (!(hilbert_series(Bst) == hilbert_series(B)))
    throw TheoryViolation("stacked presentation has the wrong Hilbert series");

  Subquotient dualC = dual_with_embedding(C);
  Subquotient dualB = dual_with_embedding(Bst);
  Subquotient dualA = dual_with_embedding(A);
  FPModule trC(ring, matrix_transpose(S, uC));
  FPModule trB(ring, matrix_transpose(S, stacked));
  FPModule trA(ring, matrix_transpose(S, uA));

  // C* -> B*: a functional on C pulls back to (0, z) on the stacked cover.
  std::vector<Vec> cols1;
  for (int l = 0; l < dualC.gens.cols(); ++l) {
    Vec z = dualC.gens.column(l);
    Vec w = vec_zero(rA + rC);
    for (int i = 0; i < rC; ++i) w[rA + i] = z[i];
    auto c = lift_through_columns(S, w, dualB.gens, ideal);
    if (!c) throw TheoryViolation("pulled-back functional escapes the middle dual");
    cols1.push_back(std::move(*c));
  }
  ModuleMap pull_to_mid(
      dualC.module, dualB.module,
      HomogeneousMatrix::from_columns(dualC.module.cover(),
                                      dualB.module.cover(), cols1));

  // B* -> A*: restrict a functional on the stacked cover to the A block.
  std::vector<Vec> cols2;
  for (int l = 0; l < dualB.gens.cols(); ++l) {
    Vec w = dualB.gens.column(l);
    Vec z(w.begin(), w.begin() + rA);
    auto c = lift_through_columns(S, z, dualA.gens, ideal);
    if (!c) throw TheoryViolation("restricted functional escapes the left dual");
    cols2.push_back(std::move(*c));
  }
  ModuleMap pull_to_left(
      dualB.module, dualA.module,
      HomogeneousMatrix::from_columns(dualB.module.cover(),
                                      dualA.module.cover(), cols2));

  // A* -> tr(C): the connecting map lands directly in the cover of tr(C).
  HomogeneousMatrix AmatT = matrix_transpose(S, Amat);
  std::vector<Vec> cols3;
  for (int l = 0; l < dualA.gens.cols(); ++l)
    cols3.push_back(vec_neg(S, matrix_apply(S, AmatT, dualA.gens.column(l))));
  ModuleMap connecting(
      dualA.module, trC,
      HomogeneousMatrix::from_columns(dualA.module.cover(), trC.cover(), cols3));

  // tr(C) -> tr(B): include the relation block; tr(B) -> tr(A): project it.
  const int rA1 = uA.cols();
  const int rC1 = uC.cols();
  std::vector<std::vector<Polynomial>> inc(
      rA1 + rC1, std::vector<Polynomial>(rC1, S.zero()));
  for (int i = 0; i < rC1; ++i) inc[rA1 + i][i] = S.one();
  ModuleMap tr_of_surj(trC, trB,
                       HomogeneousMatrix(trC.cover(), trB.cover(), std::move(inc)));
  std::vector<std::vector<Polynomial>> prj(
      rA1, std::vector<Polynomial>(rA1 + rC1, S.zero()));
  for (int i = 0; i < rA1; ++i) prj[i][i] = S.one();
  ModuleMap tr_of_inj(trB, trA,
                      HomogeneousMatrix(trB.cover(), trA.cover(), std::move(prj)));

  FPModule dual_coker = minimalize(cokernel(pull_to_left));

  SixTerm out{dualC.module,  dualB.module,  dualA.module,
              trC,           trB,           trA,
              std::move(pull_to_mid), std::move(pull_to_left),
              std::move(connecting),  std::move(tr_of_surj),
              std::move(tr_of_inj),   std::move(dual_coker),
              {}};
  out.exact[0] = is_injective(out.pull_to_mid);
  out.exact[1] = is_exact_at(out.pull_to_mid, out.pull_to_left);
  out.exact[2] = is_exact_at(out.pull_to_left, out.connecting);
  out.exact[3] = is_exact_at(out.connecting, out.tr_of_surj);
  out.exact[4] = is_exact_at(out.tr_of_surj, out.tr_of_inj);
  out.exact[5] = is_surjective(out.tr_of_inj);
  return out;
}

SyzygyEmbedding syzygy_embedding(const FPModule& M, int k) {
  if (k < 1) throw InputError("syzygy embedding depth must be >= 1");
  SyzygyEmbedding out;
  FPModule X = minimalize(M);
  for (int step = 1; step <= k; ++step) {
    TorsionlessReport tl = is_k_torsionless(X, 1);
    Pushforward pf = universal_pushforward(X);
    if (tl.ok != pf.injective)
      throw TheoryViolation("torsionless routes disagree");
    if (!tl.ok) {
      out.failed_at = step;
      out.obstruction = std::move(tl.witness);
      return out;
    }
    X = minimalize(pf.N);
    out.chain.push_back(std::move(pf));
    out.steps_completed = step;
  }
  out.ok = true;
  return out;
}

}  // namespace ghom
