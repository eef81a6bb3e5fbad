#include "ghom/gdim.hpp"

#include <algorithm>

#include "ghom/errors.hpp"

namespace ghom {

int depth_module(const FPModule& M) {
  if (is_zero_module(M)) throw InputError("depth of the zero module is undefined");
  const RingPtr& ring = M.ring();
  FPModule k = FPModule::residue_field(ring);
  const int dim = ring->dim();
  std::vector<FPModule> exts = ext_range(k, M, dim);
  for (int i = 0; i <= dim; ++i)
    if (!is_zero_module(exts[i])) return i;
  throw TheoryViolation("depth scan found no nonvanishing ext up to the ring dimension");
}

int ring_depth(const RingPtr& ring) {
  return ring->depth_slot().get_or_compute(
      [&] { return depth_module(FPModule::ring_module(ring)); });
}

std::optional<int> grade_module(const FPModule& C) {
  if (is_zero_module(C)) return std::nullopt;
  const RingPtr& ring = C.ring();
  FPModule RM = FPModule::ring_module(ring);
  const int dim = ring->dim();
  std::vector<FPModule> exts = ext_range(C, RM, dim);
  for (int i = 0; i <= dim; ++i)
    if (!is_zero_module(exts[i])) return i;
  throw TheoryViolation("grade scan found no nonvanishing ext up to the ring dimension");
}

bool is_gorenstein(const RingPtr& ring) {
  return ring->gorenstein_slot().get_or_compute([&] {
    const int d = ring_depth(ring);
    if (d != ring->dim()) return false;
    FPModule k = FPModule::residue_field(ring);
    FPModule top = ext_module(d, k, FPModule::ring_module(ring));
    auto total = hilbert_series(top).total_dimension();
    if (!total)
      throw TheoryViolation("top ext of the residue field is not finite length");
    return *total == 1;
  });
}

GdimZeroReport gdim_zero(const FPModule& M, int bound) {
  const RingPtr& ring = M.ring();
  if (bound < 0) bound = ring->dim() + 2;
  if (bound < 2) throw InputError("vanishing bound must be >= 2");
  GdimZeroReport rep;
  rep.bound = bound;
  if (is_zero_module(M)) {
    rep.ok = rep.torsionless = rep.reflexive = true;
    return rep;
  }
  SigmaAnalysis sa = sigma_analysis(M);
  rep.torsionless = sa.torsionless;
  rep.reflexive = sa.reflexive;
  FPModule RM = FPModule::ring_module(ring);
  std::vector<FPModule> extM = ext_range(sa.M, RM, bound);
  for (int i = 1; i <= bound; ++i)
    if (!is_zero_module(extM[i])) {
      rep.failing_side = "ext-module";
      rep.failing_index = i;
      return rep;
    }
  FPModule D = auslander_transpose(sa.M);
  std::vector<FPModule> extD = ext_range(D, RM, bound);
  for (int i = 1; i <= bound; ++i)
    if (!is_zero_module(extD[i])) {
      rep.failing_side = "ext-transpose";
      rep.failing_index = i;
      return rep;
    }
  // All transpose exts vanish, so sigma must have declared reflexivity.
  if (!rep.reflexive) throw TheoryViolation("sigma and transpose routes disagree");
  rep.ok = true;
  return rep;
}

GdimReport gdim(const FPModule& M, int bound) {
  const RingPtr& ring = M.ring();
  if (bound < 0) bound = ring->dim() + 2;
  GdimReport rep;
  rep.bound = bound;
  if (is_zero_module(M)) {
    rep.kind = GdimReport::Kind::ZeroModule;
    return rep;
  }
  const int d = ring_depth(ring);
  Resolution res = resolve(M, d + 1, true);
  FPModule K = (res.terminated && d > res.length())
                   ? FPModule::zero_module(ring)
                   : res.syzygy_module(std::min(d, res.length()));
  rep.syzygy_test = gdim_zero(K, bound);
  FPModule RM = FPModule::ring_module(ring);
  std::vector<FPModule> exts = ext_range(M, RM, bound);
  for (int i = 1; i <= bound; ++i)
    if (!is_zero_module(exts[i])) rep.nonzero_ext.push_back(i);
  if (rep.syzygy_test.ok) {
    int g = 0;
    for (int i : rep.nonzero_ext) g = std::max(g, i);
    if (g > d)
      throw TheoryViolation("nonvanishing ext beyond the ring depth despite finiteness");
    rep.kind = GdimReport::Kind::Finite;
    rep.value = g;
    rep.depth_of_module = depth_module(M);
    rep.depth_of_ring = d;
    if (rep.value + rep.depth_of_module != rep.depth_of_ring)
      throw TheoryViolation("depth formula fails");
  } else {
    if (is_gorenstein(ring))
      throw TheoryViolation("no finiteness certificate over a Gorenstein ring");
    rep.kind = GdimReport::Kind::InfiniteUpToBound;
  }
  return rep;
}

GradeProfile ext_grade_profile(const FPModule& M, int k) {
  if (k < 0) throw InputError("profile level must be >= 0");
  const RingPtr& ring = M.ring();
  const int bound = ring->dim() + 2;
  GradeProfile prof;
  prof.k = k;
  prof.ok = true;
  FPModule RM = FPModule::ring_module(ring);
  std::vector<FPModule> exts = ext_range(M, RM, bound);
  for (int i = 1; i <= bound; ++i) {
    std::optional<int> gr = grade_module(exts[i]);
    bool row_ok = !gr.has_value() || *gr >= i + k;
    prof.rows.push_back({i, gr, row_ok});
    prof.ok = prof.ok && row_ok;
  }
  return prof;
}

bool is_regular_on(const Polynomial& x, const FPModule& M) {
  const PolyRing& S = M.S();
  const RingPtr& ring = M.ring();
  auto deg = S.homogeneous_degree(x);
  if (!deg || *deg <= 0)
    throw InputError("multiplier must be homogeneous of positive degree");
  if (ring->is_zero_in_ring(x)) throw InputError("multiplier is zero in the ring");
  FPModule Mm = minimalize(M);
  FPModule src = Mm.shifted(static_cast<int>(*deg));
  const int r = Mm.cover().rank();
  std::vector<std::vector<Polynomial>> entries(r,
                                               std::vector<Polynomial>(r, S.zero()));
  for (int i = 0; i < r; ++i) entries[i][i] = x;
  HomogeneousMatrix mat(src.cover(), Mm.cover(), std::move(entries));
  mat.validate(S);
  ModuleMap mul(src, Mm, mat);
  return is_zero_module(kernel(mul));
}

}  // namespace ghom
