#include "ghom/homext.hpp"

#include "ghom/errors.hpp"
#include "ghom/groebner.hpp"

namespace ghom {

FPModule hom_into(const GradedFreeModule& F, const FPModule& N) {
  const int r0 = N.cover().rank();
  const int rF = F.rank();
  std::vector<int> cover_tw(static_cast<size_t>(r0) * rF, 0);
  for (int b = 0; b < rF; ++b)
    for (int a = 0; a < r0; ++a)
      cover_tw[hom_index(a, b, r0)] = N.cover().twists[a] - F.twists[b];
  const HomogeneousMatrix& w = N.presentation();
  std::vector<Vec> rels;
  std::vector<int> rel_tw;
  for (int b = 0; b < rF; ++b)
    for (int j = 0; j < w.cols(); ++j) {
      Vec c = vec_zero(r0 * rF);
      for (int a = 0; a < r0; ++a) c[hom_index(a, b, r0)] = w.entry(a, j);
      rels.push_back(std::move(c));
      rel_tw.push_back(w.source().twists[j] - F.twists[b]);
    }
  return FPModule::from_columns(N.ring(), GradedFreeModule{cover_tw}, rels, rel_tw);
}

HomogeneousMatrix hom_map(const PolyRing& S, const HomogeneousMatrix& d,
                          const FPModule& N) {
  const GradedFreeModule& F = d.source();
  const GradedFreeModule& G = d.target();
  const int r0 = N.cover().rank();
  std::vector<int> src_tw(static_cast<size_t>(r0) * G.rank(), 0);
  for (int b = 0; b < G.rank(); ++b)
    for (int a = 0; a < r0; ++a)
      src_tw[hom_index(a, b, r0)] = N.cover().twists[a] - G.twists[b];
  std::vector<int> tgt_tw(static_cast<size_t>(r0) * F.rank(), 0);
  for (int b = 0; b < F.rank(); ++b)
    for (int a = 0; a < r0; ++a)
      tgt_tw[hom_index(a, b, r0)] = N.cover().twists[a] - F.twists[b];
  std::vector<std::vector<Polynomial>> entries(
      tgt_tw.size(), std::vector<Polynomial>(src_tw.size(), S.zero()));
  for (int b = 0; b < F.rank(); ++b)
    for (int b2 = 0; b2 < G.rank(); ++b2)
      for (int a = 0; a < r0; ++a)
        entries[hom_index(a, b, r0)][hom_index(a, b2, r0)] = d.entry(b2, b);
  HomogeneousMatrix m(GradedFreeModule{src_tw}, GradedFreeModule{tgt_tw},
                      std::move(entries));
  m.validate(S);
  return m;
}

namespace {

// First-block projections of the syzygies of [head | tail]: generators of
// {v in source(head) : head * v lies in span(tail) over R}.
HomogeneousMatrix block_kernel(const PolyRing& S, const HomogeneousMatrix& head,
                               const HomogeneousMatrix& tail,
                               const std::vector<Polynomial>& ideal) {
  const int k = head.cols();
  HomogeneousMatrix syz =
      tail.cols() > 0 ? syzygy_columns(S, matrix_augment(head, tail), ideal)
                      : syzygy_columns(S, head, ideal);
  std::vector<Vec> cols;
  std::vector<int> tws;
  for (int j = 0; j < syz.cols(); ++j) {
    Vec full = syz.column(j);
    Vec c(full.begin(), full.begin() + k);
    if (vec_is_zero(c)) continue;
    cols.push_back(std::move(c));
    tws.push_back(syz.source().twists[j]);
  }
  return HomogeneousMatrix::from_columns(GradedFreeModule{tws}, head.source(), cols);
}

}  // namespace

Subquotient ext_from_resolution(const Resolution& res, int i, const FPModule& N) {
  if (i < 0) throw InputError("ext index must be >= 0");
  const RingPtr& ring = N.ring();
  if (!res.module.ring()->same_ring(*ring))
    throw InputError("ext: modules live over different rings");
  const PolyRing& S = N.S();
  const std::vector<Polynomial>& ideal = ring->ideal();
  const int len = res.length();
  if (i > len || (i == len && !res.terminated)) {
    if (!res.terminated)
      throw InputError("ext: resolution shorter than the requested index");
    return {HomogeneousMatrix::zero(GradedFreeModule{}, GradedFreeModule{}),
            FPModule::zero_module(ring)};
  }
  FPModule Ci = hom_into(res.F(i), N);
  HomogeneousMatrix num = HomogeneousMatrix::identity(S, Ci.cover());
  if (i < len) {
    HomogeneousMatrix d_next = hom_map(S, res.maps[i], N);  // C_i -> C_{i+1}
    FPModule Cnext = hom_into(res.F(i + 1), N);
    num = block_kernel(S, d_next, Cnext.presentation(), ideal);
  }
  HomogeneousMatrix den = Ci.presentation();
  if (i >= 1) den = matrix_augment(hom_map(S, res.maps[i - 1], N), den);
  return subquotient(ring, num, den);
}

Subquotient ext_with_embedding(int i, const FPModule& M, const FPModule& N) {
  if (i < 0) throw InputError("ext index must be >= 0");
  Resolution res = resolve(M, i + 1, true);
  return ext_from_resolution(res, i, N);
}

FPModule ext_module(int i, const FPModule& M, const FPModule& N) {
  return minimalize(ext_with_embedding(i, M, N).module);
}

std::vector<FPModule> ext_range(const FPModule& M, const FPModule& N, int upto) {
  if (upto < 0) throw InputError("ext range bound must be >= 0");
  Resolution res = resolve(M, upto + 1, true);
  std::vector<FPModule> out;
  out.reserve(upto + 1);
  for (int i = 0; i <= upto; ++i)
    out.push_back(minimalize(ext_from_resolution(res, i, N).module));
  return out;
}

FPModule hom_module(const FPModule& M, const FPModule& N) {
  return ext_module(0, M, N);
}

}  // namespace ghom
