#include "ghom/maps.hpp"

#include "ghom/errors.hpp"
#include "ghom/groebner.hpp"

namespace ghom {

ModuleMap::ModuleMap(FPModule src, FPModule tgt, HomogeneousMatrix mat)
    : src_(std::move(src)), tgt_(std::move(tgt)), mat_(std::move(mat)) {
  if (!src_.ring()->same_ring(*tgt_.ring()))
    throw InputError("module map: source and target live over different rings");
  if (!(mat_.source() == src_.cover() && mat_.target() == tgt_.cover()))
    throw InputError("module map: matrix shape does not match the covers");
  const PolyRing& S = src_.S();
  mat_.validate(S);
  const std::vector<Polynomial>& ideal = src_.ring()->ideal();
  for (int j = 0; j < src_.presentation().cols(); ++j) {
    Vec image = matrix_apply(S, mat_, src_.presentation().column(j));
    if (!in_column_span(S, image, tgt_.presentation(), ideal))
      throw InputError("module map: matrix does not respect relation column " +
                       std::to_string(j));
  }
}

ModuleMap ModuleMap::zero(FPModule src, FPModule tgt) {
  HomogeneousMatrix m = HomogeneousMatrix::zero(src.cover(), tgt.cover());
  return ModuleMap(std::move(src), std::move(tgt), std::move(m));
}

ModuleMap ModuleMap::identity(FPModule M) {
  HomogeneousMatrix m = HomogeneousMatrix::identity(M.S(), M.cover());
  FPModule copy = M;
  return ModuleMap(std::move(copy), std::move(M), std::move(m));
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (!same_presentation(f.tgt(), g.src()))
    throw InputError("compose: middle modules do not match");
  HomogeneousMatrix m = matrix_compose(f.S(), g.matrix(), f.matrix());
  return ModuleMap(f.src(), g.tgt(), std::move(m));
}

Subquotient subquotient(const RingPtr& ring, const HomogeneousMatrix& num,
                        const HomogeneousMatrix& den) {
  if (!(num.target() == den.target()))
    throw InputError("subquotient: numerator and denominator have different ambients");
  const PolyRing& S = ring->S();
  const std::vector<Polynomial>& ideal = ring->ideal();
  HomogeneousMatrix kept = prune_columns(S, ideal, num, &den);
  const int k = kept.cols();
  if (k == 0)
    return {HomogeneousMatrix::zero(GradedFreeModule{}, num.target()),
            FPModule::zero_module(ring)};
  HomogeneousMatrix syz = syzygy_columns(S, matrix_augment(kept, den), ideal);
  std::vector<Vec> rel_cols;
  std::vector<int> rel_tw;
  for (int j = 0; j < syz.cols(); ++j) {
    Vec full = syz.column(j);
    Vec c(full.begin(), full.begin() + k);
    if (vec_is_zero(c)) continue;
    rel_cols.push_back(std::move(c));
    rel_tw.push_back(syz.source().twists[j]);
  }
  FPModule mod = FPModule::from_columns(ring, kept.source(), rel_cols, rel_tw);
  return {kept, std::move(mod)};
}

Subquotient kernel_with_embedding(const ModuleMap& f) {
  const PolyRing& S = f.S();
  const std::vector<Polynomial>& ideal = f.ring()->ideal();
  const int k = f.src().cover().rank();
  HomogeneousMatrix syz =
      syzygy_columns(S, matrix_augment(f.matrix(), f.tgt().presentation()), ideal);
  std::vector<Vec> cols;
  std::vector<int> tws;
  for (int j = 0; j < syz.cols(); ++j) {
    Vec full = syz.column(j);
    Vec c(full.begin(), full.begin() + k);
    if (vec_is_zero(c)) continue;
    cols.push_back(std::move(c));
    tws.push_back(syz.source().twists[j]);
  }
  HomogeneousMatrix num =
      HomogeneousMatrix::from_columns(GradedFreeModule{tws}, f.src().cover(), cols);
  return subquotient(f.ring(), num, f.src().presentation());
}

FPModule kernel(const ModuleMap& f) { return kernel_with_embedding(f).module; }

FPModule cokernel(const ModuleMap& f) {
  return FPModule(f.ring(), matrix_augment(f.matrix(), f.tgt().presentation()));
}

FPModule image(const ModuleMap& f) {
  return subquotient(f.ring(), f.matrix(), f.tgt().presentation()).module;
}

bool is_zero_map(const ModuleMap& f) {
  const std::vector<Polynomial>& ideal = f.ring()->ideal();
  for (int j = 0; j < f.matrix().cols(); ++j)
    if (!in_column_span(f.S(), f.matrix().column(j), f.tgt().presentation(), ideal))
      return false;
  return true;
}

bool is_injective(const ModuleMap& f) { return is_zero_module(kernel(f)); }

bool is_surjective(const ModuleMap& f) { return is_zero_module(cokernel(f)); }

bool is_isomorphism(const ModuleMap& f) {
  return is_injective(f) && is_surjective(f);
}

bool is_exact_at(const ModuleMap& f, const ModuleMap& g) {
  if (!same_presentation(f.tgt(), g.src()))
    throw InputError("is_exact_at: middle modules do not match");
  if (!is_zero_map(compose(g, f))) return false;
  // ker(g) must be contained in im(f) + relations of the middle module.
  const PolyRing& S = f.S();
  const std::vector<Polynomial>& ideal = f.ring()->ideal();
  Subquotient ker = kernel_with_embedding(g);
  HomogeneousMatrix span = matrix_augment(f.matrix(), f.tgt().presentation());
  for (int j = 0; j < ker.gens.cols(); ++j)
    if (!in_column_span(S, ker.gens.column(j), span, ideal)) return false;
  return true;
}

void ShortExactSequence::validate() const {
  if (!same_presentation(inj.tgt(), surj.src()))
    throw InputError("short exact sequence: middle modules do not match");
  if (!is_injective(inj))
    throw InputError("short exact sequence: left map is not injective");
  if (!is_surjective(surj))
    throw InputError("short exact sequence: right map is not surjective");
  if (!is_exact_at(inj, surj))
    throw InputError("short exact sequence: not exact at the middle");
}

}  // namespace ghom
