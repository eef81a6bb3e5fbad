#pragma once

#include "ghom/fpmodule.hpp"

namespace ghom {

// Degree-0 map of finitely presented graded modules, given by its matrix on
// the covers.  Construction checks homogeneity and well-definedness (the
// matrix must send every relation of the source into the relation span of the
// target) and throws InputError otherwise.
class ModuleMap {
 public:
  ModuleMap(FPModule src, FPModule tgt, HomogeneousMatrix mat);

  const FPModule& src() const { return src_; }
  const FPModule& tgt() const { return tgt_; }
  const HomogeneousMatrix& matrix() const { return mat_; }
  const PolyRing& S() const { return src_.S(); }
  const RingPtr& ring() const { return src_.ring(); }

  static ModuleMap zero(FPModule src, FPModule tgt);
  static ModuleMap identity(FPModule M);

 private:
  FPModule src_, tgt_;
  HomogeneousMatrix mat_;
};

// g after f; throws InputError unless tgt(f) and src(g) have identical
// presentations.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

// A subquotient (span(num) + span(den)) / span(den) of a free module,
// packaged as a presented module together with the matrix sending its
// generators to their representatives in the ambient free module.
struct Subquotient {
  HomogeneousMatrix gens;  // module.cover() -> ambient free module
  FPModule module;
};

Subquotient subquotient(const RingPtr& ring, const HomogeneousMatrix& num,
                        const HomogeneousMatrix& den);

// ker(f) as a subquotient of src(f): gens land in the cover of src(f).
Subquotient kernel_with_embedding(const ModuleMap& f);
FPModule kernel(const ModuleMap& f);
FPModule cokernel(const ModuleMap& f);
FPModule image(const ModuleMap& f);

bool is_zero_map(const ModuleMap& f);
bool is_injective(const ModuleMap& f);
bool is_surjective(const ModuleMap& f);
bool is_isomorphism(const ModuleMap& f);

// Exactness at the middle of  src(f) -> B -> tgt(g)  (requires tgt(f) and
// src(g) to have identical presentations).
bool is_exact_at(const ModuleMap& f, const ModuleMap& g);

// 0 -> src(inj) -> mid -> tgt(surj) -> 0.
struct ShortExactSequence {
  ModuleMap inj;
  ModuleMap surj;
  // Throws InputError naming the failing condition.
  void validate() const;
};

}  // namespace ghom
