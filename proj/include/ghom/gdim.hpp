#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghom/auslander.hpp"

namespace ghom {

// Least i with Ext^i(k, M) nonzero, scanning i = 0..dim R.  InputError for
// the zero module; TheoryViolation if the scan finds nothing.
int depth_module(const FPModule& M);
int ring_depth(const RingPtr& ring);  // depth of R over itself, cached

// Least i with Ext^i(C, R) nonzero; nullopt encodes grade(0) = +infinity.
std::optional<int> grade_module(const FPModule& C);

// depth R = dim R and the top Ext of the residue field is one-dimensional.
// Cached on the ring.
bool is_gorenstein(const RingPtr& ring);

// Reflexive with vanishing Ext^i(M, R) and Ext^i(tr M, R) for i = 1..bound
// (default bound dim R + 2).  Reflexivity itself is decided exactly through
// sigma, with the built-in cross-check against the transpose route.
struct GdimZeroReport {
  bool ok = false;
  bool torsionless = false;
  bool reflexive = false;
  std::string failing_side;  // "ext-module" or "ext-transpose" when !ok
  int failing_index = -1;
  int bound = 0;
};
GdimZeroReport gdim_zero(const FPModule& M, int bound = -1);

// Finite verdicts are exact; the infinite verdict is "no finiteness
// certificate up to the bound" (and a TheoryViolation over a Gorenstein
// ring, where it can never legitimately happen).
struct GdimReport {
  enum class Kind { ZeroModule, Finite, InfiniteUpToBound };
  Kind kind = Kind::ZeroModule;
  int value = -1;  // when Finite
  int bound = 0;
  GdimZeroReport syzygy_test;    // the test at the depth(R)-th syzygy
  std::vector<int> nonzero_ext;  // i >= 1 with Ext^i(M, R) nonzero
  int depth_of_module = -1;      // when Finite
  int depth_of_ring = -1;
};
GdimReport gdim(const FPModule& M, int bound = -1);

// Rows check grade Ext^i(M, R) >= i + k for i = 1..dim R + 2.
struct GradeProfileRow {
  int i = 0;
  std::optional<int> grade;  // nullopt: Ext^i(M, R) = 0
  bool ok = false;
};
struct GradeProfile {
  int k = 0;
  bool ok = false;
  std::vector<GradeProfileRow> rows;
};
GradeProfile ext_grade_profile(const FPModule& M, int k);

// x is a nonzerodivisor on M; x must be homogeneous of positive degree and
// nonzero in the ring.
bool is_regular_on(const Polynomial& x, const FPModule& M);

}  // namespace ghom
