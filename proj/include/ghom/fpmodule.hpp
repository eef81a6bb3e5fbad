#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "ghom/gradedring.hpp"

namespace ghom {

// Rational function N(t) / prod_i (1 - t^{w_i}) with integer Laurent
// polynomial numerator.  Two graded modules over rings with the same ambient
// weights have equal Hilbert series iff the numerators coincide.
struct HilbertSeries {
  std::map<int, long long> numerator;  // exponent -> coefficient, zeros omitted
  std::vector<int> weights;

  static HilbertSeries zero(std::vector<int> weights) {
    return HilbertSeries{{}, std::move(weights)};
  }
  bool is_zero() const { return numerator.empty(); }
  HilbertSeries shifted(int s) const;
  HilbertSeries plus(const HilbertSeries& other) const;

  // Coefficient of t^d in the series expansion.
  long long dimension_at(int d) const;
  // Total k-dimension when the denominator cancels exactly (finite length);
  // nullopt otherwise.
  std::optional<long long> total_dimension() const;

  std::string to_string() const;
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    return a.numerator == b.numerator && a.weights == b.weights;
  }
  friend bool operator!=(const HilbertSeries& a, const HilbertSeries& b) {
    return !(a == b);
  }
};

struct BettiTable {
  std::vector<std::map<int, int>> entries;  // entries[i][twist] = count in step i
  bool terminated = false;
  std::optional<int> pd() const;  // largest nonzero step, only when terminated
  std::string to_string() const;
};

// Finitely presented graded module M = coker(pres) over R.
class FPModule {
 public:
  FPModule(RingPtr ring, HomogeneousMatrix pres);

  const RingPtr& ring() const { return ring_; }
  const PolyRing& S() const { return ring_->S(); }
  const GradedFreeModule& cover() const { return pres_.target(); }
  const HomogeneousMatrix& presentation() const { return pres_; }

  static FPModule free_module(RingPtr ring, GradedFreeModule F);
  static FPModule zero_module(RingPtr ring);
  static FPModule ring_module(RingPtr ring);     // R as a module over itself
  static FPModule residue_field(RingPtr ring);   // R/(x_1..x_n)
  static FPModule from_columns(RingPtr ring, GradedFreeModule cover,
                               const std::vector<Vec>& relation_columns,
                               const std::vector<int>& relation_twists);

  FPModule shifted(int s) const;  // shifts all generator degrees by s

  // Cache slots (shared across copies).
  const CachedValue<std::shared_ptr<const FPModule>>& minimal_slot() const {
    return caches_->minimal;
  }
  const CachedValue<HilbertSeries>& hilbert_slot() const { return caches_->hilbert; }

 private:
  struct Caches {
    CachedValue<std::shared_ptr<const FPModule>> minimal;
    CachedValue<HilbertSeries> hilbert;
  };
  RingPtr ring_;
  HomogeneousMatrix pres_;
  std::shared_ptr<Caches> caches_;
};

bool same_presentation(const FPModule& a, const FPModule& b);

// Canonical minimal presentation: entries reduced mod I, unit entries
// pivoted away, zero and redundant relation columns pruned (ascending degree,
// first-kept greedy).  Cached.
FPModule minimalize(const FPModule& M);

bool is_zero_module(const FPModule& M);

// nullopt encodes dim(0) = -infinity.
std::optional<int> krull_dim_module(const FPModule& M);

FPModule direct_sum(const FPModule& A, const FPModule& B);

// M/xM over R/(I + x); rejects inhomogeneous or degree-0 x and x == 0 in R.
FPModule quotient_by_element(const FPModule& M, const Polynomial& x);

// Greedy minimal generating subset of the columns (ascending degree, first
// kept wins).  A column is dropped when it lies in the R-span of the already
// kept ones plus the optional `modulo` columns.
HomogeneousMatrix prune_columns(const PolyRing& S, const std::vector<Polynomial>& ideal,
                                const HomogeneousMatrix& cols,
                                const HomogeneousMatrix* modulo = nullptr);

struct Resolution {
  FPModule module;
  std::vector<HomogeneousMatrix> maps;  // maps[0]: F_1 -> F_0 etc.
  bool minimal = true;
  bool terminated = false;
  int length() const { return static_cast<int>(maps.size()); }
  GradedFreeModule F(int i) const;
  // Syzygy module Omega^d = coker(maps[d]) (Omega^0 = the module itself).
  FPModule syzygy_module(int d) const;
};

// Free resolution with `length` maps d_1, ..., d_length (fewer if the
// resolution terminates).  minimal=true prunes to minimal generators at each
// step, so step ranks are Betti numbers.
Resolution resolve(const FPModule& M, int length, bool minimal = true);

BettiTable betti(const FPModule& M, int upto = -1);  // default: ambient dim + 1

// Via the alternating sum over a finite free resolution over the ambient
// polynomial ring.  Cached.
HilbertSeries hilbert_series(const FPModule& M);

}  // namespace ghom
