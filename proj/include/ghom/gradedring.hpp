#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "ghom/groebner.hpp"
#include "ghom/polyring.hpp"

namespace ghom {

// Fill-at-most-once cache slot; safe for concurrent readers.
template <class T>
class CachedValue {
 public:
  template <class F>
  const T& get_or_compute(F&& f) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!val_) val_ = f();
    return *val_;
  }

 private:
  mutable std::mutex mu_;
  mutable std::optional<T> val_;
};

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

// R = S/I for a homogeneous ideal I in the weighted polynomial ring S.
class GradedRing {
 public:
  // Validates that every ideal generator is homogeneous and nonconstant.
  GradedRing(PolyRing ambient, std::vector<Polynomial> ideal_gens);

  static RingPtr make(PolyRing ambient, std::vector<Polynomial> ideal_gens) {
    return std::make_shared<const GradedRing>(std::move(ambient), std::move(ideal_gens));
  }

  const PolyRing& S() const { return S_; }
  const std::vector<Polynomial>& ideal() const { return ideal_; }
  const GroebnerBasis& ideal_gb() const { return ideal_gb_; }
  bool ambient_regular() const { return ideal_.empty(); }

  Polynomial nf(const Polynomial& f) const { return normal_form_poly(S_, ideal_gb_, f); }
  bool is_zero_in_ring(const Polynomial& f) const { return nf(f).is_zero(); }

  // Krull dimension of R, combinatorial on the initial ideal of I.
  int dim() const { return dim_; }

  // Slots filled lazily by the depth/Gorenstein layer.
  const CachedValue<int>& depth_slot() const { return depth_; }
  const CachedValue<bool>& gorenstein_slot() const { return gorenstein_; }

  std::string describe() const;

  bool same_ring(const GradedRing& other) const;

 private:
  PolyRing S_;
  std::vector<Polynomial> ideal_;
  GroebnerBasis ideal_gb_;
  int dim_;
  CachedValue<int> depth_;
  CachedValue<bool> gorenstein_;
};

// Krull dimension of S/J for the monomial ideal generated by `lead_monomials`:
// the largest subset of variables touching no generator's support.
int monomial_quotient_dim(int nvars, const std::vector<Monomial>& lead_monomials);

}  // namespace ghom
