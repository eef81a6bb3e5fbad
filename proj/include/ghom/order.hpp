#pragma once

#include <string>

#include "ghom/monomial.hpp"

namespace ghom {

enum class OrderKind { GrevLex, GrLex };

struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  std::string name() const { return kind == OrderKind::GrevLex ? "grevlex" : "grlex"; }
};

// Returns -1/0/+1 for a < b, a == b, a > b.  Both orders compare the weighted
// degree first.  Ties: grlex takes the first variable with a larger exponent
// as bigger; grevlex takes the last variable with a differing exponent and
// declares the monomial with the *smaller* exponent there bigger.
inline int compare_monomials(const Monomial& a, const Monomial& b,
                             const MonomialOrder& order,
                             const std::vector<int>& weights) {
  long long da = a.weighted_degree(weights), db = b.weighted_degree(weights);
  if (da != db) return da < db ? -1 : 1;
  int n = a.nvars();
  if (order.kind == OrderKind::GrLex) {
    for (int i = 0; i < n; ++i) {
      if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
    }
    return 0;
  }
  for (int i = n - 1; i >= 0; --i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
  }
  return 0;
}

}  // namespace ghom
