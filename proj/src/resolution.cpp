#include <algorithm>

#include "ghom/errors.hpp"
#include "ghom/fpmodule.hpp"

namespace ghom {

GradedFreeModule Resolution::F(int i) const {
  if (i == 0)
    return maps.empty() ? module.cover() : maps[0].target();
  if (i <= static_cast<int>(maps.size())) return maps[i - 1].source();
  return GradedFreeModule{};
}

FPModule Resolution::syzygy_module(int d) const {
  if (d == 0) return module;
  if (d < 0 || d > static_cast<int>(maps.size()))
    throw InputError("syzygy index outside the computed resolution");
  if (d == static_cast<int>(maps.size())) {
    if (!terminated)
      throw InputError("syzygy index outside the computed resolution");
    return FPModule::free_module(module.ring(), F(d));
  }
  return FPModule(module.ring(), maps[d]);
}

Resolution resolve(const FPModule& M, int length, bool minimal) {
  if (length < 1) throw InputError("resolution length must be >= 1");
  const PolyRing& S = M.S();
  const std::vector<Polynomial>& ideal = M.ring()->ideal();
  Resolution res{minimal ? minimalize(M) : M, {}, minimal, false};
  res.maps.push_back(res.module.presentation());
  while (res.length() < length) {
    const HomogeneousMatrix& prev = res.maps.back();
    if (prev.source().rank() == 0) {
      res.terminated = true;
      return res;
    }
    HomogeneousMatrix syz = syzygy_columns(S, prev, ideal);
    if (minimal) syz = prune_columns(S, ideal, syz);
    if (syz.source().rank() == 0) {
      res.terminated = true;
      return res;
    }
    res.maps.push_back(std::move(syz));
  }
  return res;
}

BettiTable betti(const FPModule& M, int upto) {
  if (upto < 0) upto = M.S().nvars() + 1;
  Resolution res = resolve(M, upto + 1, true);
  BettiTable table;
  table.terminated = res.terminated;
  int steps = std::min(upto, res.length());
  for (int i = 0; i <= steps; ++i) {
    std::map<int, int> row;
    for (int t : res.F(i).twists) row[t] += 1;
    table.entries.push_back(std::move(row));
  }
  while (static_cast<int>(table.entries.size()) <= upto && res.terminated)
    table.entries.push_back({});
  return table;
}

namespace {

HilbertSeries hilbert_impl(const FPModule& M) {
  const PolyRing& S = M.S();
  HilbertSeries hs = HilbertSeries::zero(S.weights());

  // Present M over the ambient polynomial ring: original relations plus
  // ideal multiples of every generator.
  std::vector<Vec> cols = M.presentation().columns();
  std::vector<int> tw = M.presentation().source().twists;
  for (int i = 0; i < M.cover().rank(); ++i)
    for (const Polynomial& q : M.ring()->ideal()) {
      Vec w = vec_zero(M.cover().rank());
      w[i] = q;
      cols.push_back(std::move(w));
      tw.push_back(static_cast<int>(*S.homogeneous_degree(q)) + M.cover().twists[i]);
    }
  auto Sring = GradedRing::make(S, {});
  FPModule MS = FPModule::from_columns(Sring, M.cover(), cols, tw);

  Resolution res = resolve(MS, S.nvars() + 2, true);
  if (!res.terminated)
    throw TheoryViolation("free resolution over the ambient ring did not terminate");
  for (int i = 0; i <= res.length(); ++i) {
    int sign = (i % 2 == 0) ? 1 : -1;
    for (int t : res.F(i).twists) {
      long long v = hs.numerator[t] + sign;
      if (v == 0)
        hs.numerator.erase(t);
      else
        hs.numerator[t] = v;
    }
  }
  return hs;
}

}  // namespace

HilbertSeries hilbert_series(const FPModule& M) {
  return M.hilbert_slot().get_or_compute([&] { return hilbert_impl(M); });
}

}  // namespace ghom
