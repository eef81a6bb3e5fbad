#include "ghom/fpmodule.hpp"

#include <algorithm>

#include "ghom/errors.hpp"

namespace ghom {

HilbertSeries HilbertSeries::shifted(int s) const {
  HilbertSeries r;
  r.weights = weights;
  for (const auto& [e, c] : numerator) r.numerator[e + s] = c;
  return r;
}

HilbertSeries HilbertSeries::plus(const HilbertSeries& other) const {
  if (weights != other.weights)
    throw InputError("Hilbert series over different ambient weights");
  HilbertSeries r;
  r.weights = weights;
  r.numerator = numerator;
  for (const auto& [e, c] : other.numerator) {
    long long v = r.numerator[e] + c;
    if (v == 0)
      r.numerator.erase(e);
    else
      r.numerator[e] = v;
  }
  return r;
}

long long HilbertSeries::dimension_at(int d) const {
  if (numerator.empty()) return 0;
  int dmin = numerator.begin()->first;
  if (d < dmin) return 0;
  std::vector<long long> c(static_cast<size_t>(d - dmin + 1), 0);
  for (const auto& [e, v] : numerator)
    if (e <= d) c[static_cast<size_t>(e - dmin)] = v;
  for (int w : weights)
    for (size_t p = static_cast<size_t>(w); p < c.size(); ++p) c[p] += c[p - w];
  return c.back();
}

std::optional<long long> HilbertSeries::total_dimension() const {
  std::map<int, long long> cur = numerator;
  for (int w : weights) {
    if (cur.empty()) break;
    int dmin = cur.begin()->first;
    int dmax = cur.rbegin()->first;
    std::vector<long long> c(static_cast<size_t>(dmax - dmin + 1), 0);
    for (const auto& [e, v] : cur) c[static_cast<size_t>(e - dmin)] = v;
    for (size_t p = static_cast<size_t>(w); p < c.size(); ++p) c[p] += c[p - w];
    for (int d = std::max(dmax - w + 1, dmin); d <= dmax; ++d)
      if (c[static_cast<size_t>(d - dmin)] != 0) return std::nullopt;
    std::map<int, long long> q;
    for (int d = dmin; d <= dmax - w; ++d)
      if (c[static_cast<size_t>(d - dmin)] != 0) q[d] = c[static_cast<size_t>(d - dmin)];
    cur = std::move(q);
  }
  long long total = 0;
  for (const auto& [e, v] : cur) total += v;
  return total;
}

std::string HilbertSeries::to_string() const {
  std::string num;
  if (numerator.empty()) {
    num = "0";
  } else {
    bool first = true;
    for (const auto& [e, c] : numerator) {
      long long a = c < 0 ? -c : c;
      std::string piece;
      if (e == 0) {
        piece = std::to_string(a);
      } else {
        piece = (a == 1 ? "" : std::to_string(a) + "*");
        piece += e == 1 ? "t" : "t^" + std::to_string(e);
      }
      if (first) {
        num += (c < 0 ? "-" : "") + piece;
        first = false;
      } else {
        num += (c < 0 ? " - " : " + ") + piece;
      }
    }
  }
  std::string den;
  for (int w : weights) den += "(1-t" + (w == 1 ? std::string() : "^" + std::to_string(w)) + ")";
  return "(" + num + ")/" + (den.empty() ? "1" : den);
}

std::optional<int> BettiTable::pd() const {
  if (!terminated) return std::nullopt;
  for (int i = static_cast<int>(entries.size()) - 1; i >= 0; --i)
    if (!entries[i].empty()) return i;
  return std::nullopt;  // zero module
}

std::string BettiTable::to_string() const {
  std::string s;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].empty()) continue;
    s += "step " + std::to_string(i) + ":";
    for (const auto& [tw, c] : entries[i])
      s += " " + std::to_string(tw) + "^" + std::to_string(c);
    s += "\n";
  }
  if (!terminated) s += "(window; resolution not terminated)\n";
  return s;
}

FPModule::FPModule(RingPtr ring, HomogeneousMatrix pres)
    : ring_(std::move(ring)), pres_(std::move(pres)),
      caches_(std::make_shared<Caches>()) {
  if (!ring_) throw InputError("module needs a ring");
  pres_.validate(ring_->S());
}

FPModule FPModule::free_module(RingPtr ring, GradedFreeModule F) {
  auto pres = HomogeneousMatrix::zero(GradedFreeModule{}, std::move(F));
  return FPModule(std::move(ring), std::move(pres));
}

FPModule FPModule::zero_module(RingPtr ring) {
  return free_module(std::move(ring), GradedFreeModule{});
}

FPModule FPModule::ring_module(RingPtr ring) {
  return free_module(std::move(ring), GradedFreeModule::with_rank(1));
}

FPModule FPModule::residue_field(RingPtr ring) {
  const PolyRing& S = ring->S();
  std::vector<Vec> cols;
  for (int i = 0; i < S.nvars(); ++i) cols.push_back(Vec{S.variable(i)});
  auto pres = HomogeneousMatrix::from_columns(GradedFreeModule(S.weights()),
                                              GradedFreeModule::with_rank(1), cols);
  return FPModule(std::move(ring), std::move(pres));
}

FPModule FPModule::from_columns(RingPtr ring, GradedFreeModule cover,
                                const std::vector<Vec>& relation_columns,
                                const std::vector<int>& relation_twists) {
  auto pres = HomogeneousMatrix::from_columns(GradedFreeModule(relation_twists),
                                              std::move(cover), relation_columns);
  return FPModule(std::move(ring), std::move(pres));
}

FPModule FPModule::shifted(int s) const { return FPModule(ring_, pres_.shifted(s)); }

bool same_presentation(const FPModule& a, const FPModule& b) {
  return a.ring()->same_ring(*b.ring()) &&
         matrices_equal(a.S(), a.presentation(), b.presentation());
}

namespace {

Polynomial ring_nf(const GradedRing& R, const Polynomial& f) { return R.nf(f); }

std::vector<Vec> nf_columns(const GradedRing& R, std::vector<Vec> cols) {
  for (Vec& col : cols)
    for (Polynomial& f : col) f = ring_nf(R, f);
  return cols;
}

FPModule minimalize_impl(const FPModule& M) {
  const PolyRing& S = M.S();
  const GradedRing& R = *M.ring();
  std::vector<int> cover = M.cover().twists;
  std::vector<int> ctw = M.presentation().source().twists;
  std::vector<Vec> cols = nf_columns(R, M.presentation().columns());

  // Pivot away unit entries: entry is a nonzero constant iff its required
  // degree ctw[j] - cover[i] is zero (homogeneity) and it survived NF mod I.
  for (;;) {
    int pi = -1, pj = -1;
    for (int j = 0; j < static_cast<int>(cols.size()) && pi < 0; ++j)
      for (int i = 0; i < static_cast<int>(cover.size()); ++i) {
        if (cols[j][i].is_zero()) continue;
        if (ctw[j] - cover[i] == 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    if (pi < 0) break;
    Coeff c = cols[pj][pi].lead().c;
    Coeff cinv = S.field().inv(c);
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
      if (j == pj || cols[j][pi].is_zero()) continue;
      Polynomial factor = S.scale(cinv, cols[j][pi]);
      cols[j] = vec_sub(S, cols[j], vec_poly_mul(S, factor, cols[pj]));
      for (Polynomial& f : cols[j]) f = ring_nf(R, f);
    }
    for (Vec& col : cols) col.erase(col.begin() + pi);
    cover.erase(cover.begin() + pi);
    cols.erase(cols.begin() + pj);
    ctw.erase(ctw.begin() + pj);
  }

  // Drop zero columns.
  {
    std::vector<Vec> nz;
    std::vector<int> nztw;
    for (size_t j = 0; j < cols.size(); ++j)
      if (!vec_is_zero(cols[j])) {
        nz.push_back(std::move(cols[j]));
        nztw.push_back(ctw[j]);
      }
    cols = std::move(nz);
    ctw = std::move(nztw);
  }

  GradedFreeModule coverF(cover);
  auto mat = HomogeneousMatrix::from_columns(GradedFreeModule(ctw), coverF, cols);
  auto pres = prune_columns(S, R.ideal(), mat);
  return FPModule(M.ring(), std::move(pres));
}

}  // namespace

HomogeneousMatrix prune_columns(const PolyRing& S, const std::vector<Polynomial>& ideal,
                                const HomogeneousMatrix& cols,
                                const HomogeneousMatrix* modulo) {
  const GradedFreeModule& ambient = cols.target();
  std::vector<Vec> cs = cols.columns();
  const std::vector<int>& tw = cols.source().twists;
  std::vector<int> order(cs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return tw[a] < tw[b]; });
  std::vector<Vec> kept;
  std::vector<int> kept_tw;
  for (int idx : order) {
    if (vec_is_zero(cs[idx])) continue;
    auto test = HomogeneousMatrix::from_columns(GradedFreeModule(kept_tw), ambient, kept);
    if (modulo) test = matrix_augment(test, *modulo);
    if (in_column_span(S, cs[idx], test, ideal)) continue;
    kept.push_back(cs[idx]);
    kept_tw.push_back(tw[idx]);
  }
  return HomogeneousMatrix::from_columns(GradedFreeModule(std::move(kept_tw)),
                                         ambient, kept);
}

FPModule minimalize(const FPModule& M) {
  const auto& ptr = M.minimal_slot().get_or_compute(
      [&] { return std::make_shared<const FPModule>(minimalize_impl(M)); });
  return *ptr;
}

bool is_zero_module(const FPModule& M) { return minimalize(M).cover().rank() == 0; }

std::optional<int> krull_dim_module(const FPModule& M) {
  FPModule m = minimalize(M);
  if (m.cover().rank() == 0) return std::nullopt;
  const PolyRing& S = M.S();
  GroebnerBasis gb = buchberger(S, m.cover(), m.presentation().columns(),
                                M.ring()->ideal());
  int n = S.nvars();
  int best = -1;
  for (int pos = 0; pos < m.cover().rank(); ++pos) {
    std::vector<Monomial> leads;
    for (const Vec& g : gb.gens) {
      auto l = module_lead(g);
      if (l->pos == pos) leads.push_back(l->m);
    }
    best = std::max(best, monomial_quotient_dim(n, leads));
  }
  if (best < 0) throw TheoryViolation("nonzero module with empty support");
  return best;
}

FPModule direct_sum(const FPModule& A, const FPModule& B) {
  if (!A.ring()->same_ring(*B.ring()))
    throw InputError("direct sum over different rings");
  return FPModule(A.ring(),
                  matrix_direct_sum(A.S(), A.presentation(), B.presentation()));
}

FPModule quotient_by_element(const FPModule& M, const Polynomial& x) {
  const PolyRing& S = M.S();
  auto d = S.homogeneous_degree(x);
  if (!d) throw InputError("quotient element must be homogeneous and nonzero");
  if (*d <= 0) throw InputError("quotient element is a unit");
  if (M.ring()->is_zero_in_ring(x))
    throw InputError("quotient element is zero in the ring");
  std::vector<Polynomial> ideal = M.ring()->ideal();
  ideal.push_back(x);
  auto newring = GradedRing::make(S, std::move(ideal));
  return FPModule(std::move(newring), M.presentation());
}

}  // namespace ghom
