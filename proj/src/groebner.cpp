#include "ghom/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "ghom/errors.hpp"

namespace ghom {

std::optional<ModuleLead> module_lead(const Vec& v) {
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) return ModuleLead{i, v[i].lead().m, v[i].lead().c};
  return std::nullopt;
}

int compare_module_terms(const PolyRing& S, int pos_a, const Monomial& ma,
                         int pos_b, const Monomial& mb) {
  if (pos_a != pos_b) return pos_a < pos_b ? 1 : -1;  // lower position is greater
  return S.compare(ma, mb);
}

namespace {

int narrow(long long d) {
  if (d > 1000000 || d < -1000000) throw TheoryViolation("degree out of range");
  return static_cast<int>(d);
}

Polynomial drop_lead(const Polynomial& f) {
  std::vector<Term> t(f.terms().begin() + 1, f.terms().end());
  return Polynomial(std::move(t));
}

// Working state for Buchberger completion over a fixed ambient free module.
struct Engine {
  const PolyRing& S;
  const GradedFreeModule& ambient;
  std::vector<Vec> basis;
  std::vector<ModuleLead> leads;
  // (spair degree, i, j): normal strategy, stable under insertion order.
  std::set<std::tuple<long long, int, int>> queue;

  Engine(const PolyRing& s, const GradedFreeModule& amb) : S(s), ambient(amb) {}

  // Full normal form of v against the basis (excluding index `skip`),
  // optionally recording division coefficients.
  Vec reduce(Vec work, std::vector<Polynomial>* quot, int skip = -1) const {
    Vec rem = vec_zero(static_cast<int>(work.size()));
    while (auto lead = module_lead(work)) {
      int found = -1;
      for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
        if (k == skip) continue;
        if (leads[k].pos == lead->pos && leads[k].m.divides(lead->m)) {
          found = k;
          break;
        }
      }
      if (found >= 0) {
        Coeff c = S.field().div(lead->c, leads[found].c);
        Monomial mono = lead->m / leads[found].m;
        work = vec_sub(S, work, vec_term_mul(S, c, mono, basis[found]));
        if (quot) (*quot)[found] = S.add((*quot)[found], S.monomial(mono, c));
      } else {
        rem[lead->pos] = S.add(rem[lead->pos], S.monomial(lead->m, lead->c));
        work[lead->pos] = drop_lead(work[lead->pos]);
      }
    }
    return rem;
  }

  void add_element(Vec v) {
    auto l = module_lead(v);
    if (!l) return;
    v = vec_scale(S, S.field().inv(l->c), v);
    l->c = S.field().one();
    int idx = static_cast<int>(basis.size());
    for (int k = 0; k < idx; ++k) {
      if (leads[k].pos != l->pos) continue;
      Monomial L = Monomial::lcm(leads[k].m, l->m);
      long long d = S.degree(L) + ambient.twists[l->pos];
      queue.insert({d, k, idx});
    }
    basis.push_back(std::move(v));
    leads.push_back(*l);
  }

  void run() {
    while (!queue.empty()) {
      auto [d, i, j] = *queue.begin();
      queue.erase(queue.begin());
      (void)d;
      Monomial L = Monomial::lcm(leads[i].m, leads[j].m);
      Coeff one = S.field().one();
      Vec sp = vec_sub(S, vec_term_mul(S, one, L / leads[i].m, basis[i]),
                       vec_term_mul(S, one, L / leads[j].m, basis[j]));
      Vec h = reduce(std::move(sp), nullptr);
      if (!vec_is_zero(h)) add_element(std::move(h));
    }
  }

  void canonicalize() {
    int n = static_cast<int>(basis.size());
    std::vector<char> dead(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j || dead[j]) continue;
        if (leads[j].pos == leads[i].pos && leads[j].m.divides(leads[i].m)) {
          dead[i] = 1;
          break;
        }
      }
    }
    std::vector<Vec> kept;
    std::vector<ModuleLead> kleads;
    for (int i = 0; i < n; ++i)
      if (!dead[i]) {
        kept.push_back(std::move(basis[i]));
        kleads.push_back(leads[i]);
      }
    basis = std::move(kept);
    leads = std::move(kleads);

    for (int pass = 0; pass < 1000; ++pass) {
      bool changed = false;
      for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        Vec h = reduce(basis[i], nullptr, i);
        if (!vec_equal(S, h, basis[i])) {
          auto l = module_lead(h);
          if (!l) throw TheoryViolation("interreduction killed a minimal basis element");
          basis[i] = vec_scale(S, S.field().inv(l->c), h);
          leads[i] = *module_lead(basis[i]);
          changed = true;
        }
      }
      if (!changed) break;
      if (pass == 999) throw TheoryViolation("interreduction did not stabilize");
    }

    std::vector<int> order(basis.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return compare_module_terms(S, leads[a].pos, leads[a].m, leads[b].pos,
                                  leads[b].m) > 0;
    });
    std::vector<Vec> sorted;
    std::vector<ModuleLead> sleads;
    for (int k : order) {
      sorted.push_back(std::move(basis[k]));
      sleads.push_back(leads[k]);
    }
    basis = std::move(sorted);
    leads = std::move(sleads);
  }
};

Engine completed_engine(const PolyRing& S, const GradedFreeModule& ambient,
                        const std::vector<Vec>& gens) {
  Engine e(S, ambient);
  for (const Vec& g : gens) {
    if (vec_is_zero(g)) continue;
    Vec h = e.reduce(g, nullptr);
    if (!vec_is_zero(h)) e.add_element(std::move(h));
  }
  e.run();
  e.canonicalize();
  return e;
}

std::vector<Vec> ideal_multiples(const GradedFreeModule& ambient,
                                 const std::vector<Polynomial>& ideal) {
  std::vector<Vec> out;
  for (int pos = 0; pos < ambient.rank(); ++pos)
    for (const Polynomial& q : ideal) {
      Vec w = vec_zero(ambient.rank());
      w[pos] = q;
      out.push_back(std::move(w));
    }
  return out;
}

void check_homogeneous_inputs(const PolyRing& S, const GradedFreeModule& ambient,
                              const std::vector<Vec>& gens,
                              const std::vector<Polynomial>& ideal) {
  for (const Vec& g : gens) {
    if (static_cast<int>(g.size()) != ambient.rank())
      throw InputError("generator length does not match ambient rank");
    if (!vec_is_zero(g) && !vec_homogeneous_degree(S, g, ambient))
      throw InputError("inhomogeneous module generator");
  }
  for (const Polynomial& q : ideal) {
    if (q.is_zero()) throw InputError("zero quotient ideal generator");
    if (!S.homogeneous_degree(q)) throw InputError("inhomogeneous ideal generator");
  }
}

}  // namespace

GroebnerBasis buchberger(const PolyRing& S, const GradedFreeModule& ambient,
                         const std::vector<Vec>& gens,
                         std::vector<Polynomial> over_ideal) {
  check_homogeneous_inputs(S, ambient, gens, over_ideal);
  std::vector<Vec> all(gens);
  auto mults = ideal_multiples(ambient, over_ideal);
  all.insert(all.end(), mults.begin(), mults.end());
  Engine e = completed_engine(S, ambient, all);
  GroebnerBasis gb{ambient, std::move(e.basis), {}, std::move(over_ideal)};
  for (const Vec& g : gb.gens) {
    auto d = vec_homogeneous_degree(S, g, ambient);
    if (!d) throw TheoryViolation("inhomogeneous basis element");
    gb.degrees.push_back(*d);
  }
  return gb;
}

GroebnerBasis buchberger_ideal(const PolyRing& S, const std::vector<Polynomial>& gens) {
  GradedFreeModule amb = GradedFreeModule::with_rank(1);
  std::vector<Vec> v;
  for (const Polynomial& f : gens) v.push_back(Vec{f});
  return buchberger(S, amb, v, {});
}

Vec normal_form(const PolyRing& S, const GroebnerBasis& gb, const Vec& v) {
  Engine e(S, gb.ambient);
  e.basis = gb.gens;
  for (const Vec& g : gb.gens) e.leads.push_back(*module_lead(g));
  return e.reduce(v, nullptr);
}

Polynomial normal_form_poly(const PolyRing& S, const GroebnerBasis& gb,
                            const Polynomial& f) {
  if (gb.ambient.rank() != 1) throw InputError("normal_form_poly needs a rank-1 basis");
  return normal_form(S, gb, Vec{f})[0];
}

std::optional<std::vector<Polynomial>> lift(const PolyRing& S, const GroebnerBasis& gb,
                                            const Vec& v) {
  Engine e(S, gb.ambient);
  e.basis = gb.gens;
  for (const Vec& g : gb.gens) e.leads.push_back(*module_lead(g));
  std::vector<Polynomial> quot(gb.gens.size());
  Vec rem = e.reduce(v, &quot);
  if (!vec_is_zero(rem)) return std::nullopt;
  return quot;
}

namespace {

// Shared state for syzygy/lift computations over a fixed column list:
// a Groebner basis of {(u_k, e_k)} in ambient ⊕ aux under position-over-term,
// where the u_k are the columns followed by the quotient-ideal multiples.
// Elements with zero ambient part are the syzygies (Schreyer certificates
// read through the elimination order).
struct ExtendedBasis {
  const PolyRing& S;
  GradedFreeModule ambient;
  int ncols;        // columns of interest (before ideal multiples)
  int total;        // ncols + ideal multiples
  GradedFreeModule extended;
  Engine engine;
  GroebnerBasis ideal_gb;

  ExtendedBasis(const PolyRing& s, const HomogeneousMatrix& cols,
                const std::vector<Polynomial>& ideal)
      : S(s), ambient(cols.target()), ncols(cols.cols()), total(0),
        engine(s, extended), ideal_gb(buchberger_ideal(s, ideal)) {
    cols.validate(S);
    std::vector<Vec> us = cols.columns();
    std::vector<int> aux_twists(cols.source().twists);
    auto mults = ideal_multiples(ambient, ideal);
    for (const Vec& w : mults) {
      us.push_back(w);
      auto d = vec_homogeneous_degree(S, w, ambient);
      aux_twists.push_back(narrow(*d));
    }
    total = static_cast<int>(us.size());
    extended = ambient.concat(GradedFreeModule(std::move(aux_twists)));

    std::vector<Vec> gens;
    for (int k = 0; k < total; ++k) {
      Vec g = vec_zero(extended.rank());
      for (int i = 0; i < ambient.rank(); ++i) g[i] = us[k][i];
      g[ambient.rank() + k] = S.one();
      gens.push_back(std::move(g));
    }
    Engine e = completed_engine(S, extended, gens);
    engine.basis = std::move(e.basis);
    engine.leads = std::move(e.leads);
  }

  // Engine holds a reference to `extended`, which is filled after engine's
  // construction; rebind by constructing reduce calls through engine directly
  // (Engine only touches ambient.twists inside add_element/run, not reduce).

  bool ambient_part_zero(const Vec& v) const {
    for (int i = 0; i < ambient.rank(); ++i)
      if (!v[i].is_zero()) return false;
    return true;
  }

  HomogeneousMatrix syzygy_generators(const GradedFreeModule& col_source) const {
    std::vector<Vec> sz;
    std::vector<int> twists;
    for (const Vec& g : engine.basis) {
      if (!ambient_part_zero(g)) continue;
      Vec a(ncols);
      bool nonzero = false;
      for (int j = 0; j < ncols; ++j) {
        a[j] = normal_form_poly(S, ideal_gb, g[ambient.rank() + j]);
        if (!a[j].is_zero()) nonzero = true;
      }
      if (!nonzero) continue;
      auto d = vec_homogeneous_degree(S, g, extended);
      if (!d) throw TheoryViolation("inhomogeneous syzygy element");
      sz.push_back(std::move(a));
      twists.push_back(narrow(*d));
    }
    auto m = HomogeneousMatrix::from_columns(GradedFreeModule(std::move(twists)),
                                             col_source, sz);
    m.validate(S);
    return m;
  }

  std::optional<std::vector<Polynomial>> lift(const Vec& v) const {
    Vec vhat = vec_zero(extended.rank());
    for (int i = 0; i < ambient.rank(); ++i) vhat[i] = v[i];
    Vec rem = engine.reduce(std::move(vhat), nullptr);
    if (!ambient_part_zero(rem)) return std::nullopt;
    std::vector<Polynomial> c(ncols);
    for (int j = 0; j < ncols; ++j) c[j] = S.neg(rem[ambient.rank() + j]);
    return c;
  }
};

}  // namespace

HomogeneousMatrix syzygy_columns(const PolyRing& S, const HomogeneousMatrix& cols,
                                 const std::vector<Polynomial>& ideal) {
  ExtendedBasis eb(S, cols, ideal);
  return eb.syzygy_generators(cols.source());
}

void SyzygyCertificate::verify(const PolyRing& S) const {
  HomogeneousMatrix prod = matrix_compose(S, basis_matrix, syzygy_matrix);
  GroebnerBasis gb = buchberger(S, basis_matrix.target(), {}, over_ideal);
  for (int j = 0; j < prod.cols(); ++j) {
    Vec r = normal_form(S, gb, prod.column(j));
    if (!vec_is_zero(r))
      throw TheoryViolation("syzygy certificate failed: basis * syzygy != 0");
  }
}

SyzygyCertificate syzygies(const PolyRing& S, const GroebnerBasis& gb) {
  std::vector<int> twists;
  for (long long d : gb.degrees) twists.push_back(narrow(d));
  auto basis_matrix = HomogeneousMatrix::from_columns(
      GradedFreeModule(std::move(twists)), gb.ambient, gb.gens);
  auto syz = syzygy_columns(S, basis_matrix, gb.over_ideal);
  return SyzygyCertificate{std::move(basis_matrix), std::move(syz), gb.over_ideal};
}

KernelPresentation kernel_presentation(const PolyRing& S, const HomogeneousMatrix& f,
                                       const std::vector<Polynomial>& ideal) {
  HomogeneousMatrix gens = syzygy_columns(S, f, ideal);
  HomogeneousMatrix rels = syzygy_columns(S, gens, ideal);
  return KernelPresentation{std::move(gens), std::move(rels)};
}

std::optional<std::vector<Polynomial>> lift_through_columns(
    const PolyRing& S, const Vec& v, const HomogeneousMatrix& cols,
    const std::vector<Polynomial>& ideal) {
  ExtendedBasis eb(S, cols, ideal);
  return eb.lift(v);
}

bool in_column_span(const PolyRing& S, const Vec& v, const HomogeneousMatrix& cols,
                    const std::vector<Polynomial>& ideal) {
  return lift_through_columns(S, v, cols, ideal).has_value();
}

}  // namespace ghom
