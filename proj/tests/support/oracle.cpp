#include "oracle.hpp"

#include <map>

#include "ghom/families.hpp"
#include "ghom/gradedring.hpp"

namespace ghom::oracle {

namespace {

using Row = std::vector<Coeff>;

// Dense reduced row echelon form maintained incrementally.
struct Rref {
  const CoefficientField& F;
  std::vector<Row> rows;
  std::vector<int> pivots;

  explicit Rref(const CoefficientField& field) : F(field) {}

  void reduce(Row& v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Coeff& c = v[static_cast<std::size_t>(pivots[r])];
      if (c.is_zero()) continue;
      Coeff f = c;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = F.sub(v[j], F.mul(f, rows[r][j]));
    }
  }

  bool is_zero(const Row& v) const {
    for (const Coeff& c : v)
      if (!c.is_zero()) return false;
    return true;
  }

  // Returns true if v was independent of the current span.
  bool add(Row v) {
    reduce(v);
    int p = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) {
        p = static_cast<int>(j);
        break;
      }
    if (p < 0) return false;
    Coeff inv = F.div(F.one(), v[static_cast<std::size_t>(p)]);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.mul(inv, v[j]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Coeff& c = rows[r][static_cast<std::size_t>(p)];
      if (c.is_zero()) continue;
      Coeff f = c;
      for (std::size_t j = 0; j < v.size(); ++j)
        rows[r][j] = F.sub(rows[r][j], F.mul(f, v[j]));
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }

  long long rank() const { return static_cast<long long>(rows.size()); }
};

using BasisKey = std::pair<int, std::vector<int>>;

// The degree-e part of a presented module: a monomial basis of the cover with
// the span of relations and ideal multiples row-reduced over it.  Quotient
// coordinates are the non-pivot columns.
struct DegreePart {
  const PolyRing& S;
  std::vector<std::pair<int, Monomial>> basis;  // (generator, monomial)
  std::map<BasisKey, int> index;
  Rref span;
  std::vector<int> free_cols;

  DegreePart(const PolyRing& ring, const CoefficientField& field)
      : S(ring), span(field) {}

  long long dim() const { return static_cast<long long>(free_cols.size()); }

  Row zero_row() const { return Row(basis.size()); }

  // Adds c * (m * p) placed at cover generator g into the row.
  void accumulate(Row& row, int g, const Monomial& m, const Polynomial& p,
                  const Coeff& c) const {
    for (const Term& t : p.terms()) {
      auto it = index.find({g, (t.m * m).exps()});
      if (it == index.end()) continue;  // degree mismatch: only possible for 0
      std::size_t j = static_cast<std::size_t>(it->second);
      row[j] = span.F.add(row[j], span.F.mul(c, t.c));
    }
  }

  Row row_of(const Vec& v, const Monomial& m) const {
    Row row = zero_row();
    for (std::size_t g = 0; g < v.size(); ++g)
      accumulate(row, static_cast<int>(g), m, v[g], span.F.one());
    return row;
  }

  // Quotient coordinates of a cover row (residue after reduction by the span).
  Row project(Row row) const {
    span.reduce(row);
    Row out(free_cols.size());
    for (std::size_t q = 0; q < free_cols.size(); ++q)
      out[q] = row[static_cast<std::size_t>(free_cols[q])];
    return out;
  }

  bool contains(Row row) const {
    span.reduce(row);
    return span.is_zero(row);
  }

  // Cover-row representative of the q-th quotient basis vector.
  Row representative(int q) const {
    Row row = zero_row();
    row[static_cast<std::size_t>(free_cols[static_cast<std::size_t>(q)])] =
        span.F.one();
    return row;
  }
};

DegreePart degree_part(const FPModule& M, int e) {
  const PolyRing& S = M.S();
  DegreePart part(S, S.field());
  const GradedFreeModule& cover = M.cover();
  for (int g = 0; g < cover.rank(); ++g)
    for (const Monomial& m :
         monomials_of_weighted_degree(S, e - cover.twists[g])) {
      part.index[{g, m.exps()}] = static_cast<int>(part.basis.size());
      part.basis.emplace_back(g, m);
    }

  const HomogeneousMatrix& pres = M.presentation();
  for (int j = 0; j < pres.cols(); ++j) {
    Vec col = pres.column(j);
    for (const Monomial& m :
         monomials_of_weighted_degree(S, e - pres.source().twists[j]))
      part.span.add(part.row_of(col, m));
  }
  for (const Polynomial& g : M.ring()->ideal()) {
    auto gd = S.homogeneous_degree(g);
    for (int i = 0; i < cover.rank(); ++i)
      for (const Monomial& m : monomials_of_weighted_degree(
               S, e - static_cast<int>(*gd) - cover.twists[i])) {
        Row row = part.zero_row();
        part.accumulate(row, i, m, g, S.field().one());
        part.span.add(std::move(row));
      }
  }

  for (std::size_t j = 0; j < part.basis.size(); ++j) {
    bool pivot = false;
    for (int p : part.span.pivots)
      if (p == static_cast<int>(j)) pivot = true;
    if (!pivot) part.free_cols.push_back(static_cast<int>(j));
  }
  return part;
}

// Dense matrix of the degree-d part of u between free R-modules, expressed in
// quotient coordinates on both sides; returns its rank and, via out
// parameters, the dimensions of the two sides.
long long dense_rank(const RingPtr& ring, const HomogeneousMatrix& u, int d,
                     long long* src_dim, long long* tgt_dim) {
  FPModule src = FPModule::free_module(ring, u.source());
  FPModule tgt = FPModule::free_module(ring, u.target());
  DegreePart sp = degree_part(src, d);
  DegreePart tp = degree_part(tgt, d);
  if (src_dim) *src_dim = sp.dim();
  if (tgt_dim) *tgt_dim = tp.dim();
  Rref image(ring->S().field());
  for (long long q = 0; q < sp.dim(); ++q) {
    Row rep = sp.representative(static_cast<int>(q));
    Row out = tp.zero_row();
    for (std::size_t j = 0; j < rep.size(); ++j) {
      if (rep[j].is_zero()) continue;
      auto [g, m] = sp.basis[j];
      for (int i = 0; i < u.rows(); ++i)
        tp.accumulate(out, i, m, u.entry(i, g), rep[j]);
    }
    tp.span.reduce(out);  // rank in the quotient by the ideal, not the cover
    image.add(std::move(out));
  }
  return image.rank();
}

}  // namespace

long long module_dimension(const FPModule& M, int d) {
  return degree_part(M, d).dim();
}

bool presentation_contains(const FPModule& M, const Vec& v) {
  const PolyRing& S = M.S();
  auto deg = vec_homogeneous_degree(S, v, M.cover());
  if (!deg) return false;  // inhomogeneous
  bool zero = true;
  for (const Polynomial& p : v) zero = zero && p.is_zero();
  if (zero) return true;
  DegreePart part = degree_part(M, static_cast<int>(*deg));
  return part.contains(part.row_of(v, Monomial::unit(S.nvars())));
}

long long induced_rank(const RingPtr& ring, const HomogeneousMatrix& u, int d) {
  return dense_rank(ring, u, d, nullptr, nullptr);
}

long long induced_kernel_dim(const RingPtr& ring, const HomogeneousMatrix& u,
                             int d) {
  long long src = 0;
  long long r = dense_rank(ring, u, d, &src, nullptr);
  return src - r;
}

long long span_dimension(const RingPtr& ring, const HomogeneousMatrix& cols,
                         int d) {
  FPModule tgt = FPModule::free_module(ring, cols.target());
  DegreePart tp = degree_part(tgt, d);
  const PolyRing& S = ring->S();
  Rref image(S.field());
  for (int j = 0; j < cols.cols(); ++j) {
    Vec col = cols.column(j);
    for (const Monomial& m :
         monomials_of_weighted_degree(S, d - cols.source().twists[j])) {
      Row row = tp.row_of(col, m);
      tp.span.reduce(row);
      image.add(std::move(row));
    }
  }
  return image.rank();
}

long long ext_dimension(const FPModule& M, const FPModule& N, int i, int d) {
  Resolution res = resolve(M, i + 2, true);
  if (i > res.length()) return 0;
  const PolyRing& S = M.S();

  // The degree-d part of Hom(F_j, N): one copy of N at degree d + twist per
  // generator of F_j.
  auto hom_parts = [&](int j) {
    std::vector<DegreePart> parts;
    for (int t : res.F(j).twists) parts.push_back(degree_part(N, d + t));
    return parts;
  };
  auto total_dim = [](const std::vector<DegreePart>& parts) {
    long long n = 0;
    for (const auto& p : parts) n += p.dim();
    return n;
  };

  // Dense matrix of the composition map Hom(F_j, N) -> Hom(F_{j+1}, N)
  // induced by res.maps[j], fed straight into a rank accumulator.
  auto rank_of_delta = [&](int j, const std::vector<DegreePart>& src_parts,
                           long long* src_dim) -> long long {
    *src_dim = total_dim(src_parts);
    if (j >= res.length()) return 0;  // next free module is zero
    const HomogeneousMatrix& u = res.maps[static_cast<std::size_t>(j)];
    std::vector<DegreePart> tgt_parts;
    for (int t : u.source().twists) tgt_parts.push_back(degree_part(N, d + t));
    long long tgt_total = total_dim(tgt_parts);
    Rref image(S.field());
    for (std::size_t b = 0; b < src_parts.size(); ++b) {
      const DegreePart& sp = src_parts[b];
      for (long long q = 0; q < sp.dim(); ++q) {
        Row rep = sp.representative(static_cast<int>(q));
        // phi sends e_b to rep; compose with u: e_c -> u(b,c) * rep.
        Row out;
        out.reserve(static_cast<std::size_t>(tgt_total));
        for (std::size_t c = 0; c < tgt_parts.size(); ++c) {
          const DegreePart& tp = tgt_parts[c];
          Row block = tp.zero_row();
          const Polynomial& entry = u.entry(static_cast<int>(b),
                                            static_cast<int>(c));
          if (!entry.is_zero()) {
            for (std::size_t j2 = 0; j2 < rep.size(); ++j2) {
              if (rep[j2].is_zero()) continue;
              auto [g, m] = sp.basis[j2];
              tp.accumulate(block, g, m, entry, rep[j2]);
            }
          }
          Row proj = tp.project(std::move(block));
          out.insert(out.end(), proj.begin(), proj.end());
        }
        image.add(std::move(out));
      }
    }
    return image.rank();
  };

  std::vector<DegreePart> at_i = hom_parts(i);
  long long dim_i = 0;
  long long r_i = rank_of_delta(i, at_i, &dim_i);
  long long kernel = dim_i - r_i;
  if (i == 0) return kernel;
  std::vector<DegreePart> at_prev = hom_parts(i - 1);
  long long dim_prev = 0;
  long long r_prev = rank_of_delta(i - 1, at_prev, &dim_prev);
  return kernel - r_prev;
}

}  // namespace ghom::oracle
