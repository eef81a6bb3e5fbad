#include "ghom/freemodule.hpp"

#include "ghom/errors.hpp"

namespace ghom {

Vec vec_zero(int rank) { return Vec(static_cast<size_t>(rank)); }

bool vec_is_zero(const Vec& v) {
  for (const auto& f : v)
    if (!f.is_zero()) return false;
  return true;
}

Vec vec_add(const PolyRing& R, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = R.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const PolyRing& R, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = R.sub(a[i], b[i]);
  return r;
}

Vec vec_neg(const PolyRing& R, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = R.neg(a[i]);
  return r;
}

Vec vec_scale(const PolyRing& R, const Coeff& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = R.scale(c, a[i]);
  return r;
}

Vec vec_term_mul(const PolyRing& R, const Coeff& c, const Monomial& m, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = R.term_mul(c, m, a[i]);
  return r;
}

Vec vec_poly_mul(const PolyRing& R, const Polynomial& f, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = R.mul(f, a[i]);
  return r;
}

bool vec_equal(const PolyRing& R, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!R.equal(a[i], b[i])) return false;
  return true;
}

std::optional<long long> vec_homogeneous_degree(const PolyRing& R, const Vec& v,
                                                const GradedFreeModule& F) {
  std::optional<long long> deg;
  for (int i = 0; i < F.rank(); ++i) {
    if (v[i].is_zero()) continue;
    auto d = R.homogeneous_degree(v[i]);
    if (!d) return std::nullopt;
    long long total = *d + F.twists[i];
    if (deg && *deg != total) return std::nullopt;
    deg = total;
  }
  return deg;
}

HomogeneousMatrix::HomogeneousMatrix(GradedFreeModule source, GradedFreeModule target,
                                     std::vector<std::vector<Polynomial>> entries)
    : source_(std::move(source)), target_(std::move(target)), a_(std::move(entries)) {
  if (static_cast<int>(a_.size()) != target_.rank())
    throw InputError("matrix row count does not match target rank");
  for (const auto& row : a_)
    if (static_cast<int>(row.size()) != source_.rank())
      throw InputError("matrix column count does not match source rank");
}

HomogeneousMatrix HomogeneousMatrix::zero(GradedFreeModule source,
                                          GradedFreeModule target) {
  std::vector<std::vector<Polynomial>> a(
      target.rank(), std::vector<Polynomial>(source.rank()));
  return HomogeneousMatrix(std::move(source), std::move(target), std::move(a));
}

HomogeneousMatrix HomogeneousMatrix::identity(const PolyRing& R,
                                              const GradedFreeModule& F) {
  auto m = zero(F, F);
  for (int i = 0; i < F.rank(); ++i) m.a_[i][i] = R.one();
  return m;
}

HomogeneousMatrix HomogeneousMatrix::from_columns(GradedFreeModule source,
                                                  GradedFreeModule target,
                                                  const std::vector<Vec>& cols) {
  if (static_cast<int>(cols.size()) != source.rank())
    throw InputError("column count does not match source rank");
  std::vector<std::vector<Polynomial>> a(
      target.rank(), std::vector<Polynomial>(source.rank()));
  for (int j = 0; j < source.rank(); ++j) {
    if (static_cast<int>(cols[j].size()) != target.rank())
      throw InputError("column length does not match target rank");
    for (int i = 0; i < target.rank(); ++i) a[i][j] = cols[j][i];
  }
  return HomogeneousMatrix(std::move(source), std::move(target), std::move(a));
}

Vec HomogeneousMatrix::column(int j) const {
  Vec v(rows());
  for (int i = 0; i < rows(); ++i) v[i] = a_[i][j];
  return v;
}

std::vector<Vec> HomogeneousMatrix::columns() const {
  std::vector<Vec> cs;
  cs.reserve(cols());
  for (int j = 0; j < cols(); ++j) cs.push_back(column(j));
  return cs;
}

bool HomogeneousMatrix::is_zero() const {
  for (const auto& row : a_)
    for (const auto& f : row)
      if (!f.is_zero()) return false;
  return true;
}

void HomogeneousMatrix::validate(const PolyRing& R) const {
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) {
      const Polynomial& f = a_[i][j];
      if (f.is_zero()) continue;
      auto d = R.homogeneous_degree(f);
      long long want = source_.twists[j] - target_.twists[i];
      if (!d || *d != want)
        throw InputError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") = " + R.to_string(f) +
                         " is not homogeneous of degree " + std::to_string(want));
    }
}

HomogeneousMatrix HomogeneousMatrix::shifted(int s) const {
  return HomogeneousMatrix(source_.shifted(s), target_.shifted(s), a_);
}

bool matrices_equal(const PolyRing& R, const HomogeneousMatrix& A,
                    const HomogeneousMatrix& B) {
  if (A.source_ != B.source_ || A.target_ != B.target_) return false;
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (!R.equal(A.a_[i][j], B.a_[i][j])) return false;
  return true;
}

HomogeneousMatrix matrix_compose(const PolyRing& R, const HomogeneousMatrix& A,
                                 const HomogeneousMatrix& B) {
  if (B.target() != A.source())
    throw InputError("matrix composition rank/twist mismatch");
  std::vector<std::vector<Polynomial>> c(
      A.rows(), std::vector<Polynomial>(B.cols()));
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) {
      Polynomial s;
      for (int k = 0; k < A.cols(); ++k)
        s = R.add(s, R.mul(A.entry(i, k), B.entry(k, j)));
      c[i][j] = s;
    }
  return HomogeneousMatrix(B.source(), A.target(), std::move(c));
}

HomogeneousMatrix matrix_transpose(const PolyRing& R, const HomogeneousMatrix& A) {
  (void)R;
  std::vector<std::vector<Polynomial>> t(
      A.cols(), std::vector<Polynomial>(A.rows()));
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) t[j][i] = A.entry(i, j);
  return HomogeneousMatrix(A.target().dual(), A.source().dual(), std::move(t));
}

Vec matrix_apply(const PolyRing& R, const HomogeneousMatrix& A, const Vec& v) {
  if (static_cast<int>(v.size()) != A.cols())
    throw InputError("matrix_apply dimension mismatch");
  Vec r(A.rows());
  for (int i = 0; i < A.rows(); ++i) {
    Polynomial s;
    for (int j = 0; j < A.cols(); ++j) s = R.add(s, R.mul(A.entry(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

HomogeneousMatrix matrix_augment(const HomogeneousMatrix& A, const HomogeneousMatrix& B) {
  if (A.target() != B.target()) throw InputError("augment needs a common target");
  std::vector<std::vector<Polynomial>> c(A.rows());
  for (int i = 0; i < A.rows(); ++i) {
    c[i].reserve(A.cols() + B.cols());
    for (int j = 0; j < A.cols(); ++j) c[i].push_back(A.entry(i, j));
    for (int j = 0; j < B.cols(); ++j) c[i].push_back(B.entry(i, j));
  }
  return HomogeneousMatrix(A.source().concat(B.source()), A.target(), std::move(c));
}

HomogeneousMatrix matrix_direct_sum(const PolyRing& R, const HomogeneousMatrix& A,
                                    const HomogeneousMatrix& B) {
  (void)R;
  GradedFreeModule src = A.source().concat(B.source());
  GradedFreeModule tgt = A.target().concat(B.target());
  std::vector<std::vector<Polynomial>> c(
      tgt.rank(), std::vector<Polynomial>(src.rank()));
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) c[i][j] = A.entry(i, j);
  for (int i = 0; i < B.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) c[A.rows() + i][A.cols() + j] = B.entry(i, j);
  return HomogeneousMatrix(std::move(src), std::move(tgt), std::move(c));
}

std::string to_string(const PolyRing& R, const HomogeneousMatrix& A) {
  std::string s = "[";
  for (int i = 0; i < A.rows(); ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < A.cols(); ++j) {
      if (j) s += ", ";
      s += R.to_string(A.entry(i, j));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace ghom
