#pragma once

#include <string>
#include <vector>

#include "ghom/polyring.hpp"

namespace ghom {

// Graded free module F = ⊕_i R·e_i with twists[i] = degree of e_i.
// E.g. the source of [x y]: two generators in degree 1 (classically R(-1)^2).
struct GradedFreeModule {
  std::vector<int> twists;

  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<int> t) : twists(std::move(t)) {}
  static GradedFreeModule with_rank(int r, int twist = 0) {
    return GradedFreeModule(std::vector<int>(r, twist));
  }

  int rank() const { return static_cast<int>(twists.size()); }
  GradedFreeModule dual() const {
    std::vector<int> t(twists);
    for (int& x : t) x = -x;
    return GradedFreeModule(std::move(t));
  }
  GradedFreeModule shifted(int s) const {
    std::vector<int> t(twists);
    for (int& x : t) x += s;
    return GradedFreeModule(std::move(t));
  }
  GradedFreeModule concat(const GradedFreeModule& g) const {
    std::vector<int> t(twists);
    t.insert(t.end(), g.twists.begin(), g.twists.end());
    return GradedFreeModule(std::move(t));
  }

  friend bool operator==(const GradedFreeModule& a, const GradedFreeModule& b) {
    return a.twists == b.twists;
  }
  friend bool operator!=(const GradedFreeModule& a, const GradedFreeModule& b) {
    return !(a == b);
  }
};

// Element of a free module: one polynomial per component.
using Vec = std::vector<Polynomial>;

Vec vec_zero(int rank);
bool vec_is_zero(const Vec& v);
Vec vec_add(const PolyRing& R, const Vec& a, const Vec& b);
Vec vec_sub(const PolyRing& R, const Vec& a, const Vec& b);
Vec vec_neg(const PolyRing& R, const Vec& a);
Vec vec_scale(const PolyRing& R, const Coeff& c, const Vec& a);
Vec vec_term_mul(const PolyRing& R, const Coeff& c, const Monomial& m, const Vec& a);
Vec vec_poly_mul(const PolyRing& R, const Polynomial& f, const Vec& a);
bool vec_equal(const PolyRing& R, const Vec& a, const Vec& b);
// Degree of a nonzero homogeneous element v (deg of component + twist constant);
// nullopt if zero or inhomogeneous.
std::optional<long long> vec_homogeneous_degree(const PolyRing& R, const Vec& v,
                                                const GradedFreeModule& F);

// Matrix of a degree-0 map source -> target: entry (i,j) is the e_i-coordinate
// of the image of the j-th source generator, homogeneous of degree
// source.twists[j] - target.twists[i] (zero entries always allowed).
class HomogeneousMatrix {
 public:
  HomogeneousMatrix() = default;
  HomogeneousMatrix(GradedFreeModule source, GradedFreeModule target,
                    std::vector<std::vector<Polynomial>> entries);
  static HomogeneousMatrix zero(GradedFreeModule source, GradedFreeModule target);
  static HomogeneousMatrix identity(const PolyRing& R, const GradedFreeModule& F);
  static HomogeneousMatrix from_columns(GradedFreeModule source,
                                        GradedFreeModule target,
                                        const std::vector<Vec>& cols);

  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  int rows() const { return target_.rank(); }
  int cols() const { return source_.rank(); }
  const Polynomial& entry(int i, int j) const { return a_[i][j]; }
  Vec column(int j) const;
  std::vector<Vec> columns() const;
  bool is_zero() const;

  // Throws InputError if some entry is nonzero and not homogeneous of the
  // required degree.
  void validate(const PolyRing& R) const;

  // Shifts all twists by s (the entries are unchanged).
  HomogeneousMatrix shifted(int s) const;

  friend bool matrices_equal(const PolyRing& R, const HomogeneousMatrix& A,
                             const HomogeneousMatrix& B);

 private:
  GradedFreeModule source_, target_;
  std::vector<std::vector<Polynomial>> a_;  // rows x cols
};

// A * B (apply B, then A).
HomogeneousMatrix matrix_compose(const PolyRing& R, const HomogeneousMatrix& A,
                                 const HomogeneousMatrix& B);
// Dual map: source/target swapped and twists negated.
HomogeneousMatrix matrix_transpose(const PolyRing& R, const HomogeneousMatrix& A);
Vec matrix_apply(const PolyRing& R, const HomogeneousMatrix& A, const Vec& v);
// Stacks columns of two matrices with a common target.
HomogeneousMatrix matrix_augment(const HomogeneousMatrix& A, const HomogeneousMatrix& B);
// Block diagonal sum.
HomogeneousMatrix matrix_direct_sum(const PolyRing& R, const HomogeneousMatrix& A,
                                    const HomogeneousMatrix& B);

std::string to_string(const PolyRing& R, const HomogeneousMatrix& A);

}  // namespace ghom
