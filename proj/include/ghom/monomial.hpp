#pragma once

#include <cstdint>
#include <vector>

namespace ghom {

// Exponent vector; the number of variables is fixed by the enclosing ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}
  static Monomial unit(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(int nvars, int i) {
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int exp(int i) const { return e_[i]; }
  const std::vector<int>& exps() const { return e_; }
  bool is_unit() const {
    for (int x : e_)
      if (x != 0) return false;
    return true;
  }

  long long weighted_degree(const std::vector<int>& weights) const {
    long long d = 0;
    for (int i = 0; i < nvars(); ++i) d += static_cast<long long>(e_[i]) * weights[i];
    return d;
  }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    std::vector<int> r(e_);
    for (int i = 0; i < nvars(); ++i) r[i] += m.e_[i];
    return Monomial(std::move(r));
  }

  // Requires m.divides(*this).
  Monomial operator/(const Monomial& m) const {
    std::vector<int> r(e_);
    for (int i = 0; i < nvars(); ++i) r[i] -= m.e_[i];
    return Monomial(std::move(r));
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> r(a.e_);
    for (int i = 0; i < a.nvars(); ++i)
      if (b.e_[i] > r[i]) r[i] = b.e_[i];
    return Monomial(std::move(r));
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
      if (a.e_[i] > 0 && b.e_[i] > 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<int> e_;
};

}  // namespace ghom
