#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghom/field.hpp"
#include "ghom/monomial.hpp"
#include "ghom/order.hpp"

namespace ghom {

struct Term {
  Coeff c;
  Monomial m;
};

// Sparse polynomial: terms with nonzero coefficients, sorted strictly
// descending in the owning ring's monomial order.  All arithmetic goes
// through PolyRing, which knows the field, the weights and the order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Term> terms) : t_(std::move(terms)) {}

  bool is_zero() const { return t_.empty(); }
  int nterms() const { return static_cast<int>(t_.size()); }
  const Term& term(int i) const { return t_[i]; }
  const Term& lead() const { return t_.front(); }
  const std::vector<Term>& terms() const { return t_; }

 private:
  std::vector<Term> t_;
};

// Ambient weighted polynomial ring S = k[x_1..x_n].
class PolyRing {
 public:
  // Throws InputError on empty/duplicate variable names or nonpositive weights.
  PolyRing(CoefficientField field, std::vector<std::string> vars,
           std::vector<int> weights, MonomialOrder order = MonomialOrder{});

  const CoefficientField& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  std::optional<int> var_index(std::string_view name) const;

  long long degree(const Monomial& m) const { return m.weighted_degree(weights_); }
  int compare(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b, order_, weights_);
  }

  Polynomial zero() const { return Polynomial(); }
  Polynomial constant(const Coeff& c) const;
  Polynomial one() const { return constant(field_.one()); }
  Polynomial variable(int i) const;
  Polynomial monomial(const Monomial& m, const Coeff& c) const;

  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  Polynomial scale(const Coeff& c, const Polynomial& f) const;
  // c * m * f in one pass.
  Polynomial term_mul(const Coeff& c, const Monomial& m, const Polynomial& f) const;
  Polynomial pow(const Polynomial& f, int e) const;

  bool equal(const Polynomial& f, const Polynomial& g) const;

  // Weighted degree of a nonzero homogeneous polynomial; nullopt if f is zero
  // or not homogeneous.
  std::optional<long long> homogeneous_degree(const Polynomial& f) const;

  std::string to_string(const Polynomial& f) const;
  std::string to_string(const Monomial& m) const;

  // Parses +,-,*,^ expressions over integer/rational literals and the ring's
  // variables, e.g. "x^2*y - 3/2*z^3".  Throws InputError with position info.
  Polynomial parse(std::string_view text) const;

  // Structural compatibility (same field, variables, weights).
  bool same_structure(const PolyRing& other) const {
    return field_ == other.field_ && vars_ == other.vars_ && weights_ == other.weights_;
  }

 private:
  CoefficientField field_;
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  MonomialOrder order_;
};

}  // namespace ghom
