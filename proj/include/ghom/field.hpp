#pragma once

#include <gmpxx.h>

#include <string>

namespace ghom {

// Field element.  The value is stored as an exact rational; for prime fields
// the canonical residue 0 <= v < p is kept in the numerator.  All semantics
// (reduction, inversion) live in CoefficientField, which produced the value.
class Coeff {
 public:
  Coeff() : v_(0) {}
  explicit Coeff(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  const mpq_class& raw() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }

  friend bool operator==(const Coeff& a, const Coeff& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

 private:
  mpq_class v_;
};

enum class FieldKind { QQ, Fp };

class CoefficientField {
 public:
  static CoefficientField rationals();
  // Throws InputError unless p is prime.
  static CoefficientField prime_field(unsigned long p);

  FieldKind kind() const { return kind_; }
  // 0 for QQ, p for Fp.
  unsigned long characteristic() const { return p_; }

  Coeff zero() const { return Coeff(); }
  Coeff one() const { return from_int(1); }
  Coeff from_int(long n) const;
  Coeff from_mpq(const mpq_class& q) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  // Throws InputError on zero divisor.
  Coeff div(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const { return div(one(), a); }

  std::string to_string(const Coeff& a) const;
  std::string describe() const;  // "QQ" or "Fp:7"

  friend bool operator==(const CoefficientField& a, const CoefficientField& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const CoefficientField& a, const CoefficientField& b) {
    return !(a == b);
  }

 private:
  CoefficientField(FieldKind kind, unsigned long p) : kind_(kind), p_(p) {}
  Coeff reduce(mpq_class v) const;

  FieldKind kind_;
  unsigned long p_;
};

}  // namespace ghom
