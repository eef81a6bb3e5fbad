#include "ghom/field.hpp"

#include "ghom/errors.hpp"

namespace ghom {

CoefficientField CoefficientField::rationals() {
  return CoefficientField(FieldKind::QQ, 0);
}

CoefficientField CoefficientField::prime_field(unsigned long p) {
  mpz_class z(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw InputError("prime field characteristic must be prime, got " +
                     std::to_string(p));
  return CoefficientField(FieldKind::Fp, p);
}

Coeff CoefficientField::reduce(mpq_class v) const {
  v.canonicalize();
  if (kind_ == FieldKind::QQ) return Coeff(std::move(v));
  mpz_class p(p_);
  mpz_class den = v.get_den();
  mpz_class num = v.get_num();
  mpz_class deninv;
  if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw InputError("denominator not invertible mod " + std::to_string(p_));
  mpz_class r = (num * deninv) % p;
  if (r < 0) r += p;
  return Coeff(mpq_class(r));
}

Coeff CoefficientField::from_int(long n) const { return reduce(mpq_class(n)); }

Coeff CoefficientField::from_mpq(const mpq_class& q) const { return reduce(q); }

Coeff CoefficientField::add(const Coeff& a, const Coeff& b) const {
  return reduce(a.raw() + b.raw());
}

Coeff CoefficientField::sub(const Coeff& a, const Coeff& b) const {
  return reduce(a.raw() - b.raw());
}

Coeff CoefficientField::mul(const Coeff& a, const Coeff& b) const {
  return reduce(a.raw() * b.raw());
}

Coeff CoefficientField::div(const Coeff& a, const Coeff& b) const {
  if (b.is_zero()) throw InputError("division by zero field element");
  if (kind_ == FieldKind::QQ) return Coeff(mpq_class(a.raw() / b.raw()));
  mpz_class p(p_), binv;
  mpz_class bnum = b.raw().get_num();
  if (mpz_invert(binv.get_mpz_t(), bnum.get_mpz_t(), p.get_mpz_t()) == 0)
    throw InputError("division by zero residue mod " + std::to_string(p_));
  return reduce(a.raw() * mpq_class(binv));
}

Coeff CoefficientField::neg(const Coeff& a) const { return reduce(-a.raw()); }

std::string CoefficientField::to_string(const Coeff& a) const {
  return a.raw().get_str();
}

std::string CoefficientField::describe() const {
  if (kind_ == FieldKind::QQ) return "QQ";
  return "Fp:" + std::to_string(p_);
}

}  // namespace ghom
