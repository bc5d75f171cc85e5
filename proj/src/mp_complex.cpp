#include "mp_complex.hpp"

#include "errors.hpp"

namespace stieltjes {

MpReal MpComplex::arg() const {
  if (im_.is_zero()) {
    // Force the +0 side so a negative real axis argument lands on +pi.
    MpReal zero(prec());
    return atan2(zero, re_);
  }
  return atan2(im_, re_);
}

MpComplex clog(const MpComplex& z) {
  if (z.is_zero()) throw DomainError("clog: z = 0");
  return MpComplex(log(z.abs()), z.arg());
}

MpComplex cexp(const MpComplex& z) {
  MpReal m = exp(z.re());
  if (z.im().is_zero()) return MpComplex(std::move(m), MpReal(z.prec()));
  MpReal s(z.prec()), c(z.prec());
  sin_cos(z.im(), s, c);
  return MpComplex(m * c, m * s);
}

MpComplex csqrt(const MpComplex& z) {
  if (z.is_zero()) return MpComplex(z.prec());
  MpComplex l = clog(z);
  return cexp(MpComplex(mul_2si(l.re(), -1), mul_2si(l.im(), -1)));
}

MpComplex ctanh(const MpComplex& z) {
  if (z.re().sign() < 0) return -ctanh(-z);
  // For Re z >= 0, t = exp(-2z) has |t| <= 1 (underflows to 0 for huge
  // arguments, where tanh = 1 exactly at working precision).
  MpComplex m2z(mul_2si(z.re(), 1), mul_2si(z.im(), 1));
  MpComplex t = cexp(-m2z);
  MpReal one(1, z.prec());
  return (one - t) / (one + t);
}

MpComplex cpow_int_plus(const MpComplex& z, const mpz_class& k) {
  if (sgn(k) < 0) throw DomainError("cpow_int_plus: negative exponent");
  mpfr_prec_t p = z.prec();
  if (k == 0) return MpComplex(1, p);
  if (z.is_zero()) return MpComplex(p);
  return cexp(MpReal(k, p) * clog(z));
}

MpComplex mpz_to_complex(const mpz_class& n, mpfr_prec_t prec) {
  return MpComplex(MpReal(n, prec), MpReal(prec));
}

}  // namespace stieltjes
