#ifndef STIELTJES_MP_COMPLEX_HPP_
#define STIELTJES_MP_COMPLEX_HPP_

#include <gmpxx.h>

#include <utility>

#include "mp_real.hpp"

namespace stieltjes {

// Arbitrary-precision complex number; both parts share one working
// precision. Elementary functions return results at the operand precision,
// with principal branches: Im(clog) in (-pi, pi].
class MpComplex {
 public:
  explicit MpComplex(mpfr_prec_t prec = kMinPrec) : re_(prec), im_(prec) {}
  MpComplex(MpReal re, MpReal im) : re_(std::move(re)), im_(std::move(im)) {
    mpfr_prec_t p = std::max(re_.prec(), im_.prec());
    if (re_.prec() != p) re_ = re_.with_prec(p);
    if (im_.prec() != p) im_ = im_.with_prec(p);
  }
  MpComplex(long re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}
  explicit MpComplex(MpReal re) : re_(std::move(re)), im_(re_.prec()) {}

  const MpReal& re() const { return re_; }
  const MpReal& im() const { return im_; }
  mpfr_prec_t prec() const { return re_.prec(); }
  MpComplex with_prec(mpfr_prec_t prec) const {
    return MpComplex(re_.with_prec(prec), im_.with_prec(prec));
  }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  MpComplex operator-() const { return MpComplex(-re_, -im_); }
  MpComplex conj() const { return MpComplex(re_, -im_); }
  // i*z, exact (components swap and negate).
  MpComplex mul_i() const { return MpComplex(-im_, re_); }

  friend MpComplex operator+(const MpComplex& x, const MpComplex& y) {
    return MpComplex(x.re_ + y.re_, x.im_ + y.im_);
  }
  friend MpComplex operator-(const MpComplex& x, const MpComplex& y) {
    return MpComplex(x.re_ - y.re_, x.im_ - y.im_);
  }
  friend MpComplex operator*(const MpComplex& x, const MpComplex& y) {
    return MpComplex(x.re_ * y.re_ - x.im_ * y.im_,
                     x.re_ * y.im_ + x.im_ * y.re_);
  }
  friend MpComplex operator/(const MpComplex& x, const MpComplex& y) {
    MpReal d = y.re_ * y.re_ + y.im_ * y.im_;
    return MpComplex((x.re_ * y.re_ + x.im_ * y.im_) / d,
                     (x.im_ * y.re_ - x.re_ * y.im_) / d);
  }
  friend MpComplex operator+(const MpComplex& x, const MpReal& y) {
    return MpComplex(x.re_ + y, x.im_);
  }
  friend MpComplex operator-(const MpComplex& x, const MpReal& y) {
    return MpComplex(x.re_ - y, x.im_);
  }
  friend MpComplex operator*(const MpComplex& x, const MpReal& y) {
    return MpComplex(x.re_ * y, x.im_ * y);
  }
  friend MpComplex operator*(const MpReal& y, const MpComplex& x) {
    return x * y;
  }
  friend MpComplex operator/(const MpComplex& x, const MpReal& y) {
    return MpComplex(x.re_ / y, x.im_ / y);
  }
  friend MpComplex operator+(const MpReal& y, const MpComplex& x) {
    return x + y;
  }
  friend MpComplex operator-(const MpReal& y, const MpComplex& x) {
    return MpComplex(y - x.re_, -x.im_);
  }
  friend MpComplex operator/(const MpReal& x, const MpComplex& y) {
    return MpComplex(MpReal(x)) / y;
  }
  friend bool operator==(const MpComplex& x, const MpComplex& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }

  MpReal abs() const { return hypot(re_, im_); }
  // Principal argument in (-pi, pi]; the branch edge maps to +pi.
  MpReal arg() const;

 private:
  MpReal re_, im_;
};

// Exact z * 2^k.
inline MpComplex mul_2si(const MpComplex& z, long k) {
  return MpComplex(mul_2si(z.re(), k), mul_2si(z.im(), k));
}

// Principal-branch complex logarithm; throws DomainError on z = 0.
MpComplex clog(const MpComplex& z);
MpComplex cexp(const MpComplex& z);
// Principal square root via exp(log(z)/2); csqrt(0) = 0.
MpComplex csqrt(const MpComplex& z);
// tanh computed from exp(-2|Re z| …): bounded for any argument magnitude
// (cosh/sinh would overflow even MPFR's exponent range at |x| ~ 10^97).
MpComplex ctanh(const MpComplex& z);
// z^k for big nonnegative k, via exp(k*log z); 0^k = 0 (k > 0), z^0 = 1.
MpComplex cpow_int_plus(const MpComplex& z, const mpz_class& k);
// Scales a big integer into the complex plane at the given precision.
MpComplex mpz_to_complex(const mpz_class& n, mpfr_prec_t prec);

}  // namespace stieltjes

#endif  // STIELTJES_MP_COMPLEX_HPP_
