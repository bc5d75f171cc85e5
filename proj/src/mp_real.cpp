#include "mp_real.hpp"

#include <cmath>
#include <cstring>

#include "errors.hpp"

namespace stieltjes {

mpfr_prec_t digits_to_bits(long digits) {
  // log2(10) = 3.3219…; round up and keep a couple of spare bits.
  auto bits = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 4;
  return std::max(bits, kMinPrec);
}

long bits_to_digits(mpfr_prec_t bits) {
  return static_cast<long>(bits * 0.3010299956639812);
}

MpReal MpReal::from_string(std::string_view s, mpfr_prec_t prec) {
  MpReal r(prec);
  std::string buf(s);
  char* end = nullptr;
  int ternary = mpfr_strtofr(r.v_, buf.c_str(), &end, 10, kRnd);
  (void)ternary;
  if (end == buf.c_str())
    throw ParseError("invalid number '" + buf + "'", 0);
  if (*end != '\0')
    throw ParseError("trailing characters in number '" + buf + "'",
                     static_cast<std::size_t>(end - buf.c_str()));
  return r;
}

std::string MpReal::to_sci_string(long digits) const {
  if (is_nan()) return "nan";
  if (is_inf()) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0e0";
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits),
                           v_, kRnd);
  std::string ds(raw);
  mpfr_free_str(raw);
  std::string sgn;
  if (!ds.empty() && ds[0] == '-') {
    sgn = "-";
    ds.erase(0, 1);
  }
  // mpfr_get_str: value = 0.ds * 10^e, so d.ddd * 10^(e-1).
  std::string mant = ds.substr(0, 1);
  if (ds.size() > 1) mant += "." + ds.substr(1);
  return sgn + mant + "e" + std::to_string(static_cast<long long>(e - 1));
}

MpReal unary(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const MpReal& x) {
  MpReal r(x.prec());
  fn(r.v_, x.v_, kRnd);
  return r;
}

MpReal binary(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t),
              const MpReal& x, const MpReal& y) {
  MpReal r(std::max(x.prec(), y.prec()));
  fn(r.v_, x.raw(), y.raw(), kRnd);
  return r;
}

MpReal abs(const MpReal& x) { return unary(mpfr_abs, x); }
MpReal sqrt(const MpReal& x) { return unary(mpfr_sqrt, x); }
MpReal exp(const MpReal& x) { return unary(mpfr_exp, x); }

MpReal log(const MpReal& x) {
  if (x.sign() < 0 || x.is_zero())
    throw DomainError("log: argument must be positive");
  return unary(mpfr_log, x);
}

MpReal sin(const MpReal& x) { return unary(mpfr_sin, x); }
MpReal cos(const MpReal& x) { return unary(mpfr_cos, x); }

void sin_cos(const MpReal& x, MpReal& s, MpReal& c) {
  s = MpReal(x.prec());
  c = MpReal(x.prec());
  mpfr_sin_cos(s.raw(), c.raw(), x.raw(), kRnd);
}

MpReal tanh(const MpReal& x) { return unary(mpfr_tanh, x); }
MpReal cosh(const MpReal& x) { return unary(mpfr_cosh, x); }
MpReal atan2(const MpReal& y, const MpReal& x) {
  return binary(mpfr_atan2, y, x);
}
MpReal hypot(const MpReal& x, const MpReal& y) {
  return binary(mpfr_hypot, x, y);
}
MpReal floor(const MpReal& x) { return unary(mpfr_rint_floor, x); }

MpReal pow_ui(const MpReal& x, unsigned long k) {
  MpReal r(x.prec());
  mpfr_pow_ui(r.raw(), x.raw(), k, kRnd);
  return r;
}

MpReal mul_2si(const MpReal& x, long k) {
  MpReal r(x.prec());
  mpfr_mul_2si(r.raw(), x.raw(), k, kRnd);
  return r;
}

MpReal min(const MpReal& x, const MpReal& y) { return binary(mpfr_min, x, y); }
MpReal max(const MpReal& x, const MpReal& y) { return binary(mpfr_max, x, y); }

}  // namespace stieltjes
