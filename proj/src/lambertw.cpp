#include "lambertw.hpp"

#include <algorithm>

#include "errors.hpp"

namespace stieltjes {

namespace {

// One Halley step for f(w) = w e^w - z:
//   w <- w - f / (e^w (w+1) - (w+2) f / (2w+2)).
MpComplex halley_step(const MpComplex& w, const MpComplex& z, MpReal* delta) {
  mpfr_prec_t p = w.prec();
  MpReal one(1, p), two(2, p);
  MpComplex ew = cexp(w);
  MpComplex f = w * ew - z;
  MpComplex wp1 = w + one;
  MpComplex denom = ew * wp1 - (w + two) * f / (mul_2si(wp1, 1));
  MpComplex step = f / denom;
  if (delta != nullptr) *delta = step.abs();
  return w - step;
}

}  // namespace

LambertResult lambert_w0(const MpComplex& z_in, int digits) {
  if (digits < 1) throw DomainError("lambert_w0: digits must be >= 1");
  const mpfr_prec_t target = digits_to_bits(digits + 12);
  const MpComplex z = z_in.with_prec(target);

  if (z.is_zero()) {
    return LambertResult{MpComplex(target), MpReal(target), 0};
  }

  // Seed at low precision. |z| > 3: asymptotic log z - log log z; tiny |z|:
  // series; in between log(1+z) is inside the Halley basin on the principal
  // branch (our arguments sit on the positive imaginary axis, far from the
  // branch point at -1/e).
  mpfr_prec_t p = std::min<mpfr_prec_t>(128, target);
  MpComplex w(p);
  {
    MpComplex zs = z.with_prec(p);
    MpReal az = zs.abs();
    if (az > 3) {
      MpComplex l = clog(zs);
      w = l - clog(l);
    } else if (az < MpReal(0.05, p)) {
      // W = z (1 - z + 3/2 z^2 - ...)
      MpReal threehalf(1.5, p);
      MpComplex one(1, p);
      w = zs * (one - zs * (one - threehalf * zs));
    } else {
      MpComplex one(1, p);
      w = clog(zs + one);
    }
    int it = 0;
    MpReal delta(p);
    MpReal stop = mul_2si(MpReal(1, p), -static_cast<long>(p) + 8);
    for (; it < 60; ++it) {
      w = halley_step(w, zs, &delta);
      if (delta <= stop * w.abs()) break;
    }
    if (it == 60)
      throw ConvergenceError("lambert_w0: seed stage failed to converge");
  }

  // Precision ramp: Halley more than triples the correct digits per step.
  int iterations = 0;
  while (p < target) {
    p = std::min<mpfr_prec_t>(3 * p, target);
    w = w.with_prec(p);
    w = halley_step(w, z.with_prec(p), nullptr);
    ++iterations;
  }

  // Finish at full precision: stop on |dw| <= 10^(-digits-2) |w| and a
  // passing residual.
  MpReal dw_tol = exp(MpReal(-(digits + 2), target) * MpReal::ln10(target));
  MpReal res_tol = exp(MpReal(-(digits - 2), target) * MpReal::ln10(target));
  MpReal delta(target);
  MpReal residual(target);
  bool ok = false;
  for (int it = 0; it < 10; ++it) {
    w = halley_step(w, z, &delta);
    ++iterations;
    if (delta <= dw_tol * w.abs()) {
      residual = (w * cexp(w) - z).abs() / z.abs();
      if (residual <= res_tol) {
        ok = true;
        break;
      }
    }
  }
  if (!ok)
    throw ConvergenceError(
        "lambert_w0: Halley iteration did not reach tolerance (bad seed or "
        "insufficient precision)");
  return LambertResult{std::move(w), std::move(residual), iterations};
}

}  // namespace stieltjes
