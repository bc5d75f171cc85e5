#include "saddle.hpp"

#include "errors.hpp"
#include "lambertw.hpp"
#include "precision.hpp"

namespace stieltjes {

namespace {

MpReal two_pi(mpfr_prec_t bits) { return mul_2si(MpReal::pi(bits), 1); }

// Inner log with the module's branch preconditions.
MpComplex inner_log(const MpComplex& z) {
  if (z.im().is_zero()) {
    if (z.re().sign() <= 0)
      throw BranchError("g: a + ix lies on the branch cut (-inf, 0]");
    if (z.re() == 1)
      throw BranchError("g: a + ix = 1 makes the inner log vanish");
  }
  return clog(z);
}

}  // namespace

bool saddle_guard_ok(const mpz_class& n, const MpComplex& a) {
  mpfr_prec_t p = std::max<mpfr_prec_t>(a.prec(), kMinPrec);
  MpReal bound = max(MpReal(1, p), a.abs()) * 20L;
  return MpReal(n + 1, std::max<mpfr_prec_t>(p, digits_to_bits(ndigits10(n)))) >= bound;
}

MpComplex compute_u(const mpz_class& n, mpfr_prec_t bits) {
  if (sgn(n) < 0) throw DomainError("compute_u: n must be >= 0");
  MpReal mag = MpReal(n + 1, bits) / two_pi(bits);
  return MpComplex(MpReal(bits), std::move(mag));
}

MpComplex g_eval(const MpComplex& x, const mpz_class& n, const MpComplex& a) {
  MpComplex z = a + x.mul_i();
  MpComplex ll = clog(inner_log(z));
  mpfr_prec_t p = x.prec();
  return MpReal(n + 1, p) * ll - two_pi(p) * x;
}

MpComplex g_prime(const MpComplex& x, const mpz_class& n, const MpComplex& a) {
  MpComplex z = a + x.mul_i();
  MpComplex l = inner_log(z);
  mpfr_prec_t p = x.prec();
  MpComplex t = MpReal(n + 1, p) / (z * l);
  return t.mul_i() - MpComplex(two_pi(p));
}

SaddleData saddle_point(const mpz_class& n, const MpComplex& a_in,
                        int digits) {
  if (a_in.re().sign() < 0)
    throw DomainError("saddle_point: Re(v) >= 1/2 (Re(a) >= 0) required");
  if (!saddle_guard_ok(n, a_in))
    throw DomainError(
        "saddle_point: validity guard (n+1) >= 20*max(1,|a|) violated; use "
        "the direct method for this regime");

  SaddleData sd;
  sd.n = n;
  sd.bits = digits_to_bits(digits);
  sd.a = a_in.with_prec(sd.bits);
  sd.u = compute_u(n, sd.bits);
  sd.w0 = lambert_w0(sd.u, digits).w;
  sd.omega = (sd.a - sd.u / sd.w0).mul_i();

  // One Newton polish of (n+1) + 2 pi i (a+iw) log(a+iw) = 0 at full
  // precision; W0's tolerance composes with downstream needs otherwise.
  {
    MpComplex z = sd.a + sd.omega.mul_i();
    MpComplex l = inner_log(z);
    MpReal tp = two_pi(sd.bits);
    MpComplex f = MpReal(n + 1, sd.bits) + (tp * (z * l)).mul_i();
    MpComplex fp = -(tp * (l + MpReal(1, sd.bits)));
    sd.omega = sd.omega - f / fp;
  }
  sd.g_omega = g_eval(sd.omega, n, sd.a);
  return sd;
}

MpComplex g_second(const SaddleData& sd) {
  MpComplex z = sd.a + sd.omega.mul_i();
  MpComplex l = inner_log(z);
  MpReal one(1, sd.bits);
  return MpReal(sd.n + 1, sd.bits) * (one + one / l) / (z * z * l);
}

MpComplex contour_direction(const SaddleData& sd, ContourMode mode) {
  if (mode == ContourMode::kUnit) return MpComplex(1, sd.bits);
  MpReal phi = mul_2si(MpReal::pi(sd.bits) - sd.theta, -1);
  return cexp(MpComplex(MpReal(sd.bits), std::move(phi)));
}

MpReal cutoff_q(const SaddleData& sd, int target_digits) {
  if (target_digits < 1) throw DomainError("cutoff_q: N must be >= 1");
  MpReal scale = (sd.gpp * sd.omega * sd.omega).abs();
  MpReal q = sqrt(MpReal(target_digits, sd.bits) * MpReal::ln10(sd.bits) / scale);
  return q * MpReal(1.5, sd.bits);
}

SaddleData solve_saddle(const mpz_class& n, const MpComplex& a, int digits,
                        ContourMode mode) {
  SaddleData sd = saddle_point(n, a, digits);
  sd.gpp = g_second(sd);
  sd.theta = (sd.omega * sd.omega * sd.gpp).arg();
  sd.eps = contour_direction(sd, mode);
  return sd;
}

MpComplex saddle_residual(const SaddleData& sd) {
  MpComplex z = sd.a + sd.omega.mul_i();
  MpComplex l = inner_log(z);
  return MpReal(sd.n + 1, sd.bits) + (two_pi(sd.bits) * (z * l)).mul_i();
}

}  // namespace stieltjes
