#ifndef STIELTJES_SADDLE_HPP_
#define STIELTJES_SADDLE_HPP_

#include <gmpxx.h>

#include "mp_complex.hpp"

namespace stieltjes {

enum class ContourMode { kUnit, kSteepest };

// Everything the quadrature needs about the saddle point of
// exp(g(x)), g(x) = (n+1) log(log(a+ix)) - 2 pi x, at working precision.
struct SaddleData {
  mpz_class n;
  MpComplex a;        // a = v - 1/2
  MpComplex u;        // (n+1) i / (2 pi)
  MpComplex w0;       // W0(u)
  MpComplex omega;    // saddle point
  MpComplex g_omega;  // g(omega), the log-space anchor
  MpComplex gpp;      // g''(omega)
  MpReal theta;       // Arg(omega^2 g''(omega))
  MpComplex eps;      // contour direction (1, or e^{i(pi-theta)/2})
  mpfr_prec_t bits = kMinPrec;
};

MpComplex compute_u(const mpz_class& n, mpfr_prec_t bits);

// Closed-form saddle via W0 plus one full-precision Newton polish of
// (n+1) + 2 pi i (a+i w) log(a+i w) = 0. Fills n, a, u, w0, omega.
// Requires Re(a) >= 0 and the validity guard (n+1) >= 20 max(1, |a|).
SaddleData saddle_point(const mpz_class& n, const MpComplex& a, int digits);

// g, g' with principal branches; throws BranchError when a+ix falls on
// (-inf, 0] or equals 1 (the inner log vanishes there).
MpComplex g_eval(const MpComplex& x, const mpz_class& n, const MpComplex& a);
MpComplex g_prime(const MpComplex& x, const mpz_class& n, const MpComplex& a);

MpComplex g_second(const SaddleData& sd);
MpComplex contour_direction(const SaddleData& sd, ContourMode mode);

// Integration cutoff q = 1.5 sqrt(N ln10 / |g''(w) w^2|) for N target
// digits (the 1.5 covers the "roughly" in the estimate; cost is linear).
MpReal cutoff_q(const SaddleData& sd, int target_digits);

// saddle_point + g_second + theta + contour direction in one call.
SaddleData solve_saddle(const mpz_class& n, const MpComplex& a, int digits,
                        ContourMode mode);

// Eq.-(7) residual (n+1) + 2 pi i (a+iw) log(a+iw) at sd's precision.
MpComplex saddle_residual(const SaddleData& sd);

// True when (n+1) >= 20 max(1, |a|); below this the saddle analysis is not
// trusted and gamma() routes to the direct method.
bool saddle_guard_ok(const mpz_class& n, const MpComplex& a);

}  // namespace stieltjes

#endif  // STIELTJES_SADDLE_HPP_
