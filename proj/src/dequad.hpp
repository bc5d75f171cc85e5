#ifndef STIELTJES_DEQUAD_HPP_
#define STIELTJES_DEQUAD_HPP_

#include <vector>

#include "saddle.hpp"

namespace stieltjes {

// Quadrature parameters. M odd keeps a node on the saddle (y = 0), and q is
// stored as h*(M-1)/2 so the pair is exactly consistent.
struct QuadPlan {
  int target_digits = 0;  // N
  MpReal q;
  long nodes = 0;  // M
  MpReal h;
  MpComplex eps;
  mpfr_prec_t bits = kMinPrec;
};

struct QuadStep {
  long nodes = 0;
  MpReal h;
  MpComplex log_value;
  double est_log10 = 0;  // log10 of |I_h - I_{h/2}| / |I_{h/2}|
};

struct QuadResult {
  MpComplex log_value;  // log I_n(a): log magnitude + phase
  std::vector<QuadStep> trace;
  double est_error_log10 = 0;
};

// Paper-anchored node schedule: 201 covers 100 digits (n >= 500), 3201
// covers 1000; linear in between, scaled above, always odd.
long schedule_nodes(int target_digits);

QuadPlan make_plan(const SaddleData& sd, int target_digits, long nodes);

// x(y) = omega exp(1 + eps y - exp(-eps y)); saddle at y = 0.
MpComplex contour_x(const MpReal& y, const SaddleData& sd);
// dx/dy = omega eps (1 + exp(-eps y)) exp(1 + eps y - exp(-eps y)).
MpComplex contour_dx(const MpReal& y, const SaddleData& sd);

// exp(g(x(y)) - g(omega)) * h(x(y)) * dx/dy -- the quadrature term,
// O(1) near y = 0. h(x) = (1 + tanh pi x)^2, never 1/cosh^2 (which
// overflows at |x| ~ n).
MpComplex integrand_normalized(const MpReal& y, const SaddleData& sd);

// f(x(y))/f(omega) without the Jacobian: what the profile output reports.
MpComplex profile_ratio(const MpReal& y, const SaddleData& sd);

// Trapezoid over the fixed plan, pairwise-summed for reproducibility.
QuadResult integrate(const SaddleData& sd, const QuadPlan& plan);

// Runs the schedule and halves h until |I_h - I_{h/2}|/|I_{h/2}| drops
// below 10^-N; at most 8 halvings, then ConvergenceError (precision
// starvation -- raising prec is the caller's job).
QuadResult integrate_adaptive(const SaddleData& sd, int target_digits,
                              long start_nodes = 0);

// log10 of |exp(a - b) - 1|: relative distance of two log-space values.
double rel_delta_log10(const MpComplex& a, const MpComplex& b);

// Deterministic pairwise reduction; consumes the buffer.
MpComplex tree_sum(std::vector<MpComplex>& terms, mpfr_prec_t bits);

}  // namespace stieltjes

#endif  // STIELTJES_DEQUAD_HPP_
