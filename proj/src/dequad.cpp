#include "dequad.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace stieltjes {

namespace {

long next_odd(long m) { return (m % 2 == 0) ? m + 1 : m; }

struct ContourPoint {
  MpComplex x;
  MpComplex dx;
};

ContourPoint contour_point(const MpReal& y, const SaddleData& sd) {
  MpReal one(1, sd.bits);
  MpComplex ey = sd.eps * y;
  MpComplex emy = cexp(-ey);
  MpComplex s = cexp(ey - emy + one);
  ContourPoint p{sd.omega * s, sd.omega * (sd.eps * ((one + emy) * s))};
  return p;
}

MpComplex h_factor(const MpComplex& x, mpfr_prec_t bits) {
  MpComplex t = ctanh(MpReal::pi(bits) * x) + MpReal(1, bits);
  return t * t;
}

}  // namespace

long schedule_nodes(int target_digits) {
  if (target_digits <= 100) return 201;
  if (target_digits <= 900)
    return next_odd(201L * ((target_digits + 99) / 100));
  if (target_digits <= 1000) return 3201;
  return next_odd(3201L * ((target_digits + 999) / 1000));
}

QuadPlan make_plan(const SaddleData& sd, int target_digits, long nodes) {
  if (nodes < 3) throw DomainError("make_plan: need at least 3 nodes");
  nodes = next_odd(nodes);
  QuadPlan plan;
  plan.target_digits = target_digits;
  plan.nodes = nodes;
  plan.eps = sd.eps;
  plan.bits = sd.bits;
  MpReal q = cutoff_q(sd, target_digits);
  plan.h = mul_2si(q, 1) / MpReal(nodes - 1, sd.bits);
  // Store q = h (M-1)/2 so the invariant holds exactly after rounding h.
  plan.q = mul_2si(plan.h * MpReal(nodes - 1, sd.bits), -1);
  return plan;
}

MpComplex contour_x(const MpReal& y, const SaddleData& sd) {
  return contour_point(y, sd).x;
}

MpComplex contour_dx(const MpReal& y, const SaddleData& sd) {
  return contour_point(y, sd).dx;
}

MpComplex integrand_normalized(const MpReal& y, const SaddleData& sd) {
  ContourPoint p = contour_point(y, sd);
  MpComplex dg = g_eval(p.x, sd.n, sd.a) - sd.g_omega;
  return cexp(dg) * h_factor(p.x, sd.bits) * p.dx;
}

MpComplex profile_ratio(const MpReal& y, const SaddleData& sd) {
  ContourPoint p = contour_point(y, sd);
  MpComplex dg = g_eval(p.x, sd.n, sd.a) - sd.g_omega;
  return cexp(dg) * h_factor(p.x, sd.bits) / h_factor(sd.omega, sd.bits);
}

MpComplex tree_sum(std::vector<MpComplex>& terms, mpfr_prec_t bits) {
  if (terms.empty()) return MpComplex(bits);
  std::size_t n = terms.size();
  while (n > 1) {
    std::size_t half = n / 2;
    for (std::size_t i = 0; i < half; ++i)
      terms[i] = terms[2 * i] + terms[2 * i + 1];
    if (n % 2 == 1) {
      terms[half] = terms[n - 1];
      n = half + 1;
    } else {
      n = half;
    }
  }
  return terms[0];
}

QuadResult integrate(const SaddleData& sd, const QuadPlan& plan) {
  std::vector<MpComplex> terms;
  terms.reserve(static_cast<std::size_t>(plan.nodes));
  for (long k = 0; k < plan.nodes; ++k) {
    MpReal y = -plan.q + MpReal(k, sd.bits) * plan.h;
    MpComplex t = integrand_normalized(y, sd);
    if (k == 0 || k == plan.nodes - 1) t = mul_2si(t, -1);  // trapezoid ends
    terms.push_back(std::move(t));
  }
  MpComplex s = tree_sum(terms, sd.bits);
  QuadResult r;
  r.log_value = sd.g_omega + clog(s) + MpComplex(log(plan.h));
  r.est_error_log10 = std::numeric_limits<double>::infinity();
  r.trace.push_back({plan.nodes, plan.h, r.log_value,
                     std::numeric_limits<double>::infinity()});
  return r;
}

double rel_delta_log10(const MpComplex& a, const MpComplex& b) {
  MpComplex d = (a - b).with_prec(96);
  if (d.is_zero()) return -std::numeric_limits<double>::infinity();
  if (d.re() > MpReal(0.5, 96) || d.re() < MpReal(-0.5, 96)) {
    // Wildly different magnitudes; |exp(d)-1| ~ exp(|Re d|).
    return std::abs(d.re().to_double()) / 2.302585092994046;
  }
  MpComplex e = cexp(d) - MpReal(1, 96);
  if (e.is_zero()) return -std::numeric_limits<double>::infinity();
  MpReal l(96);
  mpfr_log10(l.raw(), e.abs().raw(), kRnd);
  return l.to_double();
}

QuadResult integrate_adaptive(const SaddleData& sd, int target_digits,
                              long start_nodes) {
  long nodes =
      start_nodes > 0 ? next_odd(start_nodes) : schedule_nodes(target_digits);
  QuadPlan plan = make_plan(sd, target_digits, nodes);
  QuadResult acc = integrate(sd, plan);
  for (int halving = 0; halving < 8; ++halving) {
    QuadPlan finer = plan;
    finer.nodes = 2 * plan.nodes - 1;
    finer.h = mul_2si(plan.h, -1);
    QuadResult next = integrate(sd, finer);
    double est = rel_delta_log10(acc.log_value, next.log_value);
    acc.trace.push_back(
        {finer.nodes, finer.h, next.log_value, est});
    acc.log_value = next.log_value;
    acc.est_error_log10 = est;
    plan = finer;
    if (est < -target_digits) return acc;
  }
  throw ConvergenceError(
      "integrate_adaptive: not converged after 8 h-halvings (raise working "
      "precision and retry)");
}

}  // namespace stieltjes
