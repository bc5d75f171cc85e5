#include "stieltjes.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include "errors.hpp"
#include "lambertw.hpp"
#include "precision.hpp"

namespace stieltjes {

namespace {

constexpr double kLog10Of2 = 0.3010299956639812;

MpReal pow10r(long k, mpfr_prec_t p) {
  return exp(MpReal(k, p) * MpReal::ln10(p));
}

MpReal neg_inf(mpfr_prec_t p) {
  MpReal r(p);
  mpfr_set_inf(r.raw(), -1);
  return r;
}

double to_log10(const MpReal& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  MpReal l(96);
  mpfr_log10(l.raw(), x.raw(), kRnd);
  return l.to_double();
}

// ---------------------------------------------------------------------------
// Direct (real-axis) DE quadrature: x = exp(t - exp(-t)) maps (0, inf) to
// the whole line with double-exponential tails on both ends.

MpComplex direct_term(const MpReal& t, const mpz_class& n, const MpComplex& a,
                      const MpReal& np1) {
  mpfr_prec_t p = t.prec();
  MpReal emt = exp(-t);
  MpReal x = exp(t - emt);
  MpComplex z(a.re(), a.im() + x);
  if (z.im().is_zero()) {
    if (z.re().sign() <= 0)
      throw BranchError("gamma_direct: a + ix on the branch cut (-inf, 0]");
    if (z.re() == 1) return MpComplex(p);  // log(1)^{n+1} = 0, no singularity
  }
  MpComplex l = clog(z);
  if (l.is_zero()) return MpComplex(p);
  MpComplex f = cexp(np1 * clog(l));
  MpReal ch = cosh(MpReal::pi(p) * x);
  MpReal jac = (MpReal(1, p) + emt) * x;
  return f * (jac / (ch * ch));
}

double direct_term_log10(double td, const mpz_class& n, const MpComplex& a,
                         mpfr_prec_t p) {
  MpReal np1(n + 1, p);
  MpComplex v = direct_term(MpReal(td, p), n, a.with_prec(p), np1);
  MpReal m = v.abs();
  if (m.is_zero()) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(m.exponent2()) * kLog10Of2;
}

struct DirectRange {
  double tlo = -2;
  double thi = 8;
};

// Coarse low-precision scan for the t-window that holds every term above
// 10^-(N+14) of the crest.
DirectRange direct_range(const mpz_class& n, const MpComplex& a, int target) {
  const mpfr_prec_t p = 160;
  double best = -std::numeric_limits<double>::infinity();
  for (double t = -2; t <= 8; t += 0.5)
    best = std::max(best, direct_term_log10(t, n, a, p));
  DirectRange r;
  double cut = best - (target + 14);
  while (r.thi < 56) {
    double lm = direct_term_log10(r.thi, n, a, p);
    if (lm > best) {
      best = lm;
      cut = best - (target + 14);
    }
    if (lm <= cut) break;
    r.thi += 1;
  }
  while (r.tlo > -40) {
    double lm = direct_term_log10(r.tlo, n, a, p);
    if (lm > best) {
      best = lm;
      cut = best - (target + 14);
    }
    if (lm <= cut) break;
    r.tlo -= 1;
  }
  return r;
}

struct DirectPass {
  MpComplex log_value;
  double est_log10 = 0;
  long nodes = 0;
  long cancel_digits = 0;
  MpReal h;
  bool converged = false;
};

DirectPass direct_quad(const mpz_class& n, const MpComplex& a_in,
                       long total_digits, int target, const DirectRange& range,
                       long nodes_override) {
  mpfr_prec_t bits = digits_to_bits(total_digits);
  MpComplex a = a_in.with_prec(bits);
  MpReal np1(n + 1, bits);
  MpReal tlo(range.tlo, bits);
  MpReal span(range.thi - range.tlo, bits);

  double nd = std::min(mpz_get_d(mpz_class(n + 1).get_mpz_t()), 1e8);
  double h0 = std::min(0.05, 2.0 / nd);
  long m = nodes_override > 0
               ? std::max<long>(nodes_override, 9)
               : static_cast<long>((range.thi - range.tlo) / h0) + 2;

  DirectPass out;
  out.log_value = MpComplex(bits);
  bool have_prev = false;
  MpComplex prev(bits);
  long max_exp2 = std::numeric_limits<long>::min();
  for (int level = 0; level <= 8; ++level) {
    MpReal h = span / MpReal(m - 1, bits);
    std::vector<MpComplex> terms;
    terms.reserve(static_cast<std::size_t>(m));
    max_exp2 = std::numeric_limits<long>::min();
    for (long k = 0; k < m; ++k) {
      MpReal t = tlo + MpReal(k, bits) * h;
      MpComplex v = direct_term(t, n, a, np1);
      if (!v.is_zero())
        max_exp2 = std::max(max_exp2, v.abs().exponent2());
      if (k == 0 || k == m - 1) v = mul_2si(v, -1);
      terms.push_back(std::move(v));
    }
    MpComplex s = tree_sum(terms, bits);
    MpComplex cur = clog(s) + MpComplex(log(h));
    out.nodes = m;
    out.h = h;
    out.cancel_digits =
        static_cast<long>((max_exp2 - s.abs().exponent2()) * kLog10Of2) +
        static_cast<long>(std::log10(static_cast<double>(m))) + 1;
    if (have_prev) {
      out.est_log10 = rel_delta_log10(prev, cur);
      out.log_value = cur;
      if (out.est_log10 < -target) {
        out.converged = true;
        return out;
      }
    }
    prev = cur;
    have_prev = true;
    m = 2 * m - 1;
  }
  return out;
}

double combine_est(double est1, double est2, const MpReal& l1,
                   const MpReal& l2, const MpReal& lnc,
                   const MpReal& gamma_logmag) {
  // Cancellation in I + conj(I~) amplifies the quadratures' relative error
  // by (|I1|+|I2|) / |gamma/c|.
  MpReal amp = max(l1, l2) + MpReal::ln2(l1.prec()) + lnc - gamma_logmag;
  double a = amp.to_double() / 2.302585092994046;
  return std::max(est1, est2) + std::max(0.0, a);
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::kAuto: return "auto";
    case Method::kSaddle: return "saddle";
    case Method::kDirect: return "direct";
    case Method::kAsymptotic: return "asymptotic";
  }
  return "?";
}

std::string log10_to_string(double log10_value) {
  if (std::isinf(log10_value) && log10_value < 0) return "0";
  if (std::isnan(log10_value)) return "nan";
  double e = std::floor(log10_value);
  double mant = std::pow(10.0, log10_value - e);
  if (mant >= 9.95) {
    mant = 1.0;
    e += 1;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1fe%lld", mant,
                static_cast<long long>(e));
  return buf;
}

std::string GammaResult::est_error_str() const {
  return log10_to_string(est_error_log10);
}

MpComplex assemble_gamma(const mpz_class& n, const MpComplex& a,
                         const MpComplex& logI, const MpComplex* logI_conj) {
  mpfr_prec_t bits = logI.prec();
  MpReal pi = MpReal::pi(bits);
  // c = pi / (2(n+1)); Eq. (2)'s prefactor (Eq. (4) as printed drops the
  // 1/2 and its Eq. (11) compensates; see the asymptotic path).
  MpReal lnc = log(pi) - MpReal::ln2(bits) - log(MpReal(n + 1, bits));

  if (a.im().is_zero() && logI_conj == nullptr) {
    // gamma = -2c |I| cos(phase).
    MpReal cph = cos(logI.im());
    if (cph.is_zero()) return MpComplex(neg_inf(bits), MpReal(bits));
    MpReal logmag = lnc + MpReal::ln2(bits) + logI.re() + log(abs(cph));
    MpReal phase = cph.sign() > 0 ? pi : MpReal(bits);
    return MpComplex(std::move(logmag), std::move(phase));
  }

  const MpComplex& l2 = logI_conj != nullptr ? *logI_conj : logI;
  MpReal lm = max(logI.re(), l2.re());
  MpComplex z = cexp(MpComplex(logI.re() - lm, logI.im())) +
                cexp(MpComplex(l2.re() - lm, -l2.im()));
  if (z.is_zero()) return MpComplex(neg_inf(bits), MpReal(bits));
  MpComplex lz = clog(z);
  MpReal logmag = lnc + lm + lz.re();
  MpReal phase = lz.im() + pi;
  if (phase > pi) phase -= mul_2si(pi, 1);
  return MpComplex(std::move(logmag), std::move(phase));
}

MpComplex gamma_direct(const mpz_class& n, const MpComplex& a, int digits,
                       DirectDiag* diag, long nodes_override) {
  if (a.re().sign() < 0)
    throw DomainError("gamma_direct: Re(a) >= 0 required");
  int target = digits + 5;
  long total = target + guard_base() + ndigits10(n + 1);
  DirectRange range = direct_range(n, a, target);
  bool complex_a = !a.im().is_zero();

  DirectPass pass, pass2;
  int attempts = 0;
  for (;;) {
    ++attempts;
    pass = direct_quad(n, a, total, target, range, nodes_override);
    long avail = total - pass.cancel_digits;
    if (pass.converged && avail >= target + 2) break;
    if (attempts >= 3) {
      if (!pass.converged)
        throw ConvergenceError(
            "gamma_direct: h-halving did not converge (n too large for the "
            "direct route?)");
      throw PrecisionError(
          "gamma_direct: oscillatory cancellation keeps eating the target "
          "digits");
    }
    // Boost precision by the measured cancellation and rerun.
    total = target + std::max<long>(pass.cancel_digits, 1) + guard_base() +
            ndigits10(n + 1);
  }
  if (complex_a) {
    // Conjugate grid terms are conjugates, so cancellation matches and the
    // boosted precision carries over.
    DirectRange range2 = direct_range(n, a.conj(), target);
    pass2 = direct_quad(n, a.conj(), total, target, range2, nodes_override);
    if (!pass2.converged)
      throw ConvergenceError("gamma_direct: conjugate quadrature stalled");
  }

  mpfr_prec_t bits = pass.log_value.prec();
  MpComplex glog =
      complex_a ? assemble_gamma(n, a, pass.log_value, &pass2.log_value)
                : assemble_gamma(n, a, pass.log_value, nullptr);
  if (diag != nullptr) {
    diag->nodes = pass.nodes;
    diag->half_span = MpReal((range.thi - range.tlo) / 2, bits);
    diag->h = pass.h;
    diag->attempts = attempts;
    diag->cancellation_digits = pass.cancel_digits;
    if (complex_a) {
      MpReal lnc =
          log(MpReal::pi(bits)) - MpReal::ln2(bits) - log(MpReal(n + 1, bits));
      diag->est_error_log10 =
          combine_est(pass.est_log10, pass2.est_log10, pass.log_value.re(),
                      pass2.log_value.re(), lnc, glog.re());
    } else {
      diag->est_error_log10 = pass.est_log10;
    }
  }
  return glog;
}

MpComplex asymptotic_I(const mpz_class& n, const MpComplex& a, int digits) {
  SaddleData sd = saddle_point(n, a, digits);
  mpfr_prec_t bits = sd.bits;
  MpReal one(1, bits);
  MpComplex wp1 = sd.w0 + one;
  // True-scale Laplace value: h(omega) ~ 4 doubles Eq. (11)'s sqrt(2...)
  // to sqrt(8...); paired with the -pi/(2(n+1)) prefactor in
  // assemble_gamma this reproduces the printed gamma values.
  MpComplex tail = MpReal(8 * (n + 1), bits) / (MpReal::pi(bits) * wp1);
  return MpReal(n + 1, bits) * clog(sd.w0) -
         mul_2si(MpReal::pi(bits), 1) * sd.omega +
         mul_2si(clog(tail), -1);
}

std::vector<ProfileRow> profile_study(const GammaRequest& req) {
  PrecPolicy policy = PrecPolicy::make(req.digits, req.n);
  MpReal vre = MpReal::from_string(req.v_re, policy.bits);
  MpReal vim = MpReal::from_string(req.v_im, policy.bits);
  MpComplex a(vre - mul_2si(MpReal(1, policy.bits), -1), vim);
  if (a.re().sign() < 0) throw DomainError("profile: Re(v) >= 1/2 required");
  long digits_total = policy.quad_digits + policy.guard;
  SaddleData sd = solve_saddle(req.n, a, static_cast<int>(digits_total),
                               req.contour);
  long nodes = req.nodes_override > 0 ? req.nodes_override
                                      : schedule_nodes(policy.quad_digits);
  QuadPlan plan = make_plan(sd, policy.quad_digits, nodes);
  std::vector<ProfileRow> rows;
  rows.reserve(static_cast<std::size_t>(plan.nodes));
  for (long k = 0; k < plan.nodes; ++k) {
    MpReal y = -plan.q + MpReal(k, sd.bits) * plan.h;
    rows.push_back({y, profile_ratio(y, sd)});
  }
  return rows;
}

ConvergenceStudy convergence_study(const GammaRequest& req) {
  PrecPolicy policy = PrecPolicy::make(req.digits, req.n);
  MpReal vre = MpReal::from_string(req.v_re, policy.bits);
  MpReal vim = MpReal::from_string(req.v_im, policy.bits);
  MpComplex a(vre - mul_2si(MpReal(1, policy.bits), -1), vim);
  if (a.re().sign() < 0)
    throw DomainError("convergence: Re(v) >= 1/2 required");
  long digits_total = policy.quad_digits + policy.guard;
  SaddleData sd = solve_saddle(req.n, a, static_cast<int>(digits_total),
                               req.contour);

  ConvergenceStudy study;
  long ref_nodes = req.nodes_override > 0 ? req.nodes_override : 3201;
  ref_nodes = std::max(ref_nodes, schedule_nodes(policy.quad_digits));
  QuadPlan ref_plan = make_plan(sd, policy.quad_digits, ref_nodes);
  study.ref_nodes = ref_plan.nodes;
  study.q = ref_plan.q;
  QuadResult ref = integrate(sd, ref_plan);

  for (int m = 0; m <= 4; ++m) {
    long nodes = 100L * (1L << m) + 1;
    QuadPlan plan = make_plan(sd, policy.quad_digits, nodes);
    QuadResult r = integrate(sd, plan);
    double err = rel_delta_log10(r.log_value, ref.log_value);
    study.rows.push_back({m, plan.h, err});
  }
  return study;
}

GammaResult gamma(const GammaRequest& req) {
  auto t0 = std::chrono::steady_clock::now();
  if (sgn(req.n) < 0) throw DomainError("gamma: n must be >= 0");
  PrecPolicy policy = PrecPolicy::make(req.digits, req.n);
  mpfr_prec_t bits = policy.bits;

  MpReal vre = MpReal::from_string(req.v_re, bits);
  MpReal vim = MpReal::from_string(req.v_im, bits);
  MpComplex a(vre - mul_2si(MpReal(1, bits), -1), vim);
  if (a.re().sign() < 0)
    throw DomainError("gamma: Re(v) >= 1/2 required (Eq. domain)");
  bool complex_v = !a.im().is_zero();

  Method m = req.method;
  if (m == Method::kAuto)
    m = saddle_guard_ok(req.n, a) ? Method::kSaddle : Method::kDirect;

  GammaResult out;
  out.method_used = m;
  out.target_digits = policy.quad_digits;
  long digits_total = policy.quad_digits + policy.guard;
  MpComplex glog(bits);

  switch (m) {
    case Method::kSaddle: {
      SaddleData sd = solve_saddle(req.n, a, static_cast<int>(digits_total),
                                   req.contour);
      QuadResult qr =
          integrate_adaptive(sd, policy.quad_digits, req.nodes_override);
      if (complex_v) {
        SaddleData sd2 = solve_saddle(req.n, a.conj(),
                                      static_cast<int>(digits_total),
                                      req.contour);
        QuadResult qr2 =
            integrate_adaptive(sd2, policy.quad_digits, req.nodes_override);
        glog = assemble_gamma(req.n, a, qr.log_value, &qr2.log_value);
        MpReal lnc = log(MpReal::pi(bits)) - MpReal::ln2(bits) -
                     log(MpReal(req.n + 1, bits));
        out.est_error_log10 =
            combine_est(qr.est_error_log10, qr2.est_error_log10,
                        qr.log_value.re(), qr2.log_value.re(), lnc, glog.re());
      } else {
        glog = assemble_gamma(req.n, a, qr.log_value, nullptr);
        out.est_error_log10 = qr.est_error_log10;
      }
      out.has_plan = true;
      out.nodes = qr.trace.back().nodes;
      out.h = qr.trace.back().h;
      out.q = mul_2si(out.h * MpReal(out.nodes - 1, bits), -1);
      break;
    }
    case Method::kDirect: {
      DirectDiag diag;
      glog = gamma_direct(req.n, a, req.digits, &diag, req.nodes_override);
      out.has_plan = true;
      out.nodes = diag.nodes;
      out.h = diag.h;
      out.q = diag.half_span;
      out.est_error_log10 = diag.est_error_log10;
      break;
    }
    case Method::kAsymptotic: {
      MpComplex logI = asymptotic_I(req.n, a, static_cast<int>(digits_total));
      if (complex_v) {
        MpComplex logI2 =
            asymptotic_I(req.n, a.conj(), static_cast<int>(digits_total));
        glog = assemble_gamma(req.n, a, logI, &logI2);
      } else {
        glog = assemble_gamma(req.n, a, logI, nullptr);
      }
      out.has_plan = false;
      // Documented heuristic: Eq. (11) is good for ~log10(n) digits.
      out.est_error_log10 =
          -static_cast<double>(std::max<long>(ndigits10(req.n + 1) - 2, 0));
      break;
    }
    case Method::kAuto:
      throw Error("gamma: unresolved method");
  }

  if (complex_v) {
    out.value = format_bigsci(glog, req.digits);
  } else {
    // The assembly pins the phase to exactly 0 or pi for real v; verify the
    // residue is below 10^-digits before truncating to a real string.
    if (!glog.im().is_zero()) {
      MpReal residue = abs(sin(glog.im()));
      if (residue >= pow10r(-req.digits, bits))
        throw PrecisionError("gamma: imaginary residue above tolerance");
    }
    bool negative = !glog.im().is_zero();
    out.value.re = format_bigsci_real(glog.re(), negative, req.digits);
    out.value.im = BigSci::zero(req.digits);
  }

  out.elapsed_s = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  return out;
}

}  // namespace stieltjes
