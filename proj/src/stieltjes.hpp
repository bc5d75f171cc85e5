#ifndef STIELTJES_STIELTJES_HPP_
#define STIELTJES_STIELTJES_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

#include "bigsci.hpp"
#include "dequad.hpp"
#include "saddle.hpp"

namespace stieltjes {

enum class Method { kAuto, kSaddle, kDirect, kAsymptotic };

const char* method_name(Method m);

struct GammaRequest {
  mpz_class n = 0;
  std::string v_re = "1";  // exact decimal strings; parsed at working precision
  std::string v_im = "0";
  int digits = 50;
  Method method = Method::kAuto;
  ContourMode contour = ContourMode::kUnit;
  long nodes_override = 0;  // 0 = schedule
};

struct GammaResult {
  BigSciComplex value;  // imaginary part exactly "0" for real v
  Method method_used = Method::kAuto;
  bool has_plan = false;  // false for the asymptotic method
  long nodes = 0;         // final node count
  MpReal q;               // contour cutoff (direct method: half t-span)
  MpReal h;               // final step
  int target_digits = 0;  // internal quadrature target N'
  double est_error_log10 = 0;
  double elapsed_s = 0;

  std::string est_error_str() const;
};

// Computes gamma_n(v) per the request (auto-routing between the saddle
// and direct quadratures, or the closed-form asymptotic).
GammaResult gamma(const GammaRequest& req);

// Log-space assembly: gamma = -pi/(2(n+1)) * (I(a) + conj(I(conj a))),
// which is -pi/(n+1) * Re(I) for real a. `logI_conj` is null for the real
// route. The returned value is log-space (log magnitude, phase); for real
// a the phase is exactly 0 or pi(bits).
MpComplex assemble_gamma(const mpz_class& n, const MpComplex& a,
                         const MpComplex& logI, const MpComplex* logI_conj);

struct DirectDiag {
  long nodes = 0;
  MpReal half_span;  // half of the t-range, the direct analogue of q
  MpReal h;
  double est_error_log10 = 0;
  long cancellation_digits = 0;
  int attempts = 0;
};

// gamma_n(v) by the standard DE map x = exp(t - exp(-t)) on the real axis
// (the |s| >= n regime where the integrand is peaked near the origin).
// Returns log-space gamma; measures oscillatory cancellation and re-runs
// at boosted precision when it eats into the target digits.
MpComplex gamma_direct(const mpz_class& n, const MpComplex& a, int digits,
                       DirectDiag* diag = nullptr, long nodes_override = 0);

// Log of the saddle-point approximation of I_n(a):
// (n+1) log W0(u) - 2 pi omega + 1/2 log(8(n+1)/(pi (1+W0(u)))).
MpComplex asymptotic_I(const mpz_class& n, const MpComplex& a, int digits);

struct ProfileRow {
  MpReal y;
  MpComplex ratio;  // f(y)/f(0) on the contour
};
std::vector<ProfileRow> profile_study(const GammaRequest& req);

struct ConvergenceRow {
  int m = 0;
  MpReal h;
  double rel_err_log10 = 0;
};
struct ConvergenceStudy {
  std::vector<ConvergenceRow> rows;
  MpReal q;
  long ref_nodes = 0;
};
// Fig.-3 protocol: fixed q, reference at the schedule node count, then
// errors for h = h0 2^-m, m = 0..4 with h0 = 2q/100.
ConvergenceStudy convergence_study(const GammaRequest& req);

// Formats a log10 relative error as a short decimal string ("3.2e-106").
std::string log10_to_string(double log10_value);

}  // namespace stieltjes

#endif  // STIELTJES_STIELTJES_HPP_
