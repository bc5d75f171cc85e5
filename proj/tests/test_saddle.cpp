#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "errors.hpp"
#include "mp_complex.hpp"
#include "saddle.hpp"

using namespace stieltjes;

namespace {

MpReal pow10(long k, mpfr_prec_t p) {
  return exp(MpReal(k, p) * MpReal::ln10(p));
}

mpz_class ten_to(unsigned k) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), 10, k);
  return z;
}

// Independent oracle: full complex Newton solve of
// (n+1) + 2 pi i (a+iw) log(a+iw) = 0 seeded at w = n / (2 pi log n).
MpComplex newton_oracle(const mpz_class& n, const MpComplex& a, int digits) {
  mpfr_prec_t p = digits_to_bits(digits + 10);
  MpReal tp = mul_2si(MpReal::pi(p), 1);
  MpReal nd(n, p);
  MpComplex w(nd / (tp * log(nd)));
  MpReal np1(n + 1, p);
  for (int it = 0; it < 200; ++it) {
    MpComplex z = a.with_prec(p) + w.mul_i();
    MpComplex l = clog(z);
    MpComplex f = np1 + (tp * (z * l)).mul_i();
    MpComplex fp = -(tp * (l + MpReal(1, p)));
    MpComplex step = f / fp;
    w = w - step;
    if (step.abs() <= pow10(-digits - 3, p) * w.abs()) break;
  }
  return w;
}

}  // namespace

TEST_CASE("compute_u") {
  mpfr_prec_t p = digits_to_bits(40);
  MpComplex u = compute_u(0, p);
  CHECK(u.re().is_zero());
  // 1/(2 pi) = 0.15915494309189533576...
  MpReal ref = MpReal(1, p) / mul_2si(MpReal::pi(p), 1);
  CHECK(abs(u.im() - ref) <= pow10(-38, p));
  CHECK(abs(u.im() - MpReal(0.15915494309189533, p)) <= pow10(-16, p));

  u = compute_u(ten_to(5), p);
  // 100001 / (2 pi) = 15915.6534641326...
  CHECK(abs(u.im() - MpReal(15915.6534641326, p)) <= pow10(-9, p));
  CHECK(u.re().is_zero());
  CHECK(compute_u(ten_to(100), p).re().is_zero());
}

TEST_CASE("saddle residual self-check, n = 1e5") {
  int digits = 100;
  MpComplex a(MpReal(0.5, digits_to_bits(digits)));
  SaddleData sd = saddle_point(ten_to(5), a, digits);
  CHECK(sd.omega.re() > 0);
  MpReal res = saddle_residual(sd).abs();
  CHECK(res < pow10(-90, sd.bits) * MpReal(sd.n + 1, sd.bits));
}

TEST_CASE("saddle matches an independent Newton solve, n = 500") {
  int digits = 60;
  mpfr_prec_t p = digits_to_bits(digits);
  MpComplex a(MpReal(0.5, p));
  SaddleData sd = saddle_point(500, a, digits);
  MpComplex ref = newton_oracle(500, a, digits);
  CHECK((sd.omega - ref).abs() <= pow10(-digits + 2, p) * ref.abs());
}

TEST_CASE("a = 0 (v = 1/2) saddle") {
  int digits = 80;
  SaddleData sd = saddle_point(ten_to(6), MpComplex(digits_to_bits(digits)), digits);
  MpReal res = saddle_residual(sd).abs();
  CHECK(res < pow10(-digits + 4, sd.bits) * MpReal(sd.n + 1, sd.bits));
  CHECK(sd.omega.re() > 0);
}

TEST_CASE("saddle residual over the (n, a) grid") {
  int digits = 100;
  mpfr_prec_t p = digits_to_bits(digits);
  std::vector<mpz_class> ns = {500, 1000, ten_to(5), ten_to(10), ten_to(100)};
  std::vector<MpComplex> as = {
      MpComplex(p), MpComplex(MpReal(0.5, p)), MpComplex(1, p),
      MpComplex(MpReal(1.5, p), MpReal(3, p))};
  for (const auto& n : ns) {
    for (const auto& a : as) {
      SaddleData sd = saddle_point(n, a, digits);
      MpReal res = saddle_residual(sd).abs();
      CHECK(res <= pow10(-digits + 4, p) * MpReal(n + 1, p));
    }
  }
}

TEST_CASE("omega(n, a) - omega(n, 0) = i a") {
  int digits = 60;
  mpfr_prec_t p = digits_to_bits(digits);
  MpComplex a(MpReal(1.5, p), MpReal(3, p));
  SaddleData sda = saddle_point(ten_to(4), a, digits);
  SaddleData sd0 = saddle_point(ten_to(4), MpComplex(p), digits);
  MpComplex diff = sda.omega - sd0.omega;
  CHECK((diff - a.mul_i()).abs() <= pow10(-digits + 6, p) * a.abs());
  // u does not depend on a.
  CHECK(sda.u == sd0.u);
}

TEST_CASE("guard and domain errors") {
  mpfr_prec_t p = digits_to_bits(50);
  CHECK_THROWS_AS(saddle_point(100, MpComplex(MpReal(-0.25, p)), 50),
                  DomainError);
  // n+1 = 101 < 20*50.
  CHECK_THROWS_AS(saddle_point(100, MpComplex(MpReal(50, p)), 50), DomainError);
  CHECK(saddle_guard_ok(19, MpComplex(p)));       // 20 >= 20
  CHECK(!saddle_guard_ok(18, MpComplex(p)));      // 19 < 20
  CHECK(saddle_guard_ok(ten_to(5), MpComplex(MpReal(100, p))));
}

TEST_CASE("g_eval") {
  int digits = 60;
  mpfr_prec_t p = digits_to_bits(digits);
  mpz_class n = 100;

  // a = e makes log(log(a)) = 0 at x = 0 (up to the rounding of e itself).
  MpComplex ae(exp(MpReal(1, p)));
  MpComplex g0 = g_eval(MpComplex(p), n, ae);
  CHECK(g0.abs() <= MpReal(n + 1, p) * mul_2si(MpReal(1, p), -static_cast<long>(p) + 4));

  // Independent evaluation of g(1) for a = 1/2:
  // 101 * log(log(1/2 + i)) - 2 pi.
  MpComplex a(MpReal(0.5, p));
  MpComplex g1 = g_eval(MpComplex(1, p), n, a);
  MpComplex ref = MpReal(101, p) * clog(clog(MpComplex(MpReal(0.5, p), MpReal(1, p)))) -
                  MpComplex(mul_2si(MpReal::pi(p), 1));
  CHECK((g1 - ref).abs() <= pow10(-digits + 4, p) * ref.abs());

  // g(omega) equals the stored anchor.
  SaddleData sd = saddle_point(ten_to(4), a, digits);
  CHECK(g_eval(sd.omega, sd.n, sd.a) == sd.g_omega);

  // Branch errors: a + ix on (-inf, 0] and a + ix = 1.
  CHECK_THROWS_AS(g_eval(MpComplex(MpReal(p), MpReal(1, p)), n, a), BranchError);
  CHECK_THROWS_AS(g_eval(MpComplex(MpReal(p), MpReal(-0.5, p)), n, a), BranchError);
}

TEST_CASE("g_second against a finite difference of g'") {
  int digits = 60;
  mpfr_prec_t p = digits_to_bits(digits);
  struct Case {
    mpz_class n;
    MpComplex a;
  };
  std::vector<Case> cases;
  cases.push_back({ten_to(5), MpComplex(MpReal(0.5, p))});
  cases.push_back({ten_to(3), MpComplex(MpReal(1.5, p), MpReal(3, p))});
  for (const auto& c : cases) {
    SaddleData sd = solve_saddle(c.n, c.a, digits, ContourMode::kUnit);
    MpReal delta = sd.omega.abs() * pow10(-15, p);
    MpComplex dp = g_prime(sd.omega + MpComplex(delta), c.n, sd.a);
    MpComplex dm = g_prime(sd.omega - MpComplex(delta), c.n, sd.a);
    MpComplex fd = (dp - dm) / mul_2si(delta, 1);
    CHECK((sd.gpp - fd).abs() / sd.gpp.abs() < pow10(-20, p));
  }
}

TEST_CASE("descent direction and small theta for n = 1e5, a = 1/2") {
  int digits = 60;
  mpfr_prec_t p = digits_to_bits(digits);
  SaddleData sd = solve_saddle(ten_to(5), MpComplex(MpReal(0.5, p)), digits,
                               ContourMode::kUnit);
  MpComplex w2g = sd.gpp * sd.omega * sd.omega;
  CHECK(w2g.re() < 0);
  // g'' is dominated by its (negative) real part, so omega^2 g'' points
  // near the negative real axis: theta sits near pi and the steepest
  // rotation (pi - theta)/2 is small.
  CHECK(abs(MpReal::pi(p) - sd.theta) < mul_2si(MpReal::pi(p), -2));
}

TEST_CASE("contour_direction") {
  int digits = 50;
  mpfr_prec_t p = digits_to_bits(digits);
  SaddleData sd = solve_saddle(ten_to(5), MpComplex(MpReal(0.5, p)), digits,
                               ContourMode::kUnit);
  CHECK(sd.eps == MpComplex(1, p));

  // theta = 0 -> eps = e^{i pi/2} = i.
  sd.theta = MpReal(p);
  MpComplex eps = contour_direction(sd, ContourMode::kSteepest);
  CHECK(abs(eps.im() - MpReal(1, p)) <= pow10(-digits + 3, p));
  CHECK(abs(eps.re()) <= pow10(-digits + 3, p));

  // Unit modulus by construction, complex a.
  MpComplex a(MpReal(1.5, p), MpReal(3, p));
  SaddleData sd2 = solve_saddle(ten_to(5), a, digits, ContourMode::kSteepest);
  CHECK(abs(sd2.eps.abs() - MpReal(1, p)) <= pow10(-digits + 3, p));
}

TEST_CASE("cutoff scaling: q(4N) = 2 q(N)") {
  int digits = 50;
  mpfr_prec_t p = digits_to_bits(digits);
  SaddleData sd = solve_saddle(ten_to(5), MpComplex(MpReal(0.5, p)), digits,
                               ContourMode::kUnit);
  MpReal q1 = cutoff_q(sd, 100);
  MpReal q4 = cutoff_q(sd, 400);
  CHECK(q4 == mul_2si(q1, 1));
}

TEST_CASE("cutoff magnitude matches the paper's n = 1e100 scale") {
  // With safety factor 1, q for ~1000 digits is about 6.07e-48; ours adds
  // the 1.5 factor on top.
  int digits = 1000;
  SaddleData sd = solve_saddle(ten_to(100), MpComplex(MpReal(0.5, digits_to_bits(120))),
                               120, ContourMode::kUnit);
  MpReal q = cutoff_q(sd, digits);
  double qd = (q / MpReal(1.5, sd.bits)).to_double();
  CHECK(qd > 3e-48);
  CHECK(qd < 9e-48);
}
