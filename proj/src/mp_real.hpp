#ifndef STIELTJES_MP_REAL_HPP_
#define STIELTJES_MP_REAL_HPP_

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>

namespace stieltjes {

// Rounding is round-to-nearest-even throughout the library.
inline constexpr mpfr_rnd_t kRnd = MPFR_RNDN;
inline constexpr mpfr_prec_t kMinPrec = 64;

// Bits needed to carry `digits` significant decimal digits.
mpfr_prec_t digits_to_bits(long digits);
// Decimal digits representable at `bits` of precision (floor).
long bits_to_digits(mpfr_prec_t bits);

// Arbitrary-precision real number with value semantics. Each value carries
// its own working precision; binary operations produce results at the wider
// of the two operand precisions.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec = kMinPrec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_zero(v_, 1);
  }
  MpReal(long value, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_si(v_, value, kRnd);
  }
  MpReal(int value, mpfr_prec_t prec)
      : MpReal(static_cast<long>(value), prec) {}
  MpReal(double value, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_d(v_, value, kRnd);
  }
  MpReal(const mpz_class& value, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_z(v_, value.get_mpz_t(), kRnd);
  }
  MpReal(const MpReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, kRnd);
  }
  MpReal(MpReal&& o) noexcept {
    v_[0] = o.v_[0];
    o.v_[0]._mpfr_d = nullptr;
  }
  MpReal& operator=(const MpReal& o) {
    if (this != &o) {
      if (v_[0]._mpfr_d == nullptr) mpfr_init2(v_, mpfr_get_prec(o.v_));
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, kRnd);
    }
    return *this;
  }
  MpReal& operator=(MpReal&& o) noexcept {
    if (this != &o) {
      if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
      v_[0] = o.v_[0];
      o.v_[0]._mpfr_d = nullptr;
    }
    return *this;
  }
  ~MpReal() {
    if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
  }

  // Parses a plain decimal string ("-12.375", "1e-40"). Throws ParseError.
  static MpReal from_string(std::string_view s, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  MpReal with_prec(mpfr_prec_t prec) const {
    MpReal r(prec);
    mpfr_set(r.v_, v_, kRnd);
    return r;
  }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Binary exponent e with |x| in [2^(e-1), 2^e); 0 for zero.
  long exponent2() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

  double to_double() const { return mpfr_get_d(v_, kRnd); }
  // Exact value of floor(x) as a big integer.
  mpz_class floor_to_mpz() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
  }
  // Scientific form "d.dddd…e±k" with `digits` significant digits.
  std::string to_sci_string(long digits) const;

  MpReal operator-() const {
    MpReal r(prec());
    mpfr_neg(r.v_, v_, kRnd);
    return r;
  }

  friend MpReal operator+(const MpReal& x, const MpReal& y) {
    MpReal r(join(x, y));
    mpfr_add(r.v_, x.v_, y.v_, kRnd);
    return r;
  }
  friend MpReal operator-(const MpReal& x, const MpReal& y) {
    MpReal r(join(x, y));
    mpfr_sub(r.v_, x.v_, y.v_, kRnd);
    return r;
  }
  friend MpReal operator*(const MpReal& x, const MpReal& y) {
    MpReal r(join(x, y));
    mpfr_mul(r.v_, x.v_, y.v_, kRnd);
    return r;
  }
  friend MpReal operator/(const MpReal& x, const MpReal& y) {
    MpReal r(join(x, y));
    mpfr_div(r.v_, x.v_, y.v_, kRnd);
    return r;
  }
  friend MpReal operator+(const MpReal& x, long y) {
    MpReal r(x.prec());
    mpfr_add_si(r.v_, x.v_, y, kRnd);
    return r;
  }
  friend MpReal operator-(const MpReal& x, long y) {
    MpReal r(x.prec());
    mpfr_sub_si(r.v_, x.v_, y, kRnd);
    return r;
  }
  friend MpReal operator*(const MpReal& x, long y) {
    MpReal r(x.prec());
    mpfr_mul_si(r.v_, x.v_, y, kRnd);
    return r;
  }
  friend MpReal operator/(const MpReal& x, long y) {
    MpReal r(x.prec());
    mpfr_div_si(r.v_, x.v_, y, kRnd);
    return r;
  }
  friend MpReal operator/(long x, const MpReal& y) {
    MpReal r(y.prec());
    mpfr_si_div(r.v_, x, y.v_, kRnd);
    return r;
  }
  friend MpReal operator*(long x, const MpReal& y) { return y * x; }

  MpReal& operator+=(const MpReal& y) {
    mpfr_add(v_, v_, y.v_, kRnd);
    return *this;
  }
  MpReal& operator-=(const MpReal& y) {
    mpfr_sub(v_, v_, y.v_, kRnd);
    return *this;
  }
  MpReal& operator*=(const MpReal& y) {
    mpfr_mul(v_, v_, y.v_, kRnd);
    return *this;
  }
  MpReal& operator/=(const MpReal& y) {
    mpfr_div(v_, v_, y.v_, kRnd);
    return *this;
  }

  friend bool operator==(const MpReal& x, const MpReal& y) {
    return mpfr_equal_p(x.v_, y.v_) != 0;
  }
  friend bool operator!=(const MpReal& x, const MpReal& y) { return !(x == y); }
  friend bool operator<(const MpReal& x, const MpReal& y) {
    return mpfr_less_p(x.v_, y.v_) != 0;
  }
  friend bool operator<=(const MpReal& x, const MpReal& y) {
    return mpfr_lessequal_p(x.v_, y.v_) != 0;
  }
  friend bool operator>(const MpReal& x, const MpReal& y) { return y < x; }
  friend bool operator>=(const MpReal& x, const MpReal& y) { return y <= x; }
  friend bool operator<(const MpReal& x, long y) {
    return mpfr_cmp_si(x.v_, y) < 0;
  }
  friend bool operator<=(const MpReal& x, long y) {
    return mpfr_cmp_si(x.v_, y) <= 0;
  }
  friend bool operator>(const MpReal& x, long y) {
    return mpfr_cmp_si(x.v_, y) > 0;
  }
  friend bool operator>=(const MpReal& x, long y) {
    return mpfr_cmp_si(x.v_, y) >= 0;
  }
  friend bool operator==(const MpReal& x, long y) {
    return mpfr_cmp_si(x.v_, y) == 0;
  }

  // Constants at the requested precision.
  static MpReal pi(mpfr_prec_t prec) {
    MpReal r(prec);
    mpfr_const_pi(r.v_, kRnd);
    return r;
  }
  static MpReal ln10(mpfr_prec_t prec) {
    MpReal r(prec);
    mpfr_set_ui(r.v_, 10, kRnd);
    mpfr_log(r.v_, r.v_, kRnd);
    return r;
  }
  static MpReal ln2(mpfr_prec_t prec) {
    MpReal r(prec);
    mpfr_const_log2(r.v_, kRnd);
    return r;
  }

 private:
  static mpfr_prec_t clamp(mpfr_prec_t p) { return std::max(p, kMinPrec); }
  static mpfr_prec_t join(const MpReal& x, const MpReal& y) {
    return std::max(x.prec(), y.prec());
  }
  friend MpReal unary(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t),
                      const MpReal& x);
  friend MpReal binary(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr,
                                 mpfr_rnd_t),
                       const MpReal& x, const MpReal& y);

  mpfr_t v_;
};

MpReal abs(const MpReal& x);
MpReal sqrt(const MpReal& x);
MpReal exp(const MpReal& x);
MpReal log(const MpReal& x);
MpReal sin(const MpReal& x);
MpReal cos(const MpReal& x);
void sin_cos(const MpReal& x, MpReal& s, MpReal& c);
MpReal tanh(const MpReal& x);
MpReal cosh(const MpReal& x);
MpReal atan2(const MpReal& y, const MpReal& x);
MpReal hypot(const MpReal& x, const MpReal& y);
MpReal floor(const MpReal& x);
MpReal pow_ui(const MpReal& x, unsigned long k);
// Exact x * 2^k.
MpReal mul_2si(const MpReal& x, long k);
MpReal min(const MpReal& x, const MpReal& y);
MpReal max(const MpReal& x, const MpReal& y);

}  // namespace stieltjes

#endif  // STIELTJES_MP_REAL_HPP_
