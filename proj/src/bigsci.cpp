#include "bigsci.hpp"

#include <cctype>

#include "errors.hpp"

namespace stieltjes {

namespace {

std::string digits_to_mantissa(const std::string& ds) {
  if (ds.size() <= 1) return ds;
  return ds.substr(0, 1) + "." + ds.substr(1);
}

// Splits a natural-log magnitude into (mantissa digits, decimal exponent).
BigSci from_log_magnitude(const MpReal& lmag, bool negative, int digits) {
  if (digits < 1) throw DomainError("format_bigsci: digits must be >= 1");
  if (lmag.is_inf() && lmag.sign() < 0) return BigSci::zero(digits);
  if (lmag.is_nan() || lmag.is_inf())
    throw DomainError("format_bigsci: log magnitude is not finite");

  // Capacity check: lmag is trusted to ~1 ulp, which smears the mantissa by
  // about |lmag| * 2^(1-prec) / ln 10 in log10 units.
  mpfr_prec_t p = lmag.prec();
  long mag_bits = std::max(lmag.exponent2(), static_cast<long>(0));
  long resolvable = bits_to_digits(p - mag_bits - 2);
  if (resolvable < digits + 1)
    throw PrecisionError(
        "format_bigsci: carried precision resolves only ~" +
        std::to_string(resolvable) + " digits, " + std::to_string(digits) +
        " requested");

  mpfr_prec_t wp = p + 32;
  MpReal t = lmag.with_prec(wp) / MpReal::ln10(wp);
  mpz_class e = t.floor_to_mpz();
  MpReal frac = t - MpReal(e, wp);
  MpReal m(wp);
  mpfr_exp_t ret = 0;
  mpfr_exp10(m.raw(), frac.raw(), kRnd);
  char* raw = mpfr_get_str(nullptr, &ret, 10, static_cast<std::size_t>(digits),
                           m.raw(), kRnd);
  std::string ds(raw);
  mpfr_free_str(raw);
  // m lies in [1, 10): ret is normally 1; rounding up to 10.0 yields ret = 2.
  e += static_cast<long>(ret) - 1;

  BigSci out;
  out.sign = negative ? -1 : +1;
  out.mantissa = digits_to_mantissa(ds);
  out.exponent = e;
  out.digits = digits;
  return out;
}

}  // namespace

BigSci BigSci::zero(int digits) {
  BigSci z;
  z.sign = 0;
  z.mantissa = "0";
  z.exponent = 0;
  z.digits = digits;
  return z;
}

std::string BigSci::str() const {
  if (is_zero()) return "0e0";
  std::string s = sign < 0 ? "-" : "";
  return s + mantissa + "e" + exponent.get_str();
}

BigSci BigSci::parse(std::string_view s) {
  BigSci out;
  std::size_t pos = 0;
  auto fail = [&](const char* msg) -> ParseError {
    return ParseError(std::string("BigSci: ") + msg, pos);
  };
  if (pos < s.size() && s[pos] == '-') {
    out.sign = -1;
    ++pos;
  } else {
    out.sign = +1;
  }
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw fail("expected mantissa digit");
  std::string mant;
  int ndig = 0;
  while (pos < s.size() &&
         (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
    if (s[pos] == '.') {
      if (mant.find('.') != std::string::npos) throw fail("second '.'");
    } else {
      ++ndig;
    }
    mant += s[pos++];
  }
  if (pos >= s.size() || s[pos] != 'e') throw fail("expected 'e'");
  ++pos;
  std::string es;
  if (pos < s.size() && s[pos] == '-') es += s[pos++];
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw fail("expected exponent digit");
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    es += s[pos++];
  if (pos != s.size()) throw fail("trailing characters");

  out.mantissa = mant;
  out.digits = ndig;
  out.exponent = mpz_class(es);
  if (mant == "0") {
    out.sign = 0;
    out.exponent = 0;
  }
  return out;
}

std::string BigSciComplex::str() const {
  if (im.is_zero()) return re.str();
  std::string sep = im.sign < 0 ? " - " : " + ";
  BigSci imabs = im;
  imabs.sign = im.sign < 0 ? +1 : im.sign;
  return "(" + re.str() + sep + imabs.str() + "i)";
}

BigSciComplex format_bigsci(const MpComplex& logvalue, int digits) {
  const MpReal& lmag = logvalue.re();
  const MpReal& phase = logvalue.im();
  BigSciComplex out;
  if (lmag.is_inf() && lmag.sign() < 0) {
    out.re = BigSci::zero(digits);
    out.im = BigSci::zero(digits);
    return out;
  }
  if (phase.is_zero()) {
    out.re = from_log_magnitude(lmag, false, digits);
    out.im = BigSci::zero(digits);
    return out;
  }
  MpReal s(phase.prec()), c(phase.prec());
  sin_cos(phase, s, c);
  out.re = c.is_zero() ? BigSci::zero(digits)
                       : from_log_magnitude(lmag + log(abs(c)), c.sign() < 0,
                                            digits);
  out.im = s.is_zero() ? BigSci::zero(digits)
                       : from_log_magnitude(lmag + log(abs(s)), s.sign() < 0,
                                            digits);
  return out;
}

BigSci format_bigsci_real(const MpReal& log_magnitude, bool negative,
                          int digits) {
  if (log_magnitude.is_inf() && log_magnitude.sign() < 0)
    return BigSci::zero(digits);
  return from_log_magnitude(log_magnitude, negative, digits);
}

}  // namespace stieltjes
