#ifndef STIELTJES_BIGSCI_HPP_
#define STIELTJES_BIGSCI_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "mp_complex.hpp"

namespace stieltjes {

// Decimal scientific value whose exponent is an arbitrary-size integer
// (results like 10^(2.3*10^98) overflow every native float exponent).
// Textual form: optional "-", mantissa "d.dd…d", literal "e", optional "-",
// exponent digits.
struct BigSci {
  int sign = 0;              // -1, 0, +1
  std::string mantissa;      // "d.dd…d" with `digits` significant digits; "0" for zero
  mpz_class exponent = 0;
  int digits = 1;

  bool is_zero() const { return sign == 0; }
  std::string str() const;
  static BigSci zero(int digits);
  // Parses the textual form back; throws ParseError.
  static BigSci parse(std::string_view s);

  friend bool operator==(const BigSci& a, const BigSci& b) {
    return a.sign == b.sign && a.mantissa == b.mantissa &&
           a.exponent == b.exponent;
  }
};

struct BigSciComplex {
  BigSci re, im;

  bool is_real() const { return im.is_zero(); }
  // "(<re> + <im>i)" with "+ -" collapsed to "- "; bare re part when the
  // imaginary part is exactly zero.
  std::string str() const;

  friend bool operator==(const BigSciComplex& a, const BigSciComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// Renders a value carried in log space (re = natural log of magnitude,
// im = phase) as mantissa/exponent decimal parts, round-to-nearest at
// `digits` significant digits. Throws PrecisionError when the carried
// precision cannot pin down the last requested digit.
BigSciComplex format_bigsci(const MpComplex& logvalue, int digits);

// Real-valued variant: log magnitude plus an explicit sign.
BigSci format_bigsci_real(const MpReal& log_magnitude, bool negative,
                          int digits);

}  // namespace stieltjes

#endif  // STIELTJES_BIGSCI_HPP_
