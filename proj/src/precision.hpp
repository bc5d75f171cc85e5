#ifndef STIELTJES_PRECISION_HPP_
#define STIELTJES_PRECISION_HPP_

#include <gmpxx.h>

#include "mp_real.hpp"

namespace stieltjes {

// Decimal digit count of |v| (1 for zero).
long ndigits10(const mpz_class& v);

// Base guard digits: STIELTJES_PREC_GUARD when set, else 10.
long guard_base();

// Working precision for one gamma_n computation. The (n+1)*log(log(.))
// factor amplifies relative error by roughly n's digit count, hence the
// ndigits10(n+1) term on top of the flat guard.
struct PrecPolicy {
  int user_digits = 0;   // digits requested by the caller
  int quad_digits = 0;   // internal quadrature target N' = digits + 5
  long guard = 0;        // guard_base() + ndigits10(n+1)
  mpfr_prec_t bits = kMinPrec;

  static PrecPolicy make(int digits, const mpz_class& n);
};

}  // namespace stieltjes

#endif  // STIELTJES_PRECISION_HPP_
