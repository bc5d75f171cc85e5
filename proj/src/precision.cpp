#include "precision.hpp"

#include <cstdlib>
#include <string>

#include "errors.hpp"

namespace stieltjes {

long ndigits10(const mpz_class& v) {
  if (v == 0) return 1;
  return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 10));
}

long guard_base() {
  const char* env = std::getenv("STIELTJES_PREC_GUARD");
  if (env == nullptr || *env == '\0') return 10;
  char* end = nullptr;
  long g = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || g < 0)
    throw DomainError("STIELTJES_PREC_GUARD must be a nonnegative integer");
  return g;
}

PrecPolicy PrecPolicy::make(int digits, const mpz_class& n) {
  if (digits < 1) throw DomainError("digits must be >= 1");
  PrecPolicy p;
  p.user_digits = digits;
  p.quad_digits = digits + 5;
  p.guard = guard_base() + ndigits10(n + 1);
  p.bits = digits_to_bits(p.quad_digits + p.guard);
  return p;
}

}  // namespace stieltjes
