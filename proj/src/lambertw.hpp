#ifndef STIELTJES_LAMBERTW_HPP_
#define STIELTJES_LAMBERTW_HPP_

#include "mp_complex.hpp"

namespace stieltjes {

struct LambertResult {
  MpComplex w;       // W0(z)
  MpReal residual;   // |w e^w - z| / |z|
  int iterations = 0;
};

// Principal-branch Lambert W for complex argument, by Halley iteration with
// a precision ramp (early steps at low precision, tripling as the iterate
// converges). Throws ConvergenceError if the tolerance is not met within
// the iteration budget.
LambertResult lambert_w0(const MpComplex& z, int digits);

}  // namespace stieltjes

#endif  // STIELTJES_LAMBERTW_HPP_
