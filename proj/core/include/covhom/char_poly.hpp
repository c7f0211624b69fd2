#ifndef COVHOM_CHAR_POLY_HPP
#define COVHOM_CHAR_POLY_HPP

#include "covhom/int_matrix.hpp"
#include "covhom/int_polynomial.hpp"

namespace covhom {

/// Exact monic characteristic polynomial det(tI - M). Computed modulo a
/// certified stock of 62-bit primes (Hessenberg form per prime) and lifted
/// by CRT; the prime count comes from a Hadamard-style coefficient bound,
/// so the result is exact, not heuristic.
IntPolynomial char_poly(const IntMatrix& m);

}  // namespace covhom

#endif
