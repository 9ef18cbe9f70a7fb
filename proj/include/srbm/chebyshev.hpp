#pragma once

#include <complex>

#include "srbm/errors.hpp"

namespace srbm {

using cplx = std::complex<double>;

// Generalized Chebyshev function T_a(x) = 2F1(-a, a; 1/2; (1-x)/2), the
// analytic continuation of cos(a arccos x) to C \ (-inf, -1].  For integer a
// this is the classical Chebyshev polynomial of the first kind.
//
// Branch conventions: principal square root (cut on the negative reals) and
// u^a = exp(a Log u) with the principal logarithm.
//
// Throws OnCut for x within 1e-12 of (-inf, -1].
cplx cheb_T(double a, cplx x);

// Derivative T_a'(x).
cplx cheb_T_prime(double a, cplx x);

// Second derivative, from the hypergeometric differential equation
// (1 - x^2) T'' - x T' + a^2 T = 0 away from x = +-1, and from the series
// near x = 1.
cplx cheb_T_second(double a, cplx x);

// sqrt(1 + T_a(x)) = sqrt(2) T_{a/2}(x); single-valued where T_a is.
cplx sqrt_one_plus_T(double a, cplx x);

// (1/a) sqrt((1 - T_a(x)) / (1 - x))
//   = 2F1((1-a)/2, (1+a)/2; 3/2; (1-x)/2),
// analytic on the same domain as T_a (the apparent singularity at x = 1 is
// removable; the value there is 1).
cplx sqrt_one_minus_T_over(double a, cplx x);

// Series evaluation of T_a near x = 1 (|1 - x| < 2, used for |1 - x| < ~1).
// Exposed for cross-checking the closed forms.
cplx cheb_T_series(double a, cplx x);

}  // namespace srbm
