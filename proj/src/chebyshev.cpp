#include "srbm/chebyshev.hpp"

#include <cmath>

namespace srbm {

namespace {

constexpr double kCutTol = 1e-12;
constexpr int kMaxTerms = 400;

void check_cut(cplx x) {
    if (std::fabs(x.imag()) < kCutTol && x.real() < -1.0 + kCutTol)
        throw OnCut("T_a: argument on the cut (-inf, -1]");
}

// 2F1(alpha, beta; gamma; u) by plain series; callers keep |u| < ~0.5.
cplx hyp2f1_series(double alpha, double beta, double gamma, cplx u) {
    cplx term = 1.0, sum = 1.0;
    for (int n = 0; n < kMaxTerms; ++n) {
        term *= (alpha + n) * (beta + n) / ((gamma + n) * (n + 1.0)) * u;
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

// zeta = x + sqrt(x^2 - 1), principal branches; |zeta| >= 1 away from the cut.
cplx zeta_of(cplx x) { return x + std::sqrt(x * x - 1.0); }

cplx pow_c(cplx z, double a) { return std::exp(a * std::log(z)); }

// The series in (1 - x)/2 is only used close to the branch point, where it
// converges in a few dozen terms; elsewhere the trig form (left of 1) or the
// radical form (right of 1) is stable.
bool near_one(cplx x) { return std::abs(1.0 - x) < 0.25; }
bool right_of_one(cplx x) { return x.real() >= 1.0; }

}  // namespace

cplx cheb_T_series(double a, cplx x) { return hyp2f1_series(-a, a, 0.5, 0.5 * (1.0 - x)); }

cplx cheb_T(double a, cplx x) {
    check_cut(x);
    if (near_one(x)) return cheb_T_series(a, x);
    if (right_of_one(x)) {
        cplx z = zeta_of(x);
        return 0.5 * (pow_c(z, a) + pow_c(z, -a));
    }
    return std::cos(a * std::acos(x));
}

cplx cheb_T_prime(double a, cplx x) {
    check_cut(x);
    if (near_one(x)) return a * a * hyp2f1_series(1.0 - a, 1.0 + a, 1.5, 0.5 * (1.0 - x));
    if (right_of_one(x)) {
        cplx z = zeta_of(x);
        return 0.5 * a * (pow_c(z, a) - pow_c(z, -a)) / std::sqrt(x * x - 1.0);
    }
    cplx w = std::acos(x);
    return a * std::sin(a * w) / std::sin(w);
}

cplx cheb_T_second(double a, cplx x) {
    check_cut(x);
    if (std::abs(1.0 - x) < 0.5)
        return -a * a * (1.0 - a * a) / 3.0 * hyp2f1_series(2.0 - a, 2.0 + a, 2.5, 0.5 * (1.0 - x));
    return (x * cheb_T_prime(a, x) - a * a * cheb_T(a, x)) / (1.0 - x * x);
}

cplx sqrt_one_plus_T(double a, cplx x) {
    check_cut(x);
    return std::sqrt(2.0) * cheb_T(0.5 * a, x);
}

cplx sqrt_one_minus_T_over(double a, cplx x) {
    check_cut(x);
    if (near_one(x)) return hyp2f1_series(0.5 * (1.0 - a), 0.5 * (1.0 + a), 1.5, 0.5 * (1.0 - x));
    if (right_of_one(x)) {
        cplx z = zeta_of(x);
        return (pow_c(z, 0.5 * a) - pow_c(z, -0.5 * a)) / (a * std::sqrt(2.0 * (x - 1.0)));
    }
    return std::sqrt(2.0) * std::sin(0.5 * a * std::acos(x)) / (a * std::sqrt(1.0 - x));
}

}  // namespace srbm
