#include "srbm/invariant.hpp"

#include <cmath>

namespace srbm {

namespace {
// Higher derivatives from repeated differentiation of the ODE:
// (1 - x^2) T''' = 3 x T'' + (1 - a^2) T',
// (1 - x^2) T'''' = 5 x T''' + (4 - a^2) T''.
cplx cheb_T_third(double a, cplx x) {
    return (3.0 * x * cheb_T_second(a, x) + (1.0 - a * a) * cheb_T_prime(a, x)) / (1.0 - x * x);
}
cplx cheb_T_fourth(double a, cplx x) {
    return (5.0 * x * cheb_T_third(a, x) + (4.0 - a * a) * cheb_T_second(a, x)) / (1.0 - x * x);
}
}  // namespace

cplx Invariant::third(cplx y) const {
    check_domain(y);
    const double c = -2.0 / (yp_ - ym_);
    return cheb_T_third(a_, arg_map(y)) * c * c * c;
}

cplx Invariant::fourth(cplx y) const {
    check_domain(y);
    const double c = -2.0 / (yp_ - ym_);
    return cheb_T_fourth(a_, arg_map(y)) * c * c * c * c;
}

cplx Invariant::of_s(cplx s) const {
    // (-s)^a with arg(-s) taken in (beta - pi, beta + pi].
    cplx ms = -s;
    double th = std::arg(ms);
    if (th <= beta_ - kPi) th += 2.0 * kPi;
    if (th > beta_ + kPi) th -= 2.0 * kPi;
    cplx la = a_ * cplx(std::log(std::abs(ms)), th);
    return -0.5 * (std::exp(la) + std::exp(-la));
}

cplx Invariant::inverse(cplx z) const {
    if (std::fabs(z.imag()) < 1e-12 && z.real() < -1.0 - 1e-12)
        throw OnCut("w^{-1}: argument on the cut (-inf, -1]");

    // Solve zeta + 1/zeta = -2z, then undo (-s)^a.  Both roots lead to the
    // same point y (the two preimages s and q/s of y in the wedge).
    cplx rt = std::sqrt(z * z - 1.0);
    cplx zeta = -z + rt;
    if (std::abs(zeta) < 1.0) zeta = -z - rt;
    double u = std::arg(zeta);
    if (u < 0) u += 2.0 * kPi;  // lattice of arguments of (-s)^a is [0, 2 pi)
    cplx ms = std::polar(std::pow(std::abs(zeta), 1.0 / a_), u / a_);
    cplx s = -ms;

    const cplx eib = std::polar(1.0, beta_);
    cplx y = 0.5 * (yp_ + ym_) + 0.25 * (yp_ - ym_) * (s / eib + eib / s);

    // Newton polish; the closed form is already accurate to rounding.
    for (int it = 0; it < 5; ++it) {
        cplx r = eval(y) - z;
        if (std::abs(r) <= 1e-12 * (1.0 + std::abs(z))) return y;
        cplx d = prime(y);
        if (std::abs(d) < 1e-300) break;
        y -= r / d;
    }
    if (std::abs(eval(y) - z) > 1e-10 * (1.0 + std::abs(z)))
        throw NoConvergence("w^{-1}: Newton polish did not converge");
    return y;
}

}  // namespace srbm
