#pragma once

#include "srbm/chebyshev.hpp"
#include "srbm/model.hpp"

namespace srbm {

// The canonical invariant w(y) = T_{pi/beta}(-(2y - (y+ + y-)) / (y+ - y-)),
// analytic on C \ [y+, inf), real on the curve R, bijective from G_R onto
// C \ (-inf, -1].  Everything downstream that "glues" the two sides of the
// boundary condition is a rational function of w.
class Invariant {
public:
    explicit Invariant(const Model& m)
        : a_(kPi / m.w.beta), beta_(m.w.beta), yp_(m.y_plus), ym_(m.y_minus) {}

    double exponent() const { return a_; }  // pi / beta

    // Argument map u(y); u'(y) is the constant -2 / (y+ - y-).
    cplx arg_map(cplx y) const { return -(2.0 * y - (yp_ + ym_)) / (yp_ - ym_); }

    cplx eval(cplx y) const {
        check_domain(y);
        return cheb_T(a_, arg_map(y));
    }
    cplx prime(cplx y) const {
        check_domain(y);
        const double c = -2.0 / (yp_ - ym_);
        return cheb_T_prime(a_, arg_map(y)) * c;
    }
    cplx second(cplx y) const {
        check_domain(y);
        const double c = -2.0 / (yp_ - ym_);
        return cheb_T_second(a_, arg_map(y)) * c * c;
    }
    cplx third(cplx y) const;
    cplx fourth(cplx y) const;

    // w(y(s)) = -((-s)^a + (-s)^{-a}) / 2 with the logarithm cut along
    // e^{i beta} R_-; real on |s| = 1 and on s < 0.
    cplx of_s(cplx s) const;
    double on_negative_s(double s) const {
        const double t = std::pow(-s, a_);
        return -0.5 * (t + 1.0 / t);
    }
    // d/ds of w(y(s)) on s < 0.
    double of_s_prime_negative(double s) const {
        const double t = std::pow(-s, a_);
        return -0.5 * (a_ / s) * (t - 1.0 / t);
    }

    // Unique preimage of z in the closure of G_R, by inverting the
    // uniformized power form.  Throws OnCut for z within 1e-12 of
    // (-inf, -1), NoConvergence if the Newton polish cannot reach
    // |w(y) - z| <= 1e-10 (1 + |z|).
    cplx inverse(cplx z) const;

private:
    void check_domain(cplx y) const {
        if (std::fabs(y.imag()) < 1e-12 && y.real() > yp_ - 1e-12)
            throw OnCut("w(y): argument on the cut [y+, inf)");
    }
    double a_, beta_, yp_, ym_;
};

}  // namespace srbm
