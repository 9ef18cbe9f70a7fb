#pragma once

#include "srbm/model.hpp"

namespace srbm {

// Special points of the kernel curve: branch points of the square roots,
// the rotation q = e^{2 i beta}, and the unit-circle points s0, s1, s2 where
// gamma, gamma1, gamma2 vanish along the parametrization.
struct KernelGeometry {
    double x_plus, x_minus, y_plus, y_minus;
    cplx s0, s1, s2;
    cplx q;
};

struct GammaValues {
    cplx g, g1, g2;
};

// Kernel gamma and the boundary polynomials gamma1, gamma2 at (x, y).
GammaValues gamma_eval(const QuadrantModel& q, cplx x, cplx y);

// Same, but additionally evaluates the trigonometric normal forms at the
// normalized variables and checks proportionality to 1e-10 relative.
GammaValues gamma_eval_checked(const Model& m, cplx x, cplx y);

// Roots of gamma solved for x at fixed y (and for y at fixed x).  Principal
// square root on C \ (-inf, 0]; on a cut the two values are the conjugate
// pair and on_cut is set.
struct RootPair {
    cplx minus, plus;
    bool on_cut = false;
};
RootPair kernel_roots_x(const Model& m, cplx y);  // X^-(y), X^+(y)
RootPair kernel_roots_y(const Model& m, cplx x);  // Y^-(x), Y^+(x)

// Rational uniformization of gamma(x, y) = 0.
cplx x_of_s(const Model& m, cplx s);
cplx y_of_s(const Model& m, cplx s);
// Normal-variable form of the same parametrization: x(s) = sx * xn_of_s(s).
cplx xn_of_s(const Model& m, cplx s);
cplx yn_of_s(const Model& m, cplx s);
// Real value of y(s) for |s| = 1 (roots and poles of decoupling functions).
double y_of_unit(const Model& m, cplx s);

KernelGeometry special_points(const Model& m);

enum class Region { Interior_GR, On_R, Outside };

// Locate y relative to the hyperbola R and the domain G_R containing 0:
// solve y(s) = y for s and test whether arg(s) falls in (pi, pi + 2 beta)
// mod 2 pi (interior), on the boundary rays within 1e-12 (on R), or neither.
Region region_of(const Model& m, cplx y);

// The boundary-condition ratio G(y) = (g1/g2)(X^-(y), y) (g2/g1)(X^-(yb), yb)
// for y on R.  Throws PoleOfG when gamma2(X^-(y), y) or gamma1(X^-(yb), yb)
// vanishes within 1e-12.
cplx G_ratio(const Model& m, cplx y);

// E(s) = (s2/s1) (s - s1)(s - 1/s2) / ((s - s2)(s - 1/s1)); equals G(y(s))
// for s < 0.
cplx E_func(const Model& m, cplx s);

// Continuous branch of log E(s) along s in (-inf, 0), normalized so that
// log E(-1) = 0.  Purely imaginary there since |E| = 1 on the contour.
cplx log_E_on_contour(const Model& m, double s);

}  // namespace srbm
