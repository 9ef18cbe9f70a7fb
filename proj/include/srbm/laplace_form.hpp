#pragma once

#include <optional>
#include <vector>

#include "srbm/classify.hpp"
#include "srbm/invariant.hpp"
#include "srbm/kernel.hpp"
#include "srbm/model.hpp"

namespace srbm {

// Number of j in [a, b] with sigma q^{+-j} = -1, within 1e-9 in angle.
// (The form builder redoes this bookkeeping in exact rational arithmetic
// when the angles were declared exact; this free function serves arbitrary
// floating-point sigma.)
int mult_minus_one(const Model& m, cplx sigma, long long a, long long b, int sign);

// Number of roots (r >= 0) or poles (r < 0) of F_{r, sigma} lying in the open
// domain G_R, by the floor-function counting formula.
int count_in_GR(const Model& m, cplx sigma, long long r);

// ((gamma1/gamma2)^m)(x, y) = F(y) / L(x) on the kernel curve.  Roots and
// poles of F are real, of the form y(sigma q^j).
struct DecouplingPair {
    int m = 1;
    std::vector<double> roots;  // zeros of F, with multiplicity
    std::vector<double> poles;  // poles of F, with multiplicity

    cplx F(cplx y) const;
    // L via the kernel roots: L(x) = F(Y^-(x)) / ((g1/g2)^m)(x, Y^-(x)).
    cplx L(const Model& mod, cplx x) const;
};

DecouplingPair decoupling(const Model& m, const ConditionData& c);

// Explicit form of phi1.  Generic value
//   phi1(y) = kappa * prod(y - q_i) / prod(y - p_i)
//                   * prod(w(y) - s_i) / prod(w(y) - r_i) * [m = 2 factors],
// stored as root lists plus an evaluation plan that groups each w-root with
// the y-root it cancels (w is injective on G_R, so such a pair is a smooth
// nonvanishing factor; evaluating them jointly avoids 0/0 loss near the
// common point, and is required at y = 0 in the orthogonal-reflection case).
struct LaplaceForm {
    Model model;
    int m = 1;
    double kappa = 1.0;
    std::optional<double> pole;  // the simple pole p = y(s1), when present

    std::vector<double> poly_p, poly_q;  // y-roots: denominator / numerator
    std::vector<double> poly_s, poly_r;  // w-roots: numerator / denominator
    int a_minus = 0, a_plus = 0, b = 0;  // exponents of the square-root factors

    std::optional<SimpleCondition> sc;
    std::optional<DoubleCondition> dc;

    // Evaluation plan.  The cK members are Taylor data of w at the factor's
    // base point, used within a small disk where direct evaluation of the
    // ratio would cancel.
    struct PairFactor {
        double y0, z0;
        int expo;
        double c1 = 0, c2 = 0, c3 = 0;
    };  // ((w - z0)/(y - y0))^expo
    struct CurvePointFactor {
        double y0;
        int expo, ypow;
        double c2 = 0, c3 = 0, c4 = 0;
    };  // ((w + 1)/(y - y0)^ypow)^expo, ypow in {1, 2}
    struct LooseY {
        double y0;
        int expo;
    };
    struct LooseZ {
        double z0;
        int expo;
    };
    std::vector<PairFactor> pair_factors;
    std::vector<CurvePointFactor> curve_factors;
    std::vector<LooseY> loose_y;
    std::vector<LooseZ> loose_z;
};

LaplaceForm build_phi1(const Model& m, const ConditionData& c);
LaplaceForm build_phi1_simple(const Model& m, const SimpleCondition& sc);
LaplaceForm build_phi1_double(const Model& m, const DoubleCondition& dc);

cplx eval_phi1(const LaplaceForm& f, cplx y);

// phi1 and phi2 together (phi2 is phi1 of the index-swapped model).
struct PhiPair {
    LaplaceForm phi1;
    LaplaceForm phi2;
};
PhiPair build_phi_pair(const Model& m, const ConditionData& c);

cplx eval_phi2(const PhiPair& pp, cplx x);
// Bivariate transform from the functional equation
//   phi(x, y) = -(gamma1 phi1(y) + gamma2 phi2(x)) / gamma(x, y).
cplx eval_phi(const PhiPair& pp, const Model& m, cplx x, cplx y);

// Closed algebraic form of phi(x, y) in the case alpha1 = alpha2 = 0.
cplx phi_alg_half_case(const Model& m, cplx x, cplx y);

// Moment recurrence for the case delta + eps + beta = 2 pi, 2 eps + theta = 2 pi.
// Mtilde_n are the scaled moments; M_n = (2/(y+ - y-))^n Mtilde_n.
struct MomentRecurrence {
    double a, c1, c2;     // pi/beta, cos beta, cos(beta - theta)
    double kappa_prime;   // constant of the compact phi1 form
    double scale;         // 2 / (y+ - y-)
    double M0t, M1t;

    // Mtilde_0 .. Mtilde_n by forward recursion.  The recursion carries a
    // parasitic mode growing an order of magnitude per step faster than the
    // true solution, so forward values are only trustworthy for small n;
    // past that, verify with max_residual instead.
    std::vector<double> tilde(int n) const;
    // Moments M_0 .. M_n of nu1.
    std::vector<double> moments(int n) const;

    // Largest relative residual of the recurrence over a given sequence of
    // Mtilde values (normalized by the magnitude of the participating
    // terms).  Zero residual means the sequence satisfies the recurrence.
    double max_residual(const std::vector<double>& tilde_values) const;
};
MomentRecurrence moment_recurrence(const Model& m);

}  // namespace srbm
