#pragma once

#include "srbm/laplace_form.hpp"

namespace srbm {

// Explicit stationary densities, in the parameter regimes where the closed
// form of phi1 inverts in elementary terms.
struct DensityForm {
    enum class Kind { SumOfExponentials, GammaHalf, WedgePolar, Erf };
    Kind kind = Kind::SumOfExponentials;
    double mass = 1.0;  // integral of the density

    // SumOfExponentials: sum of coef * z^power * exp(-rate z) terms (the
    // density of nu1 when alpha is a non-positive integer; multiple kernel
    // roots give the polynomial factors).
    struct ExpTerm {
        double coef;
        int power;
        double rate;
    };
    std::vector<ExpTerm> terms;

    // GammaHalf: mass * sqrt(rate/pi) * exp(-rate z) / sqrt(z).
    double rate = 0;

    // Erf: coef * erf(sqrt(b z)) * exp(-a z).
    double erf_a = 0, erf_b = 0, erf_coef = 0;

    // WedgePolar: the two-dimensional stationary density in quadrant
    // coordinates for alpha1 = alpha2 = 0; kappa, theta and the coordinate
    // scalings are stored at construction.
    double wp_kappa = 0, wp_beta = 0, wp_theta = 0, wp_sx = 0, wp_sy = 0;

    double eval1d(double z) const;
    double eval2d(double z1, double z2) const;  // WedgePolar only
    bool is_two_dimensional() const { return kind == Kind::WedgePolar; }
};

// Density of the boundary measure nu1, from the closed form of phi1.
// Covered cases: alpha in -N0 (partial fractions of kappa/P), alpha1 =
// alpha2 = 0 (Gamma(1/2) law), and the erf cases (alpha1, alpha2) = (-2, 0)
// or (-1, -1).  Throws NotCovered otherwise.
DensityForm density(const LaplaceForm& f);

// The full two-dimensional stationary density (alpha1 = alpha2 = 0 only).
DensityForm density_joint(const Model& m, const ConditionData& c);

}  // namespace srbm
