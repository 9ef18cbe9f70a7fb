#pragma once

#include <cstdint>
#include <vector>

#include "srbm/density.hpp"
#include "srbm/invariant.hpp"
#include "srbm/laplace_form.hpp"

namespace srbm {

// Ground-truth evaluation of phi1 by the contour-integral representation
//   phi1(y) = c ((w(0) - w(p)) / (w(y) - w(p)))^k
//             exp( (1/2 pi i) Int_{R^-} log G(t) [ w'(t)/(w(t) - w(y))
//                                                - w'(t)/(w(t) - w(0)) ] dt ),
// valid for every admissible model, no angle condition required.  The
// contour is traversed in the uniformizing variable, where both w and
// log G = log E have elementary expressions; the branch of the logarithm is
// continuous along the contour with log G = 0 at the real point of R.
class ContourOracle {
public:
    explicit ContourOracle(const Model& m, double panel_width = 0.25);

    // phi1(y) for y in G_R (off the pole).  Throws AtPole near the pole or
    // when the parameters sit within 1e-6 of the boundary 2b - 2e - t = 0,
    // QuadratureFailure when the truncated contour cannot certify the
    // requested accuracy.
    cplx phi1(cplx y) const;

    // A copy with half the panel width, for convergence checks.
    ContourOracle refined() const;

    int pole_indicator() const { return k_; }

private:
    Model m_;
    Invariant inv_;
    int k_ = 0;
    double p_ = 0;   // pole location y(s1) when k_ = 1
    double wp_ = 0;  // w(p)
    double w0_ = 0;  // w(0)
    double panel_width_;

    struct Node {
        double omega;   // w(y(s)) on the contour (real, <= -1)
        double dom;     // d/ds w(y(s)) * ds-weight
        double logE_im; // imaginary part of log E(s)
    };
    std::vector<Node> nodes_;
    double omega_tail_ = 0;  // |w| at the far end of the truncated contour
    double vmax_ = 0;        // truncation point of the contour parameter

    // Boundary value for y on R itself: principal value plus the half-jump
    // of the Plemelj formula, with the side chosen by sign(Im y).
    cplx phi1_on_curve(cplx y, double wy) const;
};

// One-shot certified evaluation: runs the contour quadrature at two panel
// resolutions and throws QuadratureFailure unless they agree to 1e-7
// relative.
cplx phi1_integral(const Model& m, cplx y);

// Laplace transform of a DensityForm by numerical quadrature.  For the
// one-dimensional kinds this is Int e^{y z} p(z) dz (x is ignored); for the
// two-dimensional WedgePolar kind the full double integral.  Relative
// tolerance 1e-5, checked by refinement.
cplx numeric_laplace2d(const Model& m, const DensityForm& d, cplx x, cplx y);

// Numerical integral of the density (total mass).
double numeric_mass(const Model& m, const DensityForm& d);

// First moments of the two-dimensional WedgePolar density, by quadrature:
// returns (E[Z1], E[Z2]) in quadrant coordinates.
std::pair<double, double> wedge_polar_means(const Model& m, const DensityForm& d);

// Taylor coefficients of phi1 at 0 up to order n, by Cauchy integrals on a
// circle of radius min(y+, |p|)/4 (shrunk further below any explicit pole
// of the closed form).  Throws RadiusTooSmall if no valid circle exists.
std::vector<double> series_coeffs(const LaplaceForm& f, int n);

// Upper tail of the chi-square distribution with k degrees of freedom
// (regularized incomplete gamma Q(k/2, x/2)); used by the simulator checks.
double chi2_pvalue(double stat, int dof);

}  // namespace srbm
