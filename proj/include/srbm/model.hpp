#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "srbm/errors.hpp"
#include "srbm/rational.hpp"

namespace srbm {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Margin used for all strict-inequality admissibility tests.  Inputs within
// the margin are rejected as Degenerate: the pole/root bookkeeping downstream
// changes discontinuously at equality.
inline constexpr double kStrictMargin = 1e-10;

// Reflected Brownian motion in the first quadrant: covariance Sigma,
// drift mu, reflection matrix R = (R^1, R^2) given by columns.
struct QuadrantModel {
    double sigma11 = 1, sigma12 = 0, sigma22 = 1;
    double mu1 = -1, mu2 = -1;
    double r11 = 1, r12 = 0, r21 = 0, r22 = 1;

    double det_sigma() const { return sigma11 * sigma22 - sigma12 * sigma12; }
    double det_r() const { return r11 * r22 - r12 * r21; }

    // Reflection of the quadrant in the first diagonal (swap of indices 1<->2).
    QuadrantModel swapped() const {
        return {sigma22, sigma12, sigma11, mu2, mu1, r22, r21, r12, r11};
    }
};

// Same process after the linear change of coordinates: identity covariance in
// a wedge of opening beta, drift direction theta, reflection angles delta and
// eps.  Delta is the drift-scale invariant mu1^2 s22 - 2 mu1 mu2 s12 + mu2^2 s11.
struct WedgeModel {
    double beta = kPi / 2;
    double theta = kPi / 4;
    double delta = kPi / 2;
    double eps = kPi / 2;
    double Delta = 1;
};

// The 2x2 map T (and its inverse) sending the quadrant model to the
// identity-covariance wedge model.
struct LinearMap {
    double t11, t12, t21, t22;
    double i11, i12, i21, i22;
};

struct ConditionCheck {
    std::string name;
    bool pass = false;
    double margin = 0;  // signed distance to the boundary of the condition
};

// Result of evaluating the admissibility conditions in both coordinate
// systems, together with their pairwise equivalences.
struct ConditionReport {
    bool semimartingale_wedge = false;   // alpha < 1
    bool drift_wedge = false;            // 0 < theta < beta
    bool stationary_wedge = false;       // beta - eps < theta < delta
    bool combined_wedge = false;

    bool semimartingale_quadrant = false;  // det R > 0 or (r12 > 0 and r21 > 0)
    bool drift_quadrant = false;           // mu1 < 0 and mu2 < 0
    bool stationary_quadrant = false;      // det R > 0, r22 mu1 < r12 mu2, r11 mu2 < r21 mu1

    bool equivalences_ok = false;  // the three equivalences hold
    bool valid = false;
    bool degenerate = false;       // some strict inequality within kStrictMargin
    std::string violated;          // name of the first failed condition
    std::string degenerate_name;   // name of the first near-equality condition

    std::vector<ConditionCheck> checks;
};

// Exact angles as rational multiples of pi, when declared by the caller.
struct ExactAngles {
    Rational beta, theta, delta, eps;  // each is angle / pi
};

// Immutable bundle of the two parameterizations plus the handful of derived
// scalars every other module needs.  Construct through the factories; all
// members are plain values and safe to read concurrently.
struct Model {
    QuadrantModel q;
    WedgeModel w;
    double x_plus = 0, x_minus = 0, y_plus = 0, y_minus = 0;  // branch points
    double mass1 = 0, mass2 = 0;                              // phi1(0), phi2(0)
    std::optional<ExactAngles> exact;

    // Positive scale factors between raw and normal variables:
    //   x = sx * xn,  y = sy * yn.
    double sx = 1, sy = 1;

    static Model from_quadrant(const QuadrantModel& qm);
    // Canonical quadrant embedding of a wedge model: sigma11 = sigma22 = 1,
    // sigma12 = -cos beta, |mu~| = 1, r11 = r22 = 1.
    static Model from_angles(double beta, double theta, double delta, double eps);
    static Model from_exact_angles(const ExactAngles& a);

    Model swapped() const;
};

// Angle extraction without admissibility checks; theta may land outside
// (0, beta) for inadmissible drifts.  Requires Sigma positive definite and
// mu != 0.
WedgeModel wedge_angles_unchecked(const QuadrantModel& q);

// Validated map quadrant -> wedge.  Throws InvalidModel naming the violated
// condition, or Degenerate when a strict inequality sits within margin.
WedgeModel to_wedge(const QuadrantModel& q);

LinearMap transform_matrix(const QuadrantModel& q);

ConditionReport validate(const QuadrantModel& q);

// (phi1(0), phi2(0)).  Computed from the reflection/drift ratios and
// cross-checked against the trigonometric normal form to 1e-10 relative.
std::pair<double, double> boundary_masses(const QuadrantModel& q);

// Normalized variables xn = x detSigma / sqrt(Delta sigma22), and inverse.
std::pair<cplx, cplx> normalize_xy(const Model& m, cplx x, cplx y);
std::pair<cplx, cplx> denormalize_xy(const Model& m, cplx xn, cplx yn);

}  // namespace srbm
