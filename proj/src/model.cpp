#include "srbm/model.hpp"

#include <cmath>
#include <tuple>

namespace srbm {

namespace {

double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

// Resolve an angle from its tangent representation tan(phi) = sin(beta) / den
// into (0, pi).  sin(beta) > 0, so atan2 lands there directly.
double angle_from_tan(double sin_beta, double den) { return std::atan2(sin_beta, den); }

double delta_invariant(const QuadrantModel& q) {
    return q.mu1 * q.mu1 * q.sigma22 - 2.0 * q.mu1 * q.mu2 * q.sigma12 + q.mu2 * q.mu2 * q.sigma11;
}

void require_spd(const QuadrantModel& q) {
    if (!(q.sigma11 > 0) || !(q.sigma22 > 0) || !(q.det_sigma() > 0))
        throw InvalidModel("covariance matrix is not positive definite");
    if (!(q.r11 > 0) || !(q.r22 > 0)) throw InvalidModel("diagonal reflection entries must be positive");
}

}  // namespace

WedgeModel wedge_angles_unchecked(const QuadrantModel& q) {
    require_spd(q);
    const double det = q.det_sigma();
    const double beta = std::acos(-q.sigma12 / std::sqrt(q.sigma11 * q.sigma22));
    const double sb = std::sin(beta);
    const double Delta = delta_invariant(q);
    if (!(Delta > 0)) throw InvalidModel("drift must be nonzero");

    // theta by the signed-arccos form; the atan form is ambiguous by pi.
    const double mu1t = (q.mu1 * q.sigma22 - q.mu2 * q.sigma12) / std::sqrt(q.sigma22 * det);
    double theta;
    if (q.mu2 != 0) {
        double c = (q.mu2 * q.sigma12 - q.mu1 * q.sigma22) / std::sqrt(q.sigma22 * Delta);
        c = std::fmin(1.0, std::fmax(-1.0, c));
        theta = -sgn(q.mu2) * std::acos(c);
    } else {
        theta = (mu1t > 0) ? kPi : 0.0;
    }

    const double delta = angle_from_tan(sb, (q.r12 / q.r22) * std::sqrt(q.sigma22 / q.sigma11) + std::cos(beta));
    const double eps = angle_from_tan(sb, (q.r21 / q.r11) * std::sqrt(q.sigma11 / q.sigma22) + std::cos(beta));

    return {beta, theta, delta, eps, Delta};
}

LinearMap transform_matrix(const QuadrantModel& q) {
    require_spd(q);
    const double det = q.det_sigma();
    LinearMap m;
    m.t11 = std::sqrt(q.sigma22 / det);
    m.t12 = -q.sigma12 / std::sqrt(q.sigma22 * det);
    m.t21 = 0;
    m.t22 = 1.0 / std::sqrt(q.sigma22);
    m.i11 = std::sqrt(det / q.sigma22);
    m.i12 = q.sigma12 / std::sqrt(q.sigma22);
    m.i21 = 0;
    m.i22 = std::sqrt(q.sigma22);
    return m;
}

ConditionReport validate(const QuadrantModel& q) {
    ConditionReport rep;
    try {
        require_spd(q);
    } catch (const InvalidModel& e) {
        rep.violated = e.what();
        return rep;
    }
    if (q.mu1 == 0 && q.mu2 == 0) {
        rep.violated = "drift must be nonzero";
        return rep;
    }

    const WedgeModel w = wedge_angles_unchecked(q);
    auto add = [&rep](const std::string& name, double margin) {
        bool pass = margin > 0;
        rep.checks.push_back({name, pass, margin});
        if (std::fabs(margin) < kStrictMargin) {
            rep.degenerate = true;
            if (rep.degenerate_name.empty()) rep.degenerate_name = name;
        }
        if (!pass && rep.violated.empty()) rep.violated = name;
        return pass;
    };

    // Wedge-side conditions.
    rep.semimartingale_wedge = add("alpha < 1", w.beta - (w.delta + w.eps - kPi));
    bool th_pos = add("theta > 0", w.theta);
    bool th_lt_beta = add("theta < beta", w.beta - w.theta);
    rep.drift_wedge = th_pos && th_lt_beta;
    bool st1 = add("beta - eps < theta", w.theta - (w.beta - w.eps));
    bool st2 = add("theta < delta", w.delta - w.theta);
    rep.stationary_wedge = st1 && st2;
    rep.combined_wedge = rep.semimartingale_wedge && rep.drift_wedge && rep.stationary_wedge;

    // Quadrant-side conditions.
    const double detR = q.det_r();
    rep.semimartingale_quadrant = detR > 0 || (q.r12 > 0 && q.r21 > 0);
    rep.checks.push_back({"det R > 0 or (r12 > 0 and r21 > 0)", rep.semimartingale_quadrant,
                          std::fmax(detR, std::fmin(q.r12, q.r21))});
    bool m1 = add("mu1 < 0", -q.mu1);
    bool m2 = add("mu2 < 0", -q.mu2);
    rep.drift_quadrant = m1 && m2;
    bool s0 = add("det R > 0", detR);
    bool s1q = add("r22 mu1 - r12 mu2 < 0", q.r12 * q.mu2 - q.r22 * q.mu1);
    bool s2q = add("r11 mu2 - r21 mu1 < 0", q.r21 * q.mu1 - q.r11 * q.mu2);
    rep.stationary_quadrant = s0 && s1q && s2q;

    // Pairwise equivalences between the two coordinate systems.
    bool eq_i = rep.semimartingale_wedge == rep.semimartingale_quadrant;
    bool eq_ii = rep.drift_wedge == rep.drift_quadrant;
    bool eq_iii = rep.combined_wedge == (rep.drift_quadrant && rep.stationary_quadrant);
    rep.equivalences_ok = eq_i && eq_ii && eq_iii;
    if (!rep.equivalences_ok && !rep.degenerate)
        throw InternalConsistency("wedge-form and quadrant-form conditions disagree");

    rep.valid = rep.combined_wedge && !rep.degenerate;
    return rep;
}

WedgeModel to_wedge(const QuadrantModel& q) {
    ConditionReport rep = validate(q);
    for (const auto& c : rep.checks)
        if (!c.pass && std::fabs(c.margin) >= kStrictMargin)
            throw InvalidModel("invalid model: " + c.name);
    if (rep.degenerate) throw Degenerate("condition within margin of equality: " + rep.degenerate_name);
    if (!rep.valid) throw InvalidModel("invalid model: " + rep.violated);
    return wedge_angles_unchecked(q);
}

std::pair<double, double> boundary_masses(const QuadrantModel& q) {
    ConditionReport rep = validate(q);
    if (!rep.valid) throw InvalidModel("invalid model: " + rep.violated);
    const double den = q.r12 * q.r21 - q.r11 * q.r22;
    const double m1 = (q.mu1 * q.r22 - q.mu2 * q.r12) / den;
    const double m2 = (q.mu2 * q.r11 - q.mu1 * q.r21) / den;

    // Cross-check against the trigonometric normal form.
    const WedgeModel w = wedge_angles_unchecked(q);
    const double n1 = std::sqrt(w.Delta / q.sigma22) / q.r11 * std::sin(w.theta - w.delta) * std::sin(w.eps) /
                      (std::sin(w.beta - w.delta - w.eps) * std::sin(w.beta));
    const double n2 = std::sqrt(w.Delta / q.sigma11) / q.r22 * std::sin(w.beta - w.theta - w.eps) *
                      std::sin(w.delta) / (std::sin(w.beta - w.delta - w.eps) * std::sin(w.beta));
    if (std::fabs(m1 - n1) > 1e-10 * (1.0 + std::fabs(m1)) ||
        std::fabs(m2 - n2) > 1e-10 * (1.0 + std::fabs(m2)))
        throw InternalConsistency("boundary masses: ratio form and normal form disagree");
    return {m1, m2};
}

Model Model::from_quadrant(const QuadrantModel& qm) {
    Model m;
    m.q = qm;
    m.w = to_wedge(qm);
    const double det = qm.det_sigma();
    m.sx = std::sqrt(m.w.Delta * qm.sigma22) / det;
    m.sy = std::sqrt(m.w.Delta * qm.sigma11) / det;
    m.x_plus = m.sx * (std::cos(m.w.theta) + 1.0);
    m.x_minus = m.sx * (std::cos(m.w.theta) - 1.0);
    m.y_plus = m.sy * (std::cos(m.w.beta - m.w.theta) + 1.0);
    m.y_minus = m.sy * (std::cos(m.w.beta - m.w.theta) - 1.0);
    std::tie(m.mass1, m.mass2) = boundary_masses(qm);
    return m;
}

Model Model::from_angles(double beta, double theta, double delta, double eps) {
    QuadrantModel q;
    q.sigma11 = q.sigma22 = 1.0;
    q.sigma12 = -std::cos(beta);
    q.mu1 = -std::sin(beta - theta);
    q.mu2 = -std::sin(theta);
    q.r11 = q.r22 = 1.0;
    q.r12 = std::sin(beta - delta) / std::sin(delta);
    q.r21 = std::sin(beta - eps) / std::sin(eps);
    return from_quadrant(q);
}

Model Model::from_exact_angles(const ExactAngles& a) {
    Model m = from_angles(a.beta.value() * kPi, a.theta.value() * kPi, a.delta.value() * kPi,
                          a.eps.value() * kPi);
    m.exact = a;
    return m;
}

Model Model::swapped() const {
    Model m = from_quadrant(q.swapped());
    if (exact) m.exact = ExactAngles{exact->beta, exact->beta - exact->theta, exact->eps, exact->delta};
    return m;
}

std::pair<cplx, cplx> normalize_xy(const Model& m, cplx x, cplx y) { return {x / m.sx, y / m.sy}; }

std::pair<cplx, cplx> denormalize_xy(const Model& m, cplx xn, cplx yn) { return {xn * m.sx, yn * m.sy}; }

}  // namespace srbm
