#include "srbm/kernel.hpp"

#include <cmath>

namespace srbm {

namespace {

constexpr double kCutTol = 1e-12;

// Principal square root with the convention sqrt(r e^{it}) = sqrt(r) e^{it/2}
// for t in (-pi, pi].  std::sqrt maps negative reals to +i sqrt|.|, which is
// exactly that convention.
cplx principal_sqrt(cplx z) { return std::sqrt(z); }

bool near_real_segment(cplx z, double lo, double hi) {
    return std::fabs(z.imag()) < kCutTol && z.real() > lo - kCutTol && z.real() < hi + kCutTol;
}

}  // namespace

GammaValues gamma_eval(const QuadrantModel& q, cplx x, cplx y) {
    GammaValues v;
    v.g = 0.5 * (q.sigma11 * x * x + 2.0 * q.sigma12 * x * y + q.sigma22 * y * y) + q.mu1 * x + q.mu2 * y;
    v.g1 = q.r11 * x + q.r21 * y;
    v.g2 = q.r12 * x + q.r22 * y;
    return v;
}

GammaValues gamma_eval_checked(const Model& m, cplx x, cplx y) {
    GammaValues v = gamma_eval(m.q, x, y);
    const WedgeModel& w = m.w;
    const double det = m.q.det_sigma();
    const double sb = std::sin(w.beta);
    cplx xn = x / m.sx, yn = y / m.sy;

    cplx gn = xn * xn + yn * yn - 2.0 * xn * yn * std::cos(w.beta) -
              2.0 * xn * sb * std::sin(w.beta - w.theta) - 2.0 * yn * sb * std::sin(w.theta);
    gn *= w.Delta / (2.0 * sb * sb * det);
    cplx g1n = m.q.r11 * m.sx * (xn + yn * std::sin(w.beta - w.eps) / std::sin(w.eps));
    cplx g2n = m.q.r22 * m.sy * (xn * std::sin(w.beta - w.delta) / std::sin(w.delta) + yn);

    auto close = [](cplx a, cplx b) { return std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)); };
    if (!close(v.g, gn) || !close(v.g1, g1n) || !close(v.g2, g2n))
        throw InternalConsistency("kernel normal form disagrees with direct evaluation");
    return v;
}

RootPair kernel_roots_x(const Model& m, cplx y) {
    const QuadrantModel& q = m.q;
    RootPair r;
    r.on_cut = near_real_segment(y, -1e300, m.y_minus) || near_real_segment(y, m.y_plus, 1e300);
    cplx disc = y * y * (q.sigma12 * q.sigma12 - q.sigma11 * q.sigma22) +
                2.0 * y * (q.mu1 * q.sigma12 - q.mu2 * q.sigma11) + q.mu1 * q.mu1;
    cplx rt = principal_sqrt(disc);
    r.minus = (-(q.sigma12 * y + q.mu1) - rt) / q.sigma11;
    r.plus = (-(q.sigma12 * y + q.mu1) + rt) / q.sigma11;
    return r;
}

RootPair kernel_roots_y(const Model& m, cplx x) {
    const QuadrantModel& q = m.q;
    RootPair r;
    r.on_cut = near_real_segment(x, -1e300, m.x_minus) || near_real_segment(x, m.x_plus, 1e300);
    cplx disc = x * x * (q.sigma12 * q.sigma12 - q.sigma11 * q.sigma22) +
                2.0 * x * (q.mu2 * q.sigma12 - q.mu1 * q.sigma22) + q.mu2 * q.mu2;
    cplx rt = principal_sqrt(disc);
    r.minus = (-(q.sigma12 * x + q.mu2) - rt) / q.sigma22;
    r.plus = (-(q.sigma12 * x + q.mu2) + rt) / q.sigma22;
    return r;
}

cplx x_of_s(const Model& m, cplx s) {
    return 0.5 * (m.x_plus + m.x_minus) + 0.25 * (m.x_plus - m.x_minus) * (s + 1.0 / s);
}

cplx y_of_s(const Model& m, cplx s) {
    const cplx eib = std::polar(1.0, m.w.beta);
    return 0.5 * (m.y_plus + m.y_minus) + 0.25 * (m.y_plus - m.y_minus) * (s / eib + eib / s);
}

cplx xn_of_s(const Model& m, cplx s) {
    return 0.5 * (2.0 * std::cos(m.w.theta) + s + 1.0 / s);
}

cplx yn_of_s(const Model& m, cplx s) {
    const cplx eib = std::polar(1.0, m.w.beta);
    return 0.5 * (2.0 * std::cos(m.w.beta - m.w.theta) + s / eib + eib / s);
}

double y_of_unit(const Model& m, cplx s) {
    // For |s| = 1 the two terms are conjugate; keep the value exactly real.
    cplx u = s * std::polar(1.0, -m.w.beta);
    return 0.5 * (m.y_plus + m.y_minus) + 0.5 * (m.y_plus - m.y_minus) * u.real();
}

KernelGeometry special_points(const Model& m) {
    KernelGeometry g;
    g.x_plus = m.x_plus;
    g.x_minus = m.x_minus;
    g.y_plus = m.y_plus;
    g.y_minus = m.y_minus;
    g.q = std::polar(1.0, 2.0 * m.w.beta);
    g.s0 = -std::polar(1.0, m.w.theta);
    g.s1 = -std::polar(1.0, 2.0 * m.w.beta - 2.0 * m.w.eps - m.w.theta);
    g.s2 = -std::polar(1.0, 2.0 * m.w.delta - m.w.theta);
    return g;
}

Region region_of(const Model& m, cplx y) {
    // Solve y(s) = y: A e^{-i beta} s^2 - v s + A e^{i beta} = 0 with
    // A = (y+ - y-)/4.  The two roots are s and q/s.
    const double A = 0.25 * (m.y_plus - m.y_minus);
    const cplx eib = std::polar(1.0, m.w.beta);
    const cplx v = y - 0.5 * (m.y_plus + m.y_minus);
    const cplx a = A / eib;
    cplx rt = principal_sqrt(v * v - 4.0 * A * A);
    cplx s1 = (v + rt) / (2.0 * a);
    cplx s2 = (v - rt) / (2.0 * a);

    const double two_beta = 2.0 * m.w.beta;
    bool on = false;
    for (cplx s : {s1, s2}) {
        if (std::abs(s) < kCutTol) continue;
        double u = std::arg(s) - kPi;  // in (-2 pi, 0]; shift into [0, 2 pi)
        if (u < 0) u += 2.0 * kPi;
        // u measures arg(s) past the ray arg = pi; the preimage of G_R is
        // u in (0, 2 beta), its boundary rays are u = 0 and u = 2 beta.
        double d_boundary = std::fmin(std::fmin(u, 2.0 * kPi - u), std::fabs(u - two_beta));
        if (d_boundary <= kCutTol)
            on = true;
        else if (u > 0 && u < two_beta)
            return Region::Interior_GR;
    }
    return on ? Region::On_R : Region::Outside;
}

cplx G_ratio(const Model& m, cplx y) {
    cplx yb = std::conj(y);
    cplx xm = kernel_roots_x(m, y).minus;
    cplx xmb = kernel_roots_x(m, yb).minus;
    GammaValues a = gamma_eval(m.q, xm, y);
    GammaValues b = gamma_eval(m.q, xmb, yb);
    double scale = std::abs(a.g1) + std::abs(a.g2) + std::abs(b.g1) + std::abs(b.g2);
    if (std::abs(a.g2) < kCutTol * scale || std::abs(b.g1) < kCutTol * scale)
        throw PoleOfG("G(y): boundary polynomial vanishes at X^-(y)");
    return (a.g1 / a.g2) * (b.g2 / b.g1);
}

cplx E_func(const Model& m, cplx s) {
    KernelGeometry g = special_points(m);
    cplx num = (s - g.s1) * (s - 1.0 / g.s2);
    cplx den = (s - g.s2) * (s - 1.0 / g.s1);
    if (std::abs(den) < kCutTol * (1.0 + std::abs(s) * std::abs(s)))
        throw PoleOfE("E(s): evaluation at a pole");
    return (g.s2 / g.s1) * num / den;
}

cplx log_E_on_contour(const Model& m, double s) {
    // On s < 0, (s - 1/s1) is the conjugate of (s - s1), so E is unimodular:
    //   log E = i (arg(s2/s1) + 2 arg(s - s1) - 2 arg(s - s2)),
    // and each arg is continuous in s because s1, s2 are off the real axis.
    // Normalize by the constant multiple of 2 pi that makes log E(-1) = 0.
    KernelGeometry g = special_points(m);
    auto phase = [&g](double t) {
        return std::arg(g.s2 / g.s1) + 2.0 * std::arg(cplx(t, 0) - g.s1) - 2.0 * std::arg(cplx(t, 0) - g.s2);
    };
    const double c0 = 2.0 * kPi * std::round(phase(-1.0) / (2.0 * kPi));
    return cplx(0.0, phase(s) - c0);
}

}  // namespace srbm
