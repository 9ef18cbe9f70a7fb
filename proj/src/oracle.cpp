#include "srbm/oracle.hpp"

#include <cmath>

namespace srbm {

namespace {

// 16-point Gauss-Legendre rule on [-1, 1].
constexpr int kGL = 8;
constexpr double kGLx[kGL] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                              0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                              0.9445750230732326, 0.9894009349916499};
constexpr double kGLw[kGL] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                              0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                              0.0622535239386479, 0.0271524594117541};

template <class F>
auto gl_panel(F&& f, double lo, double hi) -> decltype(f(0.0)) {
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    decltype(f(0.0)) acc = f(c + h * kGLx[0]) * kGLw[0] + f(c - h * kGLx[0]) * kGLw[0];
    for (int i = 1; i < kGL; ++i) acc += (f(c + h * kGLx[i]) + f(c - h * kGLx[i])) * kGLw[i];
    return acc * h;
}

// Composite rule with doubling until two successive refinements agree.
template <class F>
auto gl_adaptive(F&& f, double lo, double hi, double rel_tol, const char* what) -> decltype(f(0.0)) {
    decltype(f(0.0)) prev{};
    for (int n = 8; n <= 1024; n *= 2) {
        decltype(f(0.0)) acc{};
        const double h = (hi - lo) / n;
        for (int i = 0; i < n; ++i) acc += gl_panel(f, lo + i * h, lo + (i + 1) * h);
        if (n > 8 && std::abs(acc - prev) <= rel_tol * (1.0 + std::abs(acc))) return acc;
        prev = acc;
    }
    throw QuadratureFailure(std::string(what) + ": refinement did not converge");
}

}  // namespace

ContourOracle::ContourOracle(const Model& m, double panel_width)
    : m_(m), inv_(m), panel_width_(panel_width) {
    const WedgeModel& w = m.w;
    const double tbe = 2.0 * w.beta - 2.0 * w.eps - w.theta;
    if (std::fabs(tbe) < 1e-6)
        throw AtPole("contour oracle: parameters within 1e-6 of the pole-on-curve boundary");
    k_ = (tbe > 0) ? 1 : 0;
    if (k_) {
        p_ = y_of_unit(m, special_points(m).s1);
        wp_ = inv_.eval(cplx(p_, 0)).real();
    }
    w0_ = inv_.eval(cplx(0, 0)).real();

    // Contour R^- as s = -e^{-v}, v in [0, V]; then w(y(s)) = -cosh(a v) and
    // w'(t) dt = -a sinh(a v) dv, so only log E needs per-node work.
    const double a = inv_.exponent();
    const double V = std::log(4.0e12) / a;
    const int panels = static_cast<int>(std::ceil(V / panel_width_));
    nodes_.reserve(static_cast<std::size_t>(panels) * 2 * kGL);
    for (int pnl = 0; pnl < panels; ++pnl) {
        const double lo = pnl * V / panels, hi = (pnl + 1) * V / panels;
        const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        for (int i = 0; i < kGL; ++i) {
            for (double sgn : {+1.0, -1.0}) {
                const double v = c + sgn * h * kGLx[i];
                Node nd;
                nd.omega = -std::cosh(a * v);
                nd.dom = -a * std::sinh(a * v) * kGLw[i] * h;
                nd.logE_im = log_E_on_contour(m_, -std::exp(-v)).imag();
                nodes_.push_back(nd);
            }
        }
    }
    omega_tail_ = std::cosh(a * V);
    vmax_ = V;
}

ContourOracle ContourOracle::refined() const { return ContourOracle(m_, 0.5 * panel_width_); }

cplx ContourOracle::phi1(cplx y) const {
    cplx wy = inv_.eval(y);
    if (k_ && std::abs(y - p_) < 1e-9 * (1.0 + std::fabs(p_)))
        throw AtPole("contour oracle: evaluation at the pole");
    if (omega_tail_ < 50.0 * std::max(std::abs(wy), std::fabs(w0_)))
        throw QuadratureFailure("contour oracle: truncated contour too short for this point");
    if (std::fabs(wy.imag()) < 1e-9 * (1.0 + std::abs(wy)) && wy.real() < -1.0 - 1e-9)
        return phi1_on_curve(y, wy.real());

    cplx acc = 0.0;
    for (const Node& nd : nodes_) {
        cplx bracket = 1.0 / (nd.omega - wy) - 1.0 / (nd.omega - w0_);
        acc += nd.dom * nd.logE_im * bracket;
    }
    // acc approximates Int logE_im * [...] ds; the full integrand carries
    // log E = i * logE_im, so I = (1/(2 pi i)) * (i * acc) = acc / (2 pi).
    cplx I = acc / (2.0 * kPi);
    cplx val = m_.mass1 * std::exp(I);
    if (k_) val *= (w0_ - wp_) / (wy - wp_);
    return val;
}

cplx ContourOracle::phi1_on_curve(cplx y, double wy) const {
    // wy = w(y) sits on the image (-inf, -1) of the contour: split off the
    // Cauchy singularity analytically.  With omega(v) = -cosh(a v),
    //   PV Int omega' / (omega - wy) dv = log|omega(V) - wy| - log|1 + wy|,
    // and the remainder (le(v) - le0) omega'/(omega - wy) is regular at v0.
    const double a = inv_.exponent();
    const double v0 = std::acosh(-wy) / a;
    const double le0 = log_E_on_contour(m_, -std::exp(-v0)).imag();

    double acc = 0.0;
    auto f = [&](double v) {
        const double om = -std::cosh(a * v);
        const double domdv = -a * std::sinh(a * v);
        const double le = log_E_on_contour(m_, -std::exp(-v)).imag();
        double reg = (std::fabs(v - v0) < 1e-12)
                         ? 0.0  // removable: the le-difference vanishes with omega - wy
                         : (le - le0) * domdv / (om - wy);
        return reg - le * domdv / (om - w0_);
    };
    const int panels = static_cast<int>(std::ceil(vmax_ / panel_width_));
    for (int p = 0; p < panels; ++p) {
        double lo = p * vmax_ / panels, hi = (p + 1) * vmax_ / panels;
        if (v0 > lo && v0 < hi) {
            acc += gl_panel(f, lo, v0);
            acc += gl_panel(f, v0, hi);
        } else {
            acc += gl_panel(f, lo, hi);
        }
    }
    acc += le0 * (std::log(std::fabs(-std::cosh(a * vmax_) - wy)) - std::log(std::fabs(-1.0 - wy)));

    // Half-jump: the G_R side of the lower half R^- maps to Im w > 0, the
    // upper half to Im w < 0.
    const double side = (y.imag() < 0) ? +1.0 : -1.0;
    cplx I = acc / (2.0 * kPi) - side * cplx(0.0, 0.5 * le0);
    cplx val = m_.mass1 * std::exp(I);
    if (k_) val *= (w0_ - wp_) / (wy - wp_);
    return val;
}

cplx phi1_integral(const Model& m, cplx y) {
    ContourOracle coarse(m);
    cplx a = coarse.phi1(y);
    cplx b = coarse.refined().phi1(y);
    if (std::abs(a - b) > 1e-7 * (1.0 + std::abs(b)))
        throw QuadratureFailure("phi1 integral: refinement changed the value beyond tolerance");
    return b;
}

cplx numeric_laplace2d(const Model& m, const DensityForm& d, cplx x, cplx y) {
    switch (d.kind) {
        case DensityForm::Kind::SumOfExponentials: {
            double min_rate = 1e300;
            for (const auto& t : d.terms) min_rate = std::fmin(min_rate, t.rate);
            if (y.real() >= min_rate - 1e-12)
                throw QuadratureFailure("laplace transform diverges at this argument");
            const double Z = 40.0 / (min_rate - y.real());
            return gl_adaptive([&](double z) { return d.eval1d(z) * std::exp(y * z); }, 0.0, Z, 1e-9,
                               "laplace(sum of exponentials)");
        }
        case DensityForm::Kind::GammaHalf:
        case DensityForm::Kind::Erf: {
            const double rate = (d.kind == DensityForm::Kind::GammaHalf) ? d.rate : d.erf_a;
            if (y.real() >= rate - 1e-12)
                throw QuadratureFailure("laplace transform diverges at this argument");
            const double T = std::sqrt(40.0 / (rate - y.real()));
            // z = t^2 removes the 1/sqrt(z) endpoint singularity.
            return gl_adaptive(
                [&](double t) { return 2.0 * t * d.eval1d(t * t) * std::exp(y * (t * t)); }, 0.0, T,
                1e-9, "laplace(1d density)");
        }
        case DensityForm::Kind::WedgePolar: {
            const WedgeModel& w = m.w;
            cplx xn = x / m.sx, yn = y / m.sy;
            const double sb = std::sin(w.beta);
            auto outer = [&](double aarg) -> cplx {
                const double cc = std::cos(0.5 * (w.theta - aarg));
                cplx c = 2.0 * cc * cc - (xn * std::sin(w.beta - aarg) + yn * std::sin(aarg)) / sb;
                if (c.real() <= 0)
                    throw QuadratureFailure("laplace(wedge polar): outside the analyticity domain");
                const double T = std::sqrt(40.0 / c.real());
                cplx inner = gl_adaptive([&](double t) { return 2.0 * t * t * std::exp(-c * (t * t)); },
                                         0.0, T, 1e-8, "laplace(wedge polar) inner");
                return d.wp_kappa * cc / sb * inner;
            };
            // The substitution u -> z = (sx u1, sy u2) contributes 1/(sx sy).
            cplx total = gl_adaptive(outer, 0.0, w.beta, 1e-7, "laplace(wedge polar) outer");
            return total / (m.sx * m.sy);
        }
    }
    throw QuadratureFailure("unknown density kind");
}

double numeric_mass(const Model& m, const DensityForm& d) {
    return numeric_laplace2d(m, d, cplx(0, 0), cplx(0, 0)).real();
}

std::pair<double, double> wedge_polar_means(const Model& m, const DensityForm& d) {
    if (d.kind != DensityForm::Kind::WedgePolar) throw NotCovered("means: not a wedge-polar density");
    const WedgeModel& w = m.w;
    const double sb = std::sin(w.beta);
    auto mean_of = [&](int coord) {
        auto outer = [&](double aarg) -> double {
            const double cc = std::cos(0.5 * (w.theta - aarg));
            const double c = 2.0 * cc * cc;
            const double T = std::sqrt(40.0 / c);
            // weight z_coord = rho sin(.)/sin b, and u = z / s_coord.
            double geom = (coord == 0) ? std::sin(w.beta - aarg) / (sb * m.sx)
                                       : std::sin(aarg) / (sb * m.sy);
            double inner = gl_adaptive([&](double t) { return 2.0 * std::pow(t, 4) * std::exp(-c * t * t); },
                                       0.0, T, 1e-8, "means inner");
            return d.wp_kappa * cc / sb * geom * inner;
        };
        return gl_adaptive(outer, 0.0, w.beta, 1e-7, "means outer") / (m.sx * m.sy);
    };
    return {mean_of(0), mean_of(1)};
}

std::vector<double> series_coeffs(const LaplaceForm& f, int n) {
    const Model& m = f.model;
    double radius = m.y_plus;
    if (f.pole) radius = std::fmin(radius, std::fabs(*f.pole));
    for (const auto& ly : f.loose_y)
        if (ly.expo < 0) radius = std::fmin(radius, std::fabs(ly.y0));
    // Coefficient n carries a rounding amplification (rho_sing/rho)^n, so the
    // circle has to hug the nearest singularity to certify 1e-9 at n = 20.
    radius *= 0.7;
    if (!(radius > 1e-8 * (m.y_plus - m.y_minus)))
        throw RadiusTooSmall("series_coeffs: a singularity sits too close to 0");

    const int N = 512;
    std::vector<cplx> vals(N);
    for (int j = 0; j < N; ++j) {
        double t = 2.0 * kPi * j / N;
        vals[static_cast<std::size_t>(j)] = eval_phi1(f, std::polar(radius, t));
    }
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    double rpow = 1.0;
    for (int k = 0; k <= n; ++k) {
        cplx acc = 0;
        for (int j = 0; j < N; ++j) {
            double t = -2.0 * kPi * j * k / N;
            acc += vals[static_cast<std::size_t>(j)] * std::polar(1.0, std::fmod(t, 2.0 * kPi));
        }
        out[static_cast<std::size_t>(k)] = acc.real() / (N * rpow);
        rpow *= radius;
    }
    return out;
}

double chi2_pvalue(double stat, int dof) {
    // Regularized upper incomplete gamma Q(dof/2, stat/2), series/continued
    // fraction split as usual.
    const double a = 0.5 * dof, x = 0.5 * stat;
    if (x <= 0) return 1.0;
    auto gamser = [&]() {
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-14) break;
        }
        return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    };
    auto gamcf = [&]() {
        double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
        for (int i = 1; i <= 500; ++i) {
            double an = -i * (i - a);
            b += 2.0;
            d = an * d + b;
            if (std::fabs(d) < 1e-300) d = 1e-300;
            c = b + an / c;
            if (std::fabs(c) < 1e-300) c = 1e-300;
            d = 1.0 / d;
            double del = d * c;
            h *= del;
            if (std::fabs(del - 1.0) < 1e-14) break;
        }
        return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
    };
    if (x < a + 1.0) return 1.0 - gamser();
    return gamcf();
}

}  // namespace srbm
