#include "srbm/laplace_form.hpp"

#include <algorithm>
#include <cmath>

namespace srbm {

namespace {

constexpr double kAngleTol = 1e-9;

// Position of a unit-circle point relative to the preimage of G_R, from its
// argument written as argpi * pi.  The preimage of the open domain is
// arg in (pi, pi + 2 beta) mod 2 pi; the boundary rays hit -1 and -q.
struct PointClass {
    bool at_m1 = false;  // equals -1 (y value y(-1))
    bool at_mq = false;  // equals -q (same y value)
    bool interior = false;
};

// t = (argpi - 1) mod 2 in [0, 2), exactly when rational data is available.
PointClass classify_point(double B, double argpi, const std::optional<Rational>& argpi_x,
                          const std::optional<Rational>& Bx) {
    PointClass pc;
    if (argpi_x && Bx) {
        Rational t = *argpi_x - Rational(1);
        std::int64_t m = ((t.num % (2 * t.den)) + 2 * t.den) % (2 * t.den);
        Rational tr(m, t.den);
        Rational twoB = Rational(2) * *Bx;
        pc.at_m1 = tr.is_zero();
        pc.at_mq = (tr == twoB);
        pc.interior = !pc.at_m1 && !pc.at_mq && Rational(0) < tr && tr < twoB;
        return pc;
    }
    double u = std::fmod(argpi - 1.0, 2.0);
    if (u < 0) u += 2.0;
    u *= kPi;  // angle past the ray arg = pi, in [0, 2 pi)
    const double two_beta = 2.0 * B * kPi;
    pc.at_m1 = std::fmin(u, 2.0 * kPi - u) < kAngleTol;
    pc.at_mq = std::fabs(u - two_beta) < kAngleTol;
    pc.interior = !pc.at_m1 && !pc.at_mq && u > kAngleTol && u < two_beta - kAngleTol;
    return pc;
}

double y_at_argpi(const Model& m, double argpi) { return y_of_unit(m, std::polar(1.0, kPi * argpi)); }

}  // namespace

int mult_minus_one(const Model& m, cplx sigma, long long a, long long b, int sign) {
    if (b < a) return 0;
    const double B = m.w.beta / kPi;
    const double argpi = std::arg(sigma) / kPi;
    int n = 0;
    for (long long j = a; j <= b; ++j) {
        PointClass pc = classify_point(B, argpi + sign * 2.0 * static_cast<double>(j) * B, std::nullopt,
                                       std::nullopt);
        if (pc.at_m1) ++n;
    }
    return n;
}

int count_in_GR(const Model& m, cplx sigma, long long r) {
    const double om = std::arg(sigma);
    const double bp = m.w.beta / kPi;
    const double base = om / (2.0 * kPi) - 0.5;
    if (r >= 0)
        return static_cast<int>(std::floor(base) - std::floor(base - static_cast<double>(r) * bp)) -
               mult_minus_one(m, sigma, 0, r - 1, -1);
    return static_cast<int>(std::floor(base - static_cast<double>(r) * bp) - std::floor(base)) -
           mult_minus_one(m, sigma, 1, -r, +1);
}

cplx DecouplingPair::F(cplx y) const {
    cplx v = 1.0;
    for (double r : roots) v *= (y - r);
    for (double p : poles) v /= (y - p);
    return v;
}

cplx DecouplingPair::L(const Model& mod, cplx x) const {
    cplx ym = kernel_roots_y(mod, x).minus;
    GammaValues g = gamma_eval(mod.q, x, ym);
    cplx ratio = std::pow(g.g1 / g.g2, m);
    return F(ym) / ratio;
}

DecouplingPair decoupling(const Model& m, const ConditionData& c) {
    KernelGeometry kg = special_points(m);
    DecouplingPair d;
    auto push_block = [&m](std::vector<double>& dst, cplx s0, long long r, int copies) {
        cplx q = std::polar(1.0, 2.0 * m.w.beta);
        if (r > 0) {
            cplx s = s0;
            for (long long j = 0; j < r; ++j) {
                for (int c2 = 0; c2 < copies; ++c2) dst.push_back(y_of_unit(m, s));
                s /= q;
            }
        } else {
            cplx s = s0;
            for (long long j = 1; j <= -r; ++j) {
                s *= q;
                for (int c2 = 0; c2 < copies; ++c2) dst.push_back(y_of_unit(m, s));
            }
        }
    };

    if (c.simple) {
        d.m = 1;
        long long r = c.simple->r;
        push_block(r > 0 ? d.roots : d.poles, kg.s1, r, 1);
        return d;
    }
    if (c.dbl) {
        d.m = 2;
        const DoubleCondition& dc = *c.dbl;
        // F = (F_{r1,s1} / F_{r2,s2})^2 * f_{e1,eps1} / f_{e2,eps2}.
        push_block(dc.r1 > 0 ? d.roots : d.poles, kg.s1, dc.r1, 2);
        push_block(dc.r2 > 0 ? d.poles : d.roots, kg.s2, dc.r2, 2);
        if (dc.e1 == 1) d.roots.push_back(dc.eps1 == 0 ? m.y_plus : m.y_minus);
        if (dc.e2 == 1) d.poles.push_back(dc.eps2 == 0 ? m.y_plus : m.y_minus);
        return d;
    }
    throw NoDecoupling("neither the simple nor the double angle condition holds");
}

namespace {

// Shared state while assembling one F_{r,sigma} block of the form.
struct Builder {
    const Model& m;
    Invariant inv;
    LaplaceForm& f;
    double B;
    std::optional<Rational> Bx;

    Builder(const Model& mm, LaplaceForm& ff)
        : m(mm), inv(mm), f(ff), B(mm.w.beta / kPi) {
        if (mm.exact) Bx = mm.exact->beta;
    }

    void push_loose_y(double y0, int expo) { f.loose_y.push_back({y0, expo}); }
    void push_z(double z0, int expo) { (expo > 0 ? f.poly_s : f.poly_r).push_back(z0); }

    // Process one block F_{r,sigma}.  argpi = arg(sigma)/pi, not reduced.
    // first_index blocks carry the pole logic (sigma = s1, tbe = 2b-2e-t).
    // ey: exponent of the y-side factors; the z side gets -ey.
    // Returns the number of z-roots emitted (the block degree).
    int add_block(long long r, double argpi, std::optional<Rational> argpi_x, bool first_index,
                  double tbe) {
        const int ey = (first_index ? -1 : +1) * (r > 0 ? +1 : -1);
        const int ez = -ey;
        const double ym1 = y_of_unit(m, cplx(-1.0, 0.0));
        int z_degree = 0;

        struct Entry {
            double yval;
            PointClass pc;
            bool consumed = false;
        };
        std::vector<Entry> entries;
        const long long lo = (r > 0) ? 0 : 1;
        const long long hi = (r > 0) ? r - 1 : -r;
        const int step_sign = (r > 0) ? -1 : +1;
        for (long long j = lo; j <= hi; ++j) {
            double ap = argpi + step_sign * 2.0 * static_cast<double>(j) * B;
            std::optional<Rational> apx;
            if (argpi_x && Bx) apx = *argpi_x + Rational(step_sign) * Rational(2 * j) * *Bx;
            PointClass pc = classify_point(B, ap, apx, Bx);
            double yv = (pc.at_m1 || pc.at_mq) ? ym1 : y_at_argpi(m, ap);
            entries.push_back({yv, pc, false});
            (ey > 0 ? f.poly_q : f.poly_p).push_back(yv);
        }

        // z-roots paired with the interior y-roots they cancel.  For a
        // first-index block the j = 0 entry is governed by the sign of
        // 2 beta - 2 eps - theta instead (the possible pole of phi1).
        for (std::size_t i = 0; i < entries.size(); ++i) {
            long long j = lo + static_cast<long long>(i);
            if (!entries[i].pc.interior) continue;
            if (first_index && r > 0 && j == 0) continue;  // handled below
            double z0 = inv.eval(cplx(entries[i].yval, 0)).real();
            f.pair_factors.push_back({entries[i].yval, z0, ez});
            push_z(z0, ez);
            entries[i].consumed = true;
            ++z_degree;
        }

        if (first_index) {
            if (std::fabs(tbe) <= kAngleTol) {
                // s1 = -1 exactly is handled through the multiplicity
                // bookkeeping below (phi1 keeps its simple pole, now sitting
                // at y(-1) on the curve); anything else this close is
                // ambiguous.
                bool exact_m1;
                if (r > 0) {
                    exact_m1 = entries[0].pc.at_m1;
                } else {
                    PointClass pc0 = classify_point(B, argpi, argpi_x, Bx);
                    exact_m1 = pc0.at_m1;
                }
                if (!exact_m1)
                    throw Degenerate("2 beta - 2 eps - theta within tolerance of 0: pole on R");
                f.pole = ym1;
            } else if (tbe > 0) {
                double yp = (r > 0) ? entries[0].yval : y_at_argpi(m, argpi);
                f.pole = yp;
                if (r <= 0) {
                    double z0 = inv.eval(cplx(yp, 0)).real();
                    f.loose_z.push_back({z0, ez});
                    push_z(z0, ez);
                    ++z_degree;
                }
                // r > 0: entry 0 stays loose; the pole comes from P itself.
            } else if (r > 0 && entries[0].pc.interior) {
                double z0 = inv.eval(cplx(entries[0].yval, 0)).real();
                f.pair_factors.push_back({entries[0].yval, z0, ez});
                push_z(z0, ez);
                entries[0].consumed = true;
                ++z_degree;
            }
        }

        // Multiplicity of the root z = -1 = w(y(-1)):
        //   r > 0: #{1 <= j <= r-1, sigma q^{-j} = -1}
        //   r < 0: #{0 <= j <= |r|, sigma q^{j} = -1}  (the j = 0 hit is s1 = -1)
        int mcount = 0;
        if (r > 0) {
            for (std::size_t i = 1; i < entries.size(); ++i)
                if (entries[i].pc.at_m1) ++mcount;
        } else {
            PointClass pc0 = classify_point(B, argpi, argpi_x, Bx);
            if (pc0.at_m1) ++mcount;
            for (auto& e : entries)
                if (e.pc.at_m1) ++mcount;
        }

        // Partners at y(-1): every unconsumed entry sitting at -1 or -q.
        std::vector<std::size_t> partners;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (!entries[i].consumed && (entries[i].pc.at_m1 || entries[i].pc.at_mq)) partners.push_back(i);

        std::size_t pi_idx = 0;
        for (int t = 0; t < mcount; ++t) {
            int got = 0;
            while (got < 2 && pi_idx < partners.size()) {
                entries[partners[pi_idx]].consumed = true;
                ++pi_idx;
                ++got;
            }
            push_z(-1.0, ez);
            ++z_degree;
            if (got == 0)
                f.loose_z.push_back({-1.0, ez});
            else
                f.curve_factors.push_back({ym1, ez, got});
        }

        // Whatever remains is a plain y-side factor.
        for (auto& e : entries)
            if (!e.consumed) push_loose_y(e.yval, ey);
        return z_degree;
    }
};

void fill_taylor(LaplaceForm& f) {
    Invariant inv(f.model);
    for (auto& p : f.pair_factors) {
        cplx y0(p.y0, 0.0);
        p.c1 = inv.prime(y0).real();
        p.c2 = 0.5 * inv.second(y0).real();
        p.c3 = inv.third(y0).real() / 6.0;
    }
    for (auto& cfac : f.curve_factors) {
        cplx y0(cfac.y0, 0.0);
        cfac.c2 = 0.5 * inv.second(y0).real();
        cfac.c3 = inv.third(y0).real() / 6.0;
        cfac.c4 = inv.fourth(y0).real() / 24.0;
    }
}

cplx eval_raw(const LaplaceForm& f, const Invariant& inv, cplx y, cplx w) {
    const double scale = f.model.y_plus - f.model.y_minus;
    cplx val = 1.0;
    for (const auto& p : f.pair_factors) {
        cplx h = y - p.y0;
        cplx t;
        if (std::abs(h) < 1e-5 * scale)
            t = p.c1 + h * (p.c2 + h * p.c3);
        else
            t = (w - p.z0) / h;
        val *= (p.expo > 0) ? t : 1.0 / t;
    }
    for (const auto& cfac : f.curve_factors) {
        cplx h = y - cfac.y0;
        cplx t;
        if (std::abs(h) < 5e-4 * scale) {
            t = cfac.c2 + h * (cfac.c3 + h * cfac.c4);   // (w + 1)/h^2
            if (cfac.ypow == 1) t *= h;
        } else {
            t = (w + 1.0) / ((cfac.ypow == 2) ? h * h : h);
        }
        val *= (cfac.expo > 0) ? t : 1.0 / t;
    }
    for (const auto& ly : f.loose_y) {
        cplx t = y - ly.y0;
        val *= (ly.expo > 0) ? t : 1.0 / t;
    }
    for (const auto& lz : f.loose_z) {
        cplx t = w - lz.z0;
        val *= (lz.expo > 0) ? t : 1.0 / t;
    }
    if (f.m == 2) {
        const double a = inv.exponent();
        cplx u = inv.arg_map(y);
        if (f.a_minus != 0) {
            cplx gm = std::sqrt(2.0 / (f.model.y_plus - f.model.y_minus)) * a *
                      sqrt_one_minus_T_over(a, u);
            val *= (f.a_minus > 0) ? gm : 1.0 / gm;
        }
        if (f.b != 0) {
            cplx sp = sqrt_one_plus_T(a, u);
            val *= (f.b > 0) ? sp : 1.0 / sp;
        }
        if (f.a_plus != 0) {
            cplx sq = std::sqrt(cplx(f.model.y_plus, 0.0) - y);
            val *= (f.a_plus > 0) ? 1.0 / sq : sq;
        }
    }
    return val;
}

void normalize(LaplaceForm& f) {
    Invariant inv(f.model);
    cplx v0 = eval_raw(f, inv, cplx(0, 0), inv.eval(cplx(0, 0)));
    if (std::abs(v0.imag()) > 1e-9 * std::abs(v0))
        throw InternalConsistency("phi1(0) evaluated to a non-real value");
    f.kappa = f.model.mass1 / v0.real();
}

}  // namespace

LaplaceForm build_phi1_simple(const Model& m, const SimpleCondition& sc) {
    LaplaceForm f;
    f.model = m;
    f.m = 1;
    f.sc = sc;
    Builder b(m, f);

    const WedgeModel& w = m.w;
    const double tbe = 2.0 * w.beta - 2.0 * w.eps - w.theta;
    double argpi = 1.0 + tbe / kPi;  // arg(s1)/pi
    std::optional<Rational> argpi_x;
    if (m.exact)
        argpi_x = Rational(1) + Rational(2) * m.exact->beta - Rational(2) * m.exact->eps - m.exact->theta;

    int deg = b.add_block(sc.r, argpi, argpi_x, /*first_index=*/true, tbe);
    const long long expect = (sc.r > 0) ? sc.k : -sc.k;
    if (deg != expect)
        throw DegreeMismatch("simple condition: constructed degree " + std::to_string(deg) +
                             " but k prescribes " + std::to_string(expect));
    fill_taylor(f);
    normalize(f);
    return f;
}

LaplaceForm build_phi1_double(const Model& m, const DoubleCondition& dc) {
    LaplaceForm f;
    f.model = m;
    f.m = 2;
    f.dc = dc;
    Builder b(m, f);

    const WedgeModel& w = m.w;
    const double tbe = 2.0 * w.beta - 2.0 * w.eps - w.theta;
    const double B = w.beta / kPi;

    double arg1 = (2.0 * dc.r1 + dc.e1) * B - (2.0 * dc.k1 + dc.eps1);
    double arg2 = (2.0 * dc.r2 + dc.e2) * B - (2.0 * dc.k2 + dc.eps2);
    std::optional<Rational> arg1_x, arg2_x;
    if (m.exact) {
        Rational Bx = m.exact->beta;
        arg1_x = Rational(2 * dc.r1 + dc.e1) * Bx - Rational(2 * dc.k1 + dc.eps1);
        arg2_x = Rational(2 * dc.r2 + dc.e2) * Bx - Rational(2 * dc.k2 + dc.eps2);
    }

    int deg1 = b.add_block(dc.r1, arg1, arg1_x, /*first_index=*/true, tbe);
    int deg2 = b.add_block(dc.r2, arg2, arg2_x, /*first_index=*/false, 0.0);
    const long long e1 = (dc.r1 > 0) ? dc.k1 : -dc.k1;
    const long long e2 = (dc.r2 > 0) ? dc.k2 : -dc.k2;
    if (deg1 != e1 || deg2 != e2)
        throw DegreeMismatch("double condition: degrees (" + std::to_string(deg1) + ", " +
                             std::to_string(deg2) + ") do not match (k1, k2) bookkeeping");

    f.a_minus = dc.e1 * dc.eps1 - dc.e2 * dc.eps2;
    f.a_plus = dc.e1 * (1 - dc.eps1) - dc.e2 * (1 - dc.eps2);
    f.b = dc.eps1 * (1 - dc.e1) - dc.eps2 * (1 - dc.e2);

    fill_taylor(f);
    normalize(f);
    return f;
}

LaplaceForm build_phi1(const Model& m, const ConditionData& c) {
    if (c.simple) return build_phi1_simple(m, *c.simple);
    if (c.dbl) return build_phi1_double(m, *c.dbl);
    throw NotCovered("no closed form: neither angle condition holds");
}

cplx eval_phi1(const LaplaceForm& f, cplx y) {
    Invariant inv(f.model);
    if (f.pole && std::abs(y - *f.pole) < 1e-10 * (1.0 + std::abs(*f.pole)))
        throw AtPole("phi1: evaluation at the pole");
    cplx w = inv.eval(y);
    return f.kappa * eval_raw(f, inv, y, w);
}

PhiPair build_phi_pair(const Model& m, const ConditionData& c) {
    Model ms = m.swapped();
    return {build_phi1(m, c), build_phi1(ms, angle_conditions(alphas(ms)))};
}

cplx eval_phi2(const PhiPair& pp, cplx x) { return eval_phi1(pp.phi2, x); }

cplx eval_phi(const PhiPair& pp, const Model& m, cplx x, cplx y) {
    const double scale = std::abs(x) + std::abs(y);
    if (scale < 1e-10) {
        // Removable point: gamma vanishes at the origin along with the
        // numerator, and the directional limit is independent of the
        // direction by the mass identities R^T (phi1(0), phi2(0)) = -mu.
        const QuadrantModel& q = m.q;
        const double dx = 1.0, dy = 1.0;
        return -((q.r11 * dx + q.r21 * dy) * m.mass1 + (q.r12 * dx + q.r22 * dy) * m.mass2) /
               (q.mu1 * dx + q.mu2 * dy);
    }
    GammaValues g = gamma_eval(m.q, x, y);
    if (std::abs(g.g) < 1e-12 * (1.0 + scale * scale))
        throw AtKernelZero("phi(x, y): kernel vanishes at the evaluation point");
    return -(g.g1 * eval_phi1(pp.phi1, y) + g.g2 * eval_phi1(pp.phi2, x)) / g.g;
}

cplx phi_alg_half_case(const Model& m, cplx x, cplx y) {
    const WedgeModel& w = m.w;
    cplx xt = std::sqrt(1.0 - x / m.x_plus);
    cplx yt = std::sqrt(1.0 - y / m.y_plus);
    const double sd = std::sin(w.delta), se = std::sin(w.eps), cde = std::cos(w.delta + w.eps);
    const double k0 = -2.0 * sd * se * cde;
    cplx den = xt * xt * sd * sd + yt * yt * se * se - 2.0 * xt * yt * sd * se * cde -
               std::sin(w.delta + w.eps) * std::sin(w.delta + w.eps);
    return k0 * (xt + yt) / (xt * yt * den);
}

namespace {

// One step of the recurrence: the right-hand side whose quotient by
// (1 - c2^2)(c1 - c2)^2 is Mtilde_{k+2}.  term_scale accumulates the
// magnitudes of the participating terms for relative residuals.
double recurrence_rhs(const MomentRecurrence& mr, int k, const std::vector<double>& v,
                      double* term_scale) {
    const double a = mr.a, c1 = mr.c1, c2 = mr.c2;
    auto at = [&v](int i) { return (i < 0) ? 0.0 : v[static_cast<std::size_t>(i)]; };
    const double nn = k;
    double scale = 0;
    double t = (k == 0) ? a * a * mr.kappa_prime : 0.0;
    double rhs = t;
    scale += std::fabs(t);
    t = (c2 - c1) * (2.0 * (c1 * c2 - 2.0 * c2 * c2 + 1.0) * nn + c1 * c2 - 5.0 * c2 * c2 + 4.0) *
        at(k + 1);
    rhs += t;
    scale += std::fabs(t);
    t = ((c1 * c1 - 6.0 * c1 * c2 + 6.0 * c2 * c2 - 1.0) * nn * nn -
         3.0 * (2.0 * c1 * c2 - 3.0 * c2 * c2 + 1.0) * nn - (c1 - c2) * (c1 - c2) * a * a -
         2.0 * c1 * c2 + 4.0 * c2 * c2 - 2.0) *
        at(k);
    rhs += t;
    scale += std::fabs(t);
    t = -nn * (2.0 * (2.0 * c2 - c1) * nn * nn + 3.0 * c2 * nn + 2.0 * (c1 - c2) * a * a + c2) *
        at(k - 1);
    rhs += t;
    scale += std::fabs(t);
    t = nn * (nn - 1.0) * (nn * nn - a * a) * at(k - 2);
    rhs += t;
    scale += std::fabs(t);
    if (term_scale) *term_scale = scale;
    return rhs;
}

}  // namespace

std::vector<double> MomentRecurrence::tilde(int n) const {
    std::vector<double> v(static_cast<std::size_t>(std::max(n + 1, 2)), 0.0);
    v[0] = M0t;
    v[1] = M1t;
    const double lead = (1.0 - c2 * c2) * (c1 - c2) * (c1 - c2);
    for (int k = 0; k + 2 <= n; ++k)
        v[static_cast<std::size_t>(k + 2)] = recurrence_rhs(*this, k, v, nullptr) / lead;
    v.resize(static_cast<std::size_t>(n + 1));
    return v;
}

double MomentRecurrence::max_residual(const std::vector<double>& tv) const {
    const double lead = (1.0 - c2 * c2) * (c1 - c2) * (c1 - c2);
    double worst = 0;
    for (int k = 0; k + 2 < static_cast<int>(tv.size()); ++k) {
        double scale = 0;
        double rhs = recurrence_rhs(*this, k, tv, &scale);
        double lhs = lead * tv[static_cast<std::size_t>(k + 2)];
        worst = std::fmax(worst, std::fabs(lhs - rhs) / (scale + std::fabs(lhs) + 1.0));
    }
    return worst;
}

std::vector<double> MomentRecurrence::moments(int n) const {
    std::vector<double> v = tilde(n);
    double f = 1.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] *= f;
        f *= scale;
    }
    return v;
}

MomentRecurrence moment_recurrence(const Model& m) {
    const WedgeModel& w = m.w;
    if (std::fabs(w.delta + w.eps + w.beta - 2.0 * kPi) > kAngleTol ||
        std::fabs(2.0 * w.eps + w.theta - 2.0 * kPi) > kAngleTol)
        throw NotCovered("moment recurrence requires delta+eps+beta = 2 pi and 2 eps+theta = 2 pi");

    MomentRecurrence r;
    r.a = kPi / w.beta;
    r.c1 = std::cos(w.beta);
    r.c2 = std::cos(w.beta - w.theta);
    r.scale = 2.0 / (m.y_plus - m.y_minus);
    const double phi10 = m.mass1;
    const double cth = std::cos(kPi * w.theta / w.beta);
    r.kappa_prime = phi10 * (r.c2 - r.c1) * (r.c2 - r.c1) / (1.0 - cth);
    r.M0t = phi10;
    r.M1t = phi10 * (2.0 / (r.c2 - r.c1) -
                     r.a * std::sin(kPi * w.theta / w.beta) / (std::sin(w.beta - w.theta) * (1.0 - cth)));
    return r;
}

}  // namespace srbm
