#include "srbm/density.hpp"

#include <algorithm>
#include <cmath>

namespace srbm {

namespace {

constexpr double kMergeTol = 1e-9;

// Truncated power series in h, dense coefficients.
using Series = std::vector<double>;

Series series_mul(const Series& a, const Series& b, std::size_t n) {
    Series c(n, 0.0);
    for (std::size_t i = 0; i < n && i < a.size(); ++i)
        for (std::size_t j = 0; i + j < n && j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Taylor of 1/(c + h)^m around h = 0.
Series inv_power_series(double c, int mult, std::size_t n) {
    Series s(n, 0.0);
    double binom = 1.0;  // binomial(-m, k) (-1)^k = binomial(m + k - 1, k)
    double cp = std::pow(c, -mult);
    for (std::size_t k = 0; k < n; ++k) {
        s[k] = binom * cp * ((k % 2) ? -1.0 : 1.0);
        binom *= static_cast<double>(mult + k) / static_cast<double>(k + 1);
        cp /= c;
    }
    return s;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Integer alpha_i of the double condition, when the condition data proves
// them integral (k_i = eps_i = 0).
std::optional<std::pair<long long, long long>> integer_alphas(const DoubleCondition& dc) {
    if (dc.k1 != 0 || dc.eps1 != 0 || dc.k2 != 0 || dc.eps2 != 0) return std::nullopt;
    long long a1 = 1 - (2 * dc.r1 + dc.e1);
    long long a2 = 2 * dc.r2 + dc.e2;
    return std::make_pair(a1, a2);
}

}  // namespace

double DensityForm::eval1d(double z) const {
    switch (kind) {
        case Kind::SumOfExponentials: {
            double v = 0;
            for (const auto& t : terms) v += t.coef * std::pow(z, t.power) * std::exp(-t.rate * z);
            return v;
        }
        case Kind::GammaHalf:
            if (z <= 0) return 0;
            return mass * std::sqrt(rate / kPi) * std::exp(-rate * z) / std::sqrt(z);
        case Kind::Erf:
            if (z <= 0) return 0;
            return erf_coef * std::erf(std::sqrt(erf_b * z)) * std::exp(-erf_a * z);
        case Kind::WedgePolar:
            throw NotCovered("WedgePolar density is two-dimensional");
    }
    return 0;
}

double DensityForm::eval2d(double u1, double u2) const {
    if (kind != Kind::WedgePolar) throw NotCovered("eval2d: not a two-dimensional density");
    if (u1 < 0 || u2 < 0) return 0;
    const double z1 = wp_sx * u1, z2 = wp_sy * u2;
    cplx zc = cplx(z1, 0) + z2 * std::polar(1.0, wp_beta);
    const double rho = std::abs(zc);
    if (rho == 0) return 0;  // integrable 1/sqrt(rho) singularity
    const double a = std::arg(zc);
    const double c = std::cos(0.5 * (wp_theta - a));
    return wp_kappa * c / std::sqrt(rho) * std::exp(-2.0 * rho * c * c);
}

DensityForm density(const LaplaceForm& f) {
    const Model& m = f.model;

    if (f.sc && f.sc->k == 0) {
        // phi1 = kappa / P with P real-rooted: partial fractions term by
        // term; coincident roots within tolerance merge into multiplicities.
        std::vector<double> roots = f.poly_p;
        std::sort(roots.begin(), roots.end());
        std::vector<std::pair<double, int>> groups;
        for (double r : roots) {
            if (!groups.empty() && std::fabs(r - groups.back().first) < kMergeTol * (1.0 + std::fabs(r)))
                groups.back().second++;
            else
                groups.emplace_back(r, 1);
        }
        for (auto& [r, mult] : groups)
            if (r <= 0) throw NotCovered("nonpositive kernel root: density is not a mix of exponentials");

        DensityForm d;
        d.kind = DensityForm::Kind::SumOfExponentials;
        d.mass = m.mass1;
        for (std::size_t i = 0; i < groups.size(); ++i) {
            const auto [yi, mi] = groups[i];
            // Taylor of kappa / prod_{j != i} (y - y_j)^{m_j} at y_i.
            Series H{f.kappa};
            H.resize(static_cast<std::size_t>(mi), 0.0);
            for (std::size_t j = 0; j < groups.size(); ++j) {
                if (j == i) continue;
                H = series_mul(H, inv_power_series(yi - groups[j].first, groups[j].second,
                                                   static_cast<std::size_t>(mi)),
                               static_cast<std::size_t>(mi));
            }
            // kappa/P = sum_l A_l / (y - y_i)^l with A_l = H^{(m_i - l)}(y_i)/(m_i - l)!;
            // each 1/(y_i - y)^l term inverts to z^{l-1} e^{-y_i z}/(l-1)!.
            for (int l = 1; l <= mi; ++l) {
                double A = H[static_cast<std::size_t>(mi - l)];
                double coef = A * ((l % 2) ? -1.0 : 1.0) / static_cast<double>(factorial(l - 1));
                d.terms.push_back({coef, l - 1, yi});
            }
        }
        return d;
    }

    if (f.dc) {
        auto ia = integer_alphas(*f.dc);
        if (ia && ia->first == 0 && ia->second == 0) {
            DensityForm d;
            d.kind = DensityForm::Kind::GammaHalf;
            d.mass = m.mass1;
            d.rate = m.y_plus;
            return d;
        }
        if (ia && ((ia->first == -2 && ia->second == 0) || (ia->first == -1 && ia->second == -1))) {
            // phi1 = kappa / ((y - a) sqrt(y+ - y)) with a = y(s1):
            // nu1 has density coef * erf(sqrt(b z)) e^{-a z}, b = y+ - a.
            KernelGeometry kg = special_points(m);
            const double a = y_of_unit(m, kg.s1);
            const double b = m.y_plus - a;
            if (a <= 0 || b <= 0) throw NotCovered("erf density requires 0 < y(s1) < y+");
            DensityForm d;
            d.kind = DensityForm::Kind::Erf;
            d.mass = m.mass1;
            d.erf_a = a;
            d.erf_b = b;
            d.erf_coef = m.mass1 * a * std::sqrt(a + b) / std::sqrt(b);
            return d;
        }
    }
    throw NotCovered("no catalogued density for this parameter regime");
}

DensityForm density_joint(const Model& m, const ConditionData& c) {
    if (!c.dbl) throw NotCovered("joint density requires alpha1 = alpha2 = 0");
    auto ia = integer_alphas(*c.dbl);
    if (!ia || ia->first != 0 || ia->second != 0)
        throw NotCovered("joint density requires alpha1 = alpha2 = 0");

    const WedgeModel& w = m.w;
    const double det = m.q.det_sigma();
    DensityForm d;
    d.kind = DensityForm::Kind::WedgePolar;
    d.mass = 1.0;
    d.wp_kappa = 2.0 * std::sqrt(2.0) * w.Delta * std::sin(w.delta) * std::sin(w.eps) /
                 (std::sqrt(kPi) * std::pow(det, 1.5) * std::sin(0.5 * w.beta));
    d.wp_beta = w.beta;
    d.wp_theta = w.theta;
    d.wp_sx = m.sx;
    d.wp_sy = m.sy;
    return d;
}

}  // namespace srbm
