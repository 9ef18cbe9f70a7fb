#include "srbm/classify.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

namespace srbm {

namespace {

constexpr double kLatticeTol = 1e-9;
constexpr long long kSearchBound = 64;

long long mod_inverse(long long a, long long m) {
    // Extended Euclid; gcd(a, m) = 1 by construction.
    long long t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
    while (new_r != 0) {
        long long qt = r / new_r;
        std::swap(t -= qt * new_t, new_t);
        std::swap(r -= qt * new_r, new_r);
    }
    return ((t % m) + m) % m;
}

bool is_near_integer(double x, long long& out) {
    out = std::llround(x);
    return std::fabs(x - static_cast<double>(out)) < kLatticeTol;
}

// Minimal-|R| solution of R p - K q = G over integers (gcd(p, q) = 1).
// When forbid_zero, the smallest nonzero |R| representative is returned.
void solve_lattice(long long p, long long q, long long G, bool forbid_zero, long long& R, long long& K) {
    if (q == 1) {
        // Unreachable for beta in (0, pi), kept for completeness: any R works.
        R = forbid_zero ? 1 : 0;
        K = R * p - G;
        return;
    }
    long long c = (((G % q) * mod_inverse(p, q)) % q + q) % q;  // class of R mod q
    long long best = 0;
    bool have = false;
    for (long long cand : {c, c - q, c + q}) {
        if (forbid_zero && cand == 0) continue;
        if (!have || std::llabs(cand) < std::llabs(best) ||
            (std::llabs(cand) == std::llabs(best) && cand > best)) {
            best = cand;
            have = true;
        }
    }
    R = best;
    K = (R * p - G) / q;
}


}  // namespace

std::string to_string(NatureClass c) {
    switch (c) {
        case NatureClass::Rational: return "rational";
        case NatureClass::Algebraic: return "algebraic";
        case NatureClass::DFinite: return "d-finite";
        case NatureClass::DAlgebraic: return "d-algebraic";
        case NatureClass::DTranscendental: return "d-transcendental";
    }
    return "?";
}

AngleData alphas(const WedgeModel& w) {
    AngleData a;
    a.wedge = w;
    a.alpha = (w.delta + w.eps - kPi) / w.beta;
    a.alpha1 = (2.0 * w.eps + w.theta - w.beta - kPi) / w.beta;
    a.alpha2 = (2.0 * w.delta - w.theta - kPi) / w.beta;
    return a;
}

AngleData alphas(const Model& m) {
    AngleData a = alphas(m.w);
    if (m.exact) {
        const ExactAngles& e = *m.exact;
        a.mode = Mode::Exact;
        a.beta_over_pi = e.beta;
        a.alpha_exact = (e.delta + e.eps - Rational(1)) / e.beta;
        a.alpha1_exact = (Rational(2) * e.eps + e.theta - e.beta - Rational(1)) / e.beta;
        a.alpha2_exact = (Rational(2) * e.delta - e.theta - Rational(1)) / e.beta;
        // Prefer the exact values for the float mirrors too.
        a.alpha = a.alpha_exact->value();
        a.alpha1 = a.alpha1_exact->value();
        a.alpha2 = a.alpha2_exact->value();
    }
    return a;
}

ConditionData angle_conditions(const AngleData& a) {
    ConditionData c;
    c.mode = a.mode;
    const double B = a.wedge.beta / kPi;

    if (a.mode == Mode::Exact) {
        const Rational Bq = *a.beta_over_pi;
        const long long p = Bq.num, q = Bq.den;
        c.beta_rational = true;
        c.beta_over_pi = Bq;

        // Simple condition: q (B alpha) integral; then r B - k = B (1 - alpha)... in
        // pi units: r B - k = B + 1 - D - E.
        Rational Ba = Bq * *a.alpha_exact;  // = D + E - 1
        Rational g = Bq + Rational(1) - (Ba + Rational(1));
        Rational Gq = g * Rational(q);
        if (Gq.is_integer()) {
            SimpleCondition sc;
            solve_lattice(p, q, Gq.num, /*forbid_zero=*/true, sc.r, sc.k);
            c.simple = sc;
        }

        // Double condition on the arguments H1 = B (1 - alpha1), H2 = B alpha2.
        Rational H1 = Bq * (Rational(1) - *a.alpha1_exact);
        Rational H2 = Bq * *a.alpha2_exact;
        Rational G1 = H1 * Rational(q), G2 = H2 * Rational(q);
        if (G1.is_integer() && G2.is_integer()) {
            DoubleCondition dc;
            long long R1, K1, R2, K2;
            solve_lattice(p, q, G1.num, /*forbid_zero=*/false, R1, K1);
            solve_lattice(p, q, G2.num, /*forbid_zero=*/false, R2, K2);
            dc.e1 = static_cast<int>(((R1 % 2) + 2) % 2);
            dc.r1 = (R1 - dc.e1) / 2;
            dc.eps1 = static_cast<int>(((K1 % 2) + 2) % 2);
            dc.k1 = (K1 - dc.eps1) / 2;
            dc.e2 = static_cast<int>(((R2 % 2) + 2) % 2);
            dc.r2 = (R2 - dc.e2) / 2;
            dc.eps2 = static_cast<int>(((K2 % 2) + 2) % 2);
            dc.k2 = (K2 - dc.eps2) / 2;
            c.dbl = dc;
        }
        return c;
    }

    // Numerical mode.  First look for a small-denominator rational beta/pi.
    for (long long q = 1; q <= kSearchBound; ++q) {
        long long pq = std::llround(B * static_cast<double>(q));
        if (pq <= 0 || pq >= q) continue;
        if (std::gcd(pq, q) != 1) continue;
        if (std::fabs(B - static_cast<double>(pq) / static_cast<double>(q)) < kLatticeTol) {
            c.beta_rational = true;
            c.beta_over_pi = Rational(pq, q);
            break;
        }
    }

    const double A = 1.0 / B;  // pi / beta
    // Simple: alpha = 1 - r + k A for integers r != 0, k; pick |r| minimal.
    {
        bool found = false;
        SimpleCondition best;
        for (long long k = -kSearchBound; k <= kSearchBound; ++k) {
            double rr = 1.0 - a.alpha + static_cast<double>(k) * A;
            long long r;
            if (!is_near_integer(rr, r) || r == 0) continue;
            if (!found || std::llabs(r) < std::llabs(best.r)) {
                best = {r, k};
                found = true;
            }
        }
        if (found) {
            c.simple = best;
            c.ambiguous = true;
        }
    }
    // Double: 1 - alpha1 = R1 - K1 A and alpha2 = R2 - K2 A.
    {
        bool f1 = false, f2 = false;
        long long R1 = 0, K1 = 0, R2 = 0, K2 = 0;
        for (long long K = -kSearchBound; K <= kSearchBound; ++K) {
            long long R;
            if (is_near_integer(1.0 - a.alpha1 + static_cast<double>(K) * A, R))
                if (!f1 || std::llabs(R) < std::llabs(R1)) {
                    R1 = R;
                    K1 = K;
                    f1 = true;
                }
            if (is_near_integer(a.alpha2 + static_cast<double>(K) * A, R))
                if (!f2 || std::llabs(R) < std::llabs(R2)) {
                    R2 = R;
                    K2 = K;
                    f2 = true;
                }
        }
        if (f1 && f2) {
            DoubleCondition dc;
            dc.e1 = static_cast<int>(((R1 % 2) + 2) % 2);
            dc.r1 = (R1 - dc.e1) / 2;
            dc.eps1 = static_cast<int>(((K1 % 2) + 2) % 2);
            dc.k1 = (K1 - dc.eps1) / 2;
            dc.e2 = static_cast<int>(((R2 % 2) + 2) % 2);
            dc.r2 = (R2 - dc.e2) / 2;
            dc.eps2 = static_cast<int>(((K2 % 2) + 2) % 2);
            dc.k2 = (K2 - dc.eps2) / 2;
            c.dbl = dc;
            c.ambiguous = true;
        }
    }
    return c;
}

ConditionData angle_conditions_strict(const AngleData& a) {
    ConditionData c = angle_conditions(a);
    if (c.ambiguous)
        throw AmbiguousNumerical(
            "angles sit within 1e-9 of an integer lattice point but were not declared exact");
    return c;
}

namespace {

bool near_nonpositive_integer(const AngleData& a, double v, const std::optional<Rational>& ex) {
    if (a.mode == Mode::Exact && ex) return ex->is_integer() && ex->num <= 0;
    long long n;
    return is_near_integer(v, n) && n <= 0;
}

bool near_integer_value(const AngleData& a, double v, const std::optional<Rational>& ex) {
    if (a.mode == Mode::Exact && ex) return ex->is_integer();
    long long n;
    return is_near_integer(v, n);
}

}  // namespace

Nature nature_of(const AngleData& a, const ConditionData& c) {
    Nature n;
    const bool alpha_neg_int = near_nonpositive_integer(a, a.alpha, a.alpha_exact);
    const bool a1_int = near_integer_value(a, a.alpha1, a.alpha1_exact);
    const bool a2_int = near_integer_value(a, a.alpha2, a.alpha2_exact);
    const bool any_condition = c.simple.has_value() || c.dbl.has_value();

    if (c.beta_rational) {
        n.logderiv_dfinite = true;
        n.recip_phi1_dfinite = true;
        if (alpha_neg_int)
            n.cls = NatureClass::Rational;
        else if (any_condition) {
            n.cls = NatureClass::Algebraic;
            n.dfinite_equals_algebraic = true;
        } else
            n.cls = NatureClass::DAlgebraic;
        return n;
    }

    // beta/pi irrational: the integer witnesses are unique, so the lattice
    // memberships reduce to sign tests on them.
    const bool simple_df = c.simple && c.simple->r > 0;  // alpha in -N0 + (pi/beta) Z
    bool double_df = false;
    if (c.dbl) {
        const DoubleCondition& d = *c.dbl;
        bool m1 = a1_int || (2 * d.r1 + d.e1 >= 2);   // alpha1 in Z or -N + (pi/beta) Z
        bool m2 = a2_int || (2 * d.r2 + d.e2 <= -1);  // alpha2 likewise
        double_df = m1 && m2;
    }

    if (alpha_neg_int)
        n.cls = NatureClass::Rational;
    else if (a1_int && a2_int && c.dbl)
        n.cls = NatureClass::Algebraic;
    else if (simple_df || double_df)
        n.cls = NatureClass::DFinite;
    else if (any_condition)
        n.cls = NatureClass::DAlgebraic;
    else
        n.cls = NatureClass::DTranscendental;

    if (c.simple)
        n.recip_phi1_dfinite = (c.simple->k == 0) || (c.simple->r < 0);
    else if (n.cls == NatureClass::DTranscendental)
        n.recip_phi1_dfinite = false;
    return n;
}

}  // namespace srbm
