#include <doctest.h>

#include "helpers.hpp"
#include "srbm/catalog.hpp"
#include "srbm/classify.hpp"
#include "srbm/kernel.hpp"

using namespace srbm;
using test::ModelGen;

TEST_CASE("alpha values on reference configurations") {
    // Skew symmetry: alpha = 0.
    AngleData a = alphas(catalog_entry("skew_symmetric").model);
    CHECK(a.mode == Mode::Exact);
    CHECK(a.alpha_exact->num == 0);

    // Double-root configuration: alpha = -1.
    a = alphas(catalog_entry("erlang_double_root").model);
    CHECK(*a.alpha_exact == Rational(-1));

    // alpha1 = alpha2 = 0 forces alpha = 1/2.
    a = alphas(catalog_entry("half_alpha_sqrt").model);
    CHECK(std::fabs(a.alpha1) < 1e-10);
    CHECK(std::fabs(a.alpha2) < 1e-10);
    CHECK(std::fabs(a.alpha - 0.5) < 1e-10);

    ModelGen gen(61);
    for (int i = 0; i < 100; ++i) {
        AngleData aa = alphas(Model::from_quadrant(gen.valid()));
        CHECK(std::fabs(aa.alpha1 + aa.alpha2 - (2 * aa.alpha - 1)) < 1e-12);
        CHECK(aa.alpha < 1.0);
    }
}

TEST_CASE("integer witnesses of the simple condition") {
    auto check_rk = [](const char* name) {
        const CatalogEntry& e = catalog_entry(name);
        ConditionData c = angle_conditions(alphas(e.model));
        REQUIRE(c.simple.has_value());
        CHECK(c.simple->r == e.r);
        CHECK(c.simple->k == e.k);
        // Consistency: s1/s2 = q^r numerically.
        KernelGeometry g = special_points(e.model);
        cplx q = std::polar(1.0, 2.0 * e.model.w.beta);
        CHECK(std::abs(g.s1 / g.s2 - std::pow(q, static_cast<double>(c.simple->r))) < 1e-9);
    };
    check_rk("skew_symmetric");
    check_rk("skew_symmetric_generic");
    check_rk("exponential_mix");
    check_rk("erlang_double_root");
    check_rk("orthogonal");
    check_rk("orthogonal_exact");
    check_rk("dfinite_irrational");
}

TEST_CASE("integer witnesses of the double condition") {
    const CatalogEntry& e = catalog_entry("erf_density_shifted");  // alpha1 = -2, alpha2 = 0
    ConditionData c = angle_conditions(alphas(e.model));
    REQUIRE(c.dbl.has_value());
    CHECK(c.dbl->r1 == 1);
    CHECK(c.dbl->e1 == 1);
    CHECK(c.dbl->r2 == 0);
    CHECK(c.dbl->e2 == 0);
    CHECK(c.dbl->k1 == 0);
    CHECK(c.dbl->eps1 == 0);

    // Residual check: s_i = (-1)^{eps_i} sqrt(q)^{e_i} q^{r_i}.
    KernelGeometry g = special_points(e.model);
    cplx sq = std::polar(1.0, e.model.w.beta);
    auto rebuild = [&](long long r, int ee, int eps) {
        return std::pow(cplx(-1.0, 0.0), eps) * std::pow(sq, static_cast<double>(ee)) *
               std::pow(sq * sq, static_cast<double>(r));
    };
    CHECK(std::abs(g.s1 - rebuild(c.dbl->r1, c.dbl->e1, c.dbl->eps1)) < 1e-9);
    CHECK(std::abs(g.s2 - rebuild(c.dbl->r2, c.dbl->e2, c.dbl->eps2)) < 1e-9);

    ConditionData c2 = angle_conditions(alphas(catalog_entry("half_alpha_sqrt").model));
    REQUIRE(c2.dbl.has_value());
    CHECK(c2.dbl->r1 == 0);
    CHECK(c2.dbl->e1 == 1);
    CHECK(c2.dbl->r2 == 0);
    CHECK(c2.dbl->e2 == 0);
    CHECK_FALSE(c2.simple.has_value());
}

TEST_CASE("classification matches the expected nature for the whole catalog") {
    for (const auto& e : catalog()) {
        AngleData a = alphas(e.model);
        ConditionData c = angle_conditions(a);
        Nature n = nature_of(a, c);
        INFO(e.name);
        CHECK(n.cls == e.expected);
    }
}

TEST_CASE("witnesses satisfy their defining identities and sign rules") {
    for (const auto& e : catalog()) {
        AngleData a = alphas(e.model);
        ConditionData c = angle_conditions(a);
        const WedgeModel& w = e.model.w;
        INFO(e.name);
        if (c.simple) {
            // k pi - r beta = beta (alpha - 1), r != 0, and the sign rule.
            double lhs = c.simple->k * kPi - c.simple->r * w.beta;
            CHECK(std::fabs(lhs - w.beta * (a.alpha - 1.0)) < 1e-10);
            CHECK(c.simple->r != 0);
            if (c.simple->r < 0) CHECK(c.simple->k < 0);
            if (c.simple->r > 0) CHECK(c.simple->k >= 0);
        }
        if (c.dbl) {
            const DoubleCondition& d = *c.dbl;
            double a1 = 1.0 - (2.0 * d.r1 + d.e1) + (2.0 * d.k1 + d.eps1) * kPi / w.beta;
            double a2 = (2.0 * d.r2 + d.e2) - (2.0 * d.k2 + d.eps2) * kPi / w.beta;
            CHECK(std::fabs(a1 - a.alpha1) < 1e-9);
            CHECK(std::fabs(a2 - a.alpha2) < 1e-9);
            if (d.r1 <= 0) CHECK(2 * d.k1 + d.eps1 <= 0);
            if (2 * d.r1 + d.e1 > 0) CHECK(d.k1 >= 0);
            if (d.r2 <= 0) CHECK(d.k2 <= 0);
            if (d.r2 >= 0) CHECK(d.k2 >= 0);
            // The witnesses rebuild the special points on the unit circle.
            KernelGeometry g = special_points(e.model);
            cplx sq = std::polar(1.0, w.beta);
            auto rebuild = [&sq](long long r, int ee, int eps) {
                return std::pow(cplx(-1.0, 0.0), eps) * std::pow(sq, static_cast<double>(ee)) *
                       std::pow(sq * sq, static_cast<double>(r));
            };
            CHECK(std::abs(g.s1 - rebuild(d.r1, d.e1, d.eps1)) < 1e-9);
            CHECK(std::abs(g.s2 - rebuild(d.r2, d.e2, d.eps2)) < 1e-9);
        }
    }
}

TEST_CASE("swap symmetry of the classification") {
    for (const auto& e : catalog()) {
        Model ms = e.model.swapped();
        Nature n = nature_of(alphas(ms), angle_conditions(alphas(ms)));
        INFO(e.name);
        CHECK(n.cls == e.expected);
    }
    ModelGen gen(62);
    for (int i = 0; i < 50; ++i) {
        Model m = Model::from_quadrant(gen.valid());
        Nature n1 = nature_of(alphas(m), angle_conditions(alphas(m)));
        Model ms = m.swapped();
        Nature n2 = nature_of(alphas(ms), angle_conditions(alphas(ms)));
        CHECK(n1.cls == n2.cls);
    }
}

TEST_CASE("rational beta/pi never classifies as transcendental") {
    ModelGen gen(63);
    for (int i = 0; i < 60; ++i) {
        long long d = 3 + static_cast<long long>(gen.uni(0, 8));
        long long nn = 1 + static_cast<long long>(gen.uni(0, static_cast<double>(d - 2)));
        Rational beta(nn, d);
        // Random admissible angles on the beta-wedge with exact beta.
        double b = beta.value() * kPi;
        double theta = gen.uni(0.05, 0.95) * b;
        double lo = std::fmax(std::fmax(theta, b - kPi + theta), 0.0) + 0.02;
        double hi = kPi - 0.02;
        if (lo >= hi) continue;
        double delta = gen.uni(lo, hi);
        double eps_lo = std::fmax(b - theta, delta - kPi + 1e-3) + 0.02;
        double eps_hi = std::fmin(kPi, b + kPi - delta) - 0.02;
        if (eps_lo >= eps_hi) continue;
        double eps = gen.uni(eps_lo, eps_hi);
        Model m;
        try {
            m = Model::from_angles(b, theta, delta, eps);
        } catch (const Error&) {
            continue;
        }
        AngleData a = alphas(m);
        a.mode = Mode::Exact;
        a.beta_over_pi = beta;
        // Exactness of the remaining angles is not declared: only the
        // rational-beta row of the decision table applies.
        a.alpha_exact.reset();
        ConditionData c = angle_conditions(alphas(m));
        Nature n = nature_of(alphas(m), c);
        CHECK(n.cls != NatureClass::DTranscendental);
        CHECK(n.logderiv_dfinite);
    }
}

TEST_CASE("numerical mode flags lattice hits as ambiguous") {
    ConditionData c = angle_conditions(alphas(catalog_entry("skew_symmetric_generic").model));
    CHECK(c.mode == Mode::Numerical);
    CHECK(c.ambiguous);
    CHECK_THROWS_AS((void)angle_conditions_strict(alphas(catalog_entry("skew_symmetric_generic").model)),
                    AmbiguousNumerical);
    CHECK_NOTHROW((void)angle_conditions_strict(alphas(catalog_entry("skew_symmetric").model)));
    ConditionData ce = angle_conditions(alphas(catalog_entry("skew_symmetric").model));
    CHECK(ce.mode == Mode::Exact);
    CHECK_FALSE(ce.ambiguous);
    ConditionData cn = angle_conditions(alphas(catalog_entry("transcendental").model));
    CHECK_FALSE(cn.ambiguous);
    CHECK_FALSE(cn.simple.has_value());
    CHECK_FALSE(cn.dbl.has_value());
}

TEST_CASE("reciprocal and log-derivative flags") {
    Nature n = nature_of(alphas(catalog_entry("orthogonal").model),
                         angle_conditions(alphas(catalog_entry("orthogonal").model)));
    REQUIRE(n.recip_phi1_dfinite.has_value());
    CHECK(*n.recip_phi1_dfinite);  // r < 0
    CHECK_FALSE(n.logderiv_dfinite);

    Nature n2 = nature_of(alphas(catalog_entry("orthogonal_exact").model),
                          angle_conditions(alphas(catalog_entry("orthogonal_exact").model)));
    CHECK(n2.logderiv_dfinite);
    CHECK(n2.dfinite_equals_algebraic);

    Nature n3 = nature_of(alphas(catalog_entry("dfinite_irrational").model),
                          angle_conditions(alphas(catalog_entry("dfinite_irrational").model)));
    REQUIRE(n3.recip_phi1_dfinite.has_value());
    CHECK_FALSE(*n3.recip_phi1_dfinite);  // r = 2 > 0, k = 1 != 0
}
