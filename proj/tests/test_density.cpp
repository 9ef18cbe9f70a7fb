#include <doctest.h>

#include "helpers.hpp"
#include "srbm/catalog.hpp"
#include "srbm/density.hpp"
#include "srbm/oracle.hpp"

using namespace srbm;
using test::rel_err;

namespace {
struct Built {
    const CatalogEntry& e;
    LaplaceForm f;
    DensityForm d;
};
Built built(const char* name) {
    const CatalogEntry& e = catalog_entry(name);
    LaplaceForm f = build_phi1(e.model, angle_conditions(alphas(e.model)));
    DensityForm d = density(f);
    return {e, f, d};
}
}  // namespace

TEST_CASE("skew symmetric density is a single exponential") {
    Built b = built("skew_symmetric");
    REQUIRE(b.d.kind == DensityForm::Kind::SumOfExponentials);
    REQUIRE(b.d.terms.size() == 1);
    CHECK(b.d.terms[0].power == 0);
    double rate = y_of_unit(b.e.model, special_points(b.e.model).s1);
    CHECK(b.d.terms[0].rate == doctest::Approx(rate).epsilon(1e-12));
    CHECK(b.d.terms[0].coef == doctest::Approx(b.e.model.mass1 * rate).epsilon(1e-10));
}

TEST_CASE("double kernel root gives an Erlang factor") {
    Built b = built("erlang_double_root");
    REQUIRE(b.d.kind == DensityForm::Kind::SumOfExponentials);
    // kappa/(y(1) - y)^2 inverts to a pure z e^{-y(1) z} profile.
    REQUIRE(b.d.terms.size() == 2);
    double c_linear = 0, c_const = 0;
    for (const auto& t : b.d.terms) {
        if (t.power == 1)
            c_linear = t.coef;
        else
            c_const += std::fabs(t.coef);
    }
    CHECK(c_linear > 0);
    CHECK(c_const < 1e-9 * c_linear);
    double rate = y_of_unit(b.e.model, cplx(1.0, 0));
    for (const auto& t : b.d.terms) CHECK(t.rate == doctest::Approx(rate).epsilon(1e-9));
}

TEST_CASE("generic alpha = -1 mix of two exponentials") {
    Built b = built("exponential_mix");
    REQUIRE(b.d.kind == DensityForm::Kind::SumOfExponentials);
    CHECK(b.d.terms.size() == 2);
    for (const auto& t : b.d.terms) {
        CHECK(t.power == 0);
        CHECK(t.rate > 0);
    }
}

TEST_CASE("density mass and transform consistency") {
    for (const char* name :
         {"skew_symmetric", "skew_symmetric_generic", "exponential_mix", "erlang_double_root",
          "half_alpha_sqrt", "erf_density_shifted", "erf_density_symmetric"}) {
        Built b = built(name);
        INFO(name);
        CHECK(std::fabs(numeric_mass(b.e.model, b.d) - b.e.model.mass1) <
              1e-6 * (1 + b.e.model.mass1));
        for (double y : {-2.0, -0.7, -0.1}) {
            cplx lhs = numeric_laplace2d(b.e.model, b.d, cplx(0, 0), cplx(y, 0));
            cplx rhs = eval_phi1(b.f, cplx(y, 0));
            CHECK(rel_err(lhs, rhs) < 1e-5);
        }
    }
}

TEST_CASE("gamma(1/2) boundary law in the half-alpha case") {
    Built b = built("half_alpha_sqrt");
    REQUIRE(b.d.kind == DensityForm::Kind::GammaHalf);
    CHECK(b.d.rate == doctest::Approx(b.e.model.y_plus).epsilon(1e-12));
}

TEST_CASE("erf densities") {
    for (const char* name : {"erf_density_shifted", "erf_density_symmetric"}) {
        Built b = built(name);
        INFO(name);
        REQUIRE(b.d.kind == DensityForm::Kind::Erf);
        CHECK(b.d.erf_a > 0);
        CHECK(b.d.erf_b > 0);
        CHECK(b.d.erf_a + b.d.erf_b == doctest::Approx(b.e.model.y_plus).epsilon(1e-10));
    }
    CHECK_THROWS_AS((void)built("sqrt_with_pole"), NotCovered);
}

TEST_CASE("wedge polar joint density") {
    const CatalogEntry& e = catalog_entry("half_alpha_sqrt");
    ConditionData c = angle_conditions(alphas(e.model));
    DensityForm d = density_joint(e.model, c);
    REQUIRE(d.kind == DensityForm::Kind::WedgePolar);

    // Normalization constant matches |2 mu~|^{3/2} sin d sin e / (sqrt(pi) sin(b/2))
    // after undoing the quadrant scalings.
    const WedgeModel& w = e.model.w;
    double mu_norm = std::sqrt(w.Delta / e.model.q.det_sigma());
    double kp = std::pow(2.0 * mu_norm, 1.5) * std::sin(w.delta) * std::sin(w.eps) /
                (std::sqrt(kPi) * std::sin(0.5 * w.beta));
    double kp_from_kappa = d.wp_kappa * std::pow(w.Delta, -0.25) * std::pow(e.model.q.det_sigma(), 0.75);
    CHECK(kp_from_kappa == doctest::Approx(kp).epsilon(1e-10));

    CHECK(std::fabs(numeric_mass(e.model, d) - 1.0) < 1e-5);
    // The transform of the joint density matches the algebraic closed form.
    for (double x : {-1.5, -0.4}) {
        for (double y : {-2.0, -0.3}) {
            cplx lhs = numeric_laplace2d(e.model, d, cplx(x, 0), cplx(y, 0));
            cplx rhs = phi_alg_half_case(e.model, x, y);
            CHECK(rel_err(lhs, rhs) < 1e-5);
        }
    }
    CHECK_THROWS_AS((void)density_joint(catalog_entry("skew_symmetric").model,
                                        angle_conditions(alphas(catalog_entry("skew_symmetric").model))),
                    NotCovered);
}
