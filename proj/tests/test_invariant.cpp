#include <doctest.h>

#include "helpers.hpp"
#include "srbm/invariant.hpp"
#include "srbm/kernel.hpp"

using namespace srbm;
using test::ModelGen;

TEST_CASE("values at the anchor points") {
    ModelGen gen(51);
    for (int round = 0; round < 8; ++round) {
        Model m = Model::from_quadrant(gen.valid());
        Invariant w(m);
        CHECK(std::abs(w.eval(cplx(y_of_unit(m, cplx(-1, 0)), 0)) + 1.0) < 1e-10);
        CHECK(std::abs(w.eval(cplx(m.y_minus, 0)) - 1.0) < 1e-10);
    }
}

TEST_CASE("power form along the parametrization") {
    ModelGen gen(52);
    for (int round = 0; round < 6; ++round) {
        Model m = Model::from_quadrant(gen.valid());
        Invariant w(m);
        for (int i = 0; i < 30; ++i) {
            cplx s = std::polar(std::exp(gen.uni(-1.5, 1.5)), gen.uni(0.1, 2 * kPi - 0.1));
            if (std::fabs(std::arg(s) - m.w.beta) < 0.05) continue;  // stay off the log cut
            cplx lhs = w.eval(y_of_s(m, s));
            cplx rhs = w.of_s(s);
            CHECK(std::abs(lhs - rhs) < 1e-10 * (1 + std::abs(rhs)));
        }
        // Real negative s: w(y(s)) = w(y(1/s)) and both match the real branch.
        for (int i = 0; i < 20; ++i) {
            double s = -std::exp(gen.uni(-2.0, 2.0));
            double v = w.on_negative_s(s);
            CHECK(std::abs(w.eval(y_of_s(m, s)) - v) < 1e-10 * (1 + std::fabs(v)));
            CHECK(std::abs(w.eval(y_of_s(m, 1.0 / s)) - v) < 1e-10 * (1 + std::fabs(v)));
            CHECK(v <= -1.0 + 1e-12);
        }
    }
}

TEST_CASE("growth exponent at infinity") {
    Model m = Model::from_angles(2.0, 0.8, 2.0, 1.9);
    Invariant w(m);
    double r3 = std::abs(w.eval(cplx(-1e3, 0))) / std::pow(1e3, w.exponent());
    double r4 = std::abs(w.eval(cplx(-1e4, 0))) / std::pow(1e4, w.exponent());
    CHECK(std::fabs(r3 / r4 - 1.0) < 0.02);
    CHECK(r4 > 0);
}

TEST_CASE("local expansion at the real point of R") {
    ModelGen gen(53);
    for (int round = 0; round < 6; ++round) {
        Model m = Model::from_quadrant(gen.valid());
        Invariant w(m);
        const double y1 = y_of_unit(m, cplx(-1, 0));
        const double coef = 2.0 * kPi * kPi /
                            (m.w.beta * m.w.beta * (m.y_plus - m.y_minus) * (m.y_plus - m.y_minus) *
                             std::sin(m.w.beta) * std::sin(m.w.beta));
        const double h = 1e-4 * (m.y_plus - m.y_minus);
        // Second difference picks out the quadratic coefficient.
        cplx second = (w.eval(cplx(y1 - h, 0)) + w.eval(cplx(y1 + h, 0)) + 2.0) / (h * h);
        CHECK(std::fabs(second.real() / (2.0 * coef) - 1.0) < 1e-3);
        // Direct Taylor data agrees.
        CHECK(std::fabs(0.5 * w.second(cplx(y1, 0)).real() / coef - 1.0) < 1e-9);
    }
}

TEST_CASE("inverse maps back into the closure of G_R") {
    ModelGen gen(54);
    for (int round = 0; round < 6; ++round) {
        Model m = Model::from_quadrant(gen.valid());
        Invariant w(m);
        CHECK(std::abs(w.inverse(cplx(1.0, 0)) - m.y_minus) < 1e-9 * (1 + std::fabs(m.y_minus)));
        CHECK(std::abs(w.inverse(cplx(-1.0, 0)) - y_of_unit(m, cplx(-1, 0))) < 1e-9);
        CHECK(std::abs(w.inverse(w.eval(cplx(0, 0)))) < 1e-10);
        for (int i = 0; i < 40; ++i) {
            cplx z(gen.uni(-0.999, 30.0), gen.uni(-10.0, 10.0));
            cplx y = w.inverse(z);
            CHECK(std::abs(w.eval(y) - z) < 1e-10 * (1 + std::abs(z)));
            Region reg = region_of(m, y);
            CHECK((reg == Region::Interior_GR || reg == Region::On_R));
        }
    }
    CHECK_THROWS_AS((void)Invariant(Model::from_angles(2.0, 0.8, 2.0, 1.9)).inverse(cplx(-2.0, 0)),
                    OnCut);
}

TEST_CASE("cut detection on [y+, inf)") {
    Model m = Model::from_angles(2.0, 0.8, 2.0, 1.9);
    Invariant w(m);
    CHECK_THROWS_AS((void)w.eval(cplx(m.y_plus + 0.5, 0)), OnCut);
    CHECK_NOTHROW((void)w.eval(cplx(m.y_plus + 0.5, 1e-6)));
    CHECK_NOTHROW((void)w.eval(cplx(m.y_plus - 1e-3, 0)));
}
