#include "srbm/catalog.hpp"

#include <stdexcept>

namespace srbm {

namespace {

CatalogEntry exact(std::string name, std::string note, Rational beta, Rational theta, Rational delta,
                   Rational eps, NatureClass cls) {
    CatalogEntry e;
    e.name = std::move(name);
    e.note = std::move(note);
    e.model = Model::from_exact_angles({beta, theta, delta, eps});
    e.expected = cls;
    e.closed_form = true;
    return e;
}

CatalogEntry numeric(std::string name, std::string note, double beta, double theta, double delta,
                     double eps, NatureClass cls) {
    CatalogEntry e;
    e.name = std::move(name);
    e.note = std::move(note);
    e.model = Model::from_angles(beta, theta, delta, eps);
    e.expected = cls;
    e.closed_form = true;
    return e;
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> v;

    {
        auto e = exact("skew_symmetric", "delta + eps = pi: exponential stationary density",
                       {2, 3}, {5, 12}, {2, 3}, {1, 3}, NatureClass::Rational);
        e.density_1d = true;
        e.r = 1;
        e.k = 0;
        v.push_back(e);
    }
    {
        auto e = numeric("skew_symmetric_generic", "skew symmetry with beta/pi irrational", 1.3, 0.9,
                         1.9, kPi - 1.9, NatureClass::Rational);
        e.density_1d = true;
        e.r = 1;
        e.k = 0;
        v.push_back(e);
    }
    {
        auto e = exact("exponential_mix", "alpha = -1 with simple kernel roots", {3, 10}, {1, 5},
                       {9, 20}, {1, 4}, NatureClass::Rational);
        e.density_1d = true;
        e.r = 2;
        e.k = 0;
        v.push_back(e);
    }
    {
        auto e = exact("erlang_double_root", "alpha = -1 with a double kernel root", {5, 16}, {1, 4},
                       {5, 16}, {3, 8}, NatureClass::Rational);
        e.density_1d = true;
        e.r = 2;
        e.k = 0;
        v.push_back(e);
    }
    {
        auto e = numeric("orthogonal", "orthogonal reflections, beta/pi irrational", 1.9, 0.8, 1.9, 1.9,
                         NatureClass::DAlgebraic);
        e.r = -1;
        e.k = -1;
        v.push_back(e);
    }
    {
        auto e = exact("orthogonal_exact", "orthogonal reflections with beta = 2 pi/3", {2, 3}, {1, 3},
                       {2, 3}, {2, 3}, NatureClass::Algebraic);
        e.r = -1;
        e.k = -1;
        v.push_back(e);
    }
    v.push_back(exact("quadratic_transform", "beta = 2 pi/3, alpha = 1/2: quadratic phi1", {2, 3},
                      {1, 3}, {3, 4}, {7, 12}, NatureClass::Algebraic));
    v.push_back(exact("quadratic_transform_boundary",
                      "same with theta = 2 beta - 2 eps: the pole sits on the curve", {2, 3}, {1, 6},
                      {3, 4}, {7, 12}, NatureClass::Algebraic));
    v.push_back(exact("recurrence_pole_interior", "delta + eps + beta = 2 pi, 2 eps + theta < 2 pi",
                      {2, 3}, {1, 4}, {5, 6}, {1, 2}, NatureClass::Algebraic));
    v.push_back(exact("recurrence_pole_exterior", "delta + eps + beta = 2 pi, 2 eps + theta > 2 pi",
                      {2, 3}, {1, 4}, {4, 9}, {8, 9}, NatureClass::Algebraic));
    {
        auto e = exact("recurrence_boundary", "delta + eps + beta = 2 pi = 2 eps + theta", {2, 3},
                       {1, 2}, {7, 12}, {3, 4}, NatureClass::Algebraic);
        e.moments_case = true;
        v.push_back(e);
    }
    {
        auto e = numeric("half_alpha_sqrt", "alpha1 = alpha2 = 0: Gamma(1/2) boundary law", 2.0, 0.8,
                         0.5 * (0.8 + kPi), 0.5 * (2.0 - 0.8 + kPi), NatureClass::Algebraic);
        e.density_1d = true;
        e.density_2d = true;
        v.push_back(e);
    }
    {
        auto e = numeric("erf_density_shifted", "alpha1 = -2, alpha2 = 0", 1.0, 0.5, 0.5 * (0.5 + kPi),
                         0.5 * (kPi - 1.5), NatureClass::Algebraic);
        e.density_1d = true;
        v.push_back(e);
    }
    v.push_back(numeric("sqrt_with_pole", "alpha1 = -1, alpha2 = 1", 1.2, 0.7, 0.5 * (kPi + 1.9),
                        0.5 * (kPi - 0.7), NatureClass::Algebraic));
    {
        auto e = numeric("erf_density_symmetric", "alpha1 = alpha2 = -1", 1.0, 0.8, 0.5 * (kPi - 0.2),
                         0.5 * (kPi - 0.8), NatureClass::Algebraic);
        e.density_1d = true;
        v.push_back(e);
    }
    {
        auto e = numeric("dfinite_irrational", "simple condition with r = 2, k = 1, beta/pi irrational",
                         2.0, 0.9, 2.2, 2.0 * kPi - 4.2, NatureClass::DFinite);
        e.r = 2;
        e.k = 1;
        v.push_back(e);
    }
    {
        auto e = numeric("transcendental", "no angle condition, beta/pi irrational", 2.0, 0.9, 2.0, 1.9,
                         NatureClass::DTranscendental);
        e.closed_form = false;
        v.push_back(e);
    }
    return v;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> v = build();
    return v;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw std::out_of_range("no catalog entry named " + name);
}

}  // namespace srbm
