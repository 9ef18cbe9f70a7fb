#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "srbm/model.hpp"

namespace srbm::test {

inline double rel_err(std::complex<double> got, std::complex<double> want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}

// Deterministic generator of quadrant models; when `valid_only`, rejection
// samples until the stationarity conditions hold with a comfortable margin.
class ModelGen {
public:
    explicit ModelGen(std::uint64_t seed) : rng_(seed) {}

    QuadrantModel any() {
        QuadrantModel q;
        q.sigma11 = uni(0.3, 3.0);
        q.sigma22 = uni(0.3, 3.0);
        q.sigma12 = uni(-0.95, 0.95) * std::sqrt(q.sigma11 * q.sigma22);
        q.mu1 = uni(-3.0, 3.0);
        q.mu2 = uni(-3.0, 3.0);
        q.r11 = uni(0.2, 3.0);
        q.r22 = uni(0.2, 3.0);
        q.r12 = uni(-2.0, 2.0);
        q.r21 = uni(-2.0, 2.0);
        return q;
    }

    QuadrantModel valid() {
        for (;;) {
            QuadrantModel q = any();
            q.mu1 = -std::fabs(q.mu1) - 0.05;
            q.mu2 = -std::fabs(q.mu2) - 0.05;
            ConditionReport rep = validate(q);
            if (!rep.valid) continue;
            bool comfortable = true;
            for (const auto& c : rep.checks)
                if (c.pass && std::fabs(c.margin) < 1e-6) comfortable = false;
            if (comfortable) return q;
        }
    }

    double uni(double lo, double hi) {
        return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace srbm::test
