#pragma once

#include <optional>
#include <string>

#include "srbm/model.hpp"

namespace srbm {

enum class Mode { Exact, Numerical };

// The three angle ratios driving the whole classification:
//   alpha  = (delta + eps - pi) / beta,
//   alpha1 = (2 eps + theta - beta - pi) / beta,
//   alpha2 = (2 delta - theta - pi) / beta,
// with alpha1 + alpha2 = 2 alpha - 1.  Exact values are available when the
// angles were declared as rational multiples of pi.
struct AngleData {
    double alpha = 0, alpha1 = 0, alpha2 = 0;
    Mode mode = Mode::Numerical;
    std::optional<Rational> beta_over_pi;  // set in exact mode
    std::optional<Rational> alpha_exact, alpha1_exact, alpha2_exact;
    WedgeModel wedge;
};

// Integer witnesses of the simple condition: s1/s2 = q^r and
// delta + eps = (1 - r) beta + (1 + k) pi.
struct SimpleCondition {
    long long r = 0, k = 0;
};

// Integer witnesses of the double condition: s_i = (-1)^{eps_i} sqrt(q)^{e_i} q^{r_i},
// equivalently arg s_i = (2 r_i + e_i) beta - (2 k_i + eps_i) pi.
struct DoubleCondition {
    long long r1 = 0, k1 = 0, r2 = 0, k2 = 0;
    int e1 = 0, eps1 = 0, e2 = 0, eps2 = 0;
};

struct ConditionData {
    std::optional<SimpleCondition> simple;
    std::optional<DoubleCondition> dbl;
    Mode mode = Mode::Numerical;
    // True when a numerical-mode lattice hit occurred without declared
    // exactness; the classification is then best-effort.
    bool ambiguous = false;
    bool beta_rational = false;            // beta/pi in Q (exact knowledge or tight numerical hit)
    std::optional<Rational> beta_over_pi;  // when beta_rational and known
};

enum class NatureClass { Rational, Algebraic, DFinite, DAlgebraic, DTranscendental };

struct Nature {
    NatureClass cls = NatureClass::DTranscendental;
    bool logderiv_dfinite = false;                 // true whenever beta/pi in Q
    std::optional<bool> recip_phi1_dfinite;        // set when decidable
    // In the beta/pi in Q regime D-finite and algebraic coincide; the
    // classifier reports Algebraic and records the equivalence here.
    bool dfinite_equals_algebraic = false;
};

std::string to_string(NatureClass c);

AngleData alphas(const WedgeModel& w);
AngleData alphas(const Model& m);

// Decide the simple and double angle conditions.  Exact mode solves the
// integer data by rational arithmetic and picks |r| minimal (|r| < d when
// beta = n pi / d, so the -1 multiplicities stay in {0, 1}).  Numerical mode
// is a lattice-proximity search with tolerance 1e-9, flagged ambiguous.
ConditionData angle_conditions(const AngleData& a);

// Same decision, but a lattice hit from float inputs without declared
// exactness throws AmbiguousNumerical instead of returning a best-effort
// flag (membership in Z + (pi/beta) Z is undecidable from floats).
ConditionData angle_conditions_strict(const AngleData& a);

Nature nature_of(const AngleData& a, const ConditionData& c);

}  // namespace srbm
