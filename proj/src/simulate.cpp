#include "srbm/simulate.hpp"

#include <cmath>
#include <thread>

namespace srbm {

namespace {

// splitmix64 for seeding, xoshiro256** for the streams.  Hand-rolled so the
// streams are identical across standard libraries.
struct SplitMix64 {
    std::uint64_t s;
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

struct Xoshiro256 {
    std::uint64_t s[4];
    explicit Xoshiro256(std::uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& w : s) w = sm.next();
    }
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t next() {
        const std::uint64_t result = rotl(s[1] * 5, 7) * 9;
        const std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }
    double uniform() {  // in (0, 1)
        return (static_cast<double>(next() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }
};

struct GaussianStream {
    Xoshiro256 rng;
    double spare = 0;
    bool have_spare = false;
    explicit GaussianStream(std::uint64_t seed) : rng(seed) {}
    double next() {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        // Box-Muller.
        double u1 = rng.uniform(), u2 = rng.uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare = r * std::sin(2.0 * kPi * u2);
        have_spare = true;
        return r * std::cos(2.0 * kPi * u2);
    }
};

struct PathAccumulator {
    // Batch sums of Z_i^k, k = 1..4.
    std::vector<std::array<double, 8>> batch_sums;  // [z1,z1^2,z1^3,z1^4,z2,...]
    std::vector<long long> batch_counts;
    std::vector<double> hist;
    long long in_strip[2] = {0, 0};
    long long samples = 0;
    long long hist_samples = 0;
    double out_of_range = 0;
};

void run_path(const QuadrantModel& q, const SimConfig& cfg, std::uint64_t seed, double amat[3],
              double hist_max1, double hist_max2, PathAccumulator& out) {
    GaussianStream g(seed);
    const double dt = cfg.dt;
    const double sdt = std::sqrt(dt);
    const long long steps = static_cast<long long>(cfg.horizon / cfg.n_paths / dt);
    const long long burn = static_cast<long long>(cfg.burn_in_fraction * steps);
    const long long record = steps - burn;
    const int nb = cfg.batches_per_path;
    out.batch_sums.assign(static_cast<std::size_t>(nb), {});
    out.batch_counts.assign(static_cast<std::size_t>(nb), 0);
    out.hist.assign(static_cast<std::size_t>(cfg.hist_bins) * cfg.hist_bins, 0.0);

    double z1 = -q.mu1, z2 = -q.mu2;  // any interior start; burn-in forgets it
    for (long long step = 0; step < steps; ++step) {
        const double g1 = g.next(), g2 = g.next();
        z1 += q.mu1 * dt + sdt * (amat[0] * g1 + amat[1] * g2);
        z2 += q.mu2 * dt + sdt * (amat[1] * g1 + amat[2] * g2);
        // Oblique pushback onto the quadrant, alternating faces.
        int pass = 0;
        while (z1 < 0 || z2 < 0) {
            if (z1 < 0) {
                const double t = -z1 / q.r11;
                z1 = 0;
                z2 += q.r21 * t;
            }
            if (z2 < 0) {
                const double t = -z2 / q.r22;
                z2 = 0;
                z1 += q.r12 * t;
            }
            if (++pass > 100)
                throw PushbackDivergence("pushback did not restore the quadrant at step " +
                                         std::to_string(step));
        }
        if (step < burn) continue;
        const long long i = step - burn;
        auto& bs = out.batch_sums[static_cast<std::size_t>(i * nb / record)];
        out.batch_counts[static_cast<std::size_t>(i * nb / record)]++;
        double p1 = z1, p2 = z2;
        for (int k = 0; k < 4; ++k) {
            bs[static_cast<std::size_t>(k)] += p1;
            bs[static_cast<std::size_t>(4 + k)] += p2;
            p1 *= z1;
            p2 *= z2;
        }
        if (i % cfg.hist_stride == 0) {
            int b1 = static_cast<int>(z1 / hist_max1 * cfg.hist_bins);
            int b2 = static_cast<int>(z2 / hist_max2 * cfg.hist_bins);
            if (b1 < cfg.hist_bins && b2 < cfg.hist_bins)
                out.hist[static_cast<std::size_t>(b1) * cfg.hist_bins + b2] += 1.0;
            else
                out.out_of_range += 1.0;
            out.hist_samples++;
        }
        if (z1 < cfg.strip_width) out.in_strip[0]++;
        if (z2 < cfg.strip_width) out.in_strip[1]++;
        out.samples++;
    }
}

}  // namespace

SampleStats simulate(const QuadrantModel& q, const SimConfig& cfg) {
    if (!(cfg.dt > 0) || !(cfg.burn_in_fraction >= 0) || !(cfg.burn_in_fraction < 1))
        throw InvalidModel("simulate: bad configuration");
    ConditionReport rep = validate(q);
    if (!rep.valid) throw InvalidModel("simulate: invalid model: " + rep.violated);

    // Symmetric positive square root of Sigma (2x2 closed form).
    const double det = q.det_sigma();
    const double sdet = std::sqrt(det);
    const double denom = std::sqrt(q.sigma11 + q.sigma22 + 2.0 * sdet);
    double amat[3] = {(q.sigma11 + sdet) / denom, q.sigma12 / denom, (q.sigma22 + sdet) / denom};

    // Deterministic histogram window: the sigma^2/(2 |mu|) scale of the
    // one-dimensional reflected picture, unless the caller fixed one.
    const double hist_max1 = cfg.hist_max1 > 0 ? cfg.hist_max1 : 4.0 * q.sigma11 / std::fabs(q.mu1);
    const double hist_max2 = cfg.hist_max2 > 0 ? cfg.hist_max2 : 4.0 * q.sigma22 / std::fabs(q.mu2);

    std::vector<PathAccumulator> acc(static_cast<std::size_t>(cfg.n_paths));
    std::vector<std::exception_ptr> errors(acc.size());
    std::vector<std::thread> workers;
    workers.reserve(acc.size());
    for (int p = 0; p < cfg.n_paths; ++p)
        workers.emplace_back([&, p] {
            try {
                run_path(q, cfg, cfg.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(p) + 1,
                         amat, hist_max1, hist_max2, acc[static_cast<std::size_t>(p)]);
            } catch (...) {
                errors[static_cast<std::size_t>(p)] = std::current_exception();
            }
        });
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    SampleStats st;
    st.bins = cfg.hist_bins;
    st.hist_max1 = hist_max1;
    st.hist_max2 = hist_max2;
    st.hist.assign(static_cast<std::size_t>(cfg.hist_bins) * cfg.hist_bins, 0.0);

    // Batch means across all paths (merging is associative and ordered by
    // path index, so the result does not depend on thread scheduling).
    std::vector<std::array<double, 8>> means;
    for (const auto& a : acc) {
        st.samples += a.samples;
        st.hist_samples += a.hist_samples;
        st.out_of_range_mass += a.out_of_range;
        st.strip_fraction[0] += static_cast<double>(a.in_strip[0]);
        st.strip_fraction[1] += static_cast<double>(a.in_strip[1]);
        for (std::size_t i = 0; i < st.hist.size(); ++i) st.hist[i] += a.hist[i];
        for (std::size_t b = 0; b < a.batch_sums.size(); ++b) {
            std::array<double, 8> mb{};
            for (int k = 0; k < 8; ++k)
                mb[static_cast<std::size_t>(k)] =
                    a.batch_sums[b][static_cast<std::size_t>(k)] / static_cast<double>(a.batch_counts[b]);
            means.push_back(mb);
        }
    }
    const double nb = static_cast<double>(means.size());
    for (int c = 0; c < 2; ++c)
        for (int k = 0; k < 4; ++k) {
            double m1 = 0, m2 = 0;
            for (const auto& mb : means) {
                double v = mb[static_cast<std::size_t>(4 * c + k)];
                m1 += v;
                m2 += v * v;
            }
            m1 /= nb;
            m2 = m2 / nb - m1 * m1;
            st.moment[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] = m1;
            st.moment_se[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] =
                std::sqrt(std::fmax(m2, 0.0) / (nb - 1.0));
        }

    const double total = static_cast<double>(st.samples);
    const double htotal = static_cast<double>(st.hist_samples);
    for (auto& h : st.hist) h /= htotal;
    st.out_of_range_mass /= htotal;
    st.strip_fraction[0] /= total;
    st.strip_fraction[1] /= total;
    return st;
}

}  // namespace srbm
