#include "raptor/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "raptor/rng.hpp"

namespace raptor {

namespace {

// Stream tags keeping trial and code-sampling seeds disjoint.
constexpr std::uint64_t kTagTrial = 0x545249414c535452ULL;
constexpr std::uint64_t kTagCode = 0x434f444553545253ULL;

constexpr double kZ95 = 1.959963984540054;

void validate(const SimConfig& cfg) {
    if (cfg.target_errors < 1)
        throw std::domain_error("SimConfig: target_errors must be >= 1");
    if (cfg.max_trials_per_point < cfg.target_errors)
        throw std::domain_error("SimConfig: max_trials_per_point must be >= target_errors");
    if (cfg.overheads.empty())
        throw std::domain_error("SimConfig: overhead list is empty");
    int prev = -1;
    for (int d : cfg.overheads) {
        if (d < 0 || d <= prev)
            throw std::domain_error("SimConfig: overheads must be strictly increasing and >= 0");
        prev = d;
    }
    if (cfg.ensemble) {
        if (cfg.ensemble->num_codes < 1 || cfg.ensemble->trials_per_code < 1)
            throw std::domain_error("SimConfig: ensemble sizes must be >= 1");
    }
}

void wilson_interval(PointResult& p) {
    const double n = static_cast<double>(p.trials);
    if (n <= 0)
        return;
    const double phat = p.rate;
    p.std_err = std::sqrt(phat * (1.0 - phat) / n);
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half = kZ95 * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    p.ci_low = std::max(0.0, center - half);
    p.ci_high = std::min(1.0, center + half);
}

// Runs fn(first, last) on `workers` threads over a partition of [0, n).
template <class Fn>
void parallel_ranges(long long n, int workers, const Fn& fn) {
    if (n <= 0)
        return;
    const int nw = static_cast<int>(std::max(1LL, std::min<long long>(workers, n)));
    if (nw == 1) {
        fn(0LL, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nw));
    const long long chunk = (n + nw - 1) / nw;
    for (int w = 0; w < nw; ++w) {
        const long long first = w * chunk;
        const long long last = std::min(n, first + chunk);
        if (first >= last)
            break;
        pool.emplace_back([&fn, first, last] { fn(first, last); });
    }
    for (auto& t : pool)
        t.join();
}

} // namespace

SimResult run_fixed_code(const OuterCode& code, const DegreeDistribution& dist,
                         const SimConfig& cfg, int workers) {
    validate(cfg);
    if (code.h() < dist.d_max())
        throw std::domain_error("run_fixed_code: code shorter than the maximum degree");

    SimResult result;
    result.master_seed = cfg.master_seed;
    result.code_hashes.push_back(code.content_hash());

    std::vector<std::uint8_t> flags;
    for (int delta : cfg.overheads) {
        const int m = code.k() + delta;
        PointResult point;
        point.delta = delta;

        long long scanned = 0;   // trials consumed by the stopping rule
        long long failures = 0;
        long long block = 1024;
        bool stopped = false;
        while (!stopped && scanned < cfg.max_trials_per_point) {
            const long long n = std::min(block, cfg.max_trials_per_point - scanned);
            block = std::min(block * 2, static_cast<long long>(1) << 18);
            flags.assign(static_cast<std::size_t>(n), 0);
            const long long base = scanned;
            parallel_ranges(n, workers, [&](long long first, long long last) {
                LtColumnSampler sampler(code.h(), dist, code.field());
                InactivationSolver solver(code);
                ReceivedMatrix rx;
                for (long long t = first; t < last; ++t) {
                    Xoshiro256ss rng(derive_seed(cfg.master_seed, kTagTrial,
                                                 static_cast<std::uint64_t>(delta), 0,
                                                 static_cast<std::uint64_t>(base + t)));
                    sampler.sample_matrix(m, rng, rx);
                    flags[static_cast<std::size_t>(t)] = solver.decode(rx).failed ? 1 : 0;
                }
            });
            // In-order scan keeps the stopping point independent of the
            // worker count; trials past the stopping point are discarded.
            for (long long t = 0; t < n; ++t) {
                ++scanned;
                failures += flags[static_cast<std::size_t>(t)];
                if (failures >= cfg.target_errors) {
                    stopped = true;
                    break;
                }
            }
        }
        point.trials = scanned;
        point.failures = failures;
        point.rate = scanned > 0 ? static_cast<double>(failures) / static_cast<double>(scanned) : 0.0;
        point.censored = failures < cfg.target_errors;
        wilson_interval(point);
        result.points.push_back(point);
    }
    return result;
}

SimResult run_ensemble(int h, int k, const Field& f, const DegreeDistribution& dist,
                       const SimConfig& cfg, int workers) {
    validate(cfg);
    if (!cfg.ensemble)
        throw std::domain_error("run_ensemble: ensemble configuration missing");
    if (h < dist.d_max())
        throw std::domain_error("run_ensemble: h shorter than the maximum degree");
    const int num_codes = cfg.ensemble->num_codes;
    const long long tpc = cfg.ensemble->trials_per_code;

    // Codes are sampled once and shared by every overhead point.
    std::vector<OuterCode> codes;
    codes.reserve(static_cast<std::size_t>(num_codes));
    SimResult result;
    result.master_seed = cfg.master_seed;
    for (int i = 0; i < num_codes; ++i) {
        codes.push_back(sample_ensemble_code(cfg.master_seed, i, h, k, f));
        result.code_hashes.push_back(codes.back().content_hash());
    }

    std::vector<long long> per_code(static_cast<std::size_t>(num_codes));
    for (int delta : cfg.overheads) {
        const int m = k + delta;
        parallel_ranges(num_codes, workers, [&](long long first, long long last) {
            ReceivedMatrix rx;
            for (long long i = first; i < last; ++i) {
                const OuterCode& code = codes[static_cast<std::size_t>(i)];
                LtColumnSampler sampler(h, dist, f);
                InactivationSolver solver(code);
                long long fails = 0;
                for (long long t = 0; t < tpc; ++t) {
                    Xoshiro256ss rng(derive_seed(cfg.master_seed, kTagTrial,
                                                 static_cast<std::uint64_t>(delta),
                                                 static_cast<std::uint64_t>(i),
                                                 static_cast<std::uint64_t>(t)));
                    sampler.sample_matrix(m, rng, rx);
                    fails += solver.decode(rx).failed ? 1 : 0;
                }
                per_code[static_cast<std::size_t>(i)] = fails;
            }
        });

        PointResult point;
        point.delta = delta;
        point.trials = static_cast<long long>(num_codes) * tpc;
        // Mean of the per-code failure rates, accumulated in code order.
        double mean = 0.0;
        for (int i = 0; i < num_codes; ++i) {
            point.failures += per_code[static_cast<std::size_t>(i)];
            mean += static_cast<double>(per_code[static_cast<std::size_t>(i)]) /
                    static_cast<double>(tpc);
        }
        mean /= static_cast<double>(num_codes);
        double var = 0.0;
        for (int i = 0; i < num_codes; ++i) {
            const double r = static_cast<double>(per_code[static_cast<std::size_t>(i)]) /
                             static_cast<double>(tpc);
            var += (r - mean) * (r - mean);
        }
        var = num_codes > 1 ? var / static_cast<double>(num_codes - 1) : 0.0;
        point.rate = mean;
        point.std_err = std::sqrt(var / static_cast<double>(num_codes));
        point.ci_low = std::max(0.0, mean - kZ95 * point.std_err);
        point.ci_high = std::min(1.0, mean + kZ95 * point.std_err);
        point.censored = false;
        result.points.push_back(point);
    }
    return result;
}

OuterCode sample_ensemble_code(std::uint64_t master_seed, int index, int h, int k,
                               const Field& f) {
    Xoshiro256ss rng(derive_seed(master_seed, kTagCode, static_cast<std::uint64_t>(index)));
    return sample_uniform_parity_code(h, k, f, rng);
}

} // namespace raptor
