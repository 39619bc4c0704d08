#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "raptor/codes.hpp"
#include "raptor/decoder.hpp"
#include "raptor/degree_distribution.hpp"

namespace raptor {

// Simulation plan. Identifies the experiment completely: two runs with equal
// configs produce identical results, for any worker count.
struct SimConfig {
    std::uint64_t master_seed = 0;
    std::vector<int> overheads;                   // strictly increasing, >= 0
    long long target_errors = 200;                // stop a point when reached
    long long max_trials_per_point = 100000000;   // safety cap

    struct Ensemble {
        int num_codes = 0;
        long long trials_per_code = 0;
    };
    std::optional<Ensemble> ensemble;
};

struct PointResult {
    int delta = 0;
    long long trials = 0;
    long long failures = 0;
    double rate = 0.0;
    double std_err = 0.0;
    double ci_low = 0.0;   // 95% interval
    double ci_high = 0.0;
    bool censored = false; // trial cap hit before the error target
};

struct SimResult {
    std::uint64_t master_seed = 0;
    std::vector<PointResult> points;
    std::vector<std::uint64_t> code_hashes;
};

// Failure-rate estimation for one fixed code: for each overhead, decode
// freshly sampled received matrices until target_errors failures were seen
// or the trial cap is reached. Wilson 95% intervals.
SimResult run_fixed_code(const OuterCode& code, const DegreeDistribution& dist,
                         const SimConfig& cfg, int workers = 1);

// Ensemble average over the uniform parity-check ensemble: num_codes codes
// are sampled once and reused across overheads; each contributes
// trials_per_code decoding attempts per overhead. The per-point rate is the
// mean of the per-code failure rates; the interval is a normal approximation
// on that mean.
SimResult run_ensemble(int h, int k, const Field& f, const DegreeDistribution& dist,
                       const SimConfig& cfg, int workers = 1);

// The index-th outer code a run_ensemble with this master seed draws.
// Exposed for replay and for aligning fixed-code runs with ensemble runs.
OuterCode sample_ensemble_code(std::uint64_t master_seed, int index, int h, int k, const Field& f);

} // namespace raptor
