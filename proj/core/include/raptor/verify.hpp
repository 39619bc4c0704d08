#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "raptor/decoder.hpp"
#include "raptor/degree_distribution.hpp"
#include "raptor/field.hpp"

namespace raptor {

// One cross-check of two independent computation routes. The callables are
// injectable so a corrupted route can be exercised in tests.
struct CheckResult {
    std::string name;
    bool passed = false;
    double max_deviation = 0.0;
    std::string worst_case;
};

using ZeroSumFn = std::function<mpq_class(int, const Field&)>;
using OutputZeroProbFn =
    std::function<double(int, int, const DegreeDistribution&, const Field&)>;
using FailureFn = std::function<DecodeOutcome(const OuterCode&, const ReceivedMatrix&)>;

// Exact rational equality of the zero-sum probability closed form against a
// reference for counts 1..8, q in {2, 4, 8, 16}.
CheckResult check_zero_sum_equivalence(const ZeroSumFn& closed_form, const ZeroSumFn& reference);

// Relative agreement of the two output-zero-probability paths over
// h in {7, 63, 70} and q in {2, 4} with the R10 distribution (restricted to
// feasible degrees where d_max exceeds h), all weights l in [0, h].
CheckResult check_output_zero_prob_agreement(const OutputZeroProbFn& direct,
                                             const OutputZeroProbFn& closed_form,
                                             double tolerance = 1e-12);

// Agreement of two failure tests over seeded random codes and received
// matrices (Hamming and uniform-ensemble outer codes, q in {2, 4}).
CheckResult check_decoder_agreement(const FailureFn& a, const FailureFn& b, std::uint64_t seed,
                                    int instances_per_case = 500);

// The three checks wired to the real implementations.
std::vector<CheckResult> run_standard_checks(std::uint64_t seed);

} // namespace raptor
