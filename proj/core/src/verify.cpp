#include "raptor/verify.hpp"

#include <algorithm>
#include <cmath>

#include "raptor/bounds.hpp"
#include "raptor/rng.hpp"

namespace raptor {

CheckResult check_zero_sum_equivalence(const ZeroSumFn& closed_form, const ZeroSumFn& reference) {
    CheckResult res;
    res.name = "zero-sum probability: closed form vs convolution";
    res.passed = true;
    for (int m : {1, 2, 3, 4}) {
        const Field f(m);
        for (int count = 1; count <= 8; ++count) {
            const mpq_class a = closed_form(count, f);
            const mpq_class b = reference(count, f);
            if (a != b) {
                res.passed = false;
                const double dev = std::abs(mpq_class(a - b).get_d());
                if (dev > res.max_deviation || res.worst_case.empty()) {
                    res.max_deviation = dev;
                    res.worst_case = "count=" + std::to_string(count) +
                                     " q=" + std::to_string(f.q());
                }
            }
        }
    }
    return res;
}

CheckResult check_output_zero_prob_agreement(const OutputZeroProbFn& direct,
                                             const OutputZeroProbFn& closed_form,
                                             double tolerance) {
    CheckResult res;
    res.name = "output zero probability: direct vs krawtchouk";
    res.passed = true;
    const DegreeDistribution r10 = r10_distribution();
    for (int h : {7, 63, 70}) {
        const DegreeDistribution dist = r10.d_max() > h ? r10.truncated(h) : r10;
        for (int m : {1, 2}) {
            const Field f(m);
            for (int l = 0; l <= h; ++l) {
                const double a = direct(l, h, dist, f);
                const double b = closed_form(l, h, dist, f);
                const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
                const double rel = std::abs(a - b) / scale;
                if (rel > res.max_deviation) {
                    res.max_deviation = rel;
                    res.worst_case = "h=" + std::to_string(h) + " q=" + std::to_string(f.q()) +
                                     " l=" + std::to_string(l);
                }
            }
        }
    }
    res.passed = res.max_deviation <= tolerance;
    return res;
}

CheckResult check_decoder_agreement(const FailureFn& a, const FailureFn& b, std::uint64_t seed,
                                    int instances_per_case) {
    CheckResult res;
    res.name = "decoder agreement: inactivation vs rank test";
    res.passed = true;

    struct Case {
        OuterCode code;
        int delta;
    };
    std::vector<Case> cases;
    cases.push_back({OuterCode::hamming(6), 0});
    cases.push_back({OuterCode::hamming(6), 5});
    for (int m : {1, 2}) {
        const Field f(m);
        Xoshiro256ss code_rng(derive_seed(seed, 0x434153ULL, static_cast<std::uint64_t>(m)));
        cases.push_back({sample_uniform_parity_code(70, 64, f, code_rng), 2});
        cases.push_back({sample_uniform_parity_code(70, 64, f, code_rng), 6});
    }

    long long mismatches = 0;
    std::uint64_t case_idx = 0;
    for (const Case& c : cases) {
        LtColumnSampler sampler(c.code.h(), r10_distribution(), c.code.field());
        ReceivedMatrix rx;
        for (int t = 0; t < instances_per_case; ++t) {
            Xoshiro256ss rng(derive_seed(seed, 0x5458ULL, case_idx,
                                         static_cast<std::uint64_t>(t)));
            sampler.sample_matrix(c.code.k() + c.delta, rng, rx);
            const bool fa = a(c.code, rx).failed;
            const bool fb = b(c.code, rx).failed;
            if (fa != fb) {
                ++mismatches;
                if (res.worst_case.empty())
                    res.worst_case = "case=" + std::to_string(case_idx) +
                                     " trial=" + std::to_string(t);
            }
        }
        ++case_idx;
    }
    res.max_deviation = static_cast<double>(mismatches);
    res.passed = mismatches == 0;
    return res;
}

std::vector<CheckResult> run_standard_checks(std::uint64_t seed) {
    std::vector<CheckResult> out;
    out.push_back(check_zero_sum_equivalence(
        [](int count, const Field& f) { return zero_sum_prob(count, f); },
        [](int count, const Field& f) { return zero_sum_prob_by_convolution(count, f); }));
    out.push_back(check_output_zero_prob_agreement(
        [](int l, int h, const DegreeDistribution& d, const Field& f) {
            return output_zero_prob_direct(l, h, d, f);
        },
        [](int l, int h, const DegreeDistribution& d, const Field& f) {
            return output_zero_prob_krawtchouk(l, h, d, f);
        }));
    out.push_back(check_decoder_agreement(
        [](const OuterCode& c, const ReceivedMatrix& rx) { return inactivation_failure(c, rx); },
        [](const OuterCode& c, const ReceivedMatrix& rx) { return ml_failure(c, rx); }, seed));
    return out;
}

} // namespace raptor
