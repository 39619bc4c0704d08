#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "raptor/degree_distribution.hpp"
#include "raptor/field.hpp"
#include "raptor/weight_enumerator.hpp"

namespace raptor {

// Krawtchouk polynomial K_degree(x; n, q), exact integer arithmetic. The
// alternating sum cancels catastrophically in floating point already at
// moderate n, hence the big integers.
mpz_class krawtchouk(int degree, int x, int n, int q);

// Probability that `count` i.i.d. elements, uniform over GF(q) \ {0}, sum to
// zero: (1/q) (1 + (-1)^count / (q-1)^(count-1)), as an exact rational.
mpq_class zero_sum_prob(int count, const Field& f);

// The same probability obtained by explicit convolution of the
// uniform-on-nonzeros pmf over the additive group (characteristic 2). An
// independent cross-check of zero_sum_prob; meant for m <= 8.
mpq_class zero_sum_prob_by_convolution(int count, const Field& f);

// Probability that a uniform j-subset of h positions hits exactly i of a
// fixed set of l positions. Returns 0 for combinatorially impossible i.
mpq_class hypergeometric_pmf(int i, int l, int j, int h);

// Probability that one LT output symbol evaluates to zero on an intermediate
// word of Hamming weight l. Two independent evaluation paths:
//  - direct: total probability over the encoder's degree and support choices,
//    with exact rational inner sums;
//  - krawtchouk: the closed form via Krawtchouk polynomial ratios.
double output_zero_prob_direct(int l, int h, const DegreeDistribution& dist, const Field& f);
double output_zero_prob_krawtchouk(int l, int h, const DegreeDistribution& dist, const Field& f);

// output_zero_prob_krawtchouk for every l in [0, h], computed eagerly so a
// delta sweep (or parallel readers) can share one table.
class ZeroProbTable {
  public:
    ZeroProbTable(int h, const DegreeDistribution& dist, const Field& f);

    int h() const { return static_cast<int>(probs_.size()) - 1; }
    double operator[](int l) const { return probs_[static_cast<std::size_t>(l)]; }
    double log_at(int l) const { return log_probs_[static_cast<std::size_t>(l)]; }

  private:
    std::vector<double> probs_;
    std::vector<double> log_probs_;
};

// Union bound on the ML decoding failure probability of a code with weight
// enumerator `we`, after receiving k + delta output symbols:
//     sum_{l>=1} A_l * p_l^(k+delta)
// Evaluated in the log domain with pairwise accumulation; the raw value is
// returned unclamped (it can exceed 1 at small delta).
double union_bound(const WeightEnumerator& we, int k, int delta, const ZeroProbTable& probs);
double union_bound(const WeightEnumerator& we, int k, int delta, const DegreeDistribution& dist,
                   const Field& f);

// The union bound tightened by the factor q-1 (codewords come in scalar
// classes). Identical to union_bound for q = 2.
double tightened_union_bound(const WeightEnumerator& we, int k, int delta,
                             const ZeroProbTable& probs, const Field& f);
double tightened_union_bound(const WeightEnumerator& we, int k, int delta,
                             const DegreeDistribution& dist, const Field& f);

// The tightened bound applied to an ensemble-expected weight enumerator;
// bounds the ensemble-average failure probability. The exponent uses the
// design dimension k. Requires an expected-kind enumerator.
double ensemble_union_bound(const WeightEnumerator& expected_we, int k, int delta,
                            const ZeroProbTable& probs, const Field& f);
double ensemble_union_bound(const WeightEnumerator& expected_we, int k, int delta,
                            const DegreeDistribution& dist, const Field& f);

// Failure bound for a plain LT code (no outer code) with k input symbols:
// the union bound over one representative per scalar class of the nonzero
// input vectors, sum_{l>=1} C(k,l) (q-1)^(l-1) p_l^(k+delta).
double lt_union_bound(int k, int delta, const DegreeDistribution& dist, const Field& f);

struct BoundPoint {
    int delta;
    double raw;
    double clamped;
};

struct BoundCurve {
    int h = 0;
    int k = 0;
    std::uint32_t q = 0;
    std::string dist_id;
    std::vector<BoundPoint> points;
};

enum class BoundKind { plain, tightened, ensemble };

BoundCurve bound_curve(BoundKind kind, const WeightEnumerator& we, int k,
                       const std::vector<int>& deltas, const DegreeDistribution& dist,
                       const Field& f);

} // namespace raptor
