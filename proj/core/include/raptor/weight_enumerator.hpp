#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <vector>

#include "raptor/field.hpp"

namespace raptor {

// Codeword multiplicities A_0..A_h of an (h, k) code, or their expectation
// over a code ensemble. Deterministic enumerators carry exact integers;
// expected enumerators are kept in the log domain so that lengths up to
// 2^16 - 1 stay representable.
class WeightEnumerator {
  public:
    enum class Kind { deterministic, expected };

    static WeightEnumerator deterministic(std::vector<mpz_class> values);
    static WeightEnumerator expected(std::vector<double> log_values);

    int h() const { return h_; }
    Kind kind() const { return kind_; }

    // Multiplicity at weight l as a double (may overflow to +inf for very
    // long deterministic codes; log_value stays finite).
    double value(int l) const;
    // Natural log of the multiplicity; -infinity where the multiplicity is 0.
    double log_value(int l) const { return log_[static_cast<std::size_t>(l)]; }
    // Exact multiplicity; only for deterministic enumerators.
    const mpz_class& exact(int l) const;

  private:
    WeightEnumerator() = default;

    Kind kind_ = Kind::deterministic;
    int h_ = 0;
    std::vector<mpz_class> exact_;  // deterministic only
    std::vector<double> log_;
};

// Weight enumerator of the binary Hamming code of length 2^t - 1, computed
// with the classical binomial recursion in exact integer arithmetic.
WeightEnumerator hamming_weight_enumerator(int t);

// Expected weight enumerator of the uniform (h-k) x h parity-check ensemble
// over GF(q): E[A_l] = C(h,l) q^-(h-k) (q-1)^l for l >= 1. Index 0 is set
// to 1 (the bounds only consume l >= 1).
WeightEnumerator uniform_ensemble_weight_enumerator(int h, int k, const Field& f);

// One representative per scalar class of every nonzero vector in GF(q)^k:
// A_l = C(k,l) (q-1)^(l-1). Feeding this into the plain union bound yields
// the LT-only bound (no outer code).
WeightEnumerator unrestricted_weight_enumerator(int k, const Field& f);

// CSV serialization: header "l,A_l", one row per weight, exact decimal for
// deterministic values and shortest round-trip decimal for expected ones.
void write_csv(std::ostream& out, const WeightEnumerator& we);
WeightEnumerator read_csv(std::istream& in);

} // namespace raptor
