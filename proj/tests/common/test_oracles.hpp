#pragma once

// Independent reference implementations used as test oracles. These stay
// deliberately naive and separate from the library code paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "raptor/codes.hpp"
#include "raptor/degree_distribution.hpp"
#include "raptor/field.hpp"
#include "raptor/matrix.hpp"

namespace raptor::testing {

// Shift-and-reduce GF(2^m) product, independent of the library's table path.
inline std::uint32_t naive_gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int m) {
    std::uint64_t acc = 0;
    for (int i = 0; i < m; ++i)
        if ((b >> i) & 1)
            acc ^= static_cast<std::uint64_t>(a) << i;
    for (int d = 2 * m - 2; d >= m; --d)
        if ((acc >> d) & 1)
            acc ^= static_cast<std::uint64_t>(poly) << (d - m);
    return static_cast<std::uint32_t>(acc);
}

// Second elimination routine with a different organization: sweeps columns
// right to left and picks the bottommost pivot.
inline int slow_rank(raptor::FqMatrix m, const raptor::Field& f) {
    int rank = 0;
    int top = m.rows - 1;
    for (int c = m.cols - 1; c >= 0 && top >= 0; --c) {
        int pivot = -1;
        for (int r = top; r >= 0; --r)
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != top)
            for (int j = 0; j < m.cols; ++j)
                std::swap(m.at(pivot, j), m.at(top, j));
        const raptor::Field::elem inv = f.inv(m.at(top, c));
        for (int r = top - 1; r >= 0; --r) {
            const raptor::Field::elem v = m.at(r, c);
            if (v == 0)
                continue;
            const raptor::Field::elem factor = f.mul(v, inv);
            for (int j = 0; j < m.cols; ++j)
                m.at(r, j) ^= f.mul(factor, m.at(top, j));
        }
        --top;
        ++rank;
    }
    return rank;
}

// Exhaustive weight enumerator by enumerating every codeword spanned by the
// rows of `gen`. Only for q^rows small.
inline std::vector<long long> brute_force_weight_enumerator(const raptor::FqMatrix& gen,
                                                            const raptor::Field& f) {
    const int k = gen.rows;
    const int h = gen.cols;
    std::vector<long long> counts(static_cast<std::size_t>(h) + 1, 0);
    std::vector<raptor::Field::elem> msg(static_cast<std::size_t>(k), 0);
    std::vector<raptor::Field::elem> word(static_cast<std::size_t>(h), 0);
    const std::uint64_t total = [&] {
        std::uint64_t t = 1;
        for (int i = 0; i < k; ++i)
            t *= f.q();
        return t;
    }();
    if (total > (1ULL << 22))
        throw std::logic_error("brute_force_weight_enumerator: codebook too large");
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (int i = 0; i < k; ++i) {
            msg[static_cast<std::size_t>(i)] = static_cast<raptor::Field::elem>(rest % f.q());
            rest /= f.q();
        }
        std::fill(word.begin(), word.end(), 0);
        for (int i = 0; i < k; ++i) {
            if (msg[static_cast<std::size_t>(i)] == 0)
                continue;
            for (int c = 0; c < h; ++c)
                word[static_cast<std::size_t>(c)] ^=
                    f.mul(msg[static_cast<std::size_t>(i)], gen.at(i, c));
        }
        int weight = 0;
        for (auto v : word)
            weight += v != 0;
        ++counts[static_cast<std::size_t>(weight)];
    }
    return counts;
}

// ---- Exact failure probability of a toy binary code under an LT sampler ----
//
// Works over GF(2) with small h and degree <= 3: enumerates every column
// "type" (a support set with its sampling probability) and every multiset of
// m columns, deciding failure by exhaustive search for a nonzero codeword
// annihilated by all received columns.

struct ToyColumnType {
    std::uint32_t support_mask = 0;
    double prob = 0.0;
};

inline std::vector<ToyColumnType> toy_column_types(int h, const raptor::DegreeDistribution& dist) {
    std::vector<ToyColumnType> types;
    for (const auto& term : dist.terms()) {
        std::vector<std::uint32_t> masks;
        for (std::uint32_t mask = 1; mask < (1u << h); ++mask)
            if (__builtin_popcount(mask) == term.degree)
                masks.push_back(mask);
        for (std::uint32_t mask : masks)
            types.push_back({mask, term.prob / static_cast<double>(masks.size())});
    }
    return types;
}

// All nonzero codewords of the code {v : H v^T = 0} as bitmasks.
inline std::vector<std::uint32_t> toy_codewords(const raptor::FqMatrix& parity) {
    const int h = parity.cols;
    std::vector<std::uint32_t> words;
    for (std::uint32_t v = 1; v < (1u << h); ++v) {
        bool in_code = true;
        for (int r = 0; r < parity.rows && in_code; ++r) {
            int parity_bit = 0;
            for (int c = 0; c < h; ++c)
                if (parity.at(r, c) && ((v >> c) & 1))
                    parity_bit ^= 1;
            in_code = parity_bit == 0;
        }
        if (in_code)
            words.push_back(v);
    }
    return words;
}

inline double exact_toy_failure_probability(const raptor::FqMatrix& parity,
                                            const raptor::DegreeDistribution& dist, int m) {
    const int h = parity.cols;
    if (h > 8)
        throw std::logic_error("exact_toy_failure_probability: h too large");
    const std::vector<ToyColumnType> types = toy_column_types(h, dist);
    const std::vector<std::uint32_t> codewords = toy_codewords(parity);

    // For each codeword, the set of column types orthogonal to it.
    std::vector<std::uint64_t> ortho(codewords.size(), 0);
    for (std::size_t w = 0; w < codewords.size(); ++w)
        for (std::size_t t = 0; t < types.size(); ++t)
            if (__builtin_popcount(codewords[w] & types[t].support_mask) % 2 == 0)
                ortho[w] |= 1ULL << t;

    double p_fail = 0.0;
    std::vector<int> counts(types.size(), 0);
    // Recursive enumeration of column multisets with multinomial weights.
    auto recurse = [&](auto&& self, std::size_t t, int remaining, double log_weight,
                       std::uint64_t used_mask) -> void {
        if (t == types.size()) {
            if (remaining != 0)
                return;
            bool failed = false;
            for (std::size_t w = 0; w < codewords.size() && !failed; ++w)
                failed = (used_mask & ~ortho[w]) == 0;
            if (failed)
                p_fail += std::exp(log_weight);
            return;
        }
        // multinomial factor handled incrementally: weight *= p^c / c! and a
        // final m! applied by the caller via log_weight seed
        double lw = log_weight;
        for (int c = 0; c <= remaining; ++c) {
            if (c > 0)
                lw += std::log(types[t].prob) - std::log(static_cast<double>(c));
            self(self, t + 1, remaining - c, lw, c > 0 ? (used_mask | (1ULL << t)) : used_mask);
        }
    };
    double log_m_fact = 0.0;
    for (int i = 2; i <= m; ++i)
        log_m_fact += std::log(static_cast<double>(i));
    recurse(recurse, 0, m, log_m_fact, 0);
    return p_fail;
}

} // namespace raptor::testing
