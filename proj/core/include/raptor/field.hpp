#pragma once

#include <cstdint>
#include <vector>

namespace raptor {

// Arithmetic in GF(2^m) for 1 <= m <= 16. Elements are integers in [0, q)
// with q = 2^m; addition is XOR and multiplication is carry-less polynomial
// multiplication modulo an irreducible reduction polynomial.
//
// For m <= 8 multiplication and inversion go through log/antilog tables
// (the tables are small and multiplication is the hot operation in the
// simulators); larger fields use shift-and-reduce multiplication.
//
// A Field is immutable after construction and safe to share across threads.
class Field {
  public:
    using elem = std::uint16_t;

    // Field with the library's fixed reduction polynomial for this degree
    // (the lexicographically least irreducible with nonzero constant term).
    explicit Field(int m);

    // Field with a caller-supplied reduction polynomial, encoded as a bit
    // pattern including the leading x^m term. Irreducibility is verified.
    Field(int m, std::uint32_t reduction_poly);

    int m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t reduction_poly() const { return poly_; }

    elem add(elem a, elem b) const {
        check(a);
        check(b);
        return a ^ b;
    }
    elem sub(elem a, elem b) const { return add(a, b); } // characteristic 2

    elem mul(elem a, elem b) const {
        check(a);
        check(b);
        return mul_raw(a, b);
    }

    elem inv(elem a) const;             // a != 0
    elem div(elem a, elem b) const;     // b != 0
    elem pow(elem a, std::uint64_t e) const;

    // Unchecked multiply for inner loops; arguments must already be < q.
    elem mul_raw(elem a, elem b) const {
        if (m_ <= 8) {
            if (a == 0 || b == 0)
                return 0;
            return exp_[log_[a] + log_[b]];
        }
        return clmul_reduce(a, b);
    }

    bool operator==(const Field& o) const { return m_ == o.m_ && poly_ == o.poly_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    static std::uint32_t default_reduction_poly(int m);
    // Full factorization test over GF(2), valid for degrees up to 16.
    static bool is_irreducible(std::uint32_t poly);

  private:
    void check(elem a) const;
    elem clmul_reduce(elem a, elem b) const;
    void build_tables();

    int m_ = 0;
    std::uint32_t q_ = 0;
    std::uint32_t poly_ = 0;
    std::vector<std::uint16_t> log_; // index: element 1..q-1
    std::vector<elem> exp_;          // doubled so mul needs no modulo
};

} // namespace raptor
