#pragma once

#include <cstdint>
#include <vector>

#include "raptor/field.hpp"

namespace raptor {

// Dense row-major matrix over GF(q). Entries are plain integers in [0, q);
// operations that need field arithmetic take the Field explicitly. Matrices
// are value types and never mutated by the rank/nullspace routines.
struct FqMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Field::elem> data;

    FqMatrix() = default;
    FqMatrix(int r, int c);

    Field::elem& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    Field::elem at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    bool operator==(const FqMatrix&) const = default;
};

FqMatrix identity_matrix(int n);
FqMatrix transpose(const FqMatrix& m);
FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b, const Field& f);
FqMatrix stack_rows(const FqMatrix& top, const FqMatrix& bottom);

// Throws std::domain_error if any entry is >= q.
void validate_entries(const FqMatrix& m, const Field& f);

// Bit-packed matrix over GF(2): one bit per entry, 64 entries per word.
// Row operations are word-wide XORs.
class Gf2Matrix {
  public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);

    static Gf2Matrix from_matrix(const FqMatrix& m); // entries must be 0/1
    FqMatrix to_matrix() const;

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return wpr_; }

    bool get(int r, int c) const {
        return (w_[static_cast<std::size_t>(r) * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(int r, int c, bool v) {
        std::uint64_t& word = w_[static_cast<std::size_t>(r) * wpr_ + (c >> 6)];
        const std::uint64_t bit = 1ULL << (c & 63);
        word = v ? (word | bit) : (word & ~bit);
    }
    void xor_rows(int dst, int src) {
        std::uint64_t* d = row(dst);
        const std::uint64_t* s = row(src);
        for (int i = 0; i < wpr_; ++i)
            d[i] ^= s[i];
    }
    std::uint64_t* row(int r) { return w_.data() + static_cast<std::size_t>(r) * wpr_; }
    const std::uint64_t* row(int r) const { return w_.data() + static_cast<std::size_t>(r) * wpr_; }

    bool operator==(const Gf2Matrix&) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    int wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

// Rank over GF(q) by row reduction, pivoting on the first row with a nonzero
// entry in the current column. GF(2) inputs are routed through the bit-packed
// representation; both paths implement the same contract.
int rank(const FqMatrix& m, const Field& f);
int rank(Gf2Matrix m);

// Generic dense elimination, any q (including 2). Kept callable so the packed
// and dense paths can be checked against each other.
int rank_elimination(FqMatrix m, const Field& f);

// Basis of the right nullspace {v : M v^T = 0}, one basis vector per row of
// the returned ((cols - rank) x cols) matrix.
FqMatrix nullspace_basis(const FqMatrix& m, const Field& f);
FqMatrix nullspace_elimination(FqMatrix m, const Field& f);
Gf2Matrix nullspace_basis(const Gf2Matrix& m);

} // namespace raptor
