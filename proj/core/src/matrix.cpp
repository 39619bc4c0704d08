#include "raptor/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace raptor {

FqMatrix::FqMatrix(int r, int c) {
    if (r < 0 || c < 0)
        throw std::domain_error("FqMatrix: negative dimension");
    rows = r;
    cols = c;
    data.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0);
}

FqMatrix identity_matrix(int n) {
    FqMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

FqMatrix transpose(const FqMatrix& m) {
    FqMatrix t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            t.at(c, r) = m.at(r, c);
    return t;
}

FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b, const Field& f) {
    if (a.cols != b.rows)
        throw std::domain_error("mat_mul: inner dimensions differ");
    validate_entries(a, f);
    validate_entries(b, f);
    FqMatrix out(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r) {
        for (int i = 0; i < a.cols; ++i) {
            const Field::elem av = a.at(r, i);
            if (av == 0)
                continue;
            for (int c = 0; c < b.cols; ++c)
                out.at(r, c) ^= f.mul_raw(av, b.at(i, c));
        }
    }
    return out;
}

FqMatrix stack_rows(const FqMatrix& top, const FqMatrix& bottom) {
    if (top.rows > 0 && bottom.rows > 0 && top.cols != bottom.cols)
        throw std::domain_error("stack_rows: column counts differ");
    const int cols = top.rows > 0 ? top.cols : bottom.cols;
    FqMatrix out(top.rows + bottom.rows, cols);
    for (int r = 0; r < top.rows; ++r)
        for (int c = 0; c < cols; ++c)
            out.at(r, c) = top.at(r, c);
    for (int r = 0; r < bottom.rows; ++r)
        for (int c = 0; c < cols; ++c)
            out.at(top.rows + r, c) = bottom.at(r, c);
    return out;
}

void validate_entries(const FqMatrix& m, const Field& f) {
    for (Field::elem e : m.data)
        if (e >= f.q())
            throw std::domain_error("FqMatrix: entry out of range for field");
}

Gf2Matrix::Gf2Matrix(int rows, int cols) {
    if (rows < 0 || cols < 0)
        throw std::domain_error("Gf2Matrix: negative dimension");
    rows_ = rows;
    cols_ = cols;
    wpr_ = (cols + 63) / 64;
    w_.assign(static_cast<std::size_t>(rows) * wpr_, 0);
}

Gf2Matrix Gf2Matrix::from_matrix(const FqMatrix& m) {
    Gf2Matrix out(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) {
            const Field::elem e = m.at(r, c);
            if (e > 1)
                throw std::domain_error("Gf2Matrix: entry not in GF(2)");
            if (e)
                out.set(r, c, true);
        }
    return out;
}

FqMatrix Gf2Matrix::to_matrix() const {
    FqMatrix out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            out.at(r, c) = get(r, c) ? 1 : 0;
    return out;
}

int rank(Gf2Matrix m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != r)
            for (int w = 0; w < m.words_per_row(); ++w)
                std::swap(m.row(pivot)[w], m.row(r)[w]);
        for (int i = r + 1; i < m.rows(); ++i)
            if (m.get(i, c))
                m.xor_rows(i, r);
        ++r;
    }
    return r;
}

int rank_elimination(FqMatrix m, const Field& f) {
    validate_entries(m, f);
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != r)
            for (int j = 0; j < m.cols; ++j)
                std::swap(m.at(pivot, j), m.at(r, j));
        const Field::elem piv_inv = f.inv(m.at(r, c));
        for (int i = r + 1; i < m.rows; ++i) {
            const Field::elem v = m.at(i, c);
            if (v == 0)
                continue;
            const Field::elem factor = f.mul_raw(v, piv_inv);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) ^= f.mul_raw(factor, m.at(r, j));
        }
        ++r;
    }
    return r;
}

int rank(const FqMatrix& m, const Field& f) {
    if (f.q() == 2) {
        validate_entries(m, f);
        return rank(Gf2Matrix::from_matrix(m));
    }
    return rank_elimination(m, f);
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each of the
// leading `rank` rows.
std::vector<int> rref(FqMatrix& m, const Field& f) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != r)
            for (int j = 0; j < m.cols; ++j)
                std::swap(m.at(pivot, j), m.at(r, j));
        const Field::elem piv_inv = f.inv(m.at(r, c));
        if (m.at(r, c) != 1)
            for (int j = c; j < m.cols; ++j)
                m.at(r, j) = f.mul_raw(m.at(r, j), piv_inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r)
                continue;
            const Field::elem v = m.at(i, c);
            if (v == 0)
                continue;
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) ^= f.mul_raw(v, m.at(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<int> rref(Gf2Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != r)
            for (int w = 0; w < m.words_per_row(); ++w)
                std::swap(m.row(pivot)[w], m.row(r)[w]);
        for (int i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c))
                m.xor_rows(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

FqMatrix nullspace_elimination(FqMatrix m, const Field& f) {
    validate_entries(m, f);
    const int n = m.cols;
    const std::vector<int> pivots = rref(m, f);
    std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
    for (int c : pivots)
        is_pivot[static_cast<std::size_t>(c)] = 1;

    FqMatrix basis(n - static_cast<int>(pivots.size()), n);
    int out = 0;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)])
            continue;
        basis.at(out, free) = 1;
        // x_pivot = -R[row][free]; negation is identity in characteristic 2.
        for (std::size_t row = 0; row < pivots.size(); ++row)
            basis.at(out, pivots[row]) = m.at(static_cast<int>(row), free);
        ++out;
    }
    return basis;
}

Gf2Matrix nullspace_basis(const Gf2Matrix& input) {
    Gf2Matrix m = input;
    const int n = m.cols();
    const std::vector<int> pivots = rref(m);
    std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
    for (int c : pivots)
        is_pivot[static_cast<std::size_t>(c)] = 1;

    Gf2Matrix basis(n - static_cast<int>(pivots.size()), n);
    int out = 0;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)])
            continue;
        basis.set(out, free, true);
        for (std::size_t row = 0; row < pivots.size(); ++row)
            if (m.get(static_cast<int>(row), free))
                basis.set(out, pivots[row], true);
        ++out;
    }
    return basis;
}

FqMatrix nullspace_basis(const FqMatrix& m, const Field& f) {
    if (f.q() == 2) {
        validate_entries(m, f);
        return nullspace_basis(Gf2Matrix::from_matrix(m)).to_matrix();
    }
    return nullspace_elimination(m, f);
}

} // namespace raptor
