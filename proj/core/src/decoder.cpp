#include "raptor/decoder.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace raptor {

namespace {

// Row storage used by the peeling engine: bit-packed for GF(2), dense
// otherwise. Both expose the same operations so the engine below is shared,
// including the active-column bookkeeping tied to the representation.

struct PackedRows {
    int cols = 0;
    int wpr = 0;
    std::vector<std::uint64_t> w;
    std::vector<std::uint64_t> active;

    void reset(int nrows, int ncols) {
        cols = ncols;
        wpr = (ncols + 63) / 64;
        w.assign(static_cast<std::size_t>(nrows) * wpr, 0);
        active.assign(static_cast<std::size_t>(wpr), 0);
        for (int c = 0; c < ncols; ++c)
            active[static_cast<std::size_t>(c >> 6)] |= 1ULL << (c & 63);
    }
    void set_entry(int r, int c, Field::elem) {
        w[static_cast<std::size_t>(r) * wpr + (c >> 6)] |= 1ULL << (c & 63);
    }
    bool nonzero(int r, int c) const {
        return (w[static_cast<std::size_t>(r) * wpr + (c >> 6)] >> (c & 63)) & 1;
    }
    bool is_active(int c) const { return (active[static_cast<std::size_t>(c >> 6)] >> (c & 63)) & 1; }
    void deactivate(int c) { active[static_cast<std::size_t>(c >> 6)] &= ~(1ULL << (c & 63)); }
    int first_active(int r) const {
        const std::uint64_t* p = w.data() + static_cast<std::size_t>(r) * wpr;
        for (int i = 0; i < wpr; ++i) {
            const std::uint64_t word = p[i] & active[static_cast<std::size_t>(i)];
            if (word)
                return i * 64 + __builtin_ctzll(word);
        }
        return -1;
    }
    // target -= coeff * pivot; in GF(2) the coefficient is always 1.
    void eliminate(int target, int pivot_row, int /*pivot_col*/, const std::vector<int>&,
                   const Field&) {
        std::uint64_t* t = w.data() + static_cast<std::size_t>(target) * wpr;
        const std::uint64_t* p = w.data() + static_cast<std::size_t>(pivot_row) * wpr;
        for (int i = 0; i < wpr; ++i)
            t[i] ^= p[i];
    }
    int residual_rank(int nrows, const std::vector<char>& used, const std::vector<int>& inactive,
                      const Field&) const {
        int unused = 0;
        for (int r = 0; r < nrows; ++r)
            unused += used[static_cast<std::size_t>(r)] == 0;
        Gf2Matrix sub(unused, static_cast<int>(inactive.size()));
        int out = 0;
        for (int r = 0; r < nrows; ++r) {
            if (used[static_cast<std::size_t>(r)])
                continue;
            for (std::size_t i = 0; i < inactive.size(); ++i)
                if (nonzero(r, inactive[i]))
                    sub.set(out, static_cast<int>(i), true);
            ++out;
        }
        return rank(std::move(sub));
    }
};

struct DenseRows {
    int cols = 0;
    std::vector<Field::elem> a;
    std::vector<char> active;

    void reset(int nrows, int ncols) {
        cols = ncols;
        a.assign(static_cast<std::size_t>(nrows) * ncols, 0);
        active.assign(static_cast<std::size_t>(ncols), 1);
    }
    Field::elem* row(int r) { return a.data() + static_cast<std::size_t>(r) * cols; }
    const Field::elem* row(int r) const { return a.data() + static_cast<std::size_t>(r) * cols; }
    void set_entry(int r, int c, Field::elem v) { row(r)[c] = v; }
    bool nonzero(int r, int c) const { return row(r)[c] != 0; }
    bool is_active(int c) const { return active[static_cast<std::size_t>(c)] != 0; }
    void deactivate(int c) { active[static_cast<std::size_t>(c)] = 0; }
    int first_active(int r) const {
        const Field::elem* p = row(r);
        for (int c = 0; c < cols; ++c)
            if (active[static_cast<std::size_t>(c)] && p[c] != 0)
                return c;
        return -1;
    }
    // The pivot row's support is {pivot_col} plus inactive columns only, so
    // the update touches just those positions.
    void eliminate(int target, int pivot_row, int pivot_col, const std::vector<int>& inactive,
                   const Field& f) {
        Field::elem* t = row(target);
        const Field::elem* p = row(pivot_row);
        const Field::elem coeff = f.div(t[pivot_col], p[pivot_col]);
        t[pivot_col] ^= f.mul_raw(coeff, p[pivot_col]);
        for (int c : inactive)
            t[c] ^= f.mul_raw(coeff, p[c]);
    }
    int residual_rank(int nrows, const std::vector<char>& used, const std::vector<int>& inactive,
                      const Field& f) const {
        int unused = 0;
        for (int r = 0; r < nrows; ++r)
            unused += used[static_cast<std::size_t>(r)] == 0;
        FqMatrix sub(unused, static_cast<int>(inactive.size()));
        int out = 0;
        for (int r = 0; r < nrows; ++r) {
            if (used[static_cast<std::size_t>(r)])
                continue;
            for (std::size_t i = 0; i < inactive.size(); ++i)
                sub.at(out, static_cast<int>(i)) = row(r)[inactive[i]];
            ++out;
        }
        return rank_elimination(std::move(sub), f);
    }
};

// Peeling with inactivation over the stacked system [H ; Rx^T]. Decoding
// succeeds iff the number of peeled pivots plus the rank of the residual
// dense system equals h.
template <class Storage>
class PeelEngine {
  public:
    explicit PeelEngine(const OuterCode& code) : code_(code) {}

    DecodeOutcome run(const ReceivedMatrix& rx) {
        const int h = code_.h();
        const int pr = code_.parity_matrix().rows;
        const int nrows = pr + rx.m();

        rows_.reset(nrows, h);
        col_weight_.assign(static_cast<std::size_t>(h), 0);
        deg_.assign(static_cast<std::size_t>(nrows), 0);
        used_.assign(static_cast<std::size_t>(nrows), 0);
        queue_.clear();
        inactive_.clear();

        const FqMatrix& parity = code_.parity_matrix();
        for (int r = 0; r < pr; ++r)
            for (int c = 0; c < h; ++c)
                if (parity.at(r, c) != 0)
                    load_entry(r, c, parity.at(r, c));
        for (int j = 0; j < rx.m(); ++j) {
            const ReceivedColumn& col = rx.columns[static_cast<std::size_t>(j)];
            for (std::size_t i = 0; i < col.support.size(); ++i)
                load_entry(pr + j, col.support[i], col.values[i]);
        }
        for (int r = 0; r < nrows; ++r)
            if (deg_[static_cast<std::size_t>(r)] == 1)
                queue_.push_back(r);

        int resolved = 0;
        while (resolved + static_cast<int>(inactive_.size()) < h) {
            if (!queue_.empty()) {
                const int r = queue_.back();
                queue_.pop_back();
                if (used_[static_cast<std::size_t>(r)] || deg_[static_cast<std::size_t>(r)] != 1)
                    continue; // stale entry
                const int c = rows_.first_active(r);
                used_[static_cast<std::size_t>(r)] = 1;
                rows_.deactivate(c);
                ++resolved;
                for (int r2 = 0; r2 < nrows; ++r2) {
                    if (r2 == r || used_[static_cast<std::size_t>(r2)] || !rows_.nonzero(r2, c))
                        continue;
                    rows_.eliminate(r2, r, c, inactive_, code_.field());
                    if (--deg_[static_cast<std::size_t>(r2)] == 1)
                        queue_.push_back(r2);
                }
            } else {
                // Stall: inactivate the active column with the highest
                // residual degree (ties to the lowest index). A row touching
                // an active column can never have pivoted, so the residual
                // degree equals the initial column weight.
                int best = -1;
                for (int c = 0; c < h; ++c)
                    if (rows_.is_active(c) &&
                        (best < 0 || col_weight_[static_cast<std::size_t>(c)] >
                                         col_weight_[static_cast<std::size_t>(best)]))
                        best = c;
                rows_.deactivate(best);
                inactive_.push_back(best);
                for (int r2 = 0; r2 < nrows; ++r2) {
                    if (used_[static_cast<std::size_t>(r2)] || !rows_.nonzero(r2, best))
                        continue;
                    if (--deg_[static_cast<std::size_t>(r2)] == 1)
                        queue_.push_back(r2);
                }
            }
        }

        const int sub_rank = rows_.residual_rank(nrows, used_, inactive_, code_.field());
        const int total = resolved + sub_rank;
        DecodeOutcome out;
        out.failed = total < h;
        out.rank_deficit = h - total;
        out.inactivations = static_cast<int>(inactive_.size());
        return out;
    }

  private:
    void load_entry(int r, int c, Field::elem v) {
        rows_.set_entry(r, c, v);
        ++deg_[static_cast<std::size_t>(r)];
        ++col_weight_[static_cast<std::size_t>(c)];
    }

    const OuterCode& code_;
    Storage rows_;
    std::vector<int> col_weight_;
    std::vector<int> deg_;
    std::vector<char> used_;
    std::vector<int> queue_;
    std::vector<int> inactive_;
};

void check_dimensions(const OuterCode& code, const ReceivedMatrix& rx) {
    if (code.h() != rx.h)
        throw std::domain_error("decoder: received matrix length does not match code length");
}

} // namespace

DecodeOutcome ml_failure(const OuterCode& code, const ReceivedMatrix& rx) {
    check_dimensions(code, rx);
    const Field& f = code.field();
    DecodeOutcome out;
    if (code.form() == OuterCode::Form::generator) {
        // G~ = G * Rx, built column by column from the sparse received columns.
        const FqMatrix g = code.generator_matrix();
        FqMatrix gt(code.k(), rx.m());
        for (int j = 0; j < rx.m(); ++j) {
            const ReceivedColumn& col = rx.columns[static_cast<std::size_t>(j)];
            for (std::size_t i = 0; i < col.support.size(); ++i) {
                const Field::elem v = col.values[i];
                const int idx = col.support[i];
                for (int r = 0; r < code.k(); ++r)
                    gt.at(r, j) ^= f.mul_raw(v, g.at(r, idx));
            }
        }
        const int rk = rank(gt, f);
        out.failed = rk < code.k();
        out.rank_deficit = code.k() - rk;
        return out;
    }
    const FqMatrix stacked = stack_rows(code.parity_matrix(), transpose(rx.to_matrix(f)));
    const int rk = rank(stacked, f);
    out.failed = rk < code.h();
    out.rank_deficit = code.h() - rk;
    return out;
}

struct InactivationSolver::Impl {
    explicit Impl(const OuterCode& code) : code_ref(code) {
        if (code.field().q() == 2)
            packed = std::make_unique<PeelEngine<PackedRows>>(code);
        else
            dense = std::make_unique<PeelEngine<DenseRows>>(code);
    }

    const OuterCode& code_ref;
    std::unique_ptr<PeelEngine<PackedRows>> packed;
    std::unique_ptr<PeelEngine<DenseRows>> dense;
};

InactivationSolver::InactivationSolver(const OuterCode& code)
    : impl_(std::make_unique<Impl>(code)) {}
InactivationSolver::~InactivationSolver() = default;
InactivationSolver::InactivationSolver(InactivationSolver&&) noexcept = default;
InactivationSolver& InactivationSolver::operator=(InactivationSolver&&) noexcept = default;

DecodeOutcome InactivationSolver::decode(const ReceivedMatrix& rx) {
    check_dimensions(impl_->code_ref, rx);
    return impl_->packed ? impl_->packed->run(rx) : impl_->dense->run(rx);
}

DecodeOutcome inactivation_failure(const OuterCode& code, const ReceivedMatrix& rx) {
    InactivationSolver solver(code);
    return solver.decode(rx);
}

} // namespace raptor
