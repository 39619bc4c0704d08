#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "raptor/degree_distribution.hpp"
#include "raptor/field.hpp"
#include "raptor/matrix.hpp"
#include "raptor/rng.hpp"

namespace raptor {

// An (h, k) linear outer code over GF(q), held either as a full-rank k x h
// generator matrix or as an (h-k) x h parity-check matrix. Parity-check
// matrices may be rank deficient (sampled codes then have true dimension
// larger than the design dimension k). Immutable after construction.
class OuterCode {
  public:
    enum class Form { generator, parity };

    static OuterCode from_generator(FqMatrix g, Field f);
    static OuterCode from_parity(FqMatrix h_mat, Field f);

    // Binary Hamming code of length 2^t - 1 and dimension 2^t - 1 - t, in
    // parity form; column c of H is the binary expansion of c+1.
    static OuterCode hamming(int t);

    // Trivial precode (h = k, empty parity): a plain LT code.
    static OuterCode trivial(int k, Field f);

    int h() const { return h_; }
    int k() const { return k_; }
    Form form() const { return form_; }
    const Field& field() const { return field_; }

    // Parity-check matrix with h - k rows. For generator-form codes this is
    // the derived dual basis, computed once at construction.
    const FqMatrix& parity_matrix() const { return parity_; }

    // Generator matrix: the stored one for generator-form codes, otherwise a
    // nullspace basis of H (not necessarily systematic, h - rank(H) rows).
    FqMatrix generator_matrix() const;

    // Bit-packed parity matrix, present iff q == 2.
    const Gf2Matrix* packed_parity() const { return packed_ ? &*packed_ : nullptr; }

    std::uint64_t content_hash() const;

    // Plain text form: "h k q {generator|parity}" then the rows of the
    // stored matrix as space-separated integers.
    void write_text(std::ostream& out) const;
    static OuterCode read_text(std::istream& in);

  private:
    OuterCode(Form form, FqMatrix primary, Field f);

    Form form_;
    int h_ = 0;
    int k_ = 0;
    Field field_;
    FqMatrix generator_; // generator form only
    FqMatrix parity_;
    std::optional<Gf2Matrix> packed_;
};

// Code from the uniform parity-check ensemble: an (h-k) x h matrix with
// i.i.d. entries uniform over all q field elements. Deterministic given the
// generator state.
OuterCode sample_uniform_parity_code(int h, int k, const Field& f, Xoshiro256ss& rng);

// One received LT output symbol: the nonzero pattern of a sampled column.
struct ReceivedColumn {
    std::vector<int> support;          // distinct indices in [0, h)
    std::vector<Field::elem> values;   // parallel to support, all nonzero
};

// The h x m matrix formed by the m received LT columns, kept sparse.
struct ReceivedMatrix {
    int h = 0;
    std::vector<ReceivedColumn> columns;

    int m() const { return static_cast<int>(columns.size()); }
    std::vector<int> degrees() const;
    FqMatrix to_matrix(const Field& f) const; // dense h x m view
};

// Samples LT columns: degree d ~ dist, support a uniform d-subset of [0, h)
// (Fisher-Yates prefix), values uniform over the q-1 nonzero elements.
// Reusable across columns; one instance per thread.
class LtColumnSampler {
  public:
    LtColumnSampler(int h, DegreeDistribution dist, Field f);

    int h() const { return h_; }
    void sample_column(Xoshiro256ss& rng, ReceivedColumn& out);
    void sample_matrix(int m, Xoshiro256ss& rng, ReceivedMatrix& out);

  private:
    int h_;
    Field field_;
    DegreeDistribution dist_;
    std::vector<double> cum_;
    std::vector<int> perm_;    // identity permutation, restored after each column
    std::vector<int> swapped_; // positions to undo
};

ReceivedMatrix sample_received_matrix(int h, int m, const DegreeDistribution& dist, const Field& f,
                                      Xoshiro256ss& rng);

} // namespace raptor
