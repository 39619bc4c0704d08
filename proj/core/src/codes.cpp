#include "raptor/codes.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace raptor {

OuterCode::OuterCode(Form form, FqMatrix primary, Field f)
    : form_(form), field_(std::move(f)) {
    validate_entries(primary, field_);
    if (form == Form::generator) {
        k_ = primary.rows;
        h_ = primary.cols;
        if (k_ < 1 || h_ < k_)
            throw std::domain_error("OuterCode: generator must be k x h with k <= h");
        if (rank(primary, field_) != k_)
            throw std::domain_error("OuterCode: generator matrix is rank deficient");
        generator_ = std::move(primary);
        parity_ = nullspace_basis(generator_, field_);
    } else {
        h_ = primary.cols;
        k_ = h_ - primary.rows;
        if (h_ < 1 || k_ < 1)
            throw std::domain_error("OuterCode: parity matrix leaves no dimension");
        parity_ = std::move(primary);
    }
    if (field_.q() == 2)
        packed_ = Gf2Matrix::from_matrix(parity_);
}

OuterCode OuterCode::from_generator(FqMatrix g, Field f) {
    return OuterCode(Form::generator, std::move(g), std::move(f));
}

OuterCode OuterCode::from_parity(FqMatrix h_mat, Field f) {
    return OuterCode(Form::parity, std::move(h_mat), std::move(f));
}

OuterCode OuterCode::hamming(int t) {
    if (t < 2 || t > 10)
        throw std::domain_error("OuterCode::hamming: t must be in [2, 10]");
    const int h = (1 << t) - 1;
    FqMatrix m(t, h);
    for (int c = 0; c < h; ++c)
        for (int r = 0; r < t; ++r)
            m.at(r, c) = static_cast<Field::elem>(((c + 1) >> r) & 1);
    return from_parity(std::move(m), Field(1));
}

OuterCode OuterCode::trivial(int k, Field f) {
    if (k < 1)
        throw std::domain_error("OuterCode::trivial: k must be >= 1");
    return from_parity(FqMatrix(0, k), std::move(f));
}

FqMatrix OuterCode::generator_matrix() const {
    if (form_ == Form::generator)
        return generator_;
    return nullspace_basis(parity_, field_);
}

std::uint64_t OuterCode::content_hash() const {
    // FNV-1a over the identifying content.
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    auto mix = [&hash](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            hash ^= (v >> (8 * i)) & 0xff;
            hash *= 0x100000001b3ULL;
        }
    };
    mix(static_cast<std::uint64_t>(h_));
    mix(static_cast<std::uint64_t>(k_));
    mix(field_.q());
    mix(form_ == Form::generator ? 1 : 2);
    const FqMatrix& m = form_ == Form::generator ? generator_ : parity_;
    for (Field::elem e : m.data)
        mix(e);
    return hash;
}

void OuterCode::write_text(std::ostream& out) const {
    out << h_ << " " << k_ << " " << field_.q() << " "
        << (form_ == Form::generator ? "generator" : "parity") << "\n";
    const FqMatrix& m = form_ == Form::generator ? generator_ : parity_;
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c)
            out << (c ? " " : "") << m.at(r, c);
        out << "\n";
    }
}

OuterCode OuterCode::read_text(std::istream& in) {
    int h = 0, k = 0;
    long q = 0;
    std::string form;
    if (!(in >> h >> k >> q >> form))
        throw std::invalid_argument("OuterCode: bad header");
    if (q < 2 || (q & (q - 1)) != 0)
        throw std::invalid_argument("OuterCode: q must be a power of two");
    int m_deg = 0;
    while ((1L << m_deg) < q)
        ++m_deg;
    Field f(m_deg);
    const bool generator = form == "generator";
    if (!generator && form != "parity")
        throw std::invalid_argument("OuterCode: unknown form " + form);
    const int rows = generator ? k : h - k;
    FqMatrix mat(rows, h);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < h; ++c) {
            long v;
            if (!(in >> v) || v < 0 || v >= q)
                throw std::invalid_argument("OuterCode: bad matrix entry");
            mat.at(r, c) = static_cast<Field::elem>(v);
        }
    return generator ? from_generator(std::move(mat), std::move(f))
                     : from_parity(std::move(mat), std::move(f));
}

OuterCode sample_uniform_parity_code(int h, int k, const Field& f, Xoshiro256ss& rng) {
    if (!(0 < k && k < h))
        throw std::domain_error("sample_uniform_parity_code: need 0 < k < h");
    FqMatrix m(h - k, h);
    for (Field::elem& e : m.data)
        e = static_cast<Field::elem>(rng.below(f.q()));
    return OuterCode::from_parity(std::move(m), f);
}

std::vector<int> ReceivedMatrix::degrees() const {
    std::vector<int> d;
    d.reserve(columns.size());
    for (const ReceivedColumn& c : columns)
        d.push_back(static_cast<int>(c.support.size()));
    return d;
}

FqMatrix ReceivedMatrix::to_matrix(const Field& f) const {
    FqMatrix out(h, m());
    for (int c = 0; c < m(); ++c) {
        const ReceivedColumn& col = columns[static_cast<std::size_t>(c)];
        for (std::size_t i = 0; i < col.support.size(); ++i) {
            if (col.values[i] == 0 || col.values[i] >= f.q())
                throw std::domain_error("ReceivedMatrix: value out of range");
            out.at(col.support[i], c) = col.values[i];
        }
    }
    return out;
}

LtColumnSampler::LtColumnSampler(int h, DegreeDistribution dist, Field f)
    : h_(h), field_(std::move(f)), dist_(std::move(dist)) {
    if (h_ < 1)
        throw std::domain_error("LtColumnSampler: h must be >= 1");
    if (dist_.d_max() > h_)
        throw std::domain_error("LtColumnSampler: distribution degree exceeds h");
    double acc = 0.0;
    for (const auto& t : dist_.terms()) {
        acc += t.prob;
        cum_.push_back(acc);
    }
    perm_.resize(static_cast<std::size_t>(h_));
    for (int i = 0; i < h_; ++i)
        perm_[static_cast<std::size_t>(i)] = i;
    swapped_.reserve(static_cast<std::size_t>(dist_.d_max()));
}

void LtColumnSampler::sample_column(Xoshiro256ss& rng, ReceivedColumn& out) {
    const double u = rng.next_double();
    std::size_t pick = cum_.size() - 1;
    for (std::size_t i = 0; i < cum_.size(); ++i)
        if (u < cum_[i]) {
            pick = i;
            break;
        }
    const int d = dist_.terms()[pick].degree;

    // Fisher-Yates prefix of length d, undone afterwards so every column sees
    // the identity permutation.
    out.support.resize(static_cast<std::size_t>(d));
    swapped_.clear();
    for (int i = 0; i < d; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(h_ - i)));
        std::swap(perm_[static_cast<std::size_t>(i)], perm_[static_cast<std::size_t>(j)]);
        swapped_.push_back(j);
        out.support[static_cast<std::size_t>(i)] = perm_[static_cast<std::size_t>(i)];
    }
    for (int i = d - 1; i >= 0; --i)
        std::swap(perm_[static_cast<std::size_t>(i)],
                  perm_[static_cast<std::size_t>(swapped_[static_cast<std::size_t>(i)])]);

    out.values.resize(static_cast<std::size_t>(d));
    if (field_.q() == 2) {
        for (auto& v : out.values)
            v = 1;
    } else {
        for (auto& v : out.values)
            v = static_cast<Field::elem>(1 + rng.below(field_.q() - 1));
    }
}

void LtColumnSampler::sample_matrix(int m, Xoshiro256ss& rng, ReceivedMatrix& out) {
    if (m < 0)
        throw std::domain_error("LtColumnSampler: negative column count");
    out.h = h_;
    out.columns.resize(static_cast<std::size_t>(m));
    for (auto& col : out.columns)
        sample_column(rng, col);
}

ReceivedMatrix sample_received_matrix(int h, int m, const DegreeDistribution& dist, const Field& f,
                                      Xoshiro256ss& rng) {
    LtColumnSampler sampler(h, dist, f);
    ReceivedMatrix rx;
    sampler.sample_matrix(m, rng, rx);
    return rx;
}

} // namespace raptor
