#include "raptor/field.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace raptor {

namespace {

// Least irreducible polynomial of each degree with nonzero constant term,
// indexed by m = 1..16. Bit pattern includes the leading x^m term.
constexpr std::array<std::uint32_t, 17> kReductionPoly = {
    0,       0x3,    0x7,    0xb,    0x13,   0x25,   0x43,    0x83,
    0x11b,   0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021,  0x8003,
    0x1002b,
};

int poly_degree(std::uint64_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    const int db = poly_degree(b);
    int da = poly_degree(a);
    while (a && da >= db) {
        a ^= b << (da - db);
        da = poly_degree(a);
    }
    return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = poly_mod(a, b);
        a = b;
        b = t;
    }
    return a;
}

// Multiplication of two residues modulo p (degree m <= 16).
std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p, int m) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1)
            r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> m) & 1)
            a ^= p;
    }
    return r;
}

// x^(2^e) mod p by repeated squaring of the residue.
std::uint64_t poly_x_pow_pow2(int e, std::uint64_t p, int m) {
    std::uint64_t r = poly_mod(2, p); // x
    for (int i = 0; i < e; ++i)
        r = poly_mulmod(r, r, p, m);
    return r;
}

} // namespace

std::uint32_t Field::default_reduction_poly(int m) {
    if (m < 1 || m > 16)
        throw std::domain_error("Field: extension degree must be in [1, 16]");
    return kReductionPoly[static_cast<std::size_t>(m)];
}

bool Field::is_irreducible(std::uint32_t poly) {
    const int m = poly_degree(poly);
    if (m < 1 || m > 16)
        return false;
    if (m == 1)
        return true;
    if ((poly & 1) == 0) // divisible by x
        return false;
    // poly is irreducible iff x^(2^m) == x (mod poly) and, for every prime
    // divisor r of m, gcd(x^(2^(m/r)) - x, poly) = 1.
    if (poly_x_pow_pow2(m, poly, m) != 2)
        return false;
    auto coprime_at = [&](int r) {
        std::uint64_t t = poly_x_pow_pow2(m / r, poly, m) ^ 2u;
        return poly_gcd(poly, t) == 1;
    };
    int rest = m;
    for (int r = 2; r * r <= rest; ++r) {
        if (rest % r != 0)
            continue;
        while (rest % r == 0)
            rest /= r;
        if (!coprime_at(r))
            return false;
    }
    if (rest > 1 && !coprime_at(rest))
        return false;
    return true;
}

Field::Field(int m) : Field(m, default_reduction_poly(m)) {}

Field::Field(int m, std::uint32_t reduction_poly) {
    if (m < 1 || m > 16)
        throw std::domain_error("Field: extension degree must be in [1, 16]");
    if (poly_degree(reduction_poly) != m)
        throw std::domain_error("Field: reduction polynomial degree must equal m");
    if (!is_irreducible(reduction_poly))
        throw std::domain_error("Field: reduction polynomial is reducible");
    m_ = m;
    q_ = 1u << m;
    poly_ = reduction_poly;
    if (m_ <= 8)
        build_tables();
}

void Field::check(elem a) const {
    if (a >= q_)
        throw std::domain_error("Field: element " + std::to_string(a) +
                                " out of range for q=" + std::to_string(q_));
}

Field::elem Field::clmul_reduce(elem a, elem b) const {
    std::uint64_t acc = 0;
    for (int i = 0; i < m_; ++i)
        if ((b >> i) & 1)
            acc ^= static_cast<std::uint64_t>(a) << i;
    for (int d = 2 * m_ - 2; d >= m_; --d)
        if ((acc >> d) & 1)
            acc ^= static_cast<std::uint64_t>(poly_) << (d - m_);
    return static_cast<elem>(acc);
}

void Field::build_tables() {
    // Log/antilog tables over a multiplicative generator. The fixed reduction
    // polynomial is not always primitive, so search for the smallest one.
    const std::uint32_t order = q_ - 1;
    log_.assign(q_, 0);
    exp_.assign(2 * order, 0);
    for (std::uint32_t g = 2; g < q_; ++g) {
        std::vector<std::uint16_t> log(q_, 0);
        std::vector<elem> exp(2 * order, 0);
        elem v = 1;
        std::uint32_t n = 0;
        for (; n < order; ++n) {
            if (v == 1 && n > 0)
                break; // order of g divides n: not a generator
            log[v] = static_cast<std::uint16_t>(n);
            exp[n] = v;
            v = clmul_reduce(v, static_cast<elem>(g));
        }
        if (n == order && v == 1) {
            for (std::uint32_t i = 0; i < order; ++i)
                exp[order + i] = exp[i];
            log_ = std::move(log);
            exp_ = std::move(exp);
            return;
        }
    }
    throw std::logic_error("Field: no multiplicative generator found");
}

Field::elem Field::inv(elem a) const {
    check(a);
    if (a == 0)
        throw std::domain_error("Field: zero has no inverse");
    if (m_ <= 8) {
        const std::uint32_t order = q_ - 1;
        return exp_[(order - log_[a]) % order];
    }
    return pow(a, q_ - 2);
}

Field::elem Field::div(elem a, elem b) const {
    check(a);
    return mul_raw(a, inv(b));
}

Field::elem Field::pow(elem a, std::uint64_t e) const {
    check(a);
    elem r = 1;
    elem base = a;
    while (e) {
        if (e & 1)
            r = mul_raw(r, base);
        base = mul_raw(base, base);
        e >>= 1;
    }
    return r;
}

} // namespace raptor
