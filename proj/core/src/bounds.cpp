#include "raptor/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace raptor {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

mpz_class binom(int n, int k) {
    mpz_class b;
    if (k < 0 || n < 0 || k > n)
        return b; // 0
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

void check_prob_args(int l, int h, const DegreeDistribution& dist) {
    if (l < 0 || l > h)
        throw std::domain_error("output_zero_prob: weight out of range");
    if (dist.d_max() > h)
        throw std::domain_error("output_zero_prob: distribution degree exceeds h");
}

// Numerically stable pairwise sum.
double pairwise_sum(const double* v, std::size_t n) {
    if (n == 0)
        return 0.0;
    if (n <= 4) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

double log_sum_exp(std::vector<double>& log_terms) {
    if (log_terms.empty())
        return kNegInf;
    const double mx = *std::max_element(log_terms.begin(), log_terms.end());
    if (mx == kNegInf)
        return kNegInf;
    for (double& t : log_terms)
        t = std::exp(t - mx);
    return mx + std::log(pairwise_sum(log_terms.data(), log_terms.size()));
}

} // namespace

mpz_class krawtchouk(int degree, int x, int n, int q) {
    if (n < 0 || degree < 0 || degree > n || x < 0 || x > n)
        throw std::domain_error("krawtchouk: arguments out of range");
    if (q < 2)
        throw std::domain_error("krawtchouk: q must be >= 2");
    mpz_class sum = 0;
    mpz_class pw;
    for (int i = 0; i <= degree; ++i) {
        if (i > x || degree - i > n - x)
            continue;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q - 1),
                      static_cast<unsigned long>(degree - i));
        mpz_class term = binom(x, i) * binom(n - x, degree - i) * pw;
        if (i & 1)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

mpq_class zero_sum_prob(int count, const Field& f) {
    if (count < 0)
        throw std::domain_error("zero_sum_prob: negative count");
    const unsigned long qm1 = f.q() - 1;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), qm1, static_cast<unsigned long>(count));
    // ((q-1)^count + (-1)^count (q-1)) / (q (q-1)^count)
    mpz_class num = pw;
    if (count % 2 == 0)
        num += static_cast<long>(qm1);
    else
        num -= static_cast<long>(qm1);
    mpq_class r(num, mpz_class(f.q()) * pw);
    r.canonicalize();
    return r;
}

mpq_class zero_sum_prob_by_convolution(int count, const Field& f) {
    if (count < 1)
        throw std::domain_error("zero_sum_prob_by_convolution: count must be >= 1");
    if (f.m() > 8)
        throw std::domain_error("zero_sum_prob_by_convolution: oracle limited to m <= 8");
    const std::uint32_t q = f.q();
    // Single-term pmf: uniform over the q-1 nonzero elements.
    std::vector<mpq_class> x(q), w(q);
    for (std::uint32_t v = 1; v < q; ++v)
        x[v] = mpq_class(1, static_cast<unsigned long>(q - 1));
    w = x;
    // Addition in GF(2^m) is XOR, so convolution runs over the XOR group.
    for (int step = 1; step < count; ++step) {
        std::vector<mpq_class> nxt(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            if (w[a] == 0)
                continue;
            for (std::uint32_t v = 1; v < q; ++v)
                nxt[a ^ v] += w[a] * x[v];
        }
        w = std::move(nxt);
    }
    w[0].canonicalize();
    return w[0];
}

mpq_class hypergeometric_pmf(int i, int l, int j, int h) {
    if (h < 0 || j < 0 || j > h || l < 0 || l > h)
        throw std::domain_error("hypergeometric_pmf: arguments out of range");
    if (i < 0 || i > l || j - i < 0 || j - i > h - l)
        return mpq_class(0);
    mpq_class r(binom(l, i) * binom(h - l, j - i), binom(h, j));
    r.canonicalize();
    return r;
}

double output_zero_prob_direct(int l, int h, const DegreeDistribution& dist, const Field& f) {
    check_prob_args(l, h, dist);
    if (l == 0)
        return 1.0;
    double total = 0.0;
    for (const auto& term : dist.terms()) {
        const int d = term.degree;
        mpq_class inner(0);
        for (int i = 0; i <= std::min(d, l); ++i)
            inner += hypergeometric_pmf(i, l, d, h) * zero_sum_prob(i, f);
        total += term.prob * inner.get_d();
    }
    return total;
}

double output_zero_prob_krawtchouk(int l, int h, const DegreeDistribution& dist, const Field& f) {
    check_prob_args(l, h, dist);
    if (l == 0)
        return 1.0;
    const int q = static_cast<int>(f.q());
    double acc = 0.0;
    for (const auto& term : dist.terms()) {
        mpq_class ratio(krawtchouk(term.degree, l, h, q), krawtchouk(term.degree, 0, h, q));
        ratio.canonicalize();
        acc += term.prob * ratio.get_d();
    }
    const double v = 1.0 / q + (static_cast<double>(q - 1) / q) * acc;
    return std::clamp(v, 0.0, 1.0); // probability by construction; clamp float noise
}

ZeroProbTable::ZeroProbTable(int h, const DegreeDistribution& dist, const Field& f) {
    if (h < 0)
        throw std::domain_error("ZeroProbTable: negative h");
    probs_.resize(static_cast<std::size_t>(h) + 1);
    log_probs_.resize(static_cast<std::size_t>(h) + 1);
    for (int l = 0; l <= h; ++l) {
        const double p = output_zero_prob_krawtchouk(l, h, dist, f);
        probs_[static_cast<std::size_t>(l)] = p;
        log_probs_[static_cast<std::size_t>(l)] = p > 0.0 ? std::log(p) : kNegInf;
    }
}

double union_bound(const WeightEnumerator& we, int k, int delta, const ZeroProbTable& probs) {
    if (we.h() != probs.h())
        throw std::domain_error("union_bound: enumerator length does not match probability table");
    if (delta < 0)
        throw std::domain_error("union_bound: negative overhead");
    if (k < 0)
        throw std::domain_error("union_bound: negative dimension");
    const double exponent = static_cast<double>(k) + static_cast<double>(delta);
    std::vector<double> log_terms;
    log_terms.reserve(static_cast<std::size_t>(we.h()));
    for (int l = 1; l <= we.h(); ++l) {
        const double la = we.log_value(l);
        if (la == kNegInf)
            continue;
        const double lp = probs.log_at(l);
        if (exponent == 0.0)
            log_terms.push_back(la); // p^0 = 1, even for p = 0
        else if (lp != kNegInf)
            log_terms.push_back(la + exponent * lp);
    }
    const double lse = log_sum_exp(log_terms);
    return lse == kNegInf ? 0.0 : std::exp(lse);
}

double union_bound(const WeightEnumerator& we, int k, int delta, const DegreeDistribution& dist,
                   const Field& f) {
    return union_bound(we, k, delta, ZeroProbTable(we.h(), dist, f));
}

double tightened_union_bound(const WeightEnumerator& we, int k, int delta,
                             const ZeroProbTable& probs, const Field& f) {
    return union_bound(we, k, delta, probs) / static_cast<double>(f.q() - 1);
}

double tightened_union_bound(const WeightEnumerator& we, int k, int delta,
                             const DegreeDistribution& dist, const Field& f) {
    return tightened_union_bound(we, k, delta, ZeroProbTable(we.h(), dist, f), f);
}

double ensemble_union_bound(const WeightEnumerator& expected_we, int k, int delta,
                            const ZeroProbTable& probs, const Field& f) {
    if (expected_we.kind() != WeightEnumerator::Kind::expected)
        throw std::domain_error(
            "ensemble_union_bound: needs an expected enumerator (use tightened_union_bound)");
    return tightened_union_bound(expected_we, k, delta, probs, f);
}

double ensemble_union_bound(const WeightEnumerator& expected_we, int k, int delta,
                            const DegreeDistribution& dist, const Field& f) {
    return ensemble_union_bound(expected_we, k, delta, ZeroProbTable(expected_we.h(), dist, f), f);
}

double lt_union_bound(int k, int delta, const DegreeDistribution& dist, const Field& f) {
    // The class-representative enumerator already carries the q-1 tightening,
    // so the plain union bound is the right form here.
    return union_bound(unrestricted_weight_enumerator(k, f), k, delta,
                       ZeroProbTable(k, dist, f));
}

BoundCurve bound_curve(BoundKind kind, const WeightEnumerator& we, int k,
                       const std::vector<int>& deltas, const DegreeDistribution& dist,
                       const Field& f) {
    if (deltas.empty())
        throw std::domain_error("bound_curve: empty delta list");
    ZeroProbTable probs(we.h(), dist, f);
    BoundCurve curve;
    curve.h = we.h();
    curve.k = k;
    curve.q = f.q();
    curve.dist_id = dist.id();
    curve.points.reserve(deltas.size());
    for (int delta : deltas) {
        double raw = 0.0;
        switch (kind) {
        case BoundKind::plain:
            raw = union_bound(we, k, delta, probs);
            break;
        case BoundKind::tightened:
            raw = tightened_union_bound(we, k, delta, probs, f);
            break;
        case BoundKind::ensemble:
            raw = ensemble_union_bound(we, k, delta, probs, f);
            break;
        }
        curve.points.push_back({delta, raw, std::min(1.0, raw)});
    }
    return curve;
}

} // namespace raptor
