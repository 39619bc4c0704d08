#include "raptor/weight_enumerator.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "raptor/format.hpp"

namespace raptor {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_mpz(const mpz_class& z) {
    if (z == 0)
        return kNegInf;
    signed long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * M_LN2;
}

double log_binomial(int n, int k) {
    if (k < 0 || k > n)
        return kNegInf;
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

} // namespace

WeightEnumerator WeightEnumerator::deterministic(std::vector<mpz_class> values) {
    if (values.empty())
        throw std::domain_error("WeightEnumerator: empty value sequence");
    if (values[0] != 1)
        throw std::domain_error("WeightEnumerator: deterministic A_0 must be 1");
    WeightEnumerator we;
    we.kind_ = Kind::deterministic;
    we.h_ = static_cast<int>(values.size()) - 1;
    we.log_.reserve(values.size());
    for (const mpz_class& v : values) {
        if (v < 0)
            throw std::domain_error("WeightEnumerator: negative multiplicity");
        we.log_.push_back(log_mpz(v));
    }
    we.exact_ = std::move(values);
    return we;
}

WeightEnumerator WeightEnumerator::expected(std::vector<double> log_values) {
    if (log_values.empty())
        throw std::domain_error("WeightEnumerator: empty value sequence");
    for (double lv : log_values)
        if (std::isnan(lv) || lv == std::numeric_limits<double>::infinity())
            throw std::domain_error("WeightEnumerator: log value not finite");
    WeightEnumerator we;
    we.kind_ = Kind::expected;
    we.h_ = static_cast<int>(log_values.size()) - 1;
    we.log_ = std::move(log_values);
    return we;
}

double WeightEnumerator::value(int l) const {
    if (kind_ == Kind::deterministic)
        return exact_[static_cast<std::size_t>(l)].get_d();
    return std::exp(log_[static_cast<std::size_t>(l)]);
}

const mpz_class& WeightEnumerator::exact(int l) const {
    if (kind_ != Kind::deterministic)
        throw std::domain_error("WeightEnumerator: exact values only for deterministic kind");
    return exact_[static_cast<std::size_t>(l)];
}

WeightEnumerator hamming_weight_enumerator(int t) {
    if (t < 2 || t > 16)
        throw std::domain_error("hamming_weight_enumerator: t must be in [2, 16]");
    const long h = (1L << t) - 1;
    std::vector<mpz_class> a(static_cast<std::size_t>(h) + 1);
    a[0] = 1;
    a[1] = 0;
    // (i+1) A_{i+1} + A_i + (h-i+1) A_{i-1} = C(h,i), with C(h,i) carried
    // incrementally: C(h,i+1) = C(h,i) (h-i) / (i+1).
    mpz_class binom = h; // C(h,1)
    mpz_class num, rem;
    for (long i = 1; i < h; ++i) {
        num = binom - a[static_cast<std::size_t>(i)] -
              (h - i + 1) * a[static_cast<std::size_t>(i - 1)];
        mpz_fdiv_qr_ui(a[static_cast<std::size_t>(i + 1)].get_mpz_t(), rem.get_mpz_t(),
                       num.get_mpz_t(), static_cast<unsigned long>(i + 1));
        if (rem != 0 || a[static_cast<std::size_t>(i + 1)] < 0)
            throw std::logic_error("hamming_weight_enumerator: recursion left a remainder");
        binom *= h - i;
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(i + 1));
    }
    return WeightEnumerator::deterministic(std::move(a));
}

WeightEnumerator uniform_ensemble_weight_enumerator(int h, int k, const Field& f) {
    if (!(0 < k && k < h))
        throw std::domain_error("uniform_ensemble_weight_enumerator: need 0 < k < h");
    const double log_q = std::log(static_cast<double>(f.q()));
    const double log_qm1 = std::log(static_cast<double>(f.q() - 1));
    std::vector<double> lv(static_cast<std::size_t>(h) + 1);
    lv[0] = 0.0; // defined as 1; the bounds only read l >= 1
    for (int l = 1; l <= h; ++l)
        lv[static_cast<std::size_t>(l)] =
            log_binomial(h, l) + l * log_qm1 - static_cast<double>(h - k) * log_q;
    return WeightEnumerator::expected(std::move(lv));
}

WeightEnumerator unrestricted_weight_enumerator(int k, const Field& f) {
    if (k < 1)
        throw std::domain_error("unrestricted_weight_enumerator: k must be >= 1");
    std::vector<mpz_class> a(static_cast<std::size_t>(k) + 1);
    a[0] = 1;
    mpz_class binom, pw;
    for (int l = 1; l <= k; ++l) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                     static_cast<unsigned long>(l));
        mpz_ui_pow_ui(pw.get_mpz_t(), f.q() - 1, static_cast<unsigned long>(l - 1));
        a[static_cast<std::size_t>(l)] = binom * pw;
    }
    return WeightEnumerator::deterministic(std::move(a));
}

void write_csv(std::ostream& out, const WeightEnumerator& we) {
    out << "# kind "
        << (we.kind() == WeightEnumerator::Kind::deterministic ? "deterministic" : "expected")
        << "\n";
    out << "l,A_l\n";
    for (int l = 0; l <= we.h(); ++l) {
        if (we.kind() == WeightEnumerator::Kind::deterministic)
            out << l << "," << we.exact(l).get_str() << "\n";
        else
            out << l << "," << format_double(we.value(l)) << "\n";
    }
}

WeightEnumerator read_csv(std::istream& in) {
    std::string line;
    bool deterministic = false;
    bool kind_seen = false;
    std::vector<mpz_class> exact;
    std::vector<double> logs;
    int expect_l = 0;
    while (std::getline(in, line)) {
        if (line.rfind("# kind ", 0) == 0) {
            deterministic = line.find("deterministic") != std::string::npos;
            kind_seen = true;
            continue;
        }
        if (line.empty() || line[0] == '#' || line.rfind("l,", 0) == 0)
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("WeightEnumerator: bad CSV row: " + line);
        const int l = std::stoi(line.substr(0, comma));
        if (l != expect_l++)
            throw std::invalid_argument("WeightEnumerator: CSV rows out of order");
        const std::string value = line.substr(comma + 1);
        if (deterministic)
            exact.emplace_back(value);
        else
            logs.push_back(std::log(std::stod(value)));
    }
    if (!kind_seen)
        throw std::invalid_argument("WeightEnumerator: CSV missing kind header");
    if (deterministic)
        return WeightEnumerator::deterministic(std::move(exact));
    return WeightEnumerator::expected(std::move(logs));
}

} // namespace raptor
