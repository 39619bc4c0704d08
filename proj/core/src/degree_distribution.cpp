#include "raptor/degree_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace raptor {

DegreeDistribution::DegreeDistribution(std::vector<Term> terms, std::string id)
    : terms_(std::move(terms)), id_(std::move(id)) {
    if (terms_.empty())
        throw std::domain_error("DegreeDistribution: no terms");
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.degree < b.degree; });
    double sum = 0.0;
    int prev = 0;
    for (const Term& t : terms_) {
        if (t.degree < 1)
            throw std::domain_error("DegreeDistribution: degree must be >= 1");
        if (t.degree == prev)
            throw std::domain_error("DegreeDistribution: duplicate degree");
        if (!(t.prob > 0.0))
            throw std::domain_error("DegreeDistribution: probabilities must be positive");
        prev = t.degree;
        sum += t.prob;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::domain_error("DegreeDistribution: probabilities sum to " +
                                std::to_string(sum) + ", expected 1");
}

DegreeDistribution DegreeDistribution::truncated(int max_degree) const {
    std::vector<Term> kept;
    double sum = 0.0;
    for (const Term& t : terms_)
        if (t.degree <= max_degree) {
            kept.push_back(t);
            sum += t.prob;
        }
    if (kept.empty())
        throw std::domain_error("DegreeDistribution: truncation removed all terms");
    for (Term& t : kept)
        t.prob /= sum;
    return DegreeDistribution(std::move(kept), id_ + "|trunc" + std::to_string(max_degree));
}

DegreeDistribution DegreeDistribution::from_stream(std::istream& in, std::string id) {
    std::vector<Term> terms;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos)
            continue;
        std::istringstream ls(line);
        int degree;
        double prob;
        if (!(ls >> degree >> prob))
            throw std::invalid_argument("DegreeDistribution: bad line: " + line);
        terms.push_back({degree, prob});
    }
    return DegreeDistribution(std::move(terms), std::move(id));
}

DegreeDistribution DegreeDistribution::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("DegreeDistribution: cannot open " + path);
    return from_stream(in, path);
}

DegreeDistribution r10_distribution() {
    return DegreeDistribution({{1, 0.0098},
                               {2, 0.4590},
                               {3, 0.2110},
                               {4, 0.1134},
                               {10, 0.1113},
                               {11, 0.0799},
                               {40, 0.0156}},
                              "r10");
}

} // namespace raptor
