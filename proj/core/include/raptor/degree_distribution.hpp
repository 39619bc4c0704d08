#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace raptor {

// Output degree distribution of an LT encoder: a pmf over degrees >= 1.
// Terms are kept sorted by degree; the probabilities must be positive and
// sum to 1 within 1e-9.
class DegreeDistribution {
  public:
    struct Term {
        int degree;
        double prob;
        bool operator==(const Term&) const = default;
    };

    DegreeDistribution(std::vector<Term> terms, std::string id = "custom");

    const std::vector<Term>& terms() const { return terms_; }
    int d_max() const { return terms_.back().degree; }
    const std::string& id() const { return id_; }

    // Restriction to degrees <= max_degree, probabilities renormalized.
    DegreeDistribution truncated(int max_degree) const;

    // Parses lines of the form "degree probability"; '#' starts a comment.
    static DegreeDistribution from_stream(std::istream& in, std::string id);
    static DegreeDistribution from_file(const std::string& path);

    bool operator==(const DegreeDistribution& o) const { return terms_ == o.terms_; }

  private:
    std::vector<Term> terms_;
    std::string id_;
};

// Degree distribution of the standardized R10 raptor LT encoder.
DegreeDistribution r10_distribution();

} // namespace raptor
