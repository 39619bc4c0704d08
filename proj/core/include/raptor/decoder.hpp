#pragma once

#include <memory>
#include <optional>

#include "raptor/codes.hpp"

namespace raptor {

struct DecodeOutcome {
    bool failed = false;
    int rank_deficit = 0;                // failed iff rank_deficit > 0
    std::optional<int> inactivations;    // set by the inactivation path only
};

// ML decoding success test by straight rank computation. For a parity-form
// code, decoding recovers all intermediate symbols iff the stacked matrix
// [H ; Rx^T] has full column rank h; for a generator-form code iff
// rank(G * Rx) = k.
DecodeOutcome ml_failure(const OuterCode& code, const ReceivedMatrix& rx);

// Inactivation decoding: peel degree-1 rows, inactivating a column whenever
// peeling stalls, then solve the residual dense system over the inactivated
// columns. Same failure decision as ml_failure on every input; additionally
// reports the number of inactivations.
DecodeOutcome inactivation_failure(const OuterCode& code, const ReceivedMatrix& rx);

// Reusable-workspace form of inactivation_failure for simulation loops.
// Holds a reference to the code; one instance per thread.
class InactivationSolver {
  public:
    explicit InactivationSolver(const OuterCode& code);
    ~InactivationSolver();
    InactivationSolver(InactivationSolver&&) noexcept;
    InactivationSolver& operator=(InactivationSolver&&) noexcept;

    DecodeOutcome decode(const ReceivedMatrix& rx);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace raptor
