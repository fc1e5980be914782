#ifndef TIGHTFRAME_LP_HPP
#define TIGHTFRAME_LP_HPP

#include <vector>

#include "tightframe/rational.hpp"

namespace tightframe {

// max c.x  s.t.  A x <= b, x >= 0, with sparse unit columns: column j has a 1
// in each row of cols[j]. b must be nonnegative, so the slack basis is primal
// feasible. Exact rationals throughout; Bland's rule (deterministic).
struct PackingLpResult {
    Rational objective;
    std::vector<Rational> x;  // primal values per column
    std::vector<Rational> y;  // optimal dual per row (a fractional cover)
    long long iterations = 0;
};

PackingLpResult solve_packing_lp(int rows, const std::vector<std::vector<int>>& cols,
                                 const std::vector<Rational>& b, const std::vector<Rational>& c);

// checks primal feasibility, dual feasibility and equal objectives
bool verify_packing_certificate(int rows, const std::vector<std::vector<int>>& cols,
                                const std::vector<Rational>& b, const std::vector<Rational>& c,
                                const PackingLpResult& r);

} // namespace tightframe

#endif
