#pragma once

#include <cstdint>
#include <vector>

#include "lowdisc/point_set.hpp"

namespace lowdisc::linf {

// Per-axis critical grid: sorted unique coordinates plus 1. The sup over
// q in [0,1)^d is attained on these corners when evaluated with the
// open/closed count pair.
struct GridSlice {
    std::vector<std::vector<double>> gamma;     // gamma[k], strictly increasing, ends at 1
    std::vector<std::vector<std::size_t>> rank; // rank[k][i] = position of x_ik in gamma[k]

    static GridSlice build(const PointSet& P);
};

struct Options {
    std::uint64_t budget = std::uint64_t(1) << 31;  // candidate boxes before pruning
    bool prune = true;
};

struct EnumStats {
    std::uint64_t boxes_total = 0;
    std::uint64_t boxes_visited = 0;
    double pruned_fraction = 0.0;
};

// prod_k |gamma_k|, saturating; the pre-enumeration budget estimate.
std::uint64_t estimate_boxes(const PointSet& P);

// Exact L_inf star discrepancy by grid enumeration with branch-and-bound
// pruning. max over corners q of max(vol(q) - A_open(q)/n, A_closed(q)/n - vol(q)).
// Throws BudgetExceeded when estimate_boxes(P) > opts.budget.
double linf_star_exact(const PointSet& P, const Options& opts = {}, EnumStats* stats = nullptr);

// O(n^2) two-dimensional sweep; exact, same value as linf_star_exact.
// Throws WrongDimension unless d == 2.
double linf_star_2d(const PointSet& P);

// Brute force over every grid corner, no pruning, no incremental counting.
// Reference oracle for tests; multiplies the volume in the same axis order
// as the enumerator so values compare exactly.
double linf_star_naive(const PointSet& P);

// Dispatch: the 2-D sweep when d == 2, the pruned enumeration otherwise.
double linf_star(const PointSet& P, const Options& opts = {});

}  // namespace lowdisc::linf
