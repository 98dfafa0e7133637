#pragma once

#include <cstddef>
#include <span>

namespace lowdisc {

// Kahan compensated accumulator. Order of add() calls is part of the result,
// so callers that need bitwise reproducibility must fix their loop order.
struct KahanSum {
    double sum = 0.0;
    double c = 0.0;

    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    KahanSum& operator+=(double x) {
        add(x);
        return *this;
    }
    double value() const { return sum; }
};

// Fixed binary-tree reduction, independent of how the values were produced.
// Combined with per-row Kahan sums this gives the same bits at any thread count.
inline double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 4) {
        KahanSum s;
        for (double x : xs) s.add(x);
        return s.value();
    }
    std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace lowdisc
