#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "flowvor/geometry.hpp"

namespace flowvor {

/// Base generator plus the pool of competing generators. Pool entry i carries
/// the stable ID i + 2, so with p1 thought of as ID 1 the pool is numbered
/// 2..n+1. The factory validates the position assumption once; algorithms
/// refuse to run on a failed set.
struct CandidateSet {
    Point p1;
    std::vector<Point> pool;
    bool assumption_ok = false;

    static CandidateSet make(Point p1, std::vector<Point> pool);
    static int id_of(std::size_t index) { return static_cast<int>(index) + 2; }
    static std::size_t index_of(int id) { return static_cast<std::size_t>(id) - 2; }
};

/// Non-dominated pool points (ascending IDs) plus the number of dominance
/// tests spent finding them. The ID set always contains every true cell
/// neighbor of p1.
struct UpperBoundResult {
    std::vector<int> ids;
    std::size_t dominance_tests = 0;
};

/// Quadratic scan: each pool point is kept unless some other pool point
/// dominates it; the inner scan stops at the first dominator. Throws
/// AssumptionError when the set failed validation.
UpperBoundResult upper_bound_simple(const CandidateSet& cs);

/// Sort-and-sweep equivalent of upper_bound_simple. Splits the pool by side
/// of p1's streamline, sorts each side by distance from the streamline, and
/// keeps a point iff the most recently kept point (the anchor) does not
/// dominate it; the streamline itself contributes only its closest point.
/// Performs at most pool-size - 1 dominance tests after sorting.
UpperBoundResult upper_bound_sorted(const CandidateSet& cs);

}  // namespace flowvor
