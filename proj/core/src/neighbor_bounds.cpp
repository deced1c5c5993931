#include "flowvor/neighbor_bounds.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "flowvor/dominance.hpp"

namespace flowvor {

namespace {

void require_ok(const CandidateSet& cs) {
    if (!cs.assumption_ok) {
        throw AssumptionError("candidate set violates the position assumption");
    }
}

/// Anchor sweep over one side of the streamline. `indices` must be ordered so
/// that any potential dominator of a point precedes it: ascending distance
/// from the streamline, ties by ascending x.
void sweep(const CandidateSet& cs, std::vector<std::size_t>& indices,
           std::vector<int>& keep, std::size_t& tests) {
    if (indices.empty()) {
        return;
    }
    std::size_t anchor = indices.front();
    keep.push_back(CandidateSet::id_of(anchor));
    for (std::size_t k = 1; k < indices.size(); ++k) {
        const std::size_t i = indices[k];
        ++tests;
        if (!dominates(cs.p1, cs.pool[anchor], cs.pool[i])) {
            keep.push_back(CandidateSet::id_of(i));
            anchor = i;
        }
    }
}

}  // namespace

CandidateSet CandidateSet::make(Point p1, std::vector<Point> pool) {
    CandidateSet cs;
    cs.p1 = p1;
    cs.pool = std::move(pool);
    cs.assumption_ok = check_assumption(p1, cs.pool).ok();
    return cs;
}

UpperBoundResult upper_bound_simple(const CandidateSet& cs) {
    require_ok(cs);
    UpperBoundResult result;
    const std::size_t n = cs.pool.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) {
                continue;
            }
            ++result.dominance_tests;
            if (dominates(cs.p1, cs.pool[j], cs.pool[i])) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            result.ids.push_back(CandidateSet::id_of(i));
        }
    }
    return result;
}

UpperBoundResult upper_bound_sorted(const CandidateSet& cs) {
    require_ok(cs);
    UpperBoundResult result;

    std::vector<std::size_t> above;
    std::vector<std::size_t> below;
    std::size_t on_line = cs.pool.size();
    double on_line_x = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cs.pool.size(); ++i) {
        const Point p = cs.pool[i];
        if (p.y > cs.p1.y) {
            above.push_back(i);
        } else if (p.y < cs.p1.y) {
            below.push_back(i);
        } else if (p.x < on_line_x) {
            on_line = i;
            on_line_x = p.x;
        }
    }

    const auto order = [&cs](bool flip) {
        return [&cs, flip](std::size_t lhs, std::size_t rhs) {
            const Point a = cs.pool[lhs];
            const Point b = cs.pool[rhs];
            const double ya = flip ? -a.y : a.y;
            const double yb = flip ? -b.y : b.y;
            if (ya != yb) {
                return ya < yb;
            }
            // Equal y and equal x would be a duplicate, which validation
            // rejects, so the tie-break below is total.
            assert(a.x != b.x);
            return a.x < b.x;
        };
    };
    std::sort(above.begin(), above.end(), order(false));
    std::sort(below.begin(), below.end(), order(true));

    sweep(cs, above, result.ids, result.dominance_tests);
    sweep(cs, below, result.ids, result.dominance_tests);
    if (on_line < cs.pool.size()) {
        result.ids.push_back(CandidateSet::id_of(on_line));
    }
    std::sort(result.ids.begin(), result.ids.end());
    return result;
}

}  // namespace flowvor
